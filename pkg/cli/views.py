import logging

from django.core.exceptions import ValidationError as DjangoValidationError
from rest_framework import status, viewsets
from rest_framework.response import Response

from algebra.exceptions import GatedFeatureError, HeckeLabError, IdentityViolation

from .dispatch import dispatch
from .permissions import IsReadOnly
from .serializers import RunConfigSerializer
from .validators import COMMANDS

logger = logging.getLogger(__name__)

# Query parameters that would let a client read server-side files.
FILE_PARAMETERS = ("datum", "n_matrix")


class ComputeViewSet(viewsets.ViewSet):
    """
    ``GET compute/`` lists the commands; ``GET compute/<command>/`` runs one.

    Query parameters mirror the command-line options (``l`` for the
    residue characteristic). Results are always JSON.
    """

    permission_classes = [IsReadOnly]

    def list(self, request):
        return Response({"commands": list(COMMANDS)})

    def retrieve(self, request, pk=None):
        params = request.query_params.dict()
        params.pop("format", None)
        blocked = [name for name in FILE_PARAMETERS if name in params]
        if blocked:
            return Response(
                {"detail": f"File parameters are not served: {', '.join(blocked)}."},
                status=status.HTTP_400_BAD_REQUEST,
            )
        if "l" in params:
            params["ell"] = params.pop("l")

        serializer = RunConfigSerializer(data={**params, "command": pk})
        try:
            if not serializer.is_valid():
                return Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)
            result = dispatch(serializer.save())
        except DjangoValidationError as exc:
            return Response({"detail": exc.messages}, status=status.HTTP_400_BAD_REQUEST)
        except GatedFeatureError as exc:
            return Response({"detail": str(exc), "code": exc.code}, status=status.HTTP_403_FORBIDDEN)
        except IdentityViolation as exc:
            return Response({"detail": str(exc), "code": exc.code}, status=status.HTTP_409_CONFLICT)
        except HeckeLabError as exc:
            return Response({"detail": str(exc), "code": exc.code}, status=status.HTTP_400_BAD_REQUEST)

        if result.failures:
            logger.warning(f"compute/{pk}: returning {len(result.failures)} failed check(s)")
            return Response(result.payload, status=status.HTTP_409_CONFLICT)
        return Response(result.payload)
