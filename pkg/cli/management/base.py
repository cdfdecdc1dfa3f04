"""
Shared plumbing of the heckelab management commands.

Exit codes: 0 on success, 1 for invalid input or a failed computation,
2 when a checked identity fails (the artifact is still written), and 3 when
a conjectural feature is requested without opting in.
"""

import logging

from django.core.exceptions import ValidationError as DjangoValidationError
from django.core.management.base import BaseCommand, CommandError

from algebra.exceptions import HeckeLabError, IdentityViolation
from dlchar.weights import SQRT_CHOICES

from ..dispatch import dispatch
from ..render import render
from ..serializers import RunConfigSerializer
from ..validators import OUTPUT_FORMATS

logger = logging.getLogger(__name__)

# Options that only some commands take; absent ones are left out of the data.
OPTIONAL_FLAGS = ("block", "conjectural", "modular", "twisted", "characters")


def format_errors(errors):
    """Flatten serializer errors into one line per field."""
    lines = []
    for name, messages in errors.items():
        if isinstance(messages, dict):
            messages = [format_errors(messages)]
        label = "" if name == "non_field_errors" else f"{name}: "
        lines.append(label + "; ".join(str(m) for m in messages))
    return "\n".join(lines)


class HeckeLabCommand(BaseCommand):
    """Base class: parse the common options, run, render to stdout."""

    command_name = None

    def add_arguments(self, parser):
        source = parser.add_mutually_exclusive_group()
        source.add_argument("--preset", help="Name of a preset root datum, e.g. A2 or GL2.")
        source.add_argument("--datum", help="Path of a JSON root datum file.")
        parser.add_argument("--q", type=int, help="Size of the finite field.")
        parser.add_argument("--l", dest="ell", type=int, help="Residue characteristic l.")
        parser.add_argument("--delta", type=int, help="Order of the Frobenius twist.")
        parser.add_argument("--w", help="Restrict to one element, e.g. s1s2 or 1-2.")
        parser.add_argument(
            "--sqrt-choice", dest="sqrt_choice", choices=SQRT_CHOICES, default=SQRT_CHOICES[0]
        )
        parser.add_argument("--n-matrix", dest="n_matrix", help="Path of a multiplicity file.")
        parser.add_argument(
            "--format", dest="output_format", choices=OUTPUT_FORMATS, default="json"
        )
        parser.add_argument("--workers", type=int, help="Threads for per-element fan-out.")
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def build_data(self, options):
        data = {
            "command": self.command_name,
            "preset": options["preset"],
            "datum": options["datum"],
            "q": options["q"],
            "ell": options["ell"],
            "delta": options["delta"],
            "w": options["w"],
            "sqrt_choice": options["sqrt_choice"],
            "n_matrix": options["n_matrix"],
            "format": options["output_format"],
        }
        if options["workers"] is not None:
            data["workers"] = options["workers"]
        for flag in OPTIONAL_FLAGS:
            if options.get(flag) is not None:
                data[flag] = options[flag]
        return data

    def handle(self, *args, **options):
        serializer = RunConfigSerializer(data=self.build_data(options))
        try:
            if not serializer.is_valid():
                raise CommandError(format_errors(serializer.errors), returncode=1)
            cfg = serializer.save()
            result = dispatch(cfg)
        except DjangoValidationError as exc:
            raise CommandError("; ".join(exc.messages), returncode=1)
        except IdentityViolation as exc:
            raise CommandError(str(exc), returncode=exc.exit_code)
        except HeckeLabError as exc:
            raise CommandError(f"{exc.code}: {exc}", returncode=exc.exit_code)

        output = result.payload if cfg.output_format == "json" else result.table
        self.stdout.write(render(output, cfg.output_format), ending="\n")
        if result.failures:
            raise CommandError(
                f"{len(result.failures)} check(s) failed; see the artifact above.",
                returncode=IdentityViolation.exit_code,
            )
