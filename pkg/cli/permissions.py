from rest_framework import permissions


class IsReadOnly(permissions.BasePermission):
    """
    Allow only safe methods; computations never change server state.
    """

    message = "The compute API is read-only."

    def has_permission(self, request, view):
        return request.method in permissions.SAFE_METHODS
