from typing import Any, Dict

from rest_framework import permissions, status
from rest_framework.response import Response
from rest_framework.views import APIView

from apps.core.exceptions import CapExceededError, InputError


class DomainAPIView(APIView):
    """
    POST endpoint: validate the body with `request_serializer`, hand the
    validated data to `compute`, return its payload.

    Bad input and cap violations become 400 responses with an `error` key.
    """
    permission_classes = [permissions.AllowAny]
    request_serializer = None

    def compute(self, data: Dict[str, Any]) -> Dict[str, Any]:
        raise NotImplementedError

    def post(self, request):
        serializer = self.request_serializer(data=request.data)
        serializer.is_valid(raise_exception=True)

        try:
            return Response(self.compute(serializer.validated_data), status=status.HTTP_200_OK)
        except (InputError, CapExceededError) as e:
            return Response({'error': str(e)}, status=status.HTTP_400_BAD_REQUEST)
