import logging
import time
from django.utils.deprecation import MiddlewareMixin

from apps.core.utils import format_duration

logger = logging.getLogger(__name__)


class RequestLoggingMiddleware(MiddlewareMixin):
    """Log API request details and timing, and expose the timing as a header."""

    def process_request(self, request):
        request.start_time = time.perf_counter()

    def process_response(self, request, response):
        if hasattr(request, 'start_time'):
            duration = time.perf_counter() - request.start_time
            response['X-Mahonia-Elapsed'] = f"{duration:.6f}"
            logger.info(
                f"{request.method} {request.path} - {response.status_code} - {format_duration(duration)}"
            )
        return response
