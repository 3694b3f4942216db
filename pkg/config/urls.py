from django.urls import path, include
from drf_spectacular.views import (
    SpectacularAPIView,
    SpectacularSwaggerView,
    SpectacularRedocView,
)

urlpatterns = [
    # API Documentation (Public Access)
    path('api/schema/', SpectacularAPIView.as_view(permission_classes=[]), name='schema'),
    path('api/docs/', SpectacularSwaggerView.as_view(url_name='schema', permission_classes=[]), name='swagger-ui'),
    path('api/redoc/', SpectacularRedocView.as_view(url_name='schema', permission_classes=[]), name='redoc'),

    # API Endpoints
    path('api/permutations/', include('apps.permutations.urls')),
    path('api/stats/', include('apps.stats.urls')),
    path('api/codes/', include('apps.codes.urls')),
    path('api/foata/', include('apps.foata.urls')),
    path('api/han/', include('apps.han.urls')),
    path('api/verification/', include('apps.verification.urls')),
]
