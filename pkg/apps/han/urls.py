from django.urls import path

from apps.han.views import HanMapView, HanTraceView

urlpatterns = [
    path('map/', HanMapView.as_view(), name='han-map'),
    path('trace/', HanTraceView.as_view(), name='han-trace'),
]
