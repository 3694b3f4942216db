from django.urls import path

from apps.foata.views import FixedQueryView, FoataMapView

urlpatterns = [
    path('map/', FoataMapView.as_view(), name='foata-map'),
    path('fixed/', FixedQueryView.as_view(), name='foata-fixed'),
]
