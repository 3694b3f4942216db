from django.urls import path

from apps.verification.views import FixedPointsView, TableView, VerifyView

urlpatterns = [
    path('verify/', VerifyView.as_view(), name='verification-verify'),
    path('table/', TableView.as_view(), name='verification-table'),
    path('fixed-points/', FixedPointsView.as_view(), name='verification-fixed-points'),
]
