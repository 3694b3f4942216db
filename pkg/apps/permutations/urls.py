from django.urls import path

from apps.permutations.views import ComplementView, ParseView

urlpatterns = [
    path('parse/', ParseView.as_view(), name='permutation-parse'),
    path('complement/', ComplementView.as_view(), name='permutation-complement'),
]
