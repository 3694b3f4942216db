from django.urls import path

from apps.stats.views import EvaluateView

urlpatterns = [
    path('evaluate/', EvaluateView.as_view(), name='stat-evaluate'),
]
