from django.urls import path

from apps.codes.views import DecodeView, EncodeView, TransformView

urlpatterns = [
    path('encode/', EncodeView.as_view(), name='code-encode'),
    path('decode/', DecodeView.as_view(), name='code-decode'),
    path('transform/', TransformView.as_view(), name='code-transform'),
]
