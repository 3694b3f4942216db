from django.apps import AppConfig


class HanConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.han'
    verbose_name = "Han's bijection"
