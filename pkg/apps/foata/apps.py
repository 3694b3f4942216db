from django.apps import AppConfig


class FoataConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.foata'
    verbose_name = "Foata's second fundamental transformation"
