from django.apps import AppConfig


class VerificationConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.verification'
    verbose_name = 'Exhaustive verification harness'

    def ready(self):
        # Register the built-in checks
        from apps.verification import checks  # noqa: F401
