#!/usr/bin/env python
"""The `mahonia` command-line entry point."""
import os
import sys


def main():
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'config.settings.development')
    try:
        import django
    except ImportError as exc:
        raise ImportError(
            "Couldn't import Django. Are you sure it's installed and "
            "available on your PYTHONPATH environment variable?"
        ) from exc
    django.setup()

    from apps.cli.runner import run
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
