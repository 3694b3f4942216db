import argparse

from django.core.management.base import BaseCommand

from apps.cli.runner import run


class Command(BaseCommand):
    help = 'Run a mahonia command, e.g. `manage.py mahonia map --han 392648517`'

    def add_arguments(self, parser):
        parser.add_argument('argv', nargs=argparse.REMAINDER)

    def handle(self, *args, **options):
        code = run(options['argv'], stdout=self.stdout, stderr=self.stderr)
        if code:
            raise SystemExit(code)
