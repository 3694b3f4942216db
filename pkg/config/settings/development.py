from .base import *

DEBUG = True

ALLOWED_HOSTS = ['localhost', '127.0.0.1', '0.0.0.0']

# Disable caching in development
CACHES = {
    'default': {
        'BACKEND': 'django.core.cache.backends.dummy.DummyCache',
    }
}

# Partitions run in-process unless a worker is explicitly requested
MAHONIA_DISTRIBUTED = os.getenv('MAHONIA_DISTRIBUTED', 'False') == 'True'
