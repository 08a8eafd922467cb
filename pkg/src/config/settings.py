"""
Django settings for the ggg project.

The project has no database, no HTTP surface and no templates; Django
provides configuration, app loading and the management command runner.
"""

import os
from pathlib import Path

# Load environment variables from .env file (optional, for development)
try:
    from dotenv import load_dotenv
    load_dotenv()
except ImportError:
    pass

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

SECRET_KEY = os.getenv('SECRET_KEY', 'ggg-insecure-local-key')

DEBUG = os.getenv('DEBUG', 'False') == 'True'

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'rest_framework',
    'graphs',
    'certification',
]

# Outputs are files and stdout only
DATABASES = {}

TIME_ZONE = 'UTC'

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# Certification settings

GGG_BUDGET = int(os.getenv('GGG_BUDGET', str(10 ** 9)))
GGG_SURVEY_MAX_M = int(os.getenv('GGG_SURVEY_MAX_M', '15'))
GGG_ORACLE_MAX_COLORING_VERTICES = int(os.getenv('GGG_ORACLE_MAX_COLORING_VERTICES', '15'))
GGG_ORACLE_MAX_VERTICES = int(os.getenv('GGG_ORACLE_MAX_VERTICES', '41'))
GGG_REPORT_VERSION = '1'
GGG_REPORT_SCHEMA = BASE_DIR / 'certification' / 'schemas' / 'property_report.schema.json'
GGG_LOG_LEVEL = os.getenv('GGG_LOG_LEVEL', 'WARNING')


# Logging goes to stderr; stdout carries command output only

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'plain': {
            'format': '%(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'stream': 'ext://sys.stderr',
            'formatter': 'plain',
        },
    },
    'loggers': {
        'graphs': {'handlers': ['console'], 'level': GGG_LOG_LEVEL, 'propagate': False},
        'certification': {'handlers': ['console'], 'level': GGG_LOG_LEVEL, 'propagate': False},
    },
}


# Celery configuration
# Survey rows run in-process unless CELERY_TASK_ALWAYS_EAGER=False and a worker is started
CELERY_BROKER_URL = os.getenv('CELERY_BROKER_URL', 'redis://localhost:6379/0')
CELERY_RESULT_BACKEND = os.getenv('CELERY_RESULT_BACKEND', 'redis://localhost:6379/0')
CELERY_TASK_ALWAYS_EAGER = os.getenv('CELERY_TASK_ALWAYS_EAGER', 'True') == 'True'
CELERY_TASK_EAGER_PROPAGATES = True
CELERY_ACCEPT_CONTENT = ['json']
CELERY_TASK_SERIALIZER = 'json'
CELERY_RESULT_SERIALIZER = 'json'
CELERY_TIMEZONE = 'UTC'
CELERY_TASK_TIME_LIMIT = 30 * 60

# Django REST Framework (serializers only)
REST_FRAMEWORK = {
    'UNAUTHENTICATED_USER': None,
}
