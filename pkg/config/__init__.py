# config/__init__.py
from . import settings
from .settings import CURRENT_ENV, Environment

__all__ = ['settings', 'CURRENT_ENV', 'Environment']
