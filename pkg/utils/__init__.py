# utils/__init__.py
from .logger import Logger, configure

__all__ = ['Logger', 'configure']
