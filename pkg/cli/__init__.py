# cli/__init__.py
"""
CLI-Package für FreeGroupLab
Kommandos, Ein-/Ausgabeformate und der Vermutungs-Explorer
"""
from .commands import build_parser, run
from .explorer import ExplorerReport, conjecture_explore

__all__ = ['build_parser', 'run', 'ExplorerReport', 'conjecture_explore']
