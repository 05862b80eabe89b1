# config/settings.py
"""
Konfigurationseinstellungen für FreeGroupLab
Fokus auf Such-Budgets und Logging, Dependencies siehe requirements.txt

Eingaben und Seeds von Berechnungen werden NIE hier konfiguriert,
sondern immer explizit als Argument bzw. CLI-Flag übergeben.
"""
import os
from enum import Enum
from typing import Tuple


# Environment Detection
class Environment(Enum):
    DEVELOPMENT = "dev"
    PRODUCTION = "prod"
    TESTING = "test"


CURRENT_ENV = Environment(os.getenv('FG_ENV', 'prod'))


# Helper Function for Environment Variables
def get_env_setting(key: str, default, cast_type: type = str):
    """Lädt Einstellung aus Environment Variables mit Fallback"""
    value = os.getenv(f"FG_{key}", default)
    if cast_type != str and value != default:
        try:
            if cast_type == bool:
                return value.lower() in ('true', '1', 'yes', 'on')
            return cast_type(value)
        except (ValueError, TypeError):
            return default
    return value


# =============================================================================
# APPLICATION METADATA
# =============================================================================
APP_VERSION = "0.4.0"
APP_NAME = "FreeGroupLab"

# =============================================================================
# LOGGING
# =============================================================================
LOG_LEVEL = get_env_setting("LOG_LEVEL", "WARNING")           # DEBUG, INFO, WARNING, ERROR
LOG_TIMESTAMPS = get_env_setting("LOG_TIMESTAMPS", True, bool)  # [HH:MM:SS] vor jeder Zeile

# =============================================================================
# ALPHABET
# =============================================================================
# Textkodierung a..z / A..Z erlaubt höchstens 26 Erzeuger
MAX_RANK = 26

# =============================================================================
# SEARCH BUDGETS (Überschreitung = harter Fehler, nie stille Näherung)
# =============================================================================
# Wurzelsuche über das Übergangsmonoid des Stallings-Graphen
ROOT_SEARCH_VERTEX_CAP = get_env_setting("ROOT_SEARCH_VERTEX_CAP", 24, int)
ROOT_SEARCH_STATE_CAP = get_env_setting("ROOT_SEARCH_STATE_CAP", 500000, int)

# BFS über Quotienten (Fringe, e-algebraische Ketten)
FRINGE_MAX_MEMBERS = get_env_setting("FRINGE_MAX_MEMBERS", 20000, int)

# Orakel (nur Testsuite)
ORACLE_MAX_STATES = get_env_setting("ORACLE_MAX_STATES", 200000, int)
ORACLE_LENGTH_BUDGET = get_env_setting("ORACLE_LENGTH_BUDGET", 16, int)
ORACLE_PARTITION_MAX_VERTICES = get_env_setting("ORACLE_PARTITION_MAX_VERTICES", 8, int)

# =============================================================================
# CLI DEFAULTS
# =============================================================================
DEFAULT_SEED = 0
EXPLORER_SAMPLES = 20
EXPLORER_MOVE_LENGTH = 4

# =============================================================================
# SYSTEM REQUIREMENTS
# =============================================================================
REQUIRED_PYTHON_VERSION: Tuple[int, int] = (3, 9)

# Paketname (Import-Name) -> Mindestversion, siehe startup.py
REQUIRED_PACKAGES = {
    "numpy": ("numpy", "1.22.0"),
    "scipy": ("scipy", "1.8.0"),
    "sympy": ("sympy", "1.10"),
    "graphviz": ("graphviz", "0.20"),
    "packaging": ("packaging", "21.0"),
    "pytest": ("pytest", "7.0"),
}

# =============================================================================
# ENVIRONMENT-SPECIFIC OVERRIDES
# =============================================================================
# Development Environment Anpassungen
if CURRENT_ENV == Environment.DEVELOPMENT:
    # Mehr Ausgabe beim Entwickeln
    LOG_LEVEL = get_env_setting("LOG_LEVEL", "DEBUG")

# Testing Environment Anpassungen
elif CURRENT_ENV == Environment.TESTING:
    # Kleinere Budgets, damit entgleiste Suchen schnell abbrechen
    FRINGE_MAX_MEMBERS = get_env_setting("FRINGE_MAX_MEMBERS", 5000, int)
    ORACLE_MAX_STATES = get_env_setting("ORACLE_MAX_STATES", 50000, int)
    LOG_TIMESTAMPS = get_env_setting("LOG_TIMESTAMPS", False, bool)
