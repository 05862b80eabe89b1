# freegroups/errors.py
"""
Fehlerhierarchie für FreeGroupLab

Eingabefehler erben zusätzlich von ValueError, damit aufrufender Code
sie wie gewohnt abfangen kann.
"""


class FreeGroupError(Exception):
    """Basisklasse aller Fehler dieses Pakets"""


class WordParseError(FreeGroupError, ValueError):
    """Text ist kein gültiges Wort (erlaubt: a..z, A..Z, '1' für die Identität)"""


class LetterOutOfRangeError(FreeGroupError, ValueError):
    def __init__(self, letter: str, rank: int):
        super().__init__(f"Buchstabe '{letter}' liegt außerhalb von Rang {rank}")
        self.letter = letter
        self.rank = rank


class RankMismatchError(FreeGroupError, ValueError):
    def __init__(self, expected: int, actual: int, what: str = "Rang"):
        super().__init__(f"{what} passt nicht: erwartet {expected}, erhalten {actual}")
        self.expected = expected
        self.actual = actual


class NotMemberError(FreeGroupError, ValueError):
    """Wort liegt nicht in der Untergruppe"""


class NotSubgroupError(FreeGroupError, ValueError):
    """H ist keine Untergruppe von K"""


class EmptyWordError(FreeGroupError, ValueError):
    """Identität übergeben, wo ein nichttriviales Wort verlangt ist"""


class InvalidPropertyError(FreeGroupError, ValueError):
    """Unbekannte Eigenschaft oder ungültiger Parameter (z.B. p nicht prim)"""


class BudgetExceededError(FreeGroupError):
    """Orakel-Budget überschritten"""


class SearchCapExceededError(FreeGroupError):
    """Konfigurierte Suchgrenze überschritten (siehe config/settings.py)"""

    def __init__(self, what: str, cap: int, setting: str):
        super().__init__(f"{what}: Grenze {cap} überschritten (FG_{setting} anpassen)")
        self.cap = cap
        self.setting = setting


class InternalInconsistencyError(FreeGroupError):
    """
    Eindeutigkeit, die die Theorie garantiert, ist verletzt.
    Kann nur ein Implementierungsfehler sein; 'diagnostics' enthält die Kandidaten.
    """

    def __init__(self, message: str, diagnostics: str = ""):
        full = f"{message}\n{diagnostics}" if diagnostics else message
        super().__init__(full)
        self.diagnostics = diagnostics
