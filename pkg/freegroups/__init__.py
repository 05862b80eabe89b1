# freegroups/__init__.py
"""
Kern-Package von FreeGroupLab
Endlich erzeugte Untergruppen freier Gruppen über Stallings-Graphen
"""

# Fehler
from .errors import (
    BudgetExceededError,
    EmptyWordError,
    FreeGroupError,
    InternalInconsistencyError,
    InvalidPropertyError,
    LetterOutOfRangeError,
    NotMemberError,
    NotSubgroupError,
    RankMismatchError,
    SearchCapExceededError,
    WordParseError,
)

# Wörter und Graphen
from .words import Endomorphism, Word, parse_word
from .stallings import (
    INFINITE,
    GraphMorphism,
    LabeledGraph,
    StallingsGraph,
    VertexPartition,
    build,
    bouquet,
)

# Verband, Whitehead, Erweiterungen, Eigenschaften
from .lattice import SubgroupSet
from .whitehead import WhiteheadAutomorphism, parse_moves
from .properties import PropertyPredicate, RootWitness

# Exportierte Komponenten
__all__ = [
    'BudgetExceededError',
    'EmptyWordError',
    'FreeGroupError',
    'InternalInconsistencyError',
    'InvalidPropertyError',
    'LetterOutOfRangeError',
    'NotMemberError',
    'NotSubgroupError',
    'RankMismatchError',
    'SearchCapExceededError',
    'WordParseError',
    'Endomorphism',
    'Word',
    'parse_word',
    'INFINITE',
    'GraphMorphism',
    'LabeledGraph',
    'StallingsGraph',
    'VertexPartition',
    'build',
    'bouquet',
    'SubgroupSet',
    'WhiteheadAutomorphism',
    'parse_moves',
    'PropertyPredicate',
    'RootWitness',
]
