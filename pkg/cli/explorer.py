# cli/explorer.py
"""
Explorer für die Vermutung AE(H) = ⋂_B O_B(H)

Schneidet die Fringes von H bezüglich zufälliger Basen (zufällige
Whitehead-Folgen) und vergleicht mit AE(H). Die Inklusion AE(H) ⊆ Schnitt
gilt immer; eine echte Inklusion ist Material für die Vermutung, kein Beweis.
"""
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple

import numpy as np

from freegroups.algext import algebraic_extensions
from freegroups.errors import InternalInconsistencyError
from freegroups.lattice import SubgroupSet, fringe, fringe_in_basis
from freegroups.stallings import StallingsGraph
from freegroups.whitehead import WhiteheadAutomorphism, enumerate_whitehead, format_moves
from utils.logger import Logger

logger = Logger.for_module(__name__)


@dataclass
class ExplorerReport:
    intersection: SubgroupSet
    algebraic: SubgroupSet
    sequences: List[str] = field(default_factory=list)
    # Größe des Schnitts nach jeder Folge
    history: List[int] = field(default_factory=list)

    @property
    def inclusion_holds(self) -> bool:
        return self.algebraic.issubset(self.intersection)

    @property
    def proper_inclusion(self) -> bool:
        return self.inclusion_holds and len(self.intersection) > len(self.algebraic)


def random_move_sequence(rng: np.random.Generator, rank: int,
                         length: int) -> Tuple[WhiteheadAutomorphism, ...]:
    moves = enumerate_whitehead(rank)
    return tuple(moves[int(k)] for k in rng.integers(len(moves), size=length))


def conjecture_explore(H: StallingsGraph, samples: int, move_length: int, seed: int,
                       fixed_sequences: Sequence[Sequence[WhiteheadAutomorphism]] = ()) -> ExplorerReport:
    """
    Args:
        H: Untergruppe
        samples: Anzahl zufälliger Zugfolgen
        move_length: Länge jeder zufälligen Folge
        seed: Seed des Zufallsgenerators
        fixed_sequences: zusätzlich (vorab) geprüfte Folgen
    """
    rng = np.random.default_rng(seed)
    intersection = fringe(H)
    report = ExplorerReport(intersection, algebraic_extensions(H))

    sequences = [tuple(seq) for seq in fixed_sequences]
    sequences += [random_move_sequence(rng, H.alphabet_rank, move_length) for _ in range(samples)]
    for moves in sequences:
        intersection = intersection.intersection(fringe_in_basis(H, moves))
        report.sequences.append(format_moves(moves))
        report.history.append(len(intersection))
    report.intersection = intersection

    if not report.inclusion_holds:
        raise InternalInconsistencyError("AE(H) liegt nicht im Schnitt der Fringes",
                                         f"|AE| = {len(report.algebraic)}, |Schnitt| = {len(intersection)}")
    if report.proper_inclusion:
        logger.log_message(f"Schnitt ({len(intersection)}) echt größer als AE(H) "
                           f"({len(report.algebraic)}) nach {len(sequences)} Basen", "WARNING")
    else:
        logger.log_message(f"Schnitt = AE(H) nach {len(sequences)} Basen", "SUCCESS")
    return report
