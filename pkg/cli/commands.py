# cli/commands.py
"""
Kommandozeile von FreeGroupLab

Beispiel:
    python main.py fringe --rank 3 --gens "ab,acba"
    python main.py closure --prop pure --rank 2 --gens abab
    python main.py is --prop p-pure:2 --rank 2 --gens aaa

Exit-Codes: 0 Erfolg bzw. wahr, 1 falsch, 2 Eingabe-/Aufruffehler,
3 interner Widerspruch.
"""
import argparse
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, TextIO

from config import settings
from freegroups import algext, lattice, properties, stallings, whitehead
from freegroups.errors import FreeGroupError, InternalInconsistencyError, WordParseError
from freegroups.lattice import SubgroupSet
from freegroups.properties import PropertyName, PropertyPredicate
from freegroups.stallings import INFINITE, StallingsGraph
from freegroups.words import parse_word
from utils.logger import Logger, configure

from . import formats
from .explorer import conjecture_explore

logger = Logger.for_module(__name__)

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

CLOSURE_PROPS = "pure | p-pure:<p> | malnormal | ealg"
IS_PROPS = "pure | p-pure:<p> | malnormal | compressed | ealg-closed | free-factor | primitive | algebraic"


# =============================================================================
# HELPERS
# =============================================================================
def _subgroup(args) -> StallingsGraph:
    return formats.load_subgroup(args.rank, args.gens, args.file)


def _other(args) -> StallingsGraph:
    if args.other_gens is None and args.other_file is None:
        raise WordParseError("Zweite Untergruppe fehlt (--other-gens oder --other-file)")
    return formats.load_subgroup(args.rank, args.other_gens, args.other_file)


def _word(args):
    if args.word is None:
        raise WordParseError("Wort fehlt (--word)")
    return parse_word(args.word, args.rank)


def _emit_subgroup(args, H: StallingsGraph, out: TextIO) -> int:
    if args.json:
        print(formats.dump_json(formats.subgroup_record(H)), file=out)
    else:
        print(formats.format_subgroup(H), file=out)
    return EXIT_TRUE


def _emit_set(args, members: SubgroupSet, out: TextIO) -> int:
    if args.json:
        print(formats.dump_json([formats.subgroup_record(H) for H in members]), file=out)
    else:
        print(formats.format_table(members), file=out)
    return EXIT_TRUE


def _emit_bool(value: bool, out: TextIO) -> int:
    print("true" if value else "false", file=out)
    return EXIT_TRUE if value else EXIT_FALSE


# =============================================================================
# HANDLERS
# =============================================================================
def cmd_fold(args, out):
    return _emit_subgroup(args, _subgroup(args), out)


def cmd_member(args, out):
    return _emit_bool(stallings.contains(_subgroup(args), _word(args)), out)


def cmd_rank(args, out):
    print(stallings.rank(_subgroup(args)), file=out)
    return EXIT_TRUE


def cmd_basis(args, out):
    for w in stallings.basis(_subgroup(args)):
        print(w, file=out)
    return EXIT_TRUE


def cmd_express(args, out):
    H = _subgroup(args)
    print(formats.format_basis_word(stallings.express(H, _word(args))), file=out)
    return EXIT_TRUE


def cmd_index(args, out):
    value = stallings.index(_subgroup(args))
    print("infinite" if value == INFINITE else value, file=out)
    return EXIT_TRUE


def cmd_leq(args, out):
    morphism = stallings.leq(_subgroup(args), _other(args))
    if morphism is None:
        return _emit_bool(False, out)
    print(" ".join(f"{v}->{w}" for v, w in enumerate(morphism.vertex_map)), file=out)
    return EXIT_TRUE


def cmd_intersect(args, out):
    return _emit_subgroup(args, lattice.intersect(_subgroup(args), _other(args)), out)


def cmd_join(args, out):
    return _emit_subgroup(args, lattice.join(_subgroup(args), _other(args)), out)


def cmd_fringe(args, out):
    H = _subgroup(args)
    if args.moves:
        return _emit_set(args, lattice.fringe_in_basis(H, whitehead.parse_moves(args.moves, args.rank)), out)
    return _emit_set(args, lattice.fringe(H), out)


def cmd_takahasi(args, out):
    return _emit_subgroup(args, lattice.takahasi_factor(_subgroup(args), _other(args)), out)


def cmd_ae(args, out):
    return _emit_set(args, algext.algebraic_extensions(_subgroup(args)), out)


def cmd_algclosure(args, out):
    return _emit_subgroup(args, algext.algebraic_closure(_subgroup(args), _other(args)), out)


def cmd_closure(args, out):
    H = _subgroup(args)
    predicate = PropertyPredicate.parse(args.prop)
    if predicate.name is PropertyName.EALG_CLOSED:
        closure = algext.ealg_closure(H)
    elif args.iterative and predicate.name in (PropertyName.PURE, PropertyName.P_PURE):
        closure = properties.pure_closure_iterative(H, predicate.prime)
    else:
        closure = properties.property_closure(H, predicate)
    return _emit_subgroup(args, closure, out)


def cmd_is(args, out):
    H = _subgroup(args)
    prop = args.prop.strip().lower()
    if prop == "compressed":
        return _emit_bool(algext.is_compressed(H), out)
    if prop == "free-factor":
        return _emit_bool(whitehead.is_free_factor(H, _other(args)), out)
    if prop == "algebraic":
        return _emit_bool(algext.is_algebraic(H, _other(args)), out)
    if prop == "primitive":
        return _emit_bool(whitehead.is_primitive(_word(args), H), out)
    predicate = PropertyPredicate.parse(prop)
    if predicate.name in (PropertyName.PURE, PropertyName.P_PURE) and not args.json:
        witness = properties.root_witness(H, predicate.prime)
        if witness is not None:
            print(f"false  witness {witness}", file=out)
            return EXIT_FALSE
        return _emit_bool(True, out)
    return _emit_bool(predicate.evaluate(H), out)


def cmd_explore(args, out):
    H = _subgroup(args)
    fixed = [whitehead.parse_moves(args.moves, args.rank)] if args.moves else []
    report = conjecture_explore(H, args.samples, args.move_length, args.seed, fixed)
    if args.json:
        print(formats.dump_json({
            "intersection": [formats.subgroup_record(K) for K in report.intersection],
            "algebraic_extensions": [formats.subgroup_record(K) for K in report.algebraic],
            "sequences": report.sequences,
            "history": report.history,
            "inclusion_holds": report.inclusion_holds,
            "proper_inclusion": report.proper_inclusion,
        }), file=out)
        return EXIT_TRUE
    print(f"bases sampled: {len(report.sequences)} (seed {args.seed})", file=out)
    print(f"AE(H) ⊆ intersection: {str(report.inclusion_holds).lower()}", file=out)
    print(f"proper inclusion: {str(report.proper_inclusion).lower()}", file=out)
    print("intersection:", file=out)
    print(formats.format_table(report.intersection), file=out)
    print("AE(H):", file=out)
    print(formats.format_table(report.algebraic), file=out)
    return EXIT_TRUE


def cmd_oq2(args, out):
    return _emit_set(args, algext.non_ealg_candidates(_subgroup(args)), out)


def cmd_dot(args, out):
    dot = formats.to_dot(_subgroup(args))
    if args.output:
        Path(args.output).write_text(dot.source, encoding="utf-8")
        logger.log_message(f"DOT gespeichert: {args.output}", "SUCCESS")
    else:
        print(dot.source, file=out, end="")
    return EXIT_TRUE


# =============================================================================
# PARSER
# =============================================================================
def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rank", type=int, required=True,
                        help=f"Rang des Alphabets (1..{settings.MAX_RANK})")
    source = common.add_mutually_exclusive_group()
    source.add_argument("--gens", help="Erzeuger, kommagetrennt (z.B. 'ab,acba')")
    source.add_argument("--file", help="Datei: ein Wort pro Zeile ('#' Kommentar) oder .json-Graph")
    common.add_argument("--json", action="store_true", help="strukturierte Ausgabe")
    verbosity = common.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", action="store_true", help="Debug-Ausgaben auf stderr")
    verbosity.add_argument("--quiet", action="store_true", help="nur Warnungen und Fehler")
    return common


def _other_parser() -> argparse.ArgumentParser:
    other = argparse.ArgumentParser(add_help=False)
    source = other.add_mutually_exclusive_group()
    source.add_argument("--other-gens", help="Erzeuger der zweiten Untergruppe K")
    source.add_argument("--other-file", help="Datei der zweiten Untergruppe K")
    return other


def _word_parser() -> argparse.ArgumentParser:
    word = argparse.ArgumentParser(add_help=False)
    word.add_argument("--word", help="Wort (a..z Erzeuger, A..Z Inverse, '1' Identität)")
    return word


COMMANDS: Dict[str, tuple] = {
    # name: (handler, Hilfe, braucht K, braucht Wort)
    "fold": (cmd_fold, "Stallings-Graph falten und anzeigen", False, False),
    "member": (cmd_member, "Wort in H?", False, True),
    "rank": (cmd_rank, "Rang von H", False, False),
    "basis": (cmd_basis, "Basis aus dem Spannbaum", False, False),
    "express": (cmd_express, "Wort über der Basis von H schreiben", False, True),
    "index": (cmd_index, "Index von H in F(A)", False, False),
    "leq": (cmd_leq, "H ≤ K? (Knotenabbildung)", True, False),
    "intersect": (cmd_intersect, "H ∩ K", True, False),
    "join": (cmd_join, "⟨H ∪ K⟩", True, False),
    "fringe": (cmd_fringe, "Hauptobergruppen O_A(H)", False, False),
    "takahasi": (cmd_takahasi, "Takahasi-Faktor von H in K", True, False),
    "ae": (cmd_ae, "algebraische Erweiterungen AE(H)", False, False),
    "algclosure": (cmd_algclosure, "algebraischer Abschluss cl_K(H)", True, False),
    "closure": (cmd_closure, f"P-Abschluss ({CLOSURE_PROPS})", False, False),
    "is": (cmd_is, f"Eigenschaft prüfen ({IS_PROPS})", True, True),
    "conjecture-explore": (cmd_explore, "AE(H) vs. Schnitt der Fringes", False, False),
    "oq2-search": (cmd_oq2, "algebraische, nicht e-algebraische Kandidaten ohne Rangzuwachs", False, False),
    "dot": (cmd_dot, "DOT-Export des Stallings-Graphen", False, False),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="freegrouplab",
        description=f"{settings.APP_NAME} {settings.APP_VERSION}: Untergruppen freier Gruppen",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    common = _common_parser()
    for name, (handler, help_text, needs_other, needs_word) in COMMANDS.items():
        parents = [common]
        if needs_other:
            parents.append(_other_parser())
        if needs_word:
            parents.append(_word_parser())
        sub = subparsers.add_parser(name, parents=parents, help=help_text, description=help_text)
        sub.set_defaults(handler=handler)
        if name in ("closure", "is"):
            sub.add_argument("--prop", required=True, help=CLOSURE_PROPS if name == "closure" else IS_PROPS)
        if name == "closure":
            sub.add_argument("--iterative", action="store_true",
                             help="pure/p-pure per Wurzel-Iteration statt über AE(H)")
        if name in ("fringe", "conjecture-explore"):
            sub.add_argument("--moves", help="Whitehead-Folge, z.B. 'II:A:*.r;II:B:.*r;II:a:*lc'")
        if name == "conjecture-explore":
            sub.add_argument("--samples", type=int, default=settings.EXPLORER_SAMPLES)
            sub.add_argument("--move-length", type=int, default=settings.EXPLORER_MOVE_LENGTH)
            sub.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
        if name == "dot":
            sub.add_argument("--output", help="Zieldatei statt stdout")
    return parser


def run(argv: List[str], out: Optional[TextIO] = None) -> int:
    """Führt einen CLI-Aufruf aus und gibt den Exit-Code zurück."""
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse: --help -> 0, Aufruffehler -> 2
        return EXIT_USAGE if e.code not in (0, None) else EXIT_TRUE

    configure("DEBUG" if args.verbose else "WARNING" if args.quiet else None)
    if not 1 <= args.rank <= settings.MAX_RANK:
        logger.log_message(f"--rank muss zwischen 1 und {settings.MAX_RANK} liegen", "ERROR")
        return EXIT_USAGE

    handler: Callable = args.handler
    try:
        return handler(args, out)
    except InternalInconsistencyError as e:
        logger.log_message(f"Interner Widerspruch: {e}", "ERROR")
        return EXIT_INTERNAL
    except (FreeGroupError, ValueError) as e:
        logger.log_message(str(e), "ERROR")
        return EXIT_USAGE
