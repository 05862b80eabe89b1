# cli/formats.py
"""
Ein- und Ausgabeformate der CLI: Erzeugerlisten, Tabellen,
JSON-Datensätze und DOT-Export
"""
import json
from pathlib import Path
from typing import Iterable, List, Optional

import graphviz

from freegroups.errors import WordParseError
from freegroups.stallings import StallingsGraph, basis, build, from_record, to_record
from freegroups.words import Word, letter_to_char, make_letter, parse_word


# =============================================================================
# INPUT
# =============================================================================
def parse_generators(text: str, rank: int) -> List[Word]:
    """'ab,acba' -> [ab, acba]; leere Einträge werden übersprungen"""
    return [parse_word(part, rank) for part in text.split(",") if part.strip()]


def read_generator_file(path: str, rank: int) -> List[Word]:
    """Ein Wort pro Zeile; '#' leitet Kommentare ein."""
    try:
        lines = Path(path).read_text(encoding="utf-8").splitlines()
    except OSError as e:
        raise WordParseError(f"Datei '{path}' nicht lesbar: {e}") from e
    words = []
    for number, line in enumerate(lines, start=1):
        content = line.split("#", 1)[0].strip()
        if not content:
            continue
        try:
            words.append(parse_word(content, rank))
        except WordParseError as e:
            raise WordParseError(f"{path}:{number}: {e}") from e
    return words


def read_graph_file(path: str) -> StallingsGraph:
    """JSON-Datensatz wie von --json ausgegeben"""
    try:
        record = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as e:
        raise WordParseError(f"Graph-Datei '{path}' nicht lesbar: {e}") from e
    return from_record(record)


def load_subgroup(rank: int, gens: Optional[str], file: Optional[str]) -> StallingsGraph:
    if gens is not None:
        return build(rank, parse_generators(gens, rank))
    if file is not None:
        if file.endswith(".json"):
            H = read_graph_file(file)
            if H.alphabet_rank != rank:
                raise WordParseError(f"Graph in '{file}' hat Rang {H.alphabet_rank}, erwartet {rank}")
            return H
        return build(rank, read_generator_file(file, rank))
    raise WordParseError("Untergruppe fehlt (--gens oder --file)")


# =============================================================================
# OUTPUT
# =============================================================================
def format_generators(H: StallingsGraph) -> str:
    gens = basis(H)
    return "⟨" + ", ".join(str(w) for w in gens) + "⟩" if gens else "⟨1⟩"


def format_basis_word(w: Word) -> str:
    """Wort über Basisbuchstaben: 'x1 x2^-1', Identität '1'"""
    if w.is_identity():
        return "1"
    return " ".join(f"x{abs(x)}" if x > 0 else f"x{abs(x)}^-1" for x in w)


def subgroup_record(H: StallingsGraph) -> dict:
    record = to_record(H)
    record["generators"] = [str(w) for w in basis(H)]
    record["subgroup_rank"] = H.rank
    return record


def dump_json(payload) -> str:
    return json.dumps(payload, ensure_ascii=False, sort_keys=True)


def format_subgroup(H: StallingsGraph) -> str:
    return f"{format_generators(H)}  V={H.num_vertices} E={H.num_edges} rank={H.rank}"


def format_table(graphs: Iterable[StallingsGraph]) -> str:
    graphs = list(graphs)
    rows = [f"{'#':>3}  {'V':>3}  {'E':>3}  {'rank':>4}  generators"]
    for k, H in enumerate(graphs):
        rows.append(f"{k:>3}  {H.num_vertices:>3}  {H.num_edges:>3}  {H.rank:>4}  {format_generators(H)}")
    rows.append(f"{len(graphs)} subgroups")
    return "\n".join(rows)


def to_dot(H: StallingsGraph, name: str = "stallings") -> graphviz.Digraph:
    """Kantenbeschriftung = Buchstabe, Basisknoten doppelt umrandet"""
    dot = graphviz.Digraph(name, graph_attr={"rankdir": "LR"})
    for v in range(H.num_vertices):
        shape = "doublecircle" if v == H.base else "circle"
        dot.node(str(v), str(v), shape=shape)
    for s, g, t in H.edges:
        dot.edge(str(s), str(t), label=letter_to_char(make_letter(g)))
    return dot
