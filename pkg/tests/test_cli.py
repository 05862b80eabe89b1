# tests/test_cli.py
import io
import json

import pytest

from cli import build_parser, conjecture_explore, run
from cli.formats import format_basis_word, format_table, parse_generators, read_generator_file, to_dot
from freegroups.errors import WordParseError
from freegroups.lattice import SubgroupSet, fringe
from freegroups.stallings import from_record
from freegroups.whitehead import parse_moves
from tests.conftest import g, w

BASIS_CHANGE = "II:A:*.r;II:B:.*r;II:a:*lc"


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


# =============================================================================
# SUBCOMMANDS
# =============================================================================
def test_fringe_lists_six_subgroups():
    code, text = call("fringe", "--rank", "3", "--gens", "ab,acba")
    assert code == 0
    lines = text.strip().splitlines()
    assert lines[0].split() == ["#", "V", "E", "rank", "generators"]
    assert lines[-1] == "6 subgroups"


def test_fringe_in_other_basis():
    code, text = call("fringe", "--rank", "3", "--gens", "ab,acba", "--moves", BASIS_CHANGE)
    assert code == 0
    assert text.strip().splitlines()[-1] == "1 subgroups"


def test_ae_of_conjugate_pair():
    code, text = call("ae", "--rank", "2", "--gens", "a,baB")
    assert code == 0
    assert text.strip().splitlines()[-1] == "2 subgroups"


def test_pure_closure_output():
    code, text = call("closure", "--prop", "pure", "--rank", "2", "--gens", "abab")
    assert code == 0
    assert text.strip() == "⟨ab⟩  V=2 E=2 rank=1"


def test_iterative_closure_matches():
    assert call("closure", "--prop", "pure", "--iterative", "--rank", "2", "--gens", "aaaa") \
        == call("closure", "--prop", "pure", "--rank", "2", "--gens", "aaaa")


@pytest.mark.parametrize("argv, code, first", [
    (("member", "--rank", "3", "--gens", "abA,acA", "--word", "abcA"), 0, "true"),
    (("member", "--rank", "3", "--gens", "abA,acA", "--word", "a"), 1, "false"),
    (("rank", "--rank", "3", "--gens", "abA,acA"), 0, "2"),
    (("index", "--rank", "2", "--gens", "a"), 0, "infinite"),
    (("index", "--rank", "2", "--gens", "a,bb,baB"), 0, "2"),
    (("express", "--rank", "2", "--gens", "a,baB", "--word", "abaB"), 0, "x1 x2"),
    (("basis", "--rank", "3", "--gens", "abA,acA"), 0, "abA"),
    (("is", "--prop", "pure", "--rank", "2", "--gens", "abab"), 1, "false  witness (ab, 2)"),
    (("is", "--prop", "pure", "--rank", "2", "--gens", "ab"), 0, "true"),
    (("is", "--prop", "malnormal", "--rank", "2", "--gens", "a,baB"), 1, "false"),
    (("is", "--prop", "compressed", "--rank", "2", "--gens", "aa,bb,ab"), 1, "false"),
    (("is", "--prop", "ealg-closed", "--rank", "3", "--gens", "ab,acba"), 0, "true"),
    (("is", "--prop", "free-factor", "--rank", "2", "--gens", "aabb", "--other-gens", "aa,bb"), 0, "true"),
    (("is", "--prop", "algebraic", "--rank", "2", "--gens", "abAB", "--other-gens", "a,b"), 0, "true"),
    (("is", "--prop", "primitive", "--rank", "2", "--gens", "a,b", "--word", "abAB"), 1, "false"),
    (("leq", "--rank", "2", "--gens", "a", "--other-gens", "ab"), 1, "false"),
    (("leq", "--rank", "2", "--gens", "aa", "--other-gens", "a"), 0, "0->0 1->0"),
])
def test_subcommand_output(argv, code, first):
    result, text = call(*argv)
    assert result == code
    assert text.splitlines()[0] == first


def test_intersect_and_join_json():
    code, text = call("intersect", "--rank", "2", "--gens", "aa,b", "--other-gens", "aaa,b", "--json")
    assert code == 0
    assert from_record(json.loads(text)) == g(2, "aaaaaa,b")
    code, text = call("join", "--rank", "2", "--gens", "a", "--other-gens", "b", "--json")
    assert json.loads(text)["generators"] == ["a", "b"]


def test_algclosure_and_takahasi():
    assert call("algclosure", "--rank", "2", "--gens", "aa", "--other-gens", "a,b")[1].startswith("⟨a⟩")
    assert call("takahasi", "--rank", "3", "--gens", "ab,acba", "--other-gens", "a,b,c")[1] \
        .startswith("⟨a, b, c⟩")


def test_json_round_trip(tmp_path):
    code, text = call("fold", "--rank", "3", "--gens", "ab,acba", "--json")
    assert code == 0
    record = json.loads(text)
    assert record["subgroup_rank"] == 2
    assert from_record(record) == g(3, "ab,acba")

    path = tmp_path / "graph.json"
    path.write_text(text, encoding="utf-8")
    assert call("fold", "--rank", "3", "--file", str(path)) == call("fold", "--rank", "3", "--gens", "ab,acba")


def test_generator_file(tmp_path):
    path = tmp_path / "gens.txt"
    path.write_text("# Beispiel\nab\n\nacba  # zweiter Erzeuger\n", encoding="utf-8")
    assert read_generator_file(str(path), 3) == [w("ab"), w("acba")]
    assert call("rank", "--rank", "3", "--file", str(path)) == (0, "2\n")


def test_generator_file_reports_line(tmp_path):
    path = tmp_path / "gens.txt"
    path.write_text("ab\na?\n", encoding="utf-8")
    with pytest.raises(WordParseError, match=":2:"):
        read_generator_file(str(path), 2)


def test_dot_export(tmp_path):
    code, text = call("dot", "--rank", "3", "--gens", "abA,acA")
    assert code == 0
    assert "digraph" in text
    assert "doublecircle" in text
    assert 'label=c' in text
    target = tmp_path / "h.dot"
    assert call("dot", "--rank", "3", "--gens", "abA,acA", "--output", str(target))[0] == 0
    assert target.read_text(encoding="utf-8") == text


def test_output_is_deterministic():
    argv = ("ae", "--rank", "3", "--gens", "ab,acba", "--json")
    assert call(*argv) == call(*argv)


# =============================================================================
# ERRORS / EXIT CODES
# =============================================================================
@pytest.mark.parametrize("argv", [
    ("fold",),
    ("fold", "--rank", "2", "--gens", "abc"),
    ("fold", "--rank", "2", "--gens", "a?"),
    ("fold", "--rank", "0", "--gens", "a"),
    ("member", "--rank", "2", "--gens", "a"),
    ("closure", "--prop", "p-pure:4", "--rank", "2", "--gens", "aa"),
    ("is", "--prop", "free-factor", "--rank", "2", "--gens", "a"),
    ("is", "--prop", "free-factor", "--rank", "2", "--gens", "a", "--other-gens", "b"),
    ("express", "--rank", "2", "--gens", "a", "--word", "b"),
    ("unknown",),
])
def test_usage_errors_exit_two(argv):
    assert call(*argv)[0] == 2


def test_help_exits_zero():
    assert call("--help")[0] == 0


def test_parser_knows_all_subcommands():
    parser = build_parser()
    text = parser.format_help()
    for name in ("fold", "member", "rank", "basis", "express", "index", "leq", "intersect", "join",
                 "fringe", "takahasi", "ae", "algclosure", "closure", "is", "conjecture-explore",
                 "oq2-search", "dot"):
        assert name in text


# =============================================================================
# FORMATS / EXPLORER
# =============================================================================
def test_format_helpers():
    assert parse_generators("ab, ,acba", 3) == [w("ab"), w("acba")]
    assert format_basis_word(w("aB")) == "x1 x2^-1"
    assert format_basis_word(w("1")) == "1"
    assert format_table([]).splitlines()[-1] == "0 subgroups"
    assert to_dot(g(2, "a")).source.count("->") == 1


def test_explore_with_basis_change(fringe_example):
    report = conjecture_explore(fringe_example, samples=2, move_length=3, seed=1,
                                fixed_sequences=[parse_moves(BASIS_CHANGE, 3)])
    assert report.intersection == SubgroupSet([fringe_example])
    assert report.inclusion_holds
    assert not report.proper_inclusion
    assert report.history[0] == 1
    assert len(report.sequences) == 3


def test_explore_without_samples(fringe_example):
    report = conjecture_explore(fringe_example, samples=0, move_length=3, seed=0)
    assert report.intersection == fringe(fringe_example)
    assert report.sequences == []


def test_explore_finite_index():
    H = g(2, "a,bb,baB")
    report = conjecture_explore(H, samples=5, move_length=3, seed=3)
    assert report.intersection == fringe(H)


def test_explore_cli_json():
    code, text = call("conjecture-explore", "--rank", "3", "--gens", "ab,acba", "--samples", "0",
                      "--moves", BASIS_CHANGE, "--json")
    assert code == 0
    payload = json.loads(text)
    assert len(payload["intersection"]) == 1
    assert payload["inclusion_holds"] is True
    assert payload["sequences"] == [BASIS_CHANGE]


def test_oq2_search_runs():
    code, text = call("oq2-search", "--rank", "2", "--gens", "aa")
    assert code == 0
    assert text.strip().splitlines()[-1].endswith("subgroups")
