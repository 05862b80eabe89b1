# tests/test_lattice.py
import pytest

from freegroups.errors import NotSubgroupError, RankMismatchError, SearchCapExceededError
from freegroups.lattice import (
    SubgroupSet,
    fringe,
    fringe_in_basis,
    intersect,
    join,
    single_pair_quotients,
    takahasi_factor,
)
from freegroups.sampling import random_extension, random_subgroup, random_words
from freegroups.stallings import bouquet, contains, index, leq, subgroup_image
from freegroups.whitehead import compose_moves, inverse_sequence, is_free_factor, parse_moves
from freegroups.words import Endomorphism
from tests.conftest import g, w

# ψ: (a, b, c) ↦ (a, ab, acba)
BASIS_CHANGE = "II:A:*.r;II:B:.*r;II:a:*lc"


# =============================================================================
# SUBGROUP SET
# =============================================================================
def test_subgroup_set_is_sorted_and_unique():
    members = SubgroupSet([bouquet(2), g(2, "a"), g(2, "aa"), g(2, "a")])
    assert len(members) == 3
    assert members[0] == g(2, "a")
    assert [G.num_vertices for G in members] == sorted(G.num_vertices for G in members)
    assert members.find(g(2, "aa")) is not None
    assert members.find(g(2, "b")) is None
    assert g(2, "a") in members


def test_subgroup_set_operations():
    left = SubgroupSet([g(2, "a"), g(2, "b")])
    right = SubgroupSet([g(2, "b"), bouquet(2)])
    assert left.intersection(right) == SubgroupSet([g(2, "b")])
    assert len(left.union(right)) == 3
    assert SubgroupSet([g(2, "b")]).issubset(left)
    assert left.filter(lambda G: contains(G, w("a"))) == SubgroupSet([g(2, "a")])


# =============================================================================
# INTERSECTION / JOIN
# =============================================================================
def test_intersect_powers():
    assert intersect(g(2, "aa,b"), g(2, "aaa,b")) == g(2, "aaaaaa,b")


def test_intersect_commutators():
    K1 = g(3, "a,b,acAC")
    K2 = g(3, "a,c,abAB")
    assert intersect(K1, K2) == g(3, "a,abAB,acAC")


def test_intersect_membership(rng):
    for _ in range(200):
        H = random_subgroup(rng, 2, max_generators=3, max_length=4)
        K = random_subgroup(rng, 2, max_generators=3, max_length=4)
        meet = intersect(H, K)
        for x in random_words(rng, 2, 20, max_length=6):
            assert contains(meet, x) == (contains(H, x) and contains(K, x))


def test_intersect_rank_mismatch():
    with pytest.raises(RankMismatchError):
        intersect(g(2, "a"), g(3, "a"))


def test_join():
    assert join(g(2, "a"), g(2, "b")) == bouquet(2)
    assert join(g(2, "a,abAB"), g(2, "b,abAB")) == bouquet(2)
    assert join(g(2, "aa"), g(2, "aaa")) == g(2, "a")


# =============================================================================
# FRINGE
# =============================================================================
def test_fringe_of_example(fringe_example, F3):
    members = fringe(fringe_example)
    expected = SubgroupSet([
        fringe_example,
        g(3, "ab,ac,ba"),
        # Erzeuger ⟨ba, bA, cb⟩ beziehen sich auf den Knoten nach a; hier zur Basis konjugiert
        g(3, "ab,aa,acbA"),
        g(3, "ab,ac,aB,aa"),
        g(3, "ab,aca,acba"),
        F3,
    ])
    assert len(members) == 6
    assert members == expected


def test_fringe_of_finite_index():
    H = g(2, "a,bb,baB")
    assert fringe(H) == SubgroupSet([H, bouquet(2)])


def test_fringe_laws(rng):
    for _ in range(30):
        H = random_subgroup(rng, 2, max_generators=2, max_length=4)
        members = fringe(H)
        assert H in members
        assert all(leq(H, M) is not None for M in members)


def test_fringe_of_index_two_and_three_covers_all_extensions(rng):
    # endlicher Index: jede Obergruppe ist Quotient
    for gens in ("a,bb,baB", "aa,ab,aB", "aaa,b,abA,aabAA", "a,bbb,baB,bbaBB"):
        H = g(2, gens)
        assert index(H) in (2, 3)
        members = fringe(H)
        for _ in range(10):
            K = random_extension(rng, H)
            assert K in members


def test_fringe_cap(fringe_example):
    with pytest.raises(SearchCapExceededError):
        fringe(fringe_example, max_members=3)


def test_single_pair_quotients_count(fringe_example):
    assert len(list(single_pair_quotients(fringe_example))) == 6


# =============================================================================
# TAKAHASI / BASIS CHANGE
# =============================================================================
def test_takahasi_factor_examples(fringe_example, F3):
    assert takahasi_factor(fringe_example, F3) == F3
    assert takahasi_factor(fringe_example, g(3, "ab,ac,ba")) == g(3, "ab,ac,ba")
    assert takahasi_factor(g(2, "a"), bouquet(2)) == g(2, "a")
    with pytest.raises(NotSubgroupError):
        takahasi_factor(g(2, "a"), g(2, "b"))


def test_takahasi_factor_property(rng):
    for _ in range(40):
        H = random_subgroup(rng, 2, max_generators=2, max_length=4)
        K = random_extension(rng, H)
        L = takahasi_factor(H, K)
        assert L in fringe(H)
        assert is_free_factor(L, K)


def test_basis_change_sequence_maps_to_example():
    psi = compose_moves(parse_moves(BASIS_CHANGE, 3), 3)
    assert psi == Endomorphism.parse("a,ab,acba", 3)


def test_fringe_in_basis_example(fringe_example):
    moves = parse_moves(BASIS_CHANGE, 3)
    assert fringe_in_basis(fringe_example, moves) == SubgroupSet([fringe_example])


def test_fringe_in_empty_basis_change(fringe_example):
    assert fringe_in_basis(fringe_example, []) == fringe(fringe_example)


def test_fringe_in_basis_contains_subgroup(rng):
    for _ in range(10):
        H = random_subgroup(rng, 2, max_generators=2, max_length=3)
        moves = parse_moves("II:a:*l;I:bA;II:B:c*", 2)
        assert H in fringe_in_basis(H, moves)


def test_fringe_in_basis_round_trip(fringe_example):
    moves = parse_moves(BASIS_CHANGE, 3)
    forward = compose_moves(moves, 3)
    backward = compose_moves(inverse_sequence(moves), 3)
    for K in fringe_in_basis(fringe_example, moves):
        assert subgroup_image(forward, subgroup_image(backward, K)) == K
