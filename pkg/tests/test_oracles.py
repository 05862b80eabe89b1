# tests/test_oracles.py
"""
Abgleich der Entscheidungsverfahren mit den Brute-Force-Orakeln
"""
import itertools

import pytest

from freegroups.errors import BudgetExceededError
from freegroups.lattice import fringe
from freegroups.oracles import (
    oracle_conjugate_intersection,
    oracle_free_factor,
    oracle_fringe_by_partitions,
    oracle_fringe_is_takahasi,
    oracle_root_search,
)
from freegroups.properties import (
    PropertyPredicate,
    RootWitness,
    is_malnormal,
    is_p_pure,
    is_pure,
    property_closure,
    pure_closure_iterative,
)
from freegroups.sampling import random_subgroup
from freegroups.stallings import basis, bouquet, build, contains
from freegroups.whitehead import is_free_factor
from freegroups.words import Word, shortlex_words
from tests.conftest import g, w


def _embedded(K, abstract_words):
    """Bild abstrakter Wörter unter x_i ↦ i-tes Basiselement von K"""
    B = basis(K)
    images = []
    for u in abstract_words:
        value = Word()
        for x in u:
            b = B[abs(x) - 1]
            value = value * (b if x > 0 else ~b)
        images.append(value)
    return build(K.alphabet_rank, images)


def _free_factor_corpus():
    """Paare (L, K) mit L ≤ K, Graphen mit höchstens 6 Knoten"""
    ambients = [bouquet(2), g(2, "aa,bb"), g(2, "ab,aB"), g(3, "a,b"), g(3, "ab,c")]
    singles = list(shortlex_words(2, 3))
    doubles = list(itertools.combinations(shortlex_words(2, 2), 2))
    pairs = []
    for K in ambients:
        for combo in [(u,) for u in singles] + doubles:
            L = _embedded(K, combo)
            if L.num_vertices <= 6:
                pairs.append((L, K))
    return pairs


# =============================================================================
# FREE FACTORS
# =============================================================================
def test_oracle_free_factor_examples(F2):
    assert oracle_free_factor(g(2, "aabb"), g(2, "aa,bb"), 8)
    assert not oracle_free_factor(g(2, "aabb"), F2, 8)
    with pytest.raises(BudgetExceededError):
        oracle_free_factor(g(2, "aabbaabb"), F2, 4)


@pytest.mark.slow
def test_free_factor_agrees_with_oracle():
    corpus = _free_factor_corpus()
    assert len(corpus) >= 200
    disagreements = [(basis(L), basis(K)) for L, K in corpus
                     if is_free_factor(L, K) != oracle_free_factor(L, K, 16)]
    assert disagreements == []


# =============================================================================
# ROOTS
# =============================================================================
def test_oracle_root_search_examples():
    assert oracle_root_search(g(2, "aa"), 2, 3) == RootWitness(w("a"), 2)
    assert oracle_root_search(g(2, "ab"), 4, 4) is None
    assert oracle_root_search(g(2, "abab"), 2, 2) == RootWitness(w("ab"), 2)
    assert oracle_root_search(g(2, "aa"), 3, 4, coprime_to=2) is None


@pytest.mark.slow
def test_purity_agrees_with_oracle(rng):
    pure = PropertyPredicate.parse("pure")
    pure_2 = PropertyPredicate.parse("p-pure:2")
    for _ in range(200):
        H = random_subgroup(rng, 2, max_generators=3, max_length=4)
        if oracle_root_search(H, 6, 4) is not None:
            assert not is_pure(H)
        if oracle_root_search(H, 6, 4, coprime_to=2) is not None:
            assert not is_p_pure(H, 2)
        assert pure_closure_iterative(H) == property_closure(H, pure)
        assert pure_closure_iterative(H, 2) == property_closure(H, pure_2)


# =============================================================================
# FRINGE / TAKAHASI
# =============================================================================
@pytest.mark.parametrize("rank, gens", [(3, "ab,acba"), (2, "aa"), (2, "a,baB"), (2, "abAB"), (2, "aab,bba")])
def test_fringe_matches_all_partitions(rank, gens):
    H = g(rank, gens)
    assert oracle_fringe_by_partitions(H) == fringe(H)


def test_fringe_partition_budget():
    with pytest.raises(BudgetExceededError):
        oracle_fringe_by_partitions(g(2, "aabbaabbab"), max_vertices=4)


@pytest.mark.parametrize("rank, gens", [(3, "ab,acba"), (2, "a,b"), (2, "aa")])
def test_fringe_is_takahasi(rank, gens):
    assert oracle_fringe_is_takahasi(g(rank, gens), trials=50, seed=7)


@pytest.mark.slow
def test_fringe_is_takahasi_random(rng):
    for seed in range(100):
        H = random_subgroup(rng, 2, max_generators=2, max_length=4)
        assert oracle_fringe_is_takahasi(H, trials=1, seed=seed)


# =============================================================================
# MALNORMALITY
# =============================================================================
@pytest.mark.parametrize("rank, gens", [(2, "aa"), (2, "ab"), (2, "a,baB"), (2, "abAB"), (2, "aab")])
def test_malnormal_agrees_with_conjugate_search(rank, gens):
    H = g(rank, gens)
    witness = oracle_conjugate_intersection(H, 4)
    if witness is not None:
        assert not is_malnormal(H)
    if is_malnormal(H):
        assert witness is None


@pytest.mark.slow
def test_malnormal_agrees_with_conjugate_search_random(rng):
    for _ in range(100):
        H = random_subgroup(rng, 2, max_generators=2, max_length=4)
        witness = oracle_conjugate_intersection(H, 4)
        if witness is not None:
            assert not is_malnormal(H)
            assert not contains(H, witness)
