# tests/test_words.py
import pytest

from freegroups.errors import LetterOutOfRangeError, RankMismatchError, WordParseError
from freegroups.words import (
    Endomorphism,
    Word,
    all_letters,
    apply_endomorphism,
    conjugate,
    cyclic_reduce,
    invert,
    multiply,
    parse_word,
    power,
    random_reduced_word,
    shortlex_words,
)
from tests.conftest import w


@pytest.mark.parametrize("u, v, product", [
    ("ab", "Ba", "aa"),
    ("a", "A", "1"),
    ("ab", "cb", "abcb"),
    ("abc", "CBA", "1"),
])
def test_multiply(u, v, product):
    assert str(multiply(w(u), w(v))) == product


@pytest.mark.parametrize("u, inverse", [("ab", "BA"), ("1", "1"), ("aBc", "CbA")])
def test_invert(u, inverse):
    assert str(invert(w(u))) == inverse


@pytest.mark.parametrize("u, conjugator, core", [
    ("abA", "a", "b"),
    ("ab", "1", "ab"),
    ("abbA", "a", "bb"),
    ("abcBA", "ab", "c"),
])
def test_cyclic_reduce(u, conjugator, core):
    c, k = cyclic_reduce(w(u))
    assert (str(c), str(k)) == (conjugator, core)
    assert c * k * ~c == w(u)
    assert k.is_cyclically_reduced()


def test_parse_rejects_bad_input():
    with pytest.raises(WordParseError):
        parse_word("a1b")
    with pytest.raises(LetterOutOfRangeError):
        parse_word("abc", rank=2)
    assert parse_word(" aA ").is_identity()


def test_reduction_is_eager():
    assert Word([1, 2, -2, -1, 3]) == w("c")
    assert len(w("abBA")) == 0


def test_shortlex_order():
    assert all_letters(2) == (1, -1, 2, -2)
    words = list(shortlex_words(2, 2))
    assert len(words) == 4 + 12
    assert [str(x) for x in words[:6]] == ["a", "A", "b", "B", "aa", "ab"]
    assert words == sorted(words)


def test_power_and_conjugate():
    assert power(w("abA"), 3) == w("abbbA")
    assert power(w("ab"), -2) == w("BABA")
    assert power(w("ab"), 0).is_identity()
    assert conjugate(w("b"), w("a")) == w("Aba")


def test_group_laws(rng):
    for _ in range(1000):
        u, v, x = (random_reduced_word(rng, 3, int(rng.integers(0, 8))) for _ in range(3))
        assert (u * v) * x == u * (v * x)
        assert ~~u == u
        assert (u * ~u).is_identity()
        c, k = cyclic_reduce(u)
        assert c * k * ~c == u
        assert k.is_cyclically_reduced()


def test_random_word_has_exact_length(rng):
    for length in range(10):
        assert len(random_reduced_word(rng, 2, length)) == length


@pytest.mark.parametrize("images, word, image", [
    ("a,ab", "b", "ab"),
    ("a,ab,acba", "c", "acba"),
    ("a,b,c", "abCA", "abCA"),
    ("b,a", "aB", "bA"),
])
def test_apply_endomorphism(images, word, image):
    rank = images.count(",") + 1
    e = Endomorphism.parse(images, rank)
    assert apply_endomorphism(e, w(word)) == w(image)


def test_endomorphism_is_homomorphism(rng):
    e = Endomorphism.parse("ab,Ba,c", 3)
    for _ in range(200):
        u = random_reduced_word(rng, 3, 5)
        v = random_reduced_word(rng, 3, 5)
        assert e(u * v) == e(u) * e(v)


def test_endomorphism_compose_and_rank():
    first = Endomorphism.parse("a,ab", 2)
    second = Endomorphism.parse("b,a", 2)
    # erst first, dann second
    assert second.compose(first).images == (w("b"), w("ba"))
    with pytest.raises(RankMismatchError):
        apply_endomorphism(first, w("c"))
    with pytest.raises(RankMismatchError):
        Endomorphism(2, (w("a"),))
