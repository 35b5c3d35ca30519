"""
Тесты комбинаторики ожерелий
"""
import numpy as np
from hypothesis import given, settings
from hypothesis.strategies import sampled_from, sets, text

from wk_necklace.engine import all_words
from wk_necklace.necklace import (
    Necklace,
    canonical,
    conjugates,
    cyclic_closure,
    is_cyclically_closed,
    least_rotation,
    maximal_closed_subset,
    necklace_classes,
    primitive_period,
    rotations,
    shortlex_key,
    sort_words,
)
from wk_necklace.oracles import oracle


def test_conjugates_of_periodic_word():
    assert conjugates("0101") == {"0101", "1010"}


def test_conjugates_of_primitive_word():
    assert conjugates("abc") == {"abc", "bca", "cab"}


def test_conjugates_of_lambda():
    assert conjugates("") == {""}


def test_long_conjugate_contains_pattern():
    assert "bcabcaaacba" in conjugates("abcabcaaacb")


def test_canonical_examples():
    assert canonical("1010").canon == "0101"
    assert canonical("aaa").canon == "aaa"
    assert canonical("") == Necklace("")
    assert str(Necklace("")) == "_"
    assert canonical("0110").members() == {"0110", "1100", "1001", "0011"}
    assert Necklace("").members() == {""}


def test_canonical_respects_declared_order():
    assert canonical("ab", order=("b", "a")).canon == "ba"
    assert canonical("ab").canon == "ab"


def test_primitive_period():
    assert primitive_period("") == 0
    assert primitive_period("abab") == 2
    assert primitive_period("aba") == 3
    assert primitive_period("aaaa") == 1


def test_canonical_matches_naive_minimum_on_random_words():
    """10^4 случайных слов длины ≤ 20"""
    rng = np.random.default_rng(2024)
    for _ in range(10_000):
        length = int(rng.integers(0, 21))
        word = "".join("abc"[int(k)] for k in rng.integers(3, size=length))
        assert canonical(word).canon == min(rotations(word))


@settings(max_examples=300)
@given(text(alphabet="01", max_size=16))
def test_class_size_equals_period(word):
    if word:
        assert len(conjugates(word)) == primitive_period(word)
        assert len(word) % primitive_period(word) == 0


@settings(max_examples=200)
@given(text(alphabet="abc", max_size=12), text(alphabet="abc", max_size=12))
def test_canonical_identifies_classes(u, v):
    same_class = len(u) == len(v) and v in conjugates(u)
    assert (canonical(u) == canonical(v)) == same_class


@given(text(alphabet="ab", max_size=20))
def test_least_rotation_index(word):
    k = least_rotation(word)
    assert word[k:] + word[:k] == min(rotations(word))


def test_cyclic_closure_of_single_word():
    assert cyclic_closure({"0011"}) == {"0011", "0110", "1100", "1001"}


@settings(max_examples=100)
@given(sets(text(alphabet="01", max_size=8), max_size=10))
def test_cyclic_closure_laws(words):
    closure = cyclic_closure(words)
    assert words <= closure
    assert cyclic_closure(closure) == closure
    assert {len(w) for w in closure} == {len(w) for w in words}
    assert is_cyclically_closed(closure)
    assert maximal_closed_subset(words) <= words
    assert is_cyclically_closed(maximal_closed_subset(words))


def test_cyclic_closure_of_balanced_words_matches_o7():
    balanced = {"0" * n + "1" * n for n in range(5)}
    expected = {w for w in all_words("01", 8) if oracle("O7", w)}
    assert cyclic_closure(balanced) == expected


def test_is_cyclically_closed():
    assert is_cyclically_closed({"", "0", "1"})
    assert not is_cyclically_closed({"01"})


def test_maximal_closed_subset():
    assert maximal_closed_subset({"01", "10", "011", "110"}) == {"01", "10"}


def test_shortlex_order():
    words = ["10", "1", "", "01", "0"]
    assert sort_words(words) == ["", "0", "1", "01", "10"]
    assert sorted(words, key=shortlex_key(("1", "0"))) == ["", "1", "0", "10", "01"]


@given(sampled_from(["0110", "1001", "0011", "1100"]))
def test_necklace_classes_group_conjugates(word):
    classes = necklace_classes({word, "01", "10", "000"})
    assert classes == {"000": ["000"], "01": ["01", "10"], "0011": [word]}
