"""
Тесты оракулов языков-свидетелей
"""
import re

import pytest

from wk_necklace.automaton import AlphabetError
from wk_necklace.engine import all_words
from wk_necklace.necklace import is_cyclically_closed
from wk_necklace.oracles import CATALOG, UnknownOracleError, oracle, resolve_oracle, two_alphabets


def brute_force_o4(word: str) -> bool:
    """Перебор n, m ≤ |w| для обеих трехблочных форм"""
    for outer, inner in (("0", "1"), ("1", "0")):
        if re.fullmatch(f"{outer}*{inner}*{outer}*", word):
            a, b = word.count(outer), word.count(inner)
            if any(a == 2 * n + m and b == 2 * m + n
                   for n in range(len(word) + 1) for m in range(len(word) + 1)):
                return True
    return False


def test_o1_shapes():
    assert oracle("O1", "1001")
    assert oracle("O1", "")
    assert not oracle("O1", "0101")


def test_o2():
    assert oracle("O2", "10001")
    assert oracle("O2", "0110")
    assert oracle("O2", "0")
    assert not oracle("O2", "1")
    assert not oracle("O2", "0001")


def test_o3():
    assert oracle("O3", "1001")
    assert oracle("O3", "0110")
    assert not oracle("O3", "101")


def test_o4_matches_brute_force():
    for w in all_words("01", 12):
        assert oracle("O4", w) == brute_force_o4(w), w


def test_o4_examples():
    assert oracle("O4", "000111")
    assert oracle("O4", "011")
    assert not oracle("O4", "00111")


def test_o5():
    assert oracle("O5", "")
    assert not oracle("O5", "1")
    assert oracle("O5", "1111")
    with pytest.raises(AlphabetError):
        oracle("O5", "0")


def test_o6():
    assert oracle("O6", "0100")
    assert oracle("O6", "000")
    assert not oracle("O6", "0101")


def test_o7():
    assert oracle("O7", "0110")
    assert oracle("O7", "1001")
    assert not oracle("O7", "011")


def test_o8():
    assert oracle("O8", "0101")
    assert oracle("O8", "010010")
    assert oracle("O8", "1010")
    assert not oracle("O8", "11")
    assert not oracle("O8", "1001")


def test_o9_parameterised():
    o = resolve_oracle("O9:ac:bc")
    assert o.alphabet == ("a", "c", "b")
    assert o("cc") and o("acca") and o("bcb")
    assert not o("ab")
    assert resolve_oracle("O9") is resolve_oracle("O9:a:b")


def test_o9_degenerate():
    o = two_alphabets("ab", "ab")
    assert all(o(w) for w in all_words("ab", 6))


def test_o10():
    for w in ("", "aaa", "bbb", "ab", "ba", "aab", "aba", "baa", "aabb", "abba"):
        assert oracle("O10", w), w
    for w in ("abab", "aaab", "abb", "aabbb"):
        assert not oracle("O10", w), w


def test_strong_separation_oracles():
    assert oracle("O11", "aa") and not oracle("O11", "a")
    assert oracle("O12", "b") and not oracle("O12", "ab")
    assert oracle("O13", "ba") and not oracle("O13", "bb")


def test_unknown_oracle():
    with pytest.raises(UnknownOracleError):
        resolve_oracle("O99")
    with pytest.raises(UnknownOracleError):
        resolve_oracle("O9:a")


def test_alphabet_checked():
    with pytest.raises(AlphabetError):
        oracle("O1", "012")


@pytest.mark.parametrize("oracle_id", sorted(CATALOG))
def test_oracle_slices_are_cyclically_closed(oracle_id):
    o = CATALOG[oracle_id]
    words = {w for w in all_words(o.alphabet, 10) if o(w)}
    assert is_cyclically_closed(words)
