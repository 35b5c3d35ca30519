"""
Оракулы: независимые предикаты принадлежности для языков-свидетелей

Каждый оракул проверяет блочную структуру слова регулярным выражением
и условие на длины блоков; автоматный движок здесь не используется.
"""
import re
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Sequence, Tuple

from wk_necklace.automaton import AlphabetError, WKError


class UnknownOracleError(WKError):
    """Идентификатор вне каталога"""


@dataclass(frozen=True)
class Oracle:
    """Оракул языка: идентификатор, алфавит и тотальный предикат"""
    id: str
    alphabet: Tuple[str, ...]
    description: str
    predicate: Callable[[str], bool]

    def __call__(self, word: str) -> bool:
        for ch in word:
            if ch not in self.alphabet:
                raise AlphabetError(ch, self.alphabet)
        return self.predicate(word)


def _shape(word: str, outer: str, inner: str) -> Optional[Tuple[int, int]]:
    """
    Если слово имеет вид outer^i inner^j outer^k - вернуть (i+k, j)
    """
    if re.fullmatch(f"{re.escape(outer)}*{re.escape(inner)}*{re.escape(outer)}*", word):
        return word.count(outer), word.count(inner)
    return None


def _three_blocks(condition_010: Callable[[int, int], bool],
                  condition_101: Callable[[int, int], bool]) -> Callable[[str], bool]:
    """
    {0^i 1^j 0^k : condition_010(i+k, j)} ∪ {1^i 0^j 1^k : condition_101(i+k, j)}
    """
    def predicate(word: str) -> bool:
        zeros_outside = _shape(word, "0", "1")
        if zeros_outside is not None and condition_010(*zeros_outside):
            return True
        ones_outside = _shape(word, "1", "0")
        return ones_outside is not None and condition_101(*ones_outside)
    return predicate


def _solves_o4(outer: int, inner: int) -> bool:
    """
    Есть ли n, m ≥ 0 с outer = 2n + m, inner = 2m + n

    Определитель системы равен 3: n = (2·outer - inner)/3, m = (2·inner - outer)/3.
    """
    n3 = 2 * outer - inner
    m3 = 2 * inner - outer
    return n3 >= 0 and m3 >= 0 and n3 % 3 == 0 and m3 % 3 == 0


def _o8(word: str) -> bool:
    match = re.fullmatch(r"(0*)1(0*)1(0*)", word)
    if not match:
        return False
    i, n, j = (len(group) for group in match.groups())
    return n >= 1 and i + j == n


def _o10(word: str) -> bool:
    # a*, b*, и ожерелья a^n b^m с n ∈ {m, m+1}; форма b^k a^n b^m из
    # определения вместе со своими сдвигами a^i b^m a^j
    if re.fullmatch(r"a*|b*", word):
        return True
    for outer, inner in (("b", "a"), ("a", "b")):
        counts = _shape(word, outer, inner)
        if counts is None:
            continue
        a_count = word.count("a")
        b_count = word.count("b")
        if a_count - b_count in (0, 1):
            return True
    return False


def unary_even(letter: str) -> Callable[[str], bool]:
    pattern = re.compile(f"({re.escape(letter)}{re.escape(letter)})*")
    return lambda word: bool(pattern.fullmatch(word))


def two_alphabets(t1: Sequence[str], t2: Sequence[str]) -> Oracle:
    """O9: T1* ∪ T2*"""
    first, second = set(t1), set(t2)
    alphabet = tuple(dict.fromkeys(list(t1) + list(t2)))
    return Oracle(
        id=f"O9:{''.join(t1)}:{''.join(t2)}",
        alphabet=alphabet,
        description=f"{{{','.join(t1)}}}* ∪ {{{','.join(t2)}}}*",
        predicate=lambda word: set(word) <= first or set(word) <= second,
    )


CATALOG: Dict[str, Oracle] = {
    oracle.id: oracle for oracle in (
        Oracle("O1", ("0", "1"), "{1^i 0^j 1^k} ∪ {0^i 1^j 0^k}",
               _three_blocks(lambda outer, inner: True, lambda outer, inner: True)),
        Oracle("O2", ("0", "1"), "j ∈ {i+k, i+k+1} resp. i+k ∈ {j, j+1}",
               _three_blocks(lambda outer, inner: outer in (inner, inner + 1),
                             lambda outer, inner: inner in (outer, outer + 1))),
        Oracle("O3", ("0", "1"), "j even resp. i+k even",
               _three_blocks(lambda outer, inner: outer % 2 == 0,
                             lambda outer, inner: inner % 2 == 0)),
        Oracle("O4", ("0", "1"), "i+k = 2n+m, j = 2m+n",
               _three_blocks(_solves_o4, _solves_o4)),
        Oracle("O5", ("1",), "(11)*", unary_even("1")),
        Oracle("O6", ("0", "1"), "0* + 0*10*",
               lambda word: bool(re.fullmatch(r"0*(10*)?", word))),
        Oracle("O7", ("0", "1"), "{0^i 1^j 0^k : j=i+k} ∪ {1^i 0^j 1^k : i+k=j}",
               _three_blocks(lambda outer, inner: outer == inner,
                             lambda outer, inner: outer == inner)),
        Oracle("O8", ("0", "1"), "{0^i 1 0^n 1 0^j : i+j=n, n≥1}", _o8),
        two_alphabets("a", "b"),
        Oracle("O10", ("a", "b"),
               "a* ∪ b* ∪ {a^n b^n} ∪ {a^(n+1) b^n} ∪ {b^k a^n b^m : n ∈ {k+m, k+m+1}}",
               _o10),
        Oracle("O11", ("a",), "(aa)*", unary_even("a")),
        Oracle("O12", ("a", "b"), "{λ, a, b}", lambda word: len(word) <= 1),
        Oracle("O13", ("a", "b"), "{λ, aa, ab, ba}",
               lambda word: word in ("", "aa", "ab", "ba")),
    )
}

# Без параметров O9 означает T1 = {a}, T2 = {b}
CATALOG["O9"] = CATALOG["O9:a:b"]


def resolve_oracle(name: str) -> Oracle:
    """
    Оракул по идентификатору

    Args:
        name: `O1`..`O13`; для O9 можно задать алфавиты: `O9:ac:bc`

    Raises:
        UnknownOracleError: идентификатор вне каталога
    """
    if name in CATALOG:
        return CATALOG[name]
    parts = name.split(":")
    if parts[0] == "O9" and len(parts) == 3 and all(parts[1:]):
        return two_alphabets(parts[1], parts[2])
    known = ", ".join(sorted({o.id.split(":")[0] for o in CATALOG.values()},
                             key=lambda s: int(s[1:])))
    raise UnknownOracleError(f"unknown oracle {name!r} (known: {known})")


def oracle(oracle_id: str, word: str) -> bool:
    """Принадлежность слова языку оракула"""
    return resolve_oracle(oracle_id)(word)
