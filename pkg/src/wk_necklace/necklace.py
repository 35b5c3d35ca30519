"""
Комбинаторика циклических слов (ожерелий)
Сопряженные слова, канонический представитель, циклическое замыкание
"""
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Set, Tuple


def _ranks(word: str, order: Optional[Sequence[str]]) -> List[int]:
    """Слово как последовательность рангов символов в объявленном порядке"""
    if order is None:
        return [ord(ch) for ch in word]
    rank = {ch: i for i, ch in enumerate(order)}
    return [rank[ch] for ch in word]


def shortlex_key(order: Optional[Sequence[str]] = None) -> Callable[[str], Tuple]:
    """
    Ключ сортировки «сначала длина, затем лексикографически»

    Args:
        order: порядок символов алфавита (по умолчанию - порядок кодов)
    """
    def key(word: str) -> Tuple:
        return (len(word), tuple(_ranks(word, order)))
    return key


def sort_words(words: Iterable[str], order: Optional[Sequence[str]] = None) -> List[str]:
    return sorted(set(words), key=shortlex_key(order))


def rotations(word: str) -> List[str]:
    """Все |w| циклических сдвигов, с повторами"""
    if not word:
        return [""]
    return [word[i:] + word[:i] for i in range(len(word))]


def primitive_period(word: str) -> int:
    """
    Наименьший p, такой что w = (w[:p])^(|w|/p)

    Для λ возвращает 0.
    """
    n = len(word)
    if n == 0:
        return 0
    # Префикс-функция: период границы, если он делит длину
    border = [0] * n
    k = 0
    for i in range(1, n):
        while k and word[i] != word[k]:
            k = border[k - 1]
        if word[i] == word[k]:
            k += 1
        border[i] = k
    p = n - border[-1]
    return p if n % p == 0 else n


def conjugates(word: str) -> Set[str]:
    """Класс сопряженности {vu : w = uv}; для λ это {λ}"""
    p = primitive_period(word)
    if p == 0:
        return {""}
    # Различных сдвигов ровно p
    return {word[i:] + word[:i] for i in range(p)}


def least_rotation(word: str, order: Optional[Sequence[str]] = None) -> int:
    """
    Индекс начала лексикографически наименьшего сдвига (алгоритм Бута, O(n))

    Args:
        word: слово
        order: порядок символов; None - порядок кодов символов

    Returns:
        Смещение k, такое что word[k:] + word[:k] минимально
    """
    n = len(word)
    if n == 0:
        return 0
    s = _ranks(word, order) * 2
    failure = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        sj = s[j]
        i = failure[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = failure[i]
        if sj != s[k + i + 1]:
            # здесь i == -1
            if sj < s[k]:
                k = j
            failure[j - k] = -1
        else:
            failure[j - k] = i + 1
    return k


@dataclass(frozen=True)
class Necklace:
    """Ожерелье, представленное наименьшим сдвигом"""
    canon: str

    def __len__(self) -> int:
        return len(self.canon)

    def members(self) -> Set[str]:
        return conjugates(self.canon)

    def __str__(self) -> str:
        return self.canon if self.canon else "_"


def canonical(word: str, order: Optional[Sequence[str]] = None) -> Necklace:
    """Канонический представитель класса сопряженности"""
    k = least_rotation(word, order)
    return Necklace(word[k:] + word[:k])


def cyclic_closure(words: Iterable[str]) -> Set[str]:
    """cycl(L): объединение классов сопряженности всех слов"""
    closure: Set[str] = set()
    for word in words:
        if word not in closure:
            closure |= conjugates(word)
    return closure


def is_cyclically_closed(words: Iterable[str]) -> bool:
    """Конечный срез языка замкнут относительно циклического сдвига"""
    pool = set(words)
    return all(conjugates(word) <= pool for word in pool)


def maximal_closed_subset(words: Iterable[str]) -> Set[str]:
    """Наибольшее циклически замкнутое подмножество: слова, все сопряженные которых в множестве"""
    pool = set(words)
    return {word for word in pool if conjugates(word) <= pool}


def necklace_classes(
    words: Iterable[str], order: Optional[Sequence[str]] = None
) -> Dict[str, List[str]]:
    """
    Группировка слов по ожерельям

    Returns:
        canon → члены класса из входа в shortlex-порядке; ключи тоже упорядочены
    """
    groups: Dict[str, List[str]] = {}
    for word in sort_words(words, order):
        groups.setdefault(canonical(word, order).canon, []).append(word)
    key = shortlex_key(order)
    return {canon: groups[canon] for canon in sorted(groups, key=key)}
