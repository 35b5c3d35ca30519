"""
Линейные контекстно-свободные грамматики
Продукции вида A → u и A → uBv; ограниченный по длине вывод для сверки с автоматами
"""
import logging
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Optional, Set, Tuple

from wk_necklace.automaton import (
    AutomatonError,
    check_word,
    is_identifier,
    is_symbol,
    word_token,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Production:
    """
    Продукция линейной грамматики

    body is None  → A → left
    body = B      → A → left B right
    """
    head: str
    left: str
    body: Optional[str] = None
    right: str = ""

    @property
    def is_terminal(self) -> bool:
        return self.body is None

    def rhs_tokens(self) -> List[str]:
        """Правая часть в токенах формата файла"""
        if self.is_terminal:
            return [word_token(self.left)]
        tokens = []
        if self.left:
            tokens.append(self.left)
        tokens.append(self.body)
        if self.right:
            tokens.append(self.right)
        return tokens

    def __str__(self) -> str:
        return f"{self.head} -> {' '.join(self.rhs_tokens())}"


@dataclass(frozen=True)
class LinearGrammar:
    """Линейная грамматика G = (N, T, S, P); порядок объявления сохраняется"""
    nonterminals: Tuple[str, ...]
    terminals: Tuple[str, ...]
    start: str
    productions: Tuple[Production, ...]

    def __post_init__(self):
        for name in ("nonterminals", "terminals", "productions"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        self._validate()

    def _validate(self):
        if len(set(self.nonterminals)) != len(self.nonterminals):
            raise AutomatonError("duplicate nonterminal")
        if len(set(self.terminals)) != len(self.terminals):
            raise AutomatonError("duplicate terminal")
        for a in self.terminals:
            if not is_symbol(a):
                raise AutomatonError(f"invalid terminal {a!r}")
        declared = set(self.nonterminals)
        for name in self.nonterminals:
            if not is_identifier(name):
                raise AutomatonError(f"invalid nonterminal {name!r}")
            # Нетерминал не должен читаться как цепочка терминалов
            if all(ch in self.terminals for ch in name):
                raise AutomatonError(
                    f"nonterminal {name!r} is ambiguous with a terminal run"
                )
        if self.start not in declared:
            raise AutomatonError(f"start symbol {self.start!r} is not declared")
        for p in self.productions:
            if p.head not in declared:
                raise AutomatonError(f"production {p}: undeclared nonterminal {p.head!r}")
            if p.body is not None and p.body not in declared:
                raise AutomatonError(f"production {p}: undeclared nonterminal {p.body!r}")
            if p.body is None and p.right:
                raise AutomatonError(f"production {p}: terminal production has a right part")
            check_word(p.left, self.terminals)
            check_word(p.right, self.terminals)

    def productions_of(self, head: str) -> List[Production]:
        return [p for p in self.productions if p.head == head]


def derive_bounded(g: LinearGrammar, max_len: int) -> Set[str]:
    """
    Все слова языка L(g) длины ≤ max_len

    Вывод в ширину по сентенциальным формам u·B·v с отсечением по длине:
    |u|+|v| не может уменьшиться, поэтому формы длиннее max_len отбрасываются.
    Цепные продукции A → B дают циклы, повторные формы пропускаются.

    Args:
        g: линейная грамматика
        max_len: граница длины

    Returns:
        Множество выводимых терминальных слов
    """
    words: Set[str] = set()
    start = ("", g.start, "")
    seen = {start}
    queue = deque([start])
    by_head: Dict[str, List[Production]] = {a: g.productions_of(a) for a in g.nonterminals}

    while queue:
        u, head, v = queue.popleft()
        for p in by_head[head]:
            if p.body is None:
                word = u + p.left + v
                if len(word) <= max_len:
                    words.add(word)
                continue
            form = (u + p.left, p.body, p.right + v)
            if len(form[0]) + len(form[2]) > max_len or form in seen:
                continue
            seen.add(form)
            queue.append(form)

    logger.debug(f"Вывод до длины {max_len}: {len(seen)} форм, {len(words)} слов")
    return words


def generates(g: LinearGrammar, word: str) -> bool:
    """
    Принадлежность слова L(g): динамика по интервалам (A, i, j)

    Для каждого интервала сначала считаются терминальные и «обрамляющие»
    продукции, затем цепные продукции A → B замыкаются до неподвижной точки.
    """
    check_word(word, g.terminals)
    unit = [p for p in g.productions if p.body is not None and not p.left and not p.right]
    framed = [p for p in g.productions if p.body is not None and (p.left or p.right)]
    terminal = [p for p in g.productions if p.body is None]

    @lru_cache(maxsize=None)
    def heads(i: int, j: int) -> frozenset:
        span = word[i:j]
        found = {p.head for p in terminal if p.left == span}
        for p in framed:
            a, b = len(p.left), len(p.right)
            if a + b <= j - i and word.startswith(p.left, i) and word[j - b:j] == p.right:
                if p.body in heads(i + a, j - b):
                    found.add(p.head)
        changed = True
        while changed:
            changed = False
            for p in unit:
                if p.body in found and p.head not in found:
                    found.add(p.head)
                    changed = True
        return frozenset(found)

    return g.start in heads(0, len(word))


def grammar_summary(g: LinearGrammar) -> str:
    return (f"|N|={len(g.nonterminals)}, |T|={len(g.terminals)}, "
            f"|P|={len(g.productions)}, start={g.start}")
