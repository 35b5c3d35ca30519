"""
Движок принятия слов и ожерелий
Динамика по конфигурациям (q, i, j), восстановление вычислений,
слабое и сильное принятие ожерелий, паттерны начального состояния
"""
import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

import numpy as np

from wk_necklace.automaton import Transition, WKAutomaton, word_token
from wk_necklace.necklace import conjugates, maximal_closed_subset, rotations

logger = logging.getLogger(__name__)

UNREACHABLE = np.iinfo(np.int32).max


class MeetingPolicy(str, Enum):
    """
    Разрешены ли λλ-шаги после встречи головок

    closure - да, финальное состояние ищется в λλ-замыкании пустого остатка;
    strict  - решение принимается сразу в момент встречи.
    """
    CLOSURE = "closure"
    STRICT = "strict"


class Mode(str, Enum):
    """Режим принятия: обычные слова, слабое или сильное принятие ожерелий"""
    PLAIN = "plain"
    WEAK = "weak"
    STRONG = "strong"


@dataclass(frozen=True)
class Configuration:
    """Конфигурация: состояние и непрочитанный инфикс w[lo:hi]"""
    state: str
    lo: int
    hi: int

    @property
    def span(self) -> int:
        return self.hi - self.lo


@dataclass(frozen=True)
class TraceStep:
    source: str
    left_read: str
    right_read: str
    target: str

    @classmethod
    def of(cls, t: Transition) -> "TraceStep":
        return cls(t.source, t.left_read, t.right_read, t.target)

    def __str__(self) -> str:
        return (f"{self.source} --({word_token(self.left_read)}|"
                f"{word_token(self.right_read)})--> {self.target}")


@dataclass(frozen=True)
class ComputationTrace:
    """Принимающее вычисление (q0, w) ⇒* (q_F, λ)"""
    input: str
    steps: Tuple[TraceStep, ...]
    final_state: str


@dataclass(frozen=True)
class Pattern:
    """
    Паттерн u'·v' перехода из начального состояния

    u' (suffix_part) читает нижняя головка, v' (prefix_part) - верхняя.
    """
    suffix_part: str
    prefix_part: str

    @property
    def is_empty(self) -> bool:
        return not self.suffix_part and not self.prefix_part

    def fits(self, conjugate: str) -> bool:
        """Паттерн подходит к точке разреза, задающей данный сопряженный"""
        return (
            len(self.suffix_part) + len(self.prefix_part) <= len(conjugate)
            and conjugate.startswith(self.prefix_part)
            and conjugate.endswith(self.suffix_part)
        )

    def __str__(self) -> str:
        return f"{word_token(self.suffix_part)}·{word_token(self.prefix_part)}"


def _lambda_allowed(span: int, meeting: MeetingPolicy) -> bool:
    return span > 0 or meeting == MeetingPolicy.CLOSURE


def _match_tables(m: WKAutomaton, w: str):
    """
    Для каждого перехода: где верхняя головка может прочитать u и где нижняя - v

    left[k][i]  = w[i:i+|u|] == u
    right[k][j] = w[j-|v|:j] == v
    """
    n = len(w)
    left = np.zeros((len(m.transitions), n + 1), dtype=bool)
    right = np.zeros((len(m.transitions), n + 1), dtype=bool)
    for k, t in enumerate(m.transitions):
        a, b = len(t.left_read), len(t.right_read)
        for i in range(n - a + 1):
            left[k, i] = w.startswith(t.left_read, i)
        for j in range(b, n + 1):
            right[k, j] = w[j - b:j] == t.right_read
    return left, right


def accepts(m: WKAutomaton, w: str,
            meeting: MeetingPolicy = MeetingPolicy.CLOSURE) -> bool:
    """
    Принимает ли автомат линейное слово

    Прямая достижимость по конфигурациям (q, i, j) в порядке убывания
    длины остатка; внутри одного интервала λλ-шаги замыкаются до неподвижной
    точки. Читающие шаги строго уменьшают остаток, поэтому обход конечен.

    Args:
        m: автомат
        w: слово над алфавитом автомата
        meeting: политика λλ-шагов после встречи головок

    Returns:
        True, если достижима конфигурация (q_f, i, i) с q_f ∈ F

    Raises:
        AlphabetError: символ вне алфавита
    """
    m.check_word(w)
    n = len(w)
    index = {q: k for k, q in enumerate(m.states)}
    finals = {index[q] for q in m.finals}
    sources = [index[t.source] for t in m.transitions]
    targets = [index[t.target] for t in m.transitions]
    lambda_moves = [k for k, t in enumerate(m.transitions) if t.is_lambda]
    reading = [[] for _ in m.states]
    for k, t in enumerate(m.transitions):
        if not t.is_lambda:
            reading[sources[k]].append(k)
    left, right = _match_tables(m, w)

    reach = np.zeros((len(m.states), n + 1, n + 1), dtype=bool)
    reach[index[m.initial], 0, n] = True

    for span in range(n, -1, -1):
        for lo in range(n - span + 1):
            hi = lo + span
            active = set(np.flatnonzero(reach[:, lo, hi]).tolist())
            if not active:
                continue
            if lambda_moves and _lambda_allowed(span, meeting):
                changed = True
                while changed:
                    changed = False
                    for k in lambda_moves:
                        if sources[k] in active and targets[k] not in active:
                            active.add(targets[k])
                            changed = True
            if span == 0:
                if active & finals:
                    return True
                continue
            for q in active:
                for k in reading[q]:
                    t = m.transitions[k]
                    a, b = len(t.left_read), len(t.right_read)
                    if a + b <= span and left[k, lo] and right[k, hi]:
                        reach[targets[k], lo + a, hi - b] = True
    return False


def _distances(m: WKAutomaton, w: str, meeting: MeetingPolicy) -> np.ndarray:
    """
    Длина кратчайшего принимающего продолжения из каждой конфигурации

    Обратная динамика по возрастанию длины остатка; λλ-шаги внутри
    интервала релаксируются как в алгоритме Беллмана-Форда.
    """
    n = len(w)
    index = {q: k for k, q in enumerate(m.states)}
    nq = len(m.states)
    left, right = _match_tables(m, w)
    dist = np.full((nq, n + 1, n + 1), UNREACHABLE, dtype=np.int64)
    finals = [index[q] for q in m.finals]
    lambda_moves = [(index[t.source], index[t.target])
                    for t in m.transitions if t.is_lambda]

    for span in range(n + 1):
        for lo in range(n - span + 1):
            hi = lo + span
            d = dist[:, lo, hi]
            if span == 0:
                d[finals] = 0
            for k, t in enumerate(m.transitions):
                if t.is_lambda:
                    continue
                a, b = len(t.left_read), len(t.right_read)
                if a + b <= span and left[k, lo] and right[k, hi]:
                    after = dist[index[t.target], lo + a, hi - b]
                    if after != UNREACHABLE:
                        src = index[t.source]
                        d[src] = min(d[src], after + 1)
            if lambda_moves and _lambda_allowed(span, meeting):
                for _ in range(nq):
                    changed = False
                    for src, dst in lambda_moves:
                        if d[dst] != UNREACHABLE and d[dst] + 1 < d[src]:
                            d[src] = d[dst] + 1
                            changed = True
                    if not changed:
                        break
    return dist


def accepting_run(m: WKAutomaton, w: str,
                  meeting: MeetingPolicy = MeetingPolicy.CLOSURE) -> Optional[ComputationTrace]:
    """
    Принимающее вычисление для слова, если оно есть

    Поиск в глубину: из каждой конфигурации переходы пробуются в
    порядке объявления, первый ведущий к принятию выбирается.
    Таблица _distances отсекает тупиковые конфигурации, повторно
    посещенные конфигурации (λλ-циклы) не раскрываются.
    """
    m.check_word(w)
    n = len(w)
    dist = _distances(m, w, meeting)
    index = {q: k for k, q in enumerate(m.states)}
    if dist[index[m.initial], 0, n] == UNREACHABLE:
        return None

    start = (m.initial, 0, n)
    visited = {start}
    steps: List[TraceStep] = []
    stack = [(start, iter(m.transitions_from(m.initial)))]
    while stack:
        (state, lo, hi), options = stack[-1]
        if lo == hi and state in m.final_set:
            return ComputationTrace(input=w, steps=tuple(steps), final_state=state)
        for t in options:
            a, b = len(t.left_read), len(t.right_read)
            if a + b > hi - lo:
                continue
            if t.is_lambda and not _lambda_allowed(hi - lo, meeting):
                continue
            if not w.startswith(t.left_read, lo) or w[hi - b:hi] != t.right_read:
                continue
            nxt = (t.target, lo + a, hi - b)
            if nxt in visited or dist[index[t.target], lo + a, hi - b] == UNREACHABLE:
                continue
            visited.add(nxt)
            steps.append(TraceStep.of(t))
            stack.append((nxt, iter(m.transitions_from(t.target))))
            break
        else:
            stack.pop()
            if steps:
                steps.pop()
    # dist согласована с переходами, сюда попасть нельзя
    raise RuntimeError(f"trace reconstruction diverged on {w!r}")


def replay_trace(m: WKAutomaton, trace: ComputationTrace,
                 meeting: MeetingPolicy = MeetingPolicy.CLOSURE) -> bool:
    """Проверка, что шаги трассы - переходы автомата и приводят к принятию"""
    w = trace.input
    state, lo, hi = m.initial, 0, len(w)
    known = set(m.transitions)
    for step in trace.steps:
        t = Transition(step.source, step.left_read, step.right_read, step.target)
        if t not in known or t.source != state:
            return False
        a, b = len(t.left_read), len(t.right_read)
        if a + b > hi - lo:
            return False
        if t.is_lambda and not _lambda_allowed(hi - lo, meeting):
            return False
        if not w.startswith(t.left_read, lo) or w[hi - b:hi] != t.right_read:
            return False
        state, lo, hi = t.target, lo + a, hi - b
    return lo == hi and state == trace.final_state and state in m.final_set


def format_trace(trace: ComputationTrace) -> str:
    """Трасса в текстовом виде, один шаг на строку: `q --(0|_)--> q`"""
    return "\n".join(str(step) for step in trace.steps)


def weak_witness(m: WKAutomaton, w: str,
                 meeting: MeetingPolicy = MeetingPolicy.CLOSURE) -> Optional[str]:
    """Первый (по сдвигу) принимаемый сопряженный или None"""
    m.check_word(w)
    seen: Set[str] = set()
    for c in rotations(w):
        if c in seen:
            continue
        seen.add(c)
        if accepts(m, c, meeting):
            return c
    return None


def strong_counterexample(m: WKAutomaton, w: str,
                          meeting: MeetingPolicy = MeetingPolicy.CLOSURE) -> Optional[str]:
    """Первый (по сдвигу) отвергаемый сопряженный или None"""
    m.check_word(w)
    seen: Set[str] = set()
    for c in rotations(w):
        if c in seen:
            continue
        seen.add(c)
        if not accepts(m, c, meeting):
            return c
    return None


def weak_accepts(m: WKAutomaton, w: str,
                 meeting: MeetingPolicy = MeetingPolicy.CLOSURE) -> bool:
    """Ожерелье слабо принимается: хотя бы один сопряженный принимается"""
    return weak_witness(m, w, meeting) is not None


def strong_accepts(m: WKAutomaton, w: str,
                   meeting: MeetingPolicy = MeetingPolicy.CLOSURE) -> bool:
    """Ожерелье сильно принимается: принимаются все сопряженные"""
    return strong_counterexample(m, w, meeting) is None


def accepts_in_mode(m: WKAutomaton, w: str, mode: Mode,
                    meeting: MeetingPolicy = MeetingPolicy.CLOSURE) -> bool:
    mode = Mode(mode)
    if mode == Mode.WEAK:
        return weak_accepts(m, w, meeting)
    if mode == Mode.STRONG:
        return strong_accepts(m, w, meeting)
    return accepts(m, w, meeting)


# ==================== Паттерны ====================

def initial_patterns(m: WKAutomaton) -> FrozenSet[Pattern]:
    """{(u', v') : δ(q0, v', u') ≠ ∅}"""
    return frozenset(
        Pattern(suffix_part=t.right_read, prefix_part=t.left_read)
        for t in m.transitions_from(m.initial)
    )


def fitting_patterns(m: WKAutomaton, conjugate: str) -> List[Pattern]:
    """Паттерны начального состояния, подходящие к данному сопряженному"""
    return sorted(
        (p for p in initial_patterns(m) if p.fits(conjugate)),
        key=lambda p: (len(p.suffix_part) + len(p.prefix_part), p.suffix_part, p.prefix_part),
    )


def pattern_fit_check(m: WKAutomaton, w: str,
                      meeting: MeetingPolicy = MeetingPolicy.CLOSURE) -> bool:
    """
    Необходимое условие сильного принятия

    Для каждого сопряженного w' должен подойти хотя бы один паттерн
    начального состояния. λλ-паттерн подходит к любой точке разреза.
    Для λ условие выполняется, если λ принимается.
    """
    patterns = initial_patterns(m)
    if not w:
        return any(p.is_empty for p in patterns) or accepts(m, w, meeting)
    return all(
        any(p.fits(c) for p in patterns)
        for c in conjugates(w)
    )


# ==================== Срезы языка ====================

def all_words(alphabet: Iterable[str], max_len: int) -> Iterable[str]:
    """Σ^{≤max_len} по длинам, внутри длины - в порядке алфавита"""
    symbols = tuple(alphabet)
    for length in range(max_len + 1):
        for letters in itertools.product(symbols, repeat=length):
            yield "".join(letters)


def language_table(m: WKAutomaton, max_len: int,
                   meeting: MeetingPolicy = MeetingPolicy.CLOSURE) -> Dict[str, int]:
    """
    Таблица «слово → маска состояний, из которых слово принимается»

    Принятие из (q, x) зависит только от остатка x, поэтому таблица для
    всех слов длины ≤ max_len строится снизу вверх за O(|Σ^{≤n}|·|δ|).
    Бит k маски соответствует m.states[k].
    """
    index = {q: k for k, q in enumerate(m.states)}
    reading = [
        (index[t.source], index[t.target], t.left_read, t.right_read)
        for t in m.transitions if not t.is_lambda
    ]
    lambda_moves = [(index[t.source], index[t.target])
                    for t in m.transitions if t.is_lambda]

    def close(mask: int) -> int:
        changed = True
        while changed:
            changed = False
            for src, dst in lambda_moves:
                if mask >> dst & 1 and not mask >> src & 1:
                    mask |= 1 << src
                    changed = True
        return mask

    table: Dict[str, int] = {}
    for w in all_words(m.alphabet, max_len):
        n = len(w)
        if n == 0:
            mask = 0
            for q in m.finals:
                mask |= 1 << index[q]
            table[w] = close(mask) if meeting == MeetingPolicy.CLOSURE else mask
            continue
        mask = 0
        for src, dst, u, v in reading:
            if mask >> src & 1:
                continue
            a, b = len(u), len(v)
            if a + b <= n and w.startswith(u) and w.endswith(v):
                if table[w[a:n - b]] >> dst & 1:
                    mask |= 1 << src
        table[w] = close(mask) if lambda_moves else mask
    logger.debug(f"Таблица языка до длины {max_len}: {len(table)} слов")
    return table


def plain_slice(m: WKAutomaton, max_len: int,
                meeting: MeetingPolicy = MeetingPolicy.CLOSURE) -> Set[str]:
    """L(m) ∩ Σ^{≤max_len}"""
    bit = 1 << m.states.index(m.initial)
    return {w for w, mask in language_table(m, max_len, meeting).items() if mask & bit}


def maximal_necklace_sublanguage(m: WKAutomaton, max_len: int,
                                 meeting: MeetingPolicy = MeetingPolicy.CLOSURE) -> Set[str]:
    """
    Слова длины ≤ max_len, все сопряженные которых принимаются

    Совпадает со срезом L_s(m): сопряжение сохраняет длину.
    """
    return maximal_closed_subset(plain_slice(m, max_len, meeting))
