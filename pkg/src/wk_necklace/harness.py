"""
Испытательный стенд: перечисление языков ограниченной длины,
сверка с оракулами, каталог свидетелей и популяционные законы
"""
import logging
import os
import time
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Set, Tuple

import numpy as np

from wk_necklace.automaton import (
    AlphabetError,
    Transition,
    WKError,
    WKAutomaton,
    classify,
    describe,
)
from wk_necklace.engine import (
    Configuration,
    MeetingPolicy,
    Mode,
    accepts,
    accepts_in_mode,
    all_words,
    language_table,
    pattern_fit_check,
    strong_accepts,
    weak_accepts,
)
from wk_necklace.fixtures import Fixture, witness_fixtures
from wk_necklace.necklace import (
    Necklace,
    canonical,
    cyclic_closure,
    maximal_closed_subset,
    necklace_classes,
    shortlex_key,
    sort_words,
)
from wk_necklace.oracles import resolve_oracle, two_alphabets

logger = logging.getLogger(__name__)

DEFAULT_MAX_LEN = 12
DEFAULT_MAX_LEN_WIDE = 10
COUNTEREXAMPLE_LIMIT = 10
DEFAULT_LAW_SEEDS = 50
LAW_MAX_LEN = 8
BFS_MAX_LEN = 6

WORKERS_ENV = "WK_NECKLACE_WORKERS"


def default_max_len(alphabet: Sequence[str]) -> int:
    """12 для алфавитов из одного-двух символов, 10 для более широких"""
    return DEFAULT_MAX_LEN if len(alphabet) <= 2 else DEFAULT_MAX_LEN_WIDE


def default_workers() -> int:
    """Число процессов перечисления из WK_NECKLACE_WORKERS (по умолчанию 1)"""
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        logger.warning(f"Некорректное значение {WORKERS_ENV}={raw!r}, используется 1")
        return 1


# ==================== Перечисление ====================

@dataclass(frozen=True)
class EnumerationReport:
    """Срез языка автомата: слова длины ≤ max_len в shortlex-порядке"""
    automaton_id: str
    mode: Mode
    max_len: int
    words: Tuple[str, ...]
    elapsed: float

    def necklaces(self, order: Optional[Sequence[str]] = None) -> List[str]:
        """По одному каноническому представителю на класс сопряженности"""
        return list(necklace_classes(self.words, order))


def _classify_chunk(args) -> List[str]:
    m, mode, meeting, words = args
    return [w for w in words if accepts_in_mode(m, w, mode, meeting)]


def _slice_by_workers(m: WKAutomaton, mode: Mode, max_len: int,
                      meeting: MeetingPolicy, workers: int) -> Set[str]:
    """Прямая проверка каждого слова движком, слова делятся между процессами"""
    words = list(all_words(m.alphabet, max_len))
    chunk = max(1, len(words) // (workers * 4) + 1)
    jobs = [(m, mode, meeting, words[i:i + chunk]) for i in range(0, len(words), chunk)]
    accepted: Set[str] = set()
    with ProcessPoolExecutor(max_workers=workers) as executor:
        for part in executor.map(_classify_chunk, jobs):
            accepted.update(part)
    return accepted


def language_slice(m: WKAutomaton, mode: Mode, max_len: int,
                   meeting: MeetingPolicy = MeetingPolicy.CLOSURE) -> Set[str]:
    """
    Срез L(m), L_w(m) или L_s(m) до длины max_len по общей таблице языка

    Слабый срез - циклическое замыкание обычного, сильный - его
    наибольшее замкнутое подмножество (сопряжение сохраняет длину).
    """
    table = language_table(m, max_len, meeting)
    bit = 1 << m.states.index(m.initial)
    plain = {w for w, mask in table.items() if mask & bit}
    mode = Mode(mode)
    if mode == Mode.WEAK:
        return cyclic_closure(plain)
    if mode == Mode.STRONG:
        return maximal_closed_subset(plain)
    return plain


def enumerate_language(m: WKAutomaton, mode: Mode, max_len: int,
                       automaton_id: str = "<automaton>",
                       meeting: MeetingPolicy = MeetingPolicy.CLOSURE,
                       workers: Optional[int] = None) -> EnumerationReport:
    """
    Все слова длины ≤ max_len, принимаемые в заданном режиме

    Args:
        m: автомат
        mode: plain, weak или strong
        max_len: граница длины (≥ 0)
        automaton_id: имя для отчета
        meeting: политика λλ-шагов после встречи головок
        workers: число процессов; None - из WK_NECKLACE_WORKERS

    Returns:
        EnumerationReport со словами в shortlex-порядке алфавита
    """
    if max_len < 0:
        raise WKError("max_len must be non-negative")
    mode = Mode(mode)
    workers = default_workers() if workers is None else max(1, workers)
    started = time.perf_counter()
    if workers > 1:
        words = _slice_by_workers(m, mode, max_len, meeting, workers)
    else:
        words = language_slice(m, mode, max_len, meeting)
    elapsed = time.perf_counter() - started
    logger.info(f"{automaton_id}: {mode.value}-срез до длины {max_len} - "
                f"{len(words)} слов за {elapsed:.2f} с")
    return EnumerationReport(
        automaton_id=automaton_id,
        mode=mode,
        max_len=max_len,
        words=tuple(sort_words(words, m.alphabet)),
        elapsed=elapsed,
    )


# ==================== Сверка с оракулом ====================

@dataclass(frozen=True)
class ComparisonVerdict:
    """
    Результат сверки среза автомата со срезом оракула

    automaton_only - слова, принятые автоматом, но не входящие в язык оракула (+);
    oracle_only - наоборот (-). Оба списка обрезаны до COUNTEREXAMPLE_LIMIT.
    """
    automaton_id: str
    mode: Mode
    oracle: str
    max_len: int
    automaton_only: Tuple[str, ...]
    oracle_only: Tuple[str, ...]
    checked: int

    @property
    def equivalent(self) -> bool:
        return not self.automaton_only and not self.oracle_only

    def counterexamples(self, order: Optional[Sequence[str]] = None) -> List[str]:
        """Контрпримеры с направлением: `+w` или `-w`, λ записывается `_`"""
        key = shortlex_key(order)
        marked = [(w, "+") for w in self.automaton_only] + [(w, "-") for w in self.oracle_only]
        marked.sort(key=lambda item: key(item[0]))
        return [f"{sign}{w or '_'}" for w, sign in marked[:COUNTEREXAMPLE_LIMIT]]


def compare(m: WKAutomaton, mode: Mode, oracle_id: str, max_len: int,
            automaton_id: str = "<automaton>",
            meeting: MeetingPolicy = MeetingPolicy.CLOSURE,
            workers: Optional[int] = None) -> ComparisonVerdict:
    """
    Сверка среза автомата со срезом оракула на Σ^{≤max_len}

    Raises:
        UnknownOracleError: неизвестный оракул
        AlphabetError: алфавит оракула не входит в алфавит автомата
    """
    target = resolve_oracle(oracle_id)
    for ch in target.alphabet:
        if ch not in m.alphabet:
            raise AlphabetError(ch, m.alphabet)
    report = enumerate_language(m, mode, max_len, automaton_id, meeting, workers)
    found = set(report.words)
    allowed = set(target.alphabet)
    automaton_only: List[str] = []
    oracle_only: List[str] = []
    checked = 0
    for w in all_words(m.alphabet, max_len):
        checked += 1
        expected = set(w) <= allowed and target(w)
        if expected and w not in found:
            oracle_only.append(w)
        elif not expected and w in found:
            automaton_only.append(w)
    verdict = ComparisonVerdict(
        automaton_id=automaton_id,
        mode=report.mode,
        oracle=oracle_id,
        max_len=max_len,
        automaton_only=tuple(automaton_only[:COUNTEREXAMPLE_LIMIT]),
        oracle_only=tuple(oracle_only[:COUNTEREXAMPLE_LIMIT]),
        checked=checked,
    )
    if not verdict.equivalent:
        logger.warning(f"{automaton_id} ({report.mode.value}) расходится с {oracle_id}: "
                       f"{' '.join(verdict.counterexamples(m.alphabet))}")
    return verdict


# ==================== Каталог свидетелей ====================

@dataclass(frozen=True)
class FixtureResult:
    fixture: Fixture
    verdict: ComparisonVerdict
    flags: str
    elapsed: float

    @property
    def flags_ok(self) -> bool:
        return self.flags == self.fixture.expected_flags

    @property
    def passed(self) -> bool:
        return self.verdict.equivalent and self.flags_ok

    def line(self) -> str:
        """`PASS|FAIL <name> <mode> <oracle> <max_len> [counterexamples...]`"""
        parts = [
            "PASS" if self.passed else "FAIL",
            self.fixture.name,
            self.verdict.mode.value,
            self.verdict.oracle,
            str(self.verdict.max_len),
        ]
        parts.extend(self.verdict.counterexamples(self.fixture.automaton.alphabet))
        if not self.flags_ok:
            parts.append(f"flags={self.flags.replace(' ', '')}"
                         f"!={self.fixture.expected_flags.replace(' ', '')}")
        return " ".join(parts)


@dataclass
class SuiteReport:
    results: List[FixtureResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> List[FixtureResult]:
        return [r for r in self.results if not r.passed]

    def lines(self) -> List[str]:
        return [r.line() for r in self.results]

    def render(self) -> str:
        return "\n".join(self.lines())


def run_fixture(fixture: Fixture, max_len: Optional[int] = None,
                meeting: MeetingPolicy = MeetingPolicy.CLOSURE,
                workers: Optional[int] = None) -> FixtureResult:
    """Сверка одного свидетеля; max_len перекрывает длину свидетеля"""
    m = fixture.automaton
    logger.debug(describe(m, fixture.name))
    bound = max_len if max_len is not None else (
        fixture.max_len if fixture.max_len is not None else default_max_len(m.alphabet)
    )
    started = time.perf_counter()
    verdict = compare(m, fixture.mode, fixture.oracle, bound,
                      automaton_id=fixture.name, meeting=meeting, workers=workers)
    result = FixtureResult(
        fixture=fixture,
        verdict=verdict,
        flags=classify(m).label(),
        elapsed=time.perf_counter() - started,
    )
    if result.passed:
        logger.info(f"{fixture.name}: совпадает с {fixture.oracle} до длины {bound}")
    else:
        logger.warning(f"Свидетель {fixture.name} не прошел проверку: {result.line()}")
    return result


def run_witness_suite(fixtures: Optional[Iterable[Fixture]] = None,
                      max_len: Optional[int] = None,
                      meeting: MeetingPolicy = MeetingPolicy.CLOSURE,
                      workers: Optional[int] = None) -> SuiteReport:
    """
    Прогон каталога свидетелей

    Ошибки сверки - это данные отчета, а не исключения.

    Args:
        fixtures: свидетели (по умолчанию весь каталог)
        max_len: единая граница длины вместо значений по умолчанию
        meeting: политика λλ-шагов
        workers: число процессов перечисления

    Returns:
        SuiteReport в порядке каталога
    """
    report = SuiteReport()
    for fixture in (witness_fixtures() if fixtures is None else fixtures):
        report.results.append(run_fixture(fixture, max_len, meeting, workers))
    logger.info(f"Свидетели: {len(report.results) - len(report.failures)}"
                f"/{len(report.results)} прошли")
    return report


# ==================== Случайные автоматы ====================

@dataclass(frozen=True)
class RandomBounds:
    """
    Границы генератора случайных автоматов

    max_read ограничивает длину чтения каждой головки за шаг; флаги
    stateless/all_final/simple/one_limited задают класс ограничений.
    """
    max_states: int = 3
    max_read: int = 2
    max_transitions: int = 6
    alphabet: Tuple[str, ...] = ("0", "1")
    stateless: bool = False
    all_final: bool = False
    simple: bool = False
    one_limited: bool = False

    def __post_init__(self):
        if self.max_states < 1 or self.max_read < 1 or self.max_transitions < 0:
            raise ValueError("random automaton bounds must be positive")
        if not self.alphabet:
            raise ValueError("random automaton needs a nonempty alphabet")


def random_automaton(seed: int, bounds: RandomBounds = RandomBounds()) -> WKAutomaton:
    """
    Случайный автомат, однозначно определяемый seed

    Множество финальных состояний всегда непусто, поэтому
    автомат с одним состоянием получается stateless.
    """
    rng = np.random.default_rng(seed)
    n_states = 1 if bounds.stateless else int(rng.integers(1, bounds.max_states + 1))
    states = tuple(f"q{k}" for k in range(n_states))
    if bounds.stateless or bounds.all_final:
        finals = states
    else:
        mask = rng.random(n_states) < 0.5
        mask[int(rng.integers(n_states))] = True
        finals = tuple(q for q, final in zip(states, mask) if final)

    def letters(count: int) -> str:
        return "".join(bounds.alphabet[int(k)]
                       for k in rng.integers(len(bounds.alphabet), size=count))

    transitions: List[Transition] = []
    for _ in range(int(rng.integers(0, bounds.max_transitions + 1))):
        src = states[int(rng.integers(n_states))]
        dst = states[int(rng.integers(n_states))]
        if bounds.one_limited:
            left_len, right_len = (1, 0) if rng.random() < 0.5 else (0, 1)
        else:
            left_len = int(rng.integers(0, bounds.max_read + 1))
            right_len = int(rng.integers(0, bounds.max_read + 1))
            if bounds.simple and left_len and right_len:
                if rng.random() < 0.5:
                    left_len = 0
                else:
                    right_len = 0
        t = Transition(src, letters(left_len), letters(right_len), dst)
        if t not in transitions:
            transitions.append(t)

    return WKAutomaton(
        alphabet=tuple(bounds.alphabet),
        states=states,
        initial=states[0],
        finals=finals,
        transitions=tuple(transitions),
    )


# ==================== Поиск по графу конфигураций ====================

def explore_configurations(m: WKAutomaton, w: str,
                           meeting: MeetingPolicy = MeetingPolicy.CLOSURE) -> bool:
    """
    Принятие слова обходом в ширину по явным конфигурациям (q, i, j)

    Независимая от динамики движка проверка для сравнения.
    """
    m.check_word(w)
    start = Configuration(m.initial, 0, len(w))
    seen = {start}
    queue = deque([start])
    while queue:
        config = queue.popleft()
        state, lo, hi = config.state, config.lo, config.hi
        if config.span == 0 and state in m.final_set:
            return True
        for t in m.transitions_from(state):
            a, b = len(t.left_read), len(t.right_read)
            if a + b > hi - lo:
                continue
            if t.is_lambda and lo == hi and meeting == MeetingPolicy.STRICT:
                continue
            if w[lo:lo + a] != t.left_read or w[hi - b:hi] != t.right_read:
                continue
            nxt = Configuration(t.target, lo + a, hi - b)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return False


# ==================== Популяционные законы ====================

@dataclass
class LawResult:
    name: str
    checked: int = 0
    violations: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def violation(self, description: str) -> None:
        self.violations.append(description)

    def line(self) -> str:
        head = f"{'PASS' if self.passed else 'FAIL'} law:{self.name} checked={self.checked}"
        if self.violations:
            head += " " + " ".join(self.violations[:COUNTEREXAMPLE_LIMIT])
        return head


@dataclass
class LawReport:
    results: List[LawResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def lines(self) -> List[str]:
        return [r.line() for r in self.results]

    def render(self) -> str:
        return "\n".join(self.lines())


def _plain(m: WKAutomaton, max_len: int, meeting: MeetingPolicy) -> Set[str]:
    return language_slice(m, Mode.PLAIN, max_len, meeting)


def _law_necklace_slices(seeds: int, max_len: int, meeting: MeetingPolicy,
                         weak: LawResult, strong: LawResult, patterns: LawResult) -> None:
    """
    Слабое/сильное принятие по определению против замыкания среза

    Решение принимается движком для одного представителя каждого
    ожерелья и распространяется на весь класс.
    """
    for seed in range(seeds):
        m = random_automaton(seed)
        plain = _plain(m, max_len, meeting)
        plain_direct = {w for w in all_words(m.alphabet, max_len) if accepts(m, w, meeting)}
        weak_direct, strong_direct = set(), set()
        seen: Set[Necklace] = set()
        for w in all_words(m.alphabet, max_len):
            necklace = canonical(w, m.alphabet)
            if necklace in seen:
                continue
            seen.add(necklace)
            if weak_accepts(m, necklace.canon, meeting):
                weak_direct |= necklace.members()
            if strong_accepts(m, necklace.canon, meeting):
                strong_direct |= necklace.members()
        weak.checked += 1
        expected_weak = cyclic_closure(plain_direct)
        if weak_direct != expected_weak or plain_direct != plain:
            diff = sort_words((weak_direct ^ expected_weak) | (plain_direct ^ plain), m.alphabet)
            weak.violation(f"seed={seed}:{diff[0] or '_'}")
        strong.checked += 1
        expected_strong = maximal_closed_subset(plain_direct)
        if strong_direct != expected_strong:
            diff = sort_words(strong_direct ^ expected_strong, m.alphabet)
            strong.violation(f"seed={seed}:{diff[0] or '_'}")
        for w in sort_words(strong_direct, m.alphabet):
            patterns.checked += 1
            if not pattern_fit_check(m, w, meeting):
                patterns.violation(f"seed={seed}:{w or '_'}")


def _law_stateless_pumping(seeds: int, max_len: int, meeting: MeetingPolicy,
                           law: LawResult) -> None:
    """a^n в языке stateless-автомата влечет a^(2n) и a^(3n)"""
    bounds = RandomBounds(stateless=True, alphabet=("a", "b"))
    for seed in range(seeds):
        m = random_automaton(seed, bounds)
        plain = _plain(m, max_len, meeting)
        law.checked += 1
        for a in m.alphabet:
            for n in range(1, max_len // 2 + 1):
                if a * n not in plain:
                    continue
                for k in (2, 3):
                    if k * n <= max_len and a * (k * n) not in plain:
                        law.violation(f"seed={seed}:{a * n}^{k}")


def _law_f1_one_letter(seeds: int, meeting: MeetingPolicy, law: LawResult) -> None:
    bounds = RandomBounds(all_final=True, one_limited=True)
    for seed in range(seeds):
        m = random_automaton(seed, bounds)
        plain = _plain(m, BFS_MAX_LEN, meeting)
        law.checked += 1
        if plain - {""} and not any(len(w) == 1 for w in plain):
            law.violation(f"seed={seed}")


def _law_n1_strong(seeds: int, max_len: int, meeting: MeetingPolicy, law: LawResult) -> None:
    """Сильный язык N1 автомата равен T1* ∪ T2*"""
    bounds = RandomBounds(stateless=True, one_limited=True, alphabet=("a", "b", "c"))
    for seed in range(seeds):
        m = random_automaton(seed, bounds)
        t1 = sorted({t.left_read for t in m.transitions if t.left_read})
        t2 = sorted({t.right_read for t in m.transitions if t.right_read})
        expected = two_alphabets(t1, t2).predicate
        strong = language_slice(m, Mode.STRONG, max_len, meeting)
        law.checked += 1
        for w in all_words(m.alphabet, max_len):
            if (w in strong) != expected(w):
                law.violation(f"seed={seed}:{w or '_'}")
                break


def _law_dp_vs_search(seeds: int, meeting: MeetingPolicy, law: LawResult) -> None:
    bounds = RandomBounds(max_states=3, max_read=2, max_transitions=6)
    for seed in range(seeds):
        m = random_automaton(seed, bounds)
        for w in all_words(m.alphabet, BFS_MAX_LEN):
            law.checked += 1
            if accepts(m, w, meeting) != explore_configurations(m, w, meeting):
                law.violation(f"seed={seed}:{w or '_'}")
                break


def verify_laws(seeds: int = DEFAULT_LAW_SEEDS, max_len: int = LAW_MAX_LEN,
                meeting: MeetingPolicy = MeetingPolicy.CLOSURE) -> LawReport:
    """
    Проверка законов на популяциях случайных автоматов

    Слабое замыкание и сильная максимальность - на seeds автоматах,
    леммы для ограниченных классов - на 10·seeds, сверка динамики
    с поиском по конфигурациям - на 2·seeds автоматах до длины 6.
    """
    weak = LawResult("weak_closure")
    strong = LawResult("strong_maximality")
    patterns = LawResult("pattern_necessity")
    pumping = LawResult("stateless_pumping")
    one_letter = LawResult("f1_one_letter")
    n1_strong = LawResult("n1_strong")
    dp_search = LawResult("dp_vs_search")

    _law_necklace_slices(seeds, max_len, meeting, weak, strong, patterns)
    _law_stateless_pumping(seeds * 10, max_len, meeting, pumping)
    _law_f1_one_letter(seeds * 10, meeting, one_letter)
    _law_n1_strong(seeds, max_len, meeting, n1_strong)
    _law_dp_vs_search(seeds * 2, meeting, dp_search)

    report = LawReport([weak, strong, patterns, pumping, one_letter, n1_strong, dp_search])
    for result in report.results:
        log = logger.info if result.passed else logger.warning
        log(result.line())
    return report


if __name__ == "__main__":
    import argparse

    logging.basicConfig(
        level=logging.INFO,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )

    parser = argparse.ArgumentParser(description="Прогон свидетелей и законов")
    parser.add_argument("--max-len", type=int, default=None, help="Граница длины слов")
    parser.add_argument("--seeds", type=int, default=DEFAULT_LAW_SEEDS,
                        help="Размер популяции случайных автоматов")
    args = parser.parse_args()

    print(run_witness_suite(max_len=args.max_len).render())
    print(verify_laws(seeds=args.seeds).render())
