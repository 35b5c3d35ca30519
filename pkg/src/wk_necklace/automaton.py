"""
Sensing 5'→3' WK автоматы
Типы предметной области: символы, слова, переходы, автомат и классы ограничений (N/F/S/1)
"""
import re
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple


# Пустое слово λ в файлах и в командной строке
LAMBDA_TOKEN = "_"

# Зарезервированные символы форматов
RESERVED_CHARS = frozenset("_#(),|")

IDENT_RE = re.compile(r"^[A-Za-z0-9][A-Za-z0-9_]*$")


class WKError(ValueError):
    """Базовая ошибка пакета"""


class AutomatonError(WKError):
    """Нарушение инвариантов автомата или грамматики"""


class AlphabetError(WKError):
    """Слово содержит символ вне алфавита"""

    def __init__(self, symbol: str, alphabet: Iterable[str]):
        self.symbol = symbol
        self.alphabet = tuple(alphabet)
        super().__init__(
            f"symbol {symbol!r} is not in alphabet {{{', '.join(self.alphabet)}}}"
        )


def is_symbol(ch: str) -> bool:
    """Проверяет, может ли строка быть символом алфавита"""
    return (
        len(ch) == 1
        and ch.isprintable()
        and not ch.isspace()
        and ch not in RESERVED_CHARS
    )


def is_identifier(name: str) -> bool:
    """Идентификатор состояния или нетерминала"""
    return bool(IDENT_RE.match(name))


def word_token(word: str) -> str:
    """Слово в текстовом виде: λ записывается как `_`"""
    return word if word else LAMBDA_TOKEN


def parse_word(token: str) -> str:
    """Обратное к word_token"""
    return "" if token == LAMBDA_TOKEN else token


def check_word(word: str, alphabet: Iterable[str]) -> None:
    """
    Проверка, что слово записано над алфавитом

    Raises:
        AlphabetError: первый символ вне алфавита
    """
    allowed = set(alphabet)
    for ch in word:
        if ch not in allowed:
            raise AlphabetError(ch, alphabet)


@dataclass(frozen=True)
class Transition:
    """Переход q' ∈ δ(q, u, v): верхняя головка читает префикс u, нижняя - суффикс v"""
    source: str
    left_read: str
    right_read: str
    target: str

    @property
    def letters(self) -> int:
        return len(self.left_read) + len(self.right_read)

    @property
    def is_lambda(self) -> bool:
        """λλ-переход не читает ни одной буквы"""
        return not self.left_read and not self.right_read

    def __str__(self) -> str:
        return (f"{self.source} ({word_token(self.left_read)},"
                f"{word_token(self.right_read)}) -> {self.target}")


@dataclass(frozen=True)
class RestrictionFlags:
    """Классы ограничений: N (stateless), F (all-final), S (simple), 1 (1-limited)"""
    stateless: bool
    all_final: bool
    simple: bool
    one_limited: bool

    def label(self) -> str:
        """Метка классов: `N F S 1`, `F S`, `*` для неограниченного автомата"""
        names = [
            name for name, value in (
                ("N", self.stateless),
                ("F", self.all_final),
                ("S", self.simple),
                ("1", self.one_limited),
            ) if value
        ]
        return " ".join(names) if names else "*"

    @classmethod
    def from_label(cls, label: str) -> "RestrictionFlags":
        tokens = set(label.split()) - {"*"}
        unknown = tokens - {"N", "F", "S", "1"}
        if unknown:
            raise WKError(f"unknown restriction flags: {' '.join(sorted(unknown))}")
        return cls(
            stateless="N" in tokens,
            all_final="F" in tokens,
            simple="S" in tokens,
            one_limited="1" in tokens,
        )


@dataclass(frozen=True)
class WKAutomaton:
    """
    Sensing 5'→3' WK автомат M = (T, Q, q0, F, δ)

    Все коллекции хранятся кортежами в порядке объявления, чтобы
    сериализация была детерминированной. Автомат неизменяем.
    """
    alphabet: Tuple[str, ...]
    states: Tuple[str, ...]
    initial: str
    finals: Tuple[str, ...]
    transitions: Tuple[Transition, ...] = ()
    _by_source: Dict[str, Tuple[Transition, ...]] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self):
        # Допускаем списки на входе, но храним кортежи
        for name in ("alphabet", "states", "finals", "transitions"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        self._validate()
        by_source: Dict[str, List[Transition]] = {q: [] for q in self.states}
        for t in self.transitions:
            by_source[t.source].append(t)
        object.__setattr__(
            self, "_by_source", {q: tuple(ts) for q, ts in by_source.items()}
        )

    def _validate(self):
        if len(set(self.alphabet)) != len(self.alphabet):
            raise AutomatonError("duplicate symbol in alphabet")
        for ch in self.alphabet:
            if not is_symbol(ch):
                raise AutomatonError(f"invalid symbol {ch!r}")
        if not self.states:
            raise AutomatonError("automaton needs at least one state")
        if len(set(self.states)) != len(self.states):
            raise AutomatonError("duplicate state")
        for q in self.states:
            if not is_identifier(q):
                raise AutomatonError(f"invalid state identifier {q!r}")
        known = set(self.states)
        if self.initial not in known:
            raise AutomatonError(f"initial state {self.initial!r} is not declared")
        if len(set(self.finals)) != len(self.finals):
            raise AutomatonError("duplicate final state")
        for q in self.finals:
            if q not in known:
                raise AutomatonError(f"final state {q!r} is not declared")
        seen = set()
        for t in self.transitions:
            for q in (t.source, t.target):
                if q not in known:
                    raise AutomatonError(f"transition {t}: state {q!r} is not declared")
            check_word(t.left_read, self.alphabet)
            check_word(t.right_read, self.alphabet)
            if t in seen:
                raise AutomatonError(f"duplicate transition {t}")
            seen.add(t)

    @property
    def final_set(self) -> FrozenSet[str]:
        return frozenset(self.finals)

    @property
    def r(self) -> int:
        """Максимальная длина чтения одной головкой за шаг (0 без переходов)"""
        return max(
            (max(len(t.left_read), len(t.right_read)) for t in self.transitions),
            default=0,
        )

    def transitions_from(self, state: str) -> Tuple[Transition, ...]:
        return self._by_source.get(state, ())

    def check_word(self, word: str) -> None:
        check_word(word, self.alphabet)

    def with_transitions(self, transitions: Iterable[Transition]) -> "WKAutomaton":
        """Копия автомата с другим набором переходов"""
        return WKAutomaton(
            alphabet=self.alphabet,
            states=self.states,
            initial=self.initial,
            finals=self.finals,
            transitions=tuple(transitions),
        )


def classify(m: WKAutomaton) -> RestrictionFlags:
    """
    Определение классов ограничений автомата

    Args:
        m: автомат

    Returns:
        RestrictionFlags; N влечет F, 1 влечет S
    """
    all_final = set(m.finals) == set(m.states)
    return RestrictionFlags(
        stateless=len(m.states) == 1 and all_final,
        all_final=all_final,
        simple=all(not t.left_read or not t.right_read for t in m.transitions),
        one_limited=all(t.letters == 1 for t in m.transitions),
    )


def flags_label(flags: RestrictionFlags) -> str:
    return flags.label()


def build_automaton(
    alphabet: Iterable[str],
    states: Iterable[str],
    initial: str,
    finals: Iterable[str],
    transitions: Iterable[Tuple[str, str, str, str]],
) -> WKAutomaton:
    """
    Удобный конструктор из кортежей (from, left_read, right_read, to)

    λ можно передавать как "" или "_".
    """
    return WKAutomaton(
        alphabet=tuple(alphabet),
        states=tuple(states),
        initial=initial,
        finals=tuple(finals),
        transitions=tuple(
            Transition(src, parse_word(u), parse_word(v), dst)
            for src, u, v, dst in transitions
        ),
    )


def fresh_name(base: str, taken: Iterable[str]) -> str:
    """Имя, не совпадающее ни с одним из занятых: base, base1, base2, ..."""
    used = set(taken)
    if base not in used:
        return base
    index = 1
    while f"{base}{index}" in used:
        index += 1
    return f"{base}{index}"


def describe(m: WKAutomaton, name: Optional[str] = None) -> str:
    """Короткое описание для логов"""
    prefix = f"{name}: " if name else ""
    return (f"{prefix}|T|={len(m.alphabet)}, |Q|={len(m.states)}, "
            f"|δ|={len(m.transitions)}, r={m.r}, flags={classify(m).label()}")
