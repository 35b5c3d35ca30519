"""
Текстовые форматы автоматов (.wk) и линейных грамматик (.lin)

Пример автомата:
    alphabet: 0 1
    states: q
    initial: q
    final: q
    trans: q (0,_) -> q        # (left_read, right_read), λ записывается `_`

Пример грамматики:
    terminals: 0 1
    nonterminals: S A
    start: S
    prod: S -> A 1
    prod: A -> 0 A 0 | 0 1 0
"""
import re
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from wk_necklace.automaton import (
    LAMBDA_TOKEN,
    WKAutomaton,
    WKError,
    Transition,
    is_identifier,
    is_symbol,
    parse_word,
)
from wk_necklace.grammar import LinearGrammar, Production

logger = logging.getLogger(__name__)

HEADER_RE = re.compile(r'^([a-z]+)\s*:\s*(.*)$')
TRANS_RE = re.compile(
    r'^(\S+)\s+\(\s*([^,()\s]+)\s*,\s*([^,()\s]+)\s*\)\s*->\s*(\S+)$'
)
PRODUCTION_RE = re.compile(r'^(\S+)\s*->\s*(.*)$')

AUTOMATON_HEADERS = ("alphabet", "states", "initial", "final", "trans")
GRAMMAR_HEADERS = ("terminals", "nonterminals", "start", "prod")


class FormatError(WKError):
    """Синтаксическая или смысловая ошибка во входном тексте"""

    def __init__(self, reason: str, line: Optional[int] = None, source: str = "<text>"):
        self.reason = reason
        self.line = line
        self.source = source
        location = f"{source}:{line}" if line is not None else source
        super().__init__(f"{location}: {reason}")


def _strip_comment(line: str) -> str:
    return line.split('#', 1)[0].strip()


def _numbered_lines(text: str):
    """Непустые строки без комментариев с номерами (с единицы)"""
    for number, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if line:
            yield number, line


def _symbols(value: str, number: int, source: str, what: str) -> List[str]:
    symbols = value.split()
    for ch in symbols:
        if not is_symbol(ch):
            raise FormatError(f"invalid {what} {ch!r}", number, source)
    if len(set(symbols)) != len(symbols):
        raise FormatError(f"duplicate {what} in declaration", number, source)
    return symbols


def _identifiers(value: str, number: int, source: str, what: str) -> List[str]:
    names = value.split()
    for name in names:
        if not is_identifier(name):
            raise FormatError(f"invalid {what} identifier {name!r}", number, source)
    if len(set(names)) != len(names):
        raise FormatError(f"duplicate {what} in declaration", number, source)
    return names


@dataclass
class _AutomatonDraft:
    """Промежуточное состояние разбора: значения и строки, где они объявлены"""
    headers: Dict[str, int] = field(default_factory=dict)
    alphabet: List[str] = field(default_factory=list)
    states: List[str] = field(default_factory=list)
    initial: Optional[str] = None
    finals: List[str] = field(default_factory=list)
    transitions: List[Tuple[int, str, str, str, str]] = field(default_factory=list)


class AutomatonParser:
    """
    Разбор текстового описания WK автомата

    Формат построчный, `#` начинает комментарий. Все ошибки
    сообщаются с номером строки.
    """

    def __init__(self, source: str = "<text>"):
        self.source = source

    def _error(self, reason: str, line: Optional[int] = None) -> FormatError:
        return FormatError(reason, line, self.source)

    def parse(self, text: str) -> WKAutomaton:
        """
        Разбор автомата из текста

        Args:
            text: содержимое .wk файла

        Returns:
            WKAutomaton с проверенными инвариантами

        Raises:
            FormatError: синтаксическая ошибка, необъявленное состояние или символ,
                повторное объявление заголовка
        """
        draft = _AutomatonDraft()
        for number, line in _numbered_lines(text):
            self._parse_line(draft, number, line)
        return self._build(draft)

    def _parse_line(self, draft: _AutomatonDraft, number: int, line: str):
        match = HEADER_RE.match(line)
        if not match:
            raise self._error(f"cannot parse line: {line!r}", number)
        key, value = match.group(1), match.group(2).strip()
        if key not in AUTOMATON_HEADERS:
            raise self._error(f"unknown declaration {key!r}", number)

        if key == "trans":
            trans = TRANS_RE.match(value)
            if not trans:
                raise self._error(f"malformed transition: {value!r}", number)
            draft.transitions.append((number,) + trans.groups())
            return

        if key in draft.headers:
            raise self._error(
                f"duplicate {key} declaration (first on line {draft.headers[key]})", number
            )
        draft.headers[key] = number

        if key == "alphabet":
            draft.alphabet = _symbols(value, number, self.source, "symbol")
        elif key == "states":
            draft.states = _identifiers(value, number, self.source, "state")
        elif key == "initial":
            names = _identifiers(value, number, self.source, "state")
            if len(names) != 1:
                raise self._error("initial declaration needs exactly one state", number)
            draft.initial = names[0]
        elif key == "final":
            draft.finals = _identifiers(value, number, self.source, "state")

    def _build(self, draft: _AutomatonDraft) -> WKAutomaton:
        for key in ("alphabet", "states", "initial"):
            if key not in draft.headers:
                raise self._error(f"missing {key} declaration")
        declared = set(draft.states)
        if draft.initial not in declared:
            raise self._error(f"undeclared state {draft.initial!r}", draft.headers["initial"])
        for q in draft.finals:
            if q not in declared:
                raise self._error(f"undeclared state {q!r}", draft.headers["final"])

        alphabet = set(draft.alphabet)
        transitions = []
        seen: Dict[Transition, int] = {}
        for number, src, left, right, dst in draft.transitions:
            for q in (src, dst):
                if q not in declared:
                    raise self._error(f"undeclared state {q!r}", number)
            for token in (left, right):
                for ch in parse_word(token):
                    if ch not in alphabet:
                        raise self._error(f"undeclared symbol {ch!r}", number)
            t = Transition(src, parse_word(left), parse_word(right), dst)
            if t in seen:
                raise self._error(f"duplicate transition (first on line {seen[t]})", number)
            seen[t] = number
            transitions.append(t)

        m = WKAutomaton(
            alphabet=tuple(draft.alphabet),
            states=tuple(draft.states),
            initial=draft.initial,
            finals=tuple(draft.finals),
            transitions=tuple(transitions),
        )
        logger.info(f"Загружен автомат из {self.source}: "
                    f"{len(m.states)} состояний, {len(m.transitions)} переходов")
        return m


class GrammarParser:
    """
    Разбор линейной грамматики

    Заголовки необязательны: без `nonterminals:` нетерминалами считаются
    идентификаторы с заглавной буквы, стартовый символ - голова первой
    продукции, терминалы собираются из терминальных цепочек.
    Строки продукций можно писать как `prod: S -> ...` или просто `S -> ...`.
    """

    def __init__(self, source: str = "<text>"):
        self.source = source

    def _error(self, reason: str, line: Optional[int] = None) -> FormatError:
        return FormatError(reason, line, self.source)

    def parse(self, text: str) -> LinearGrammar:
        """
        Разбор грамматики из текста

        Raises:
            FormatError: синтаксическая ошибка, нелинейная продукция,
                необъявленный нетерминал или терминал
        """
        headers: Dict[str, int] = {}
        terminals: Optional[List[str]] = None
        nonterminals: Optional[List[str]] = None
        start: Optional[str] = None
        raw_productions: List[Tuple[int, str]] = []

        for number, line in _numbered_lines(text):
            match = HEADER_RE.match(line)
            if match and match.group(1) in GRAMMAR_HEADERS:
                key, value = match.group(1), match.group(2).strip()
            elif PRODUCTION_RE.match(line):
                key, value = "prod", line
            else:
                raise self._error(f"cannot parse line: {line!r}", number)

            if key == "prod":
                raw_productions.append((number, value))
                continue
            if key in headers:
                raise self._error(
                    f"duplicate {key} declaration (first on line {headers[key]})", number
                )
            headers[key] = number
            if key == "terminals":
                terminals = _symbols(value, number, self.source, "terminal")
            elif key == "nonterminals":
                nonterminals = _identifiers(value, number, self.source, "nonterminal")
            elif key == "start":
                names = _identifiers(value, number, self.source, "nonterminal")
                if len(names) != 1:
                    raise self._error("start declaration needs exactly one nonterminal", number)
                start = names[0]

        declared_nt = nonterminals is not None
        found_nt: List[str] = list(nonterminals or [])
        found_t: List[str] = list(terminals or [])
        productions: List[Production] = []

        for number, value in raw_productions:
            match = PRODUCTION_RE.match(value)
            if not match:
                raise self._error(f"malformed production: {value!r}", number)
            head, rhs = match.group(1), match.group(2)
            if not is_identifier(head):
                raise self._error(f"invalid nonterminal {head!r}", number)
            if declared_nt and head not in found_nt:
                raise self._error(f"undeclared nonterminal {head!r}", number)
            if head not in found_nt:
                found_nt.append(head)
            for alternative in rhs.split('|'):
                productions.append(
                    self._production(head, alternative.split(), number,
                                     found_nt, found_t, declared_nt, terminals is not None)
                )

        if not found_nt:
            raise self._error("grammar declares no nonterminals")
        if start is None:
            start = found_nt[0]
        elif start not in found_nt:
            raise self._error(f"undeclared nonterminal {start!r}", headers["start"])

        g = LinearGrammar(
            nonterminals=tuple(found_nt),
            terminals=tuple(found_t),
            start=start,
            productions=tuple(productions),
        )
        logger.info(f"Загружена грамматика из {self.source}: {len(g.productions)} продукций")
        return g

    def _production(self, head, tokens, number, found_nt, found_t,
                    declared_nt: bool, declared_t: bool) -> Production:
        if not tokens:
            raise self._error(f"empty alternative for {head!r} (write `_` for λ)", number)
        left, right = [], []
        body: Optional[str] = None
        for token in tokens:
            if token == LAMBDA_TOKEN:
                continue
            kind = self._token_kind(token, found_nt, found_t, declared_nt)
            if kind == "undeclared":
                raise self._error(f"undeclared nonterminal {token!r}", number)
            if kind == "nonterminal":
                if body is not None:
                    raise self._error(
                        f"production for {head!r} is not linear: "
                        f"two nonterminals {body!r} and {token!r} on the right side", number
                    )
                body = token
                if token not in found_nt:
                    found_nt.append(token)
                continue
            for ch in token:
                if not is_symbol(ch):
                    raise self._error(f"invalid terminal {ch!r}", number)
                if ch not in found_t:
                    if declared_t:
                        raise self._error(f"undeclared terminal {ch!r}", number)
                    found_t.append(ch)
            (left if body is None else right).append(token)
        return Production(head, "".join(left), body, "".join(right))

    @staticmethod
    def _token_kind(token, found_nt, found_t, declared_nt: bool) -> str:
        """nonterminal, terminal или undeclared (похоже на нетерминал, но не объявлено)"""
        if token in found_nt:
            return "nonterminal"
        if found_t and all(ch in found_t for ch in token):
            return "terminal"
        if declared_nt:
            return "undeclared" if is_identifier(token) else "terminal"
        return "nonterminal" if is_identifier(token) and token[0].isupper() else "terminal"


def parse_automaton(text: str, source: str = "<text>") -> WKAutomaton:
    return AutomatonParser(source).parse(text)


def serialize_automaton(m: WKAutomaton) -> str:
    """
    Каноническая запись автомата

    Порядок состояний и переходов - порядок объявления, поэтому
    повторная сериализация дает побайтно тот же текст.
    """
    lines = [
        f"alphabet: {' '.join(m.alphabet)}".rstrip(),
        f"states: {' '.join(m.states)}",
        f"initial: {m.initial}",
        f"final: {' '.join(m.finals)}".rstrip(),
    ]
    for t in m.transitions:
        lines.append(f"trans: {t}")
    return "\n".join(lines) + "\n"


def parse_grammar(text: str, source: str = "<text>") -> LinearGrammar:
    return GrammarParser(source).parse(text)


def serialize_grammar(g: LinearGrammar) -> str:
    """Запись грамматики; подряд идущие продукции одной головы объединяются через `|`"""
    lines = [
        f"terminals: {' '.join(g.terminals)}".rstrip(),
        f"nonterminals: {' '.join(g.nonterminals)}",
        f"start: {g.start}",
    ]
    group: List[Production] = []
    for p in g.productions:
        if group and group[0].head != p.head:
            lines.append(_prod_line(group))
            group = []
        group.append(p)
    if group:
        lines.append(_prod_line(group))
    return "\n".join(lines) + "\n"


def _prod_line(group: List[Production]) -> str:
    alternatives = " | ".join(" ".join(p.rhs_tokens()) for p in group)
    return f"prod: {group[0].head} -> {alternatives}"


def _read(path: str) -> str:
    with open(path, 'r', encoding='utf-8') as f:
        return f.read()


def load_automaton(path: str) -> WKAutomaton:
    """Загрузка автомата из файла; FormatError указывает имя файла"""
    return parse_automaton(_read(path), source=str(path))


def load_grammar(path: str) -> LinearGrammar:
    return parse_grammar(_read(path), source=str(path))


def save_text(path: str, text: str) -> None:
    with open(path, 'w', encoding='utf-8') as f:
        f.write(text)
    logger.info(f"Записан файл {path}")


if __name__ == "__main__":
    import argparse
    import sys

    logging.basicConfig(level=logging.INFO)

    parser = argparse.ArgumentParser(description="Проверка и нормализация .wk/.lin файлов")
    parser.add_argument("path", help="Путь к файлу автомата (.wk) или грамматики (.lin)")
    args = parser.parse_args()

    try:
        if args.path.endswith(".lin"):
            sys.stdout.write(serialize_grammar(load_grammar(args.path)))
        else:
            sys.stdout.write(serialize_automaton(load_automaton(args.path)))
    except (WKError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        sys.exit(2)
