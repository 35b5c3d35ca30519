"""
Каталог автоматов-свидетелей иерархии классов W_* и S_*
Каждый свидетель сверяется с оракулом своего языка на ограниченной длине
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional

from wk_necklace.automaton import WKAutomaton, classify
from wk_necklace.bridge import grammar_to_wk
from wk_necklace.engine import Mode
from wk_necklace.formats import parse_automaton, parse_grammar

logger = logging.getLogger(__name__)


# Автоматы в формате .wk (те же тексты лежат в automata/)
AUTOMATA: Dict[str, str] = {
    # Stateless 1-limited: L(M) = 0^n 1^m
    "blocks01": """
alphabet: 0 1
states: q
initial: q
final: q
trans: q (0,_) -> q
trans: q (_,1) -> q
""",
    # Чередование 0 слева и 1 справа: 0^n 1^m, n ∈ {m, m+1}
    "alt01": """
alphabet: 0 1
states: q p
initial: q
final: q p
trans: q (0,_) -> p
trans: p (_,1) -> q
""",
    "pairs01": """
alphabet: 0 1
states: q
initial: q
final: q
trans: q (00,_) -> q
trans: q (_,1) -> q
""",
    "two_to_one": """
alphabet: 0 1
states: q
initial: q
final: q
trans: q (0,11) -> q
trans: q (00,1) -> q
""",
    "even_ones": """
alphabet: 1
states: p
initial: p
final: p
trans: p (11,_) -> p
""",
    "single_one": """
alphabet: 0 1
states: p q
initial: p
final: p q
trans: p (0,_) -> p
trans: p (1,_) -> q
trans: q (0,_) -> q
""",
    "matched01": """
alphabet: 0 1
states: q
initial: q
final: q
trans: q (0,1) -> q
""",
    "n1_ab": """
alphabet: a b
states: q
initial: q
final: q
trans: q (a,_) -> q
trans: q (_,b) -> q
""",
    "n1_acbc": """
alphabet: a b c
states: q
initial: q
final: q
trans: q (a,_) -> q
trans: q (c,_) -> q
trans: q (_,b) -> q
trans: q (_,c) -> q
""",
    "aa_loop": """
alphabet: a
states: q
initial: q
final: q
trans: q (aa,_) -> q
""",
    # pb: конъюгаты, начинающиеся с b (b+ a* b*);
    # pa: конъюгаты, кончающиеся на a (a* b* a+);
    # s1/p: a^n b^m с разностью n - m ∈ {0, 1}
    "block_balance": """
alphabet: a b
states: q0 pb ra pa rb s1 p
initial: q0
final: q0 pb ra pa rb s1 p
trans: q0 (b,_) -> pb
trans: pb (b,_) -> pb
trans: pb (_,b) -> pb
trans: pb (a,_) -> ra
trans: ra (a,_) -> ra
trans: ra (_,b) -> ra
trans: q0 (_,a) -> pa
trans: pa (_,a) -> pa
trans: pa (a,_) -> pa
trans: pa (_,b) -> rb
trans: rb (_,b) -> rb
trans: rb (a,_) -> rb
trans: q0 (a,_) -> s1
trans: s1 (_,b) -> p
trans: p (a,_) -> s1
""",
    "one_letter": """
alphabet: a b
states: q p r
initial: q
final: q p r
trans: q (a,_) -> p
trans: q (b,_) -> r
""",
    "short_pairs": """
alphabet: a b
states: q p
initial: q
final: q p
trans: q (aa,_) -> p
trans: q (ab,_) -> p
trans: q (ba,_) -> p
""",
    "empty": """
alphabet: 0 1
states: q
initial: q
final: q
""",
}

# Линейные грамматики в формате .lin
GRAMMARS: Dict[str, str] = {
    # 0^n 1 0^n 1, n ≥ 1
    "gap_pair": """
terminals: 0 1
nonterminals: S A
start: S
prod: S -> A 1
prod: A -> 0 A 0 | 0 1 0
""",
    # Вариант с A -> 1: дает еще и слово 11 (n = 0)
    "gap_pair_literal": """
terminals: 0 1
nonterminals: S A
start: S
prod: S -> A 1
prod: A -> 0 A 0 | 1
""",
    "lambda": """
terminals: 0 1
nonterminals: S
start: S
prod: S -> _
""",
    "balanced": """
terminals: 0 1
nonterminals: S
start: S
prod: S -> 0 S 1 | _
""",
}


@dataclass(frozen=True)
class Fixture:
    """
    Свидетель: автомат, режим принятия и оракул ожидаемого языка

    max_len None означает длину по умолчанию для алфавита автомата.
    """
    name: str
    automaton: WKAutomaton
    mode: Mode
    oracle: str
    expected_flags: str
    max_len: Optional[int] = None

    @property
    def flags_match(self) -> bool:
        return classify(self.automaton).label() == self.expected_flags


def automaton(name: str) -> WKAutomaton:
    """Автомат каталога по имени"""
    return parse_automaton(AUTOMATA[name], source=f"{name}.wk")


def grammar_automaton(name: str) -> WKAutomaton:
    """Грамматика каталога, скомпилированная в автомат"""
    return grammar_to_wk(parse_grammar(GRAMMARS[name], source=f"{name}.lin"))


def witness_fixtures() -> List[Fixture]:
    """Полный каталог свидетелей в порядке отчета"""
    weak, strong = Mode.WEAK, Mode.STRONG
    fixtures = [
        Fixture("blocks01", automaton("blocks01"), weak, "O1", "N F S 1"),
        Fixture("alt01", automaton("alt01"), weak, "O2", "F S 1"),
        Fixture("pairs01", automaton("pairs01"), weak, "O3", "N F S"),
        Fixture("two_to_one", automaton("two_to_one"), weak, "O4", "N F"),
        Fixture("even_ones", automaton("even_ones"), weak, "O5", "N F S"),
        Fixture("single_one", automaton("single_one"), weak, "O6", "F S 1"),
        Fixture("matched01", automaton("matched01"), weak, "O7", "N F"),
        Fixture("gap_pair", grammar_automaton("gap_pair"), weak, "O8", "*"),
        Fixture("n1_ab", automaton("n1_ab"), strong, "O9:a:b", "N F S 1"),
        Fixture("n1_acbc", automaton("n1_acbc"), strong, "O9:ac:bc", "N F S 1", max_len=10),
        Fixture("blocks01_strong", automaton("blocks01"), strong, "O9:0:1", "N F S 1"),
        Fixture("aa_loop", automaton("aa_loop"), strong, "O11", "N F S"),
        Fixture("block_balance", automaton("block_balance"), strong, "O10", "F S 1"),
        Fixture("one_letter", automaton("one_letter"), strong, "O12", "F S 1"),
        Fixture("short_pairs", automaton("short_pairs"), strong, "O13", "F S"),
    ]
    logger.debug(f"Каталог свидетелей: {len(fixtures)} записей")
    return fixtures


def fixture_by_name(name: str) -> Fixture:
    for fixture in witness_fixtures():
        if fixture.name == name:
            return fixture
    raise KeyError(name)
