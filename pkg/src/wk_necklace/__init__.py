"""
Sensing 5'→3' Watson-Crick автоматы на ожерельях

Библиотека для проверки иерархии классов циклических языков, включающая:
- automaton: Типы автоматов и классы ограничений N/F/S/1
- formats: Текстовые форматы .wk и .lin
- grammar: Линейные грамматики и ограниченный вывод
- engine: Принятие слов, трассы, слабое и сильное принятие ожерелий
- necklace: Сопряженные слова и канонические представители
- bridge: Преобразования грамматика ↔ автомат
- oracles: Независимые оракулы языков-свидетелей
- harness: Перечисление, сверка с оракулами, свидетели и законы
- cli: Командная строка wk-necklace
"""

__version__ = "0.1.0"

from wk_necklace.automaton import (
    AlphabetError,
    AutomatonError,
    RestrictionFlags,
    Transition,
    WKAutomaton,
    WKError,
    build_automaton,
    classify,
    flags_label,
)
from wk_necklace.formats import (
    FormatError,
    load_automaton,
    load_grammar,
    parse_automaton,
    parse_grammar,
    serialize_automaton,
    serialize_grammar,
)
from wk_necklace.grammar import LinearGrammar, Production, derive_bounded, generates
from wk_necklace.engine import (
    ComputationTrace,
    MeetingPolicy,
    Mode,
    Pattern,
    accepting_run,
    accepts,
    initial_patterns,
    maximal_necklace_sublanguage,
    pattern_fit_check,
    strong_accepts,
    weak_accepts,
)
from wk_necklace.necklace import Necklace, canonical, conjugates, cyclic_closure, is_cyclically_closed
from wk_necklace.bridge import grammar_to_wk, wk_to_grammar
from wk_necklace.oracles import UnknownOracleError, oracle, resolve_oracle
from wk_necklace.harness import (
    EnumerationReport,
    compare,
    enumerate_language,
    random_automaton,
    run_witness_suite,
    verify_laws,
)

__all__ = [
    # Automaton
    "WKAutomaton",
    "Transition",
    "RestrictionFlags",
    "build_automaton",
    "classify",
    "flags_label",

    # Errors
    "WKError",
    "AutomatonError",
    "AlphabetError",
    "FormatError",
    "UnknownOracleError",

    # Formats
    "parse_automaton",
    "serialize_automaton",
    "parse_grammar",
    "serialize_grammar",
    "load_automaton",
    "load_grammar",

    # Grammar
    "LinearGrammar",
    "Production",
    "derive_bounded",
    "generates",

    # Engine
    "MeetingPolicy",
    "Mode",
    "ComputationTrace",
    "Pattern",
    "accepts",
    "accepting_run",
    "weak_accepts",
    "strong_accepts",
    "initial_patterns",
    "pattern_fit_check",
    "maximal_necklace_sublanguage",

    # Necklace
    "Necklace",
    "conjugates",
    "canonical",
    "cyclic_closure",
    "is_cyclically_closed",

    # Bridge
    "grammar_to_wk",
    "wk_to_grammar",

    # Oracles
    "oracle",
    "resolve_oracle",

    # Harness
    "EnumerationReport",
    "enumerate_language",
    "compare",
    "run_witness_suite",
    "random_automaton",
    "verify_laws",
]
