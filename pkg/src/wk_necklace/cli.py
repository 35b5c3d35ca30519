"""
Командная строка wk-necklace

Коды возврата: 0 - принято / все проверки прошли, 1 - отвергнуто /
есть расхождения, 2 - ошибка разбора или проверки входных данных.
"""
import argparse
import logging
import sys
from typing import List, Optional

from wk_necklace.automaton import WKAutomaton, WKError, classify, parse_word, word_token
from wk_necklace.bridge import grammar_to_wk, wk_to_grammar
from wk_necklace.engine import (
    MeetingPolicy,
    Mode,
    accepting_run,
    accepts,
    format_trace,
    replay_trace,
    strong_counterexample,
    weak_witness,
)
from wk_necklace.formats import (
    load_automaton,
    load_grammar,
    save_text,
    serialize_automaton,
    serialize_grammar,
)
from wk_necklace.harness import (
    DEFAULT_LAW_SEEDS,
    compare,
    default_max_len,
    enumerate_language,
    run_witness_suite,
    verify_laws,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_ERROR = 2


def _setup_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )


def _load(path: str) -> WKAutomaton:
    """Автомат из .wk файла; .lin грамматика компилируется на лету"""
    if path.endswith(".lin"):
        return grammar_to_wk(load_grammar(path))
    return load_automaton(path)


def _meeting(args) -> MeetingPolicy:
    return MeetingPolicy.STRICT if args.strict_meeting else MeetingPolicy.CLOSURE


def cmd_accept(args) -> int:
    m = _load(args.automaton)
    word = parse_word(args.word)
    m.check_word(word)
    meeting = _meeting(args)
    mode = Mode(args.mode)

    if mode == Mode.WEAK:
        witness = weak_witness(m, word, meeting)
        if witness is None:
            print("REJECT")
            return EXIT_FAIL
        print("ACCEPT")
        print(f"witness: {word_token(witness)}")
        return EXIT_OK

    if mode == Mode.STRONG:
        failing = strong_counterexample(m, word, meeting)
        if failing is not None:
            print("REJECT")
            print(f"failing: {word_token(failing)}")
            return EXIT_FAIL
        print("ACCEPT")
        return EXIT_OK

    if args.trace:
        trace = accepting_run(m, word, meeting)
        if trace is None:
            print("REJECT")
            return EXIT_FAIL
        if not replay_trace(m, trace, meeting):
            raise WKError(f"trace for {word_token(word)!r} does not replay on the automaton")
        print("ACCEPT")
        if trace.steps:
            print(format_trace(trace))
        return EXIT_OK

    accepted = accepts(m, word, meeting)
    print("ACCEPT" if accepted else "REJECT")
    return EXIT_OK if accepted else EXIT_FAIL


def cmd_enum(args) -> int:
    m = _load(args.automaton)
    max_len = args.max_len if args.max_len is not None else default_max_len(m.alphabet)
    report = enumerate_language(m, Mode(args.mode), max_len, automaton_id=args.automaton,
                                meeting=_meeting(args), workers=args.workers)
    words = report.necklaces(m.alphabet) if args.necklaces else report.words
    for w in words:
        print(word_token(w))
    return EXIT_OK


def cmd_classify(args) -> int:
    print(classify(_load(args.automaton)).label())
    return EXIT_OK


def cmd_compile(args) -> int:
    if args.reverse:
        text = serialize_grammar(wk_to_grammar(load_automaton(args.source)))
    else:
        text = serialize_automaton(grammar_to_wk(load_grammar(args.source)))
    save_text(args.output, text)
    return EXIT_OK


def cmd_witness(args) -> int:
    report = run_witness_suite(max_len=args.max_len, meeting=_meeting(args),
                               workers=args.workers)
    print(report.render())
    passed = report.passed
    if args.laws:
        laws = verify_laws(seeds=args.seeds, meeting=_meeting(args))
        print(laws.render())
        passed = passed and laws.passed
    return EXIT_OK if passed else EXIT_FAIL


def cmd_compare(args) -> int:
    m = _load(args.automaton)
    max_len = args.max_len if args.max_len is not None else default_max_len(m.alphabet)
    verdict = compare(m, Mode(args.mode), args.oracle, max_len,
                      automaton_id=args.automaton, meeting=_meeting(args),
                      workers=args.workers)
    parts = ["PASS" if verdict.equivalent else "FAIL", args.automaton,
             verdict.mode.value, verdict.oracle, str(max_len)]
    parts.extend(verdict.counterexamples(m.alphabet))
    print(" ".join(parts))
    return EXIT_OK if verdict.equivalent else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wk-necklace",
        description="Sensing 5'→3' WK автоматы на ожерельях: принятие, перечисление, свидетели",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="Подробный журнал (-v INFO, -vv DEBUG)")
    parser.add_argument("--strict-meeting", action="store_true",
                        help="Запретить λλ-шаги после встречи головок")
    parser.add_argument("--workers", type=int, default=None,
                        help="Число процессов перечисления (по умолчанию WK_NECKLACE_WORKERS или 1)")
    sub = parser.add_subparsers(dest="command", required=True)

    modes = [mode.value for mode in Mode]

    p = sub.add_parser("accept", help="Принять слово или ожерелье")
    p.add_argument("automaton", help="Файл автомата (.wk) или грамматики (.lin)")
    p.add_argument("word", help="Слово; `_` - пустое слово")
    p.add_argument("--mode", choices=modes, default=Mode.PLAIN.value)
    p.add_argument("--trace", action="store_true", help="Показать принимающее вычисление")
    p.set_defaults(handler=cmd_accept)

    p = sub.add_parser("enum", help="Перечислить язык до заданной длины")
    p.add_argument("automaton")
    p.add_argument("--mode", choices=modes, default=Mode.PLAIN.value)
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--necklaces", action="store_true",
                   help="По одному представителю на класс сопряженности")
    p.set_defaults(handler=cmd_enum)

    p = sub.add_parser("classify", help="Классы ограничений N/F/S/1")
    p.add_argument("automaton")
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("compile", help="Грамматика → автомат (или обратно с --reverse)")
    p.add_argument("source")
    p.add_argument("output")
    p.add_argument("--reverse", action="store_true", help="Автомат → грамматика")
    p.set_defaults(handler=cmd_compile)

    p = sub.add_parser("witness", help="Прогон каталога свидетелей")
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--laws", action="store_true", help="Проверить законы на случайных автоматах")
    p.add_argument("--seeds", type=int, default=DEFAULT_LAW_SEEDS)
    p.set_defaults(handler=cmd_witness)

    p = sub.add_parser("compare", help="Сверить срез автомата с оракулом")
    p.add_argument("automaton")
    p.add_argument("--mode", choices=modes, default=Mode.PLAIN.value)
    p.add_argument("--oracle", required=True, help="O1..O13, O9:<T1>:<T2>")
    p.add_argument("--max-len", type=int, default=None)
    p.set_defaults(handler=cmd_compare)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _setup_logging(args.verbose)
    try:
        return args.handler(args)
    except (WKError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
