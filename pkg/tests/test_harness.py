"""
Тесты испытательного стенда: перечисление, сверка, свидетели, законы
"""
import unittest
from pathlib import Path

import pytest

from wk_necklace.automaton import AlphabetError, WKError, build_automaton, classify
from wk_necklace.engine import MeetingPolicy, Mode, accepts
from wk_necklace.fixtures import (
    AUTOMATA,
    GRAMMARS,
    Fixture,
    automaton,
    fixture_by_name,
    grammar_automaton,
    witness_fixtures,
)
from wk_necklace.formats import load_automaton, load_grammar, parse_grammar
from wk_necklace.harness import (
    RandomBounds,
    compare,
    default_max_len,
    default_workers,
    enumerate_language,
    language_slice,
    random_automaton,
    run_fixture,
    run_witness_suite,
    verify_laws,
)

AUTOMATA_DIR = Path(__file__).parent.parent / "automata"


class TestEnumeration(unittest.TestCase):
    """Перечисление срезов языка"""

    def test_even_ones_weak(self):
        report = enumerate_language(automaton("even_ones"), Mode.WEAK, 5)
        self.assertEqual(report.words, ("", "11", "1111"))
        self.assertEqual(report.mode, Mode.WEAK)

    def test_length_zero(self):
        self.assertEqual(enumerate_language(automaton("blocks01"), Mode.PLAIN, 0).words, ("",))
        self.assertEqual(enumerate_language(automaton("even_ones"), "strong", 0).words, ("",))

    def test_negative_length(self):
        with self.assertRaises(WKError):
            enumerate_language(automaton("blocks01"), Mode.PLAIN, -1)

    def test_necklace_representatives(self):
        report = enumerate_language(automaton("blocks01"), Mode.WEAK, 2)
        self.assertEqual(report.words, ("", "0", "1", "00", "01", "10", "11"))
        self.assertEqual(report.necklaces(), ["", "0", "1", "00", "01", "11"])

    def test_words_in_declared_order(self):
        m = build_automaton(["1", "0"], ["q"], "q", ["q"], [("q", "0", "_", "q"), ("q", "1", "_", "q")])
        self.assertEqual(enumerate_language(m, Mode.PLAIN, 1).words, ("", "1", "0"))

    def test_workers_agree(self):
        m = automaton("alt01")
        single = enumerate_language(m, Mode.STRONG, 8, workers=1)
        pooled = enumerate_language(m, Mode.STRONG, 8, workers=2)
        self.assertEqual(single.words, pooled.words)

    def test_default_bounds(self):
        self.assertEqual(default_max_len(("0", "1")), 12)
        self.assertEqual(default_max_len(("a", "b", "c")), 10)


def test_default_workers_from_environment(monkeypatch):
    monkeypatch.setenv("WK_NECKLACE_WORKERS", "3")
    assert default_workers() == 3
    monkeypatch.setenv("WK_NECKLACE_WORKERS", "много")
    assert default_workers() == 1
    monkeypatch.delenv("WK_NECKLACE_WORKERS")
    assert default_workers() == 1


class TestCompare(unittest.TestCase):
    """Сверка с оракулами"""

    def test_blocks01_weak_matches_o1(self):
        verdict = compare(automaton("blocks01"), Mode.WEAK, "O1", 12)
        self.assertTrue(verdict.equivalent)
        self.assertEqual(verdict.checked, 2 ** 13 - 1)

    def test_blocks01_strong_differs_from_o1(self):
        verdict = compare(automaton("blocks01"), Mode.STRONG, "O1", 6)
        self.assertFalse(verdict.equivalent)
        self.assertEqual(verdict.automaton_only, ())
        self.assertIn("010", verdict.oracle_only)
        self.assertIn("-010", verdict.counterexamples())
        self.assertEqual(verdict.counterexamples()[0], "-01")

    def test_pairs01_matches_o3(self):
        self.assertTrue(compare(automaton("pairs01"), Mode.WEAK, "O3", 12).equivalent)

    def test_oracle_alphabet_must_fit(self):
        with self.assertRaises(AlphabetError):
            compare(automaton("even_ones"), Mode.WEAK, "O1", 4)

    def test_narrower_oracle_alphabet(self):
        """Слова с символами вне алфавита оракула не входят в его язык"""
        m = build_automaton(["a", "b"], ["q"], "q", ["q"], [("q", "a", "_", "q"), ("q", "b", "_", "q")])
        verdict = compare(m, Mode.PLAIN, "O11", 3)
        self.assertIn("b", verdict.automaton_only)
        self.assertNotIn("aa", verdict.automaton_only)

    def test_counterexamples_truncated(self):
        m = build_automaton(["0", "1"], ["q"], "q", ["q"], [])
        verdict = compare(m, Mode.WEAK, "O1", 12)
        self.assertEqual(len(verdict.oracle_only), 10)
        self.assertEqual(len(verdict.counterexamples()), 10)


class TestWitnessSuite(unittest.TestCase):
    """Каталог свидетелей"""

    def test_full_suite_passes(self):
        report = run_witness_suite()
        self.assertTrue(report.passed, report.render())
        self.assertEqual(len(report.lines()), 15)
        self.assertTrue(all(line.startswith("PASS ") for line in report.lines()))

    def test_suite_at_shorter_length(self):
        report = run_witness_suite(max_len=8)
        self.assertTrue(report.passed, report.render())
        self.assertIn("PASS n1_acbc strong O9:ac:bc 8", report.lines())

    def test_mutated_automaton_fails(self):
        """Без перехода (_,1) слабый язык сужается до 0*"""
        original = automaton("blocks01")
        broken = original.with_transitions(t for t in original.transitions if not t.right_read)
        self.assertEqual(len(broken.transitions), 1)
        fixture = Fixture("blocks01", broken, Mode.WEAK, "O1", "N F S 1")
        result = run_fixture(fixture)
        self.assertFalse(result.passed)
        self.assertTrue(result.line().startswith("FAIL blocks01 weak O1 12 -1"), result.line())

    def test_flag_mismatch_reported(self):
        fixture = Fixture("blocks01", automaton("blocks01"), Mode.WEAK, "O1", "F S")
        result = run_fixture(fixture, max_len=4)
        self.assertTrue(result.verdict.equivalent)
        self.assertFalse(result.passed)
        self.assertTrue(result.line().endswith("flags=NFS1!=FS"))

    def test_fixture_flags(self):
        for fixture in witness_fixtures():
            self.assertTrue(fixture.flags_match, fixture.name)

    def test_fixture_lookup(self):
        self.assertEqual(fixture_by_name("short_pairs").oracle, "O13")
        with self.assertRaises(KeyError):
            fixture_by_name("nope")


@pytest.mark.parametrize("name", sorted(AUTOMATA))
def test_automaton_files_match_catalog(name):
    assert load_automaton(str(AUTOMATA_DIR / f"{name}.wk")) == automaton(name)


def test_compiled_gap_pair_file_matches_grammar():
    assert load_automaton(str(AUTOMATA_DIR / "gap_pair.wk")) == grammar_automaton("gap_pair")
    assert load_grammar(str(AUTOMATA_DIR / "gap_pair.lin")) == parse_grammar(GRAMMARS["gap_pair"])


class TestRandomAutomata(unittest.TestCase):
    """Генератор случайных автоматов"""

    def test_deterministic(self):
        self.assertEqual(random_automaton(7), random_automaton(7))

    def test_many_seeds_valid(self):
        bounds = RandomBounds()
        for seed in range(1000):
            m = random_automaton(seed, bounds)
            self.assertTrue(m.finals)
            self.assertLessEqual(len(m.states), bounds.max_states)
            self.assertLessEqual(len(m.transitions), bounds.max_transitions)
            self.assertLessEqual(m.r, bounds.max_read)

    def test_restriction_classes(self):
        for seed in range(100):
            self.assertTrue(classify(random_automaton(seed, RandomBounds(stateless=True, simple=True))).stateless)
            self.assertTrue(classify(random_automaton(seed, RandomBounds(all_final=True))).all_final)
            self.assertTrue(classify(random_automaton(seed, RandomBounds(simple=True))).simple)
            self.assertTrue(classify(random_automaton(seed, RandomBounds(one_limited=True))).one_limited)

    def test_single_state_is_stateless(self):
        bounds = RandomBounds(max_states=1, simple=True)
        for seed in range(50):
            flags = classify(random_automaton(seed, bounds))
            self.assertTrue(flags.stateless and flags.simple)

    def test_invalid_bounds(self):
        with self.assertRaises(ValueError):
            RandomBounds(max_states=0)
        with self.assertRaises(ValueError):
            RandomBounds(alphabet=())


@pytest.mark.parametrize("meeting", [MeetingPolicy.CLOSURE, MeetingPolicy.STRICT])
def test_laws_hold(meeting):
    report = verify_laws(seeds=10, max_len=6, meeting=meeting)
    assert report.passed, report.render()
    assert len(report.lines()) == 7


def test_slices_are_consistent():
    for seed in range(30):
        m = random_automaton(seed)
        plain = language_slice(m, Mode.PLAIN, 6)
        assert plain == {w for w in plain if accepts(m, w)}
        assert language_slice(m, Mode.STRONG, 6) <= language_slice(m, Mode.WEAK, 6)


def test_laws_at_default_population():
    """50 автоматов на законы срезов, 500 на леммы ограниченных классов"""
    report = verify_laws()
    assert report.passed, report.render()
    checked = {r.name: r.checked for r in report.results}
    assert checked["weak_closure"] == 50
    assert checked["stateless_pumping"] == 500
    assert checked["f1_one_letter"] == 500


def test_slice_laws_use_engine_acceptance(monkeypatch):
    """Законы срезов опираются на weak_accepts/strong_accepts движка"""
    import wk_necklace.harness as harness

    monkeypatch.setattr(harness, "weak_accepts", lambda m, w, meeting=None: True)
    monkeypatch.setattr(harness, "strong_accepts", lambda m, w, meeting=None: True)
    report = verify_laws(seeds=10, max_len=5)
    results = {r.name: r for r in report.results}
    assert not results["weak_closure"].passed
    assert not results["strong_maximality"].passed


def test_stateless_pumping_checks_triple(monkeypatch):
    """{a, aa, aaaa}: удвоение проходит, утроение a → aaa нет"""
    import wk_necklace.harness as harness

    m = build_automaton(["a"], ["q", "f"], "q", ["f"], [
        ("q", "a", "_", "f"),
        ("q", "aa", "_", "f"),
        ("q", "aaaa", "_", "f"),
    ])
    monkeypatch.setattr(harness, "random_automaton", lambda seed, bounds=None: m)
    report = verify_laws(seeds=1, max_len=6)
    pumping = next(r for r in report.results if r.name == "stateless_pumping")
    assert "seed=0:a^3" in pumping.violations
    assert "seed=0:aa^3" in pumping.violations
    assert "seed=0:a^2" not in pumping.violations
