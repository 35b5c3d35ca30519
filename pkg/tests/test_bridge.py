"""
Тесты линейных грамматик и преобразований грамматика ↔ автомат
"""
import unittest

from wk_necklace.automaton import AutomatonError
from wk_necklace.bridge import grammar_to_wk, wk_to_grammar
from wk_necklace.engine import Mode, all_words, plain_slice
from wk_necklace.fixtures import GRAMMARS, automaton, grammar_automaton
from wk_necklace.formats import parse_grammar
from wk_necklace.grammar import LinearGrammar, Production, derive_bounded, generates
from wk_necklace.harness import compare, language_slice, random_automaton
from wk_necklace.necklace import cyclic_closure


class TestGrammar(unittest.TestCase):
    """Ограниченный вывод и принадлежность"""

    def setUp(self):
        self.balanced = parse_grammar(GRAMMARS["balanced"])

    def test_derive_balanced(self):
        self.assertEqual(
            derive_bounded(self.balanced, 8),
            {"", "01", "0011", "000111", "00001111"},
        )

    def test_generates(self):
        self.assertTrue(generates(self.balanced, "0011"))
        self.assertFalse(generates(self.balanced, "0101"))
        self.assertTrue(generates(self.balanced, ""))

    def test_generates_agrees_with_derivation(self):
        g = parse_grammar(GRAMMARS["gap_pair"])
        derived = derive_bounded(g, 10)
        for w in all_words(g.terminals, 10):
            self.assertEqual(generates(g, w), w in derived, w)

    def test_unit_productions(self):
        g = parse_grammar("S -> A\nA -> S | 0 A | _\n")
        self.assertEqual(derive_bounded(g, 3), {"", "0", "00", "000"})
        self.assertTrue(generates(g, "00"))

    def test_literal_gap_pair_also_generates_11(self):
        g = parse_grammar(GRAMMARS["gap_pair_literal"])
        self.assertIn("11", derive_bounded(g, 4))
        self.assertNotIn("11", derive_bounded(parse_grammar(GRAMMARS["gap_pair"]), 4))

    def test_ambiguous_nonterminal_rejected(self):
        with self.assertRaises(AutomatonError):
            LinearGrammar(("S", "a"), ("a",), "S", (Production("S", "a"),))


class TestGrammarToWK(unittest.TestCase):
    """grammar_to_wk"""

    def test_structure(self):
        m = grammar_to_wk(parse_grammar(GRAMMARS["gap_pair"]))
        self.assertEqual(m.states, ("S", "A", "f"))
        self.assertEqual(m.initial, "S")
        self.assertEqual(m.finals, ("f",))
        self.assertEqual(len(m.transitions), 3)

    def test_fresh_final_name(self):
        g = parse_grammar("f -> 0 f | _\n")
        m = grammar_to_wk(g)
        self.assertEqual(m.finals, ("f1",))
        self.assertEqual(plain_slice(m, 3), {"", "0", "00", "000"})

    def test_balanced_language(self):
        m = grammar_to_wk(parse_grammar(GRAMMARS["balanced"]))
        self.assertEqual(plain_slice(m, 8), {"", "01", "0011", "000111", "00001111"})

    def test_lambda_grammar(self):
        m = grammar_to_wk(parse_grammar("terminals: 0 1\nS -> _\n"))
        self.assertEqual(plain_slice(m, 3), {""})

    def test_gap_pair_weak_matches_oracle(self):
        verdict = compare(grammar_automaton("gap_pair"), Mode.WEAK, "O8", 10)
        self.assertTrue(verdict.equivalent, verdict.counterexamples())

    def test_literal_gap_pair_differs_by_11(self):
        m = grammar_to_wk(parse_grammar(GRAMMARS["gap_pair_literal"]))
        verdict = compare(m, Mode.WEAK, "O8", 10)
        self.assertEqual(verdict.automaton_only, ("11",))
        self.assertEqual(verdict.oracle_only, ())

    def test_weak_slice_is_closure_of_grammar_slice(self):
        for name in ("gap_pair", "balanced"):
            g = parse_grammar(GRAMMARS[name])
            m = grammar_to_wk(g)
            self.assertEqual(language_slice(m, Mode.WEAK, 10), cyclic_closure(derive_bounded(g, 10)))


class TestWKToGrammar(unittest.TestCase):
    """wk_to_grammar"""

    def test_blocks01(self):
        g = wk_to_grammar(automaton("blocks01"))
        self.assertEqual(g.start, "X_q")
        self.assertEqual(set(g.productions), {
            Production("X_q", "0", "X_q", ""),
            Production("X_q", "", "X_q", "1"),
            Production("X_q", ""),
        })
        self.assertEqual(derive_bounded(g, 5), plain_slice(automaton("blocks01"), 5))

    def test_lambda_automaton(self):
        g = wk_to_grammar(automaton("empty"))
        self.assertEqual(derive_bounded(g, 4), {""})


def test_random_automata_round_trip():
    """Ограниченные языки совпадают в обе стороны на 25 случайных автоматах"""
    for seed in range(25):
        m = random_automaton(seed)
        g = wk_to_grammar(m)
        derived = derive_bounded(g, 10)
        assert derived == plain_slice(m, 10), seed
        assert plain_slice(grammar_to_wk(g), 10) == derived, seed


def structural_bound(g: LinearGrammar) -> int:
    """|N| · длина самой длинной продукции"""
    longest = max((len(p.left) + len(p.right) for p in g.productions), default=0)
    return max(1, len(g.nonterminals) * longest)


class TestEmptiness(unittest.TestCase):
    """grammar_to_wk сохраняет пустоту языка"""

    def test_empty_grammars(self):
        for text in (
            "S -> 0 S\n",
            "S -> 0 S\nB -> 1\n",
            "S -> 0 A\nA -> 1 A 0\n",
        ):
            g = parse_grammar(text)
            bound = structural_bound(g)
            self.assertEqual(derive_bounded(g, bound), set(), text)
            self.assertEqual(plain_slice(grammar_to_wk(g), bound), set(), text)

    def test_nonempty_grammars(self):
        grammars = [parse_grammar(GRAMMARS[name]) for name in ("balanced", "gap_pair", "lambda")]
        grammars.append(parse_grammar("S -> 0 S | 1\n"))
        for g in grammars:
            bound = structural_bound(g)
            derived = derive_bounded(g, bound)
            self.assertTrue(derived, str(g.productions))
            self.assertEqual(plain_slice(grammar_to_wk(g), bound), derived)
