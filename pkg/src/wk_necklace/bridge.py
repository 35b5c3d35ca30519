"""
Мост между линейными грамматиками и sensing 5'→3' WK автоматами

grammar_to_wk: состояние на каждый нетерминал плюс новое финальное состояние f;
wk_to_grammar: нетерминал X_q на каждое состояние.
Оба преобразования сохраняют язык (проверяется ограниченным перебором).
"""
import logging
from typing import List

from wk_necklace.automaton import Transition, WKAutomaton, fresh_name
from wk_necklace.grammar import LinearGrammar, Production, grammar_summary

logger = logging.getLogger(__name__)

FINAL_STATE = "f"
NONTERMINAL_PREFIX = "X_"


def grammar_to_wk(g: LinearGrammar) -> WKAutomaton:
    """
    Автомат, принимающий L(g)

    A → uBv  дает переход (A, u, v) → B
    A → u    дает переход (A, u, λ) → f

    Цепные продукции A → B превращаются в λλ-переходы, A → λ - в
    λλ-переход в f, который срабатывает уже после встречи головок.

    Args:
        g: линейная грамматика

    Returns:
        WKAutomaton с начальным состоянием g.start и финальным {f}
    """
    final = fresh_name(FINAL_STATE, g.nonterminals)
    transitions: List[Transition] = []
    seen = set()
    for p in g.productions:
        if p.is_terminal:
            t = Transition(p.head, p.left, "", final)
        else:
            t = Transition(p.head, p.left, p.right, p.body)
        if t not in seen:
            seen.add(t)
            transitions.append(t)

    m = WKAutomaton(
        alphabet=g.terminals,
        states=g.nonterminals + (final,),
        initial=g.start,
        finals=(final,),
        transitions=tuple(transitions),
    )
    logger.info(f"Грамматика ({grammar_summary(g)}) → автомат с {len(m.states)} состояниями")
    return m


def wk_to_grammar(m: WKAutomaton) -> LinearGrammar:
    """
    Линейная грамматика с L(g) = L(m)

    (q, u, v) → q'  дает X_q → u X_q' v,
    каждое финальное q дает X_q → λ.
    """
    name = {q: f"{NONTERMINAL_PREFIX}{q}" for q in m.states}
    productions = [
        Production(name[t.source], t.left_read, name[t.target], t.right_read)
        for t in m.transitions
    ]
    productions.extend(Production(name[q], "") for q in m.finals)
    g = LinearGrammar(
        nonterminals=tuple(name[q] for q in m.states),
        terminals=m.alphabet,
        start=name[m.initial],
        productions=tuple(productions),
    )
    logger.info(f"Автомат → грамматика ({grammar_summary(g)})")
    return g
