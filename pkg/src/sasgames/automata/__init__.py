from sasgames.automata.d2pw import (
    D2PW,
    DPW,
    load_automaton,
    parse_automaton,
    random_d2pw,
    serialize_automaton,
)
from sasgames.automata.lasso import accepts_word, lasso_accepts, word_lasso
from sasgames.automata.product import (
    ConjunctionDPW,
    ProductGame,
    RegisterLayout,
    build_conjunction_dpw,
    build_disjunction_dpw,
    lift_conjunction_game,
    offset,
)

__all__ = [
    "D2PW",
    "DPW",
    "ConjunctionDPW",
    "ProductGame",
    "RegisterLayout",
    "accepts_word",
    "build_conjunction_dpw",
    "build_disjunction_dpw",
    "lasso_accepts",
    "lift_conjunction_game",
    "load_automaton",
    "offset",
    "parse_automaton",
    "random_d2pw",
    "serialize_automaton",
    "word_lasso",
]
