from sasgames.solvers.almost_sure import AlmostSureResult, as_reach, solve_as_parity
from sasgames.solvers.attractors import (
    AttractorResult,
    attract,
    pos_attractor,
    pos_pre,
    sure_attractor,
    sure_pre,
)
from sasgames.solvers.mdp import mdp_as_parity, mdp_pos_parity, mec_decomposition
from sasgames.solvers.sas import DerivationTrace, SasResult, TraceNode, solve_sas
from sasgames.solvers.zielonka import ParityResult, solve_parity_zielonka

__all__ = [
    "AlmostSureResult",
    "AttractorResult",
    "DerivationTrace",
    "ParityResult",
    "SasResult",
    "TraceNode",
    "as_reach",
    "attract",
    "mdp_as_parity",
    "mdp_pos_parity",
    "mec_decomposition",
    "pos_attractor",
    "pos_pre",
    "solve_as_parity",
    "solve_parity_zielonka",
    "solve_sas",
    "sure_attractor",
    "sure_pre",
]
