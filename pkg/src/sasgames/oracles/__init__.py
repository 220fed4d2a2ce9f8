from sasgames.oracles.equivalence import EquivalenceResult, dpw_equiv_oracle
from sasgames.oracles.fixed_strategy import check_fixed_strategy_sas, strategy_product
from sasgames.oracles.regions import (
    memoryless_strategies,
    oracle_as_parity_region,
    oracle_sas_region,
)

__all__ = [
    "EquivalenceResult",
    "check_fixed_strategy_sas",
    "dpw_equiv_oracle",
    "memoryless_strategies",
    "oracle_as_parity_region",
    "oracle_sas_region",
    "strategy_product",
]
