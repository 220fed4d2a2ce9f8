"""
    Default objects shared by the library and the command line.
"""
from sasgames.config import OracleConfig, ScheduleConfig
from sasgames.strategies.counter import Schedule


def get_default_schedule(n_vertices: int) -> Schedule:
    """Phase lengths `4|V| * 2**i`."""
    return Schedule(ScheduleConfig(kind="geometric", n0=None, base=2), n_vertices)


def get_default_oracle_config() -> OracleConfig:
    return OracleConfig(max_strategies=1 << 16, max_states=4096, max_scc=12, jobs=1)
