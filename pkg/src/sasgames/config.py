"""
    Configuration objects.

Each section is a dataclass so it can serve as an omegaconf structured
schema; YAML presets under `configs/` are merged over these defaults by
`load_config`.
"""
from dataclasses import dataclass, field
from typing import List, Optional

from omegaconf import OmegaConf


@dataclass
class SolverConfig:
    """
    Args:
        memoize (bool): Cache the conjunction product per game.
        check_measure (bool): Fail if a recursive call does not decrease
            `(max sure priority, real vertex count)`.
    """

    memoize: bool = True
    check_measure: bool = True

    def validate(self) -> "SolverConfig":
        return self


@dataclass
class ScheduleConfig:
    """
    Phase lengths `N_i` of the counter strategy.

    Args:
        kind (str): `geometric` for `N_i = n0 * base**i`, `table` for
            explicit values (the last one doubles past the end).
        n0 (Optional[int]): First phase length; `None` means `4 * |V|`.
        base (int): Growth factor of the geometric schedule.
        table (Optional[List[int]]): Explicit phase lengths.
    """

    kind: str = "geometric"
    n0: Optional[int] = None
    base: int = 2
    table: Optional[List[int]] = None

    def validate(self) -> "ScheduleConfig":
        if self.kind not in ("geometric", "table"):
            raise ValueError(f"Unknown schedule kind '{self.kind}'")
        if self.kind == "geometric":
            if self.n0 is not None and self.n0 < 1:
                raise ValueError(f"n0 must be positive, got {self.n0}")
            if self.base < 1:
                raise ValueError(f"base must be positive, got {self.base}")
        else:
            if not self.table:
                raise ValueError("A table schedule needs at least one value")
            if any(n < 1 for n in self.table):
                raise ValueError(f"Phase lengths must be positive, got {self.table}")
        return self

    @classmethod
    def parse(cls, text: str) -> "ScheduleConfig":
        """Parse `geometric:<N0>,<base>` or `table:<n>,<n>,...`."""
        kind, _, args = text.partition(":")
        try:
            values = [int(x) for x in args.split(",") if x.strip()]
        except ValueError:
            raise ValueError(f"Malformed schedule '{text}'") from None
        if kind == "geometric":
            if len(values) not in (1, 2):
                raise ValueError(f"Malformed schedule '{text}'")
            base = values[1] if len(values) == 2 else 2
            return cls("geometric", values[0], base).validate()
        if kind == "table":
            return cls("table", table=values).validate()
        raise ValueError(f"Unknown schedule kind '{kind}'")


@dataclass
class SimulationConfig:
    seed: int = 0
    steps: int = 10_000
    runs: int = 1
    adversary: str = "random"
    jobs: int = 1

    def validate(self) -> "SimulationConfig":
        if self.seed < 0:
            raise ValueError(f"seed must be non-negative, got {self.seed}")
        if self.steps < 0 or self.runs < 1:
            raise ValueError(f"Need steps >= 0 and runs >= 1, got {self.steps}, {self.runs}")
        if self.jobs < 1:
            raise ValueError(f"jobs must be positive, got {self.jobs}")
        return self


@dataclass
class OracleConfig:
    """
    Bounds for brute-force oracles. Exceeding a bound is an error.

    Args:
        max_strategies (int): Largest number of memoryless strategies enumerated.
        max_states (int): Largest synchronized product explored.
        max_scc (int): Largest SCC whose closed subsets are enumerated as a
            cross-check of the refinement procedure.
        jobs (int): Worker threads for strategy enumeration.
    """

    max_strategies: int = 1 << 16
    max_states: int = 4096
    max_scc: int = 12
    jobs: int = 1

    def validate(self) -> "OracleConfig":
        for name in ("max_strategies", "max_states", "jobs"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")
        if self.max_scc < 0:
            raise ValueError(f"max_scc must be non-negative, got {self.max_scc}")
        return self


@dataclass
class AppConfig:
    solver: SolverConfig = field(default_factory=SolverConfig)
    schedule: ScheduleConfig = field(default_factory=ScheduleConfig)
    simulation: SimulationConfig = field(default_factory=SimulationConfig)
    oracle: OracleConfig = field(default_factory=OracleConfig)

    def validate(self) -> "AppConfig":
        self.solver.validate()
        self.schedule.validate()
        self.simulation.validate()
        self.oracle.validate()
        return self


def load_config(path: Optional[str] = None, overrides: Optional[List[str]] = None) -> AppConfig:
    """
    Load an `AppConfig` from an optional YAML file and dotlist overrides
    such as `oracle.max_states=512`.

    Raises:
        ValueError: If a value is out of range.
        omegaconf.errors.ValidationError: If a value has the wrong type.
    """
    merged = OmegaConf.structured(AppConfig)
    if path is not None:
        merged = OmegaConf.merge(merged, OmegaConf.load(path))
    if overrides:
        merged = OmegaConf.merge(merged, OmegaConf.from_dotlist(list(overrides)))
    config = OmegaConf.to_object(merged)
    return config.validate()
