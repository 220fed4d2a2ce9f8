from dataclasses import dataclass


@dataclass(frozen=True)
class Verdict:
    """Outcome of a check: truthy when accepted, otherwise carrying the first failure."""

    accepted: bool
    diagnostic: str = ""

    def __bool__(self) -> bool:
        return self.accepted

    def to_json(self):
        return {"accepted": self.accepted, "diagnostic": self.diagnostic}
