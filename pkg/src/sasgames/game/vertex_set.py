"""
    Bitset-style sets of vertex ids over a fixed universe `[0, n)`.
"""
from typing import Iterable, Iterator, List

import numpy as np


class VertexSet:
    """
    Immutable set of vertex ids backed by a boolean numpy mask.

    Two sets can only be combined when they share the same universe size.
    Iteration always yields ids in ascending order.

    Args:
        mask (Iterable[bool]): Membership flag per vertex id.
    """

    __slots__ = ("_mask",)

    def __init__(self, mask: Iterable[bool]):
        arr = np.array(mask, dtype=bool)
        if arr.ndim != 1:
            raise ValueError(f"Expected a 1-d mask, got shape {arr.shape}")
        arr.setflags(write=False)
        self._mask = arr

    @classmethod
    def empty(cls, n: int) -> "VertexSet":
        return cls(np.zeros(n, dtype=bool))

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(np.ones(n, dtype=bool))

    @classmethod
    def from_ids(cls, n: int, ids: Iterable[int]) -> "VertexSet":
        mask = np.zeros(n, dtype=bool)
        for v in ids:
            if not 0 <= v < n:
                raise ValueError(f"Vertex {v} outside universe of size {n}")
            mask[v] = True
        return cls(mask)

    @property
    def n(self) -> int:
        """Size of the universe."""
        return int(self._mask.shape[0])

    @property
    def mask(self) -> np.ndarray:
        """Read-only boolean mask."""
        return self._mask

    def _coerce(self, other: "VertexSet") -> np.ndarray:
        if not isinstance(other, VertexSet):
            raise TypeError(f"Expected a VertexSet, got {type(other).__name__}")
        if other.n != self.n:
            raise ValueError(
                f"Cannot combine vertex sets over universes {self.n} and {other.n}"
            )
        return other._mask

    def __contains__(self, v: object) -> bool:
        return isinstance(v, (int, np.integer)) and 0 <= v < self.n and bool(self._mask[v])

    def __iter__(self) -> Iterator[int]:
        return iter(np.flatnonzero(self._mask).tolist())

    def __len__(self) -> int:
        return int(np.count_nonzero(self._mask))

    def __bool__(self) -> bool:
        return bool(self._mask.any())

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self._mask | self._coerce(other))

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self._mask & self._coerce(other))

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self._mask & ~self._coerce(other))

    def __invert__(self) -> "VertexSet":
        return VertexSet(~self._mask)

    def __le__(self, other: "VertexSet") -> bool:
        return not bool((self._mask & ~self._coerce(other)).any())

    def issubset(self, other: "VertexSet") -> bool:
        return self <= other

    def isdisjoint(self, other: "VertexSet") -> bool:
        return not bool((self._mask & self._coerce(other)).any())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self._mask, other._mask))

    def __hash__(self) -> int:
        return hash((self.n, self._mask.tobytes()))

    def to_list(self) -> List[int]:
        return list(self)

    def __repr__(self) -> str:
        return f"VertexSet(n={self.n}, {self.to_list()})"
