"""Fixed-width bit-vector subsets of a finite carrier."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .algebra import Element, FiniteAlgebra
from .errors import WidthMismatchError


@dataclass(frozen=True, order=True)
class Subset:
    """Bit ``i`` of ``bits`` is set iff element ``i`` belongs to the subset.

    Ordering compares ``bits`` first, which is the canonical ascending order
    used for every enumeration result.
    """

    bits: int
    width: int

    def __post_init__(self):
        if self.width < 0 or self.bits < 0 or self.bits >> self.width:
            raise ValueError(f"bits {self.bits:#x} do not fit width {self.width}")

    @classmethod
    def of(cls, A: FiniteAlgebra, elements: Iterable[Element]) -> "Subset":
        bits = 0
        for x in elements:
            bits |= 1 << A.index(x)
        return cls(bits, A.n)

    @classmethod
    def from_mask(cls, mask) -> "Subset":
        mask = np.asarray(mask, dtype=bool)
        return cls(int(sum(1 << int(i) for i in np.flatnonzero(mask))), len(mask))

    @classmethod
    def full(cls, n: int) -> "Subset":
        return cls((1 << n) - 1, n)

    @classmethod
    def empty(cls, n: int) -> "Subset":
        return cls(0, n)

    def __contains__(self, i: int) -> bool:
        return bool(self.bits >> i & 1)

    def __iter__(self) -> Iterator[int]:
        return (i for i in range(self.width) if self.bits >> i & 1)

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __repr__(self) -> str:
        return f"Subset({sorted(self)}, width={self.width})"

    def _same(self, other: "Subset") -> None:
        if self.width != other.width:
            raise WidthMismatchError(f"subset widths differ: {self.width} vs {other.width}")

    def __or__(self, other: "Subset") -> "Subset":
        self._same(other)
        return Subset(self.bits | other.bits, self.width)

    def __and__(self, other: "Subset") -> "Subset":
        self._same(other)
        return Subset(self.bits & other.bits, self.width)

    def __sub__(self, other: "Subset") -> "Subset":
        self._same(other)
        return Subset(self.bits & ~other.bits, self.width)

    def issubset(self, other: "Subset") -> bool:
        self._same(other)
        return self.bits & ~other.bits == 0

    def is_full(self) -> bool:
        return self.bits == (1 << self.width) - 1

    def mask(self) -> np.ndarray:
        return (np.right_shift(self.bits, np.arange(self.width, dtype=object)) & 1).astype(bool)

    def names(self, A: FiniteAlgebra) -> list[str]:
        check_width(A, self)
        return [A.name(i) for i in self]


def check_width(A: FiniteAlgebra, F: Subset) -> None:
    if F.width != A.n:
        raise WidthMismatchError(f"subset of width {F.width} used with an algebra of size {A.n}")


@dataclass(frozen=True)
class Verdict:
    """A boolean answer plus the evidence for it.

    ``witness`` is ``None`` when the predicate holds; otherwise it starts with
    a tag naming the violated condition followed by element names.
    """

    holds: bool
    witness: tuple[str, ...] | None = None

    def __bool__(self) -> bool:
        return self.holds
