"""Congruences induced by deductive systems, quotient algebras, and element orders."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .algebra import Element, FiniteAlgebra, first_violation, powers, verify_qw
from .errors import FalsificationError, PreconditionError
from .gates import PARTITION_GATE, check_gate
from .structure import is_deductive_system, is_prime, is_strongly_maximal, is_weakly_linear
from .subsets import Subset, check_width


@dataclass(frozen=True)
class Partition:
    """Equivalence relation given by class labels, numbered by first occurrence."""

    class_of: tuple[int, ...]

    def __post_init__(self):
        if tuple(_canonical_labels(self.class_of)) != tuple(self.class_of):
            raise ValueError(f"labels {self.class_of} are not in first-occurrence form")

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "Partition":
        return cls(tuple(_canonical_labels(labels)))

    @classmethod
    def from_blocks(cls, n: int, blocks: Sequence[Sequence[int]]) -> "Partition":
        labels = [-1] * n
        for b, block in enumerate(blocks):
            for x in block:
                if labels[x] != -1:
                    raise ValueError(f"element {x} appears in two blocks")
                labels[x] = b
        if -1 in labels:
            raise ValueError("blocks do not cover the carrier")
        return cls.from_labels(labels)

    @classmethod
    def identity(cls, n: int) -> "Partition":
        return cls(tuple(range(n)))

    @classmethod
    def single(cls, n: int) -> "Partition":
        return cls((0,) * n)

    @property
    def n(self) -> int:
        return len(self.class_of)

    @property
    def k(self) -> int:
        return max(self.class_of) + 1 if self.class_of else 0

    def blocks(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for x, c in enumerate(self.class_of):
            out[c].append(x)
        return out

    def refines(self, other: "Partition") -> bool:
        """True if every class of ``self`` lies inside a class of ``other``."""
        seen: dict[int, int] = {}
        for a, b in zip(self.class_of, other.class_of):
            if seen.setdefault(a, b) != b:
                return False
        return True

    def labels(self) -> np.ndarray:
        return np.asarray(self.class_of, dtype=np.int64)


def _canonical_labels(labels: Sequence[int]) -> list[int]:
    remap: dict[int, int] = {}
    return [remap.setdefault(c, len(remap)) for c in labels]


# -- the relation induced by a subset -------------------------------------------


def congruence_relation(A: FiniteAlgebra, F: Subset) -> np.ndarray:
    """``R[x, y]`` iff some ``l`` quantum-dominates both with ``l -> x``, ``l -> y`` in F.

    Accepts any subset, so it doubles as the diagnostic for plain filters.
    """
    check_width(A, F)
    m = F.mask()
    # W[x, l]: x <=_Q l and l -> x in F
    W = (A.leq_q_table & m[A.arrow.T]).astype(np.int64)
    return (W @ W.T) > 0


def transitivity_failures(A: FiniteAlgebra, F: Subset) -> list[tuple[str, str, str]]:
    """Triples ``(x, y, z)`` with ``x ~ y``, ``y ~ z`` but not ``x ~ z``."""
    R = congruence_relation(A, F)
    bad = R[:, :, None] & R[None, :, :] & ~R[:, None, :]
    return [tuple(A.name(i) for i in t) for t in np.argwhere(bad)]


def congruence_from_ds(A: FiniteAlgebra, F: Subset) -> Partition:
    if not is_deductive_system(A, F):
        raise PreconditionError(f"{F.names(A)} is not a deductive system")
    R = congruence_relation(A, F)
    if not R.diagonal().all() or not (R == R.T).all():
        raise FalsificationError(f"relation induced by {F.names(A)} is not reflexive and symmetric")
    fails = transitivity_failures(A, F)
    if fails:
        raise FalsificationError(f"relation induced by {F.names(A)} is not transitive at {fails[0]}")
    labels = [int(np.argmax(R[x])) for x in range(A.n)]
    return Partition.from_labels(labels)


def equiv_characterizations(A: FiniteAlgebra, F: Subset, x: Element, y: Element) -> tuple[bool, bool, bool]:
    """Three independent tests of ``x ~_F y``: common dominator, matching residues, crossed bounds."""
    check_width(A, F)
    x, y = A.index(x), A.index(y)
    m = F.mask()
    T, LQ = A.arrow, A.leq_q_table
    lam = LQ[x] & LQ[y] & m[T[:, x]] & m[T[:, y]]
    fs = np.flatnonzero(m)
    ax = fs[LQ[x, fs]]
    by = fs[LQ[y, fs]]
    residues = (T[ax, x][:, None] == T[by, y][None, :]).any() if len(ax) and len(by) else False
    crossed = LQ[x, T[fs, y]].any() and LQ[y, T[fs, x]].any()
    return bool(lam.any()), bool(residues), bool(crossed)


def equiv_characterizations_agree(A: FiniteAlgebra, F: Subset, x: Element, y: Element) -> bool:
    if not is_deductive_system(A, F):
        raise PreconditionError(f"{F.names(A)} is not a deductive system")
    return len(set(equiv_characterizations(A, F, x, y))) == 1


# -- compatibility -----------------------------------------------------------------


def _compatible_binary(P: Partition, table: np.ndarray) -> tuple[int, int, int, int] | None:
    c = P.labels()
    reps = np.array([b[0] for b in P.blocks()])
    r = reps[c]
    C = c[table]
    w = first_violation(C == C[np.ix_(r, r)])
    if w is None:
        return None
    x, u = w
    return int(r[x]), int(r[u]), x, u


def is_congruence(A: FiniteAlgebra, P: Partition) -> bool:
    """Arrow-compatibility over all pairs of related pairs."""
    if P.n != A.n:
        raise PreconditionError(f"partition of {P.n} elements used with an algebra of size {A.n}")
    if _compatible_binary(P, A.arrow) is not None:
        return False
    c = P.labels()
    reps = np.array([b[0] for b in P.blocks()])
    s = A.star_vec
    derived_ok = (c[s] == c[s[reps[c]]]).all() and all(
        _compatible_binary(P, t) is None for t in (A.odot_table, A.meet_table, A.join_table)
    )
    if not derived_ok:
        raise FalsificationError("arrow-compatible partition is not compatible with a derived operation")
    return True


def ds_from_congruence(A: FiniteAlgebra, P: Partition) -> Subset:
    """The class of 1."""
    if not is_congruence(A, P):
        raise PreconditionError("partition is not a congruence")
    one_class = P.class_of[A.one]
    F = Subset.of(A, [x for x in range(A.n) if P.class_of[x] == one_class])
    if A.is_qw and not is_deductive_system(A, F):
        raise FalsificationError(f"class of 1 {F.names(A)} is not a deductive system")
    return F


# -- quotients ---------------------------------------------------------------------


@dataclass(frozen=True)
class QuotientAlgebra:
    algebra: FiniteAlgebra
    partition: Partition
    members: tuple[tuple[str, ...], ...]

    def class_map(self, parent: FiniteAlgebra) -> dict[str, str]:
        return {parent.name(x): self.algebra.name(c) for x, c in enumerate(self.partition.class_of)}


def quotient_by_partition(A: FiniteAlgebra, P: Partition) -> QuotientAlgebra:
    """Quotient by an arbitrary congruence, checking well-definedness on every pair."""
    bad = _compatible_binary(P, A.arrow) if P.n == A.n else (0, 0, 0, 0)
    if bad is not None:
        raise PreconditionError("partition is not a congruence")
    blocks = P.blocks()
    members = tuple(tuple(A.name(x) for x in b) for b in blocks)
    names = ["[" + min(ms) + "]" for ms in members]
    c = P.labels()
    reps = np.array([b[0] for b in blocks])
    table = c[A.arrow[np.ix_(reps, reps)]]
    Q = FiniteAlgebra(names, table, int(c[A.zero]), int(c[A.one]))
    return QuotientAlgebra(Q, P, members)


def quotient(A: FiniteAlgebra, F: Subset) -> QuotientAlgebra:
    """The quotient by the congruence a deductive system induces."""
    P = congruence_from_ds(A, F)
    if _compatible_binary(P, A.arrow) is not None:
        raise FalsificationError(f"congruence induced by {F.names(A)} is not compatible with the arrow")
    Q = quotient_by_partition(A, P)
    one_class = [x for x in range(A.n) if P.class_of[x] == P.class_of[A.one]]
    if Subset.of(A, one_class) != F:
        raise FalsificationError(f"class of 1 differs from {F.names(A)}")
    if A.is_qw and not verify_qw(Q.algebra).is_qw:
        raise FalsificationError(f"quotient by {F.names(A)} is not a QW algebra")
    return Q


# -- orders -------------------------------------------------------------------------


def element_order(A: FiniteAlgebra, x: Element) -> int | float:
    """Least ``k >= 1`` with ``x^k = 0``, or ``math.inf``."""
    for k, p in enumerate(powers(A, x), start=1):
        if p == A.zero:
            return k
    return math.inf


def is_locally_finite(A: FiniteAlgebra) -> bool:
    return all(element_order(A, x) < math.inf for x in range(A.n) if x != A.one)


# -- equivalence checks on concrete instances ------------------------------------------


@dataclass(frozen=True)
class EquivalenceCheck:
    """Both sides of an equivalence evaluated independently."""

    name: str
    lhs: bool
    rhs: bool
    evidence: dict = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return self.lhs == self.rhs

    def __bool__(self) -> bool:
        return self.agree

    def to_dict(self) -> dict:
        return {"name": self.name, "lhs": self.lhs, "rhs": self.rhs, "agree": self.agree, "evidence": self.evidence}


def _orders(Q: FiniteAlgebra) -> dict[str, int | None]:
    out = {}
    for x in range(Q.n):
        o = element_order(Q, x)
        out[Q.name(x)] = None if o == math.inf else int(o)
    return out


def check_strongly_maximal_iff_locally_finite(A: FiniteAlgebra, F: Subset) -> EquivalenceCheck:
    """Strong maximality of ``F`` against local finiteness of the quotient by ``F``."""
    if not is_deductive_system(A, F):
        raise PreconditionError(f"{F.names(A)} is not a deductive system")
    sm = is_strongly_maximal(A, F)
    Q = quotient(A, F).algebra
    lf = is_locally_finite(Q)
    evidence = {
        "ds": F.names(A),
        "strongly_maximal_witness": list(sm.witness) if sm.witness else None,
        "quotient_orders": _orders(Q),
    }
    return EquivalenceCheck("strongly_maximal_iff_quotient_locally_finite", bool(sm), lf, evidence)


def check_prime_iff_weakly_linear(A: FiniteAlgebra, F: Subset) -> EquivalenceCheck:
    """Primality of ``F`` against weak linearity of the quotient by ``F``."""
    if not is_deductive_system(A, F):
        raise PreconditionError(f"{F.names(A)} is not a deductive system")
    pr = is_prime(A, F)
    Q = quotient(A, F).algebra
    wl = is_weakly_linear(Q)
    evidence = {
        "ds": F.names(A),
        "prime_witness": list(pr.witness) if pr.witness else None,
        "quotient_linearity_witness": list(wl.witness) if wl.witness else None,
    }
    return EquivalenceCheck("prime_iff_quotient_weakly_linear", bool(pr), bool(wl), evidence)


# -- brute-force congruence enumeration -------------------------------------------------


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """All set partitions of ``range(n)`` as restricted growth strings."""
    if n == 0:
        yield Partition(())
        return
    labels = [0] * n

    def rec(i: int, k: int):
        if i == n:
            yield Partition(tuple(labels))
            return
        for c in range(k + 1):
            labels[i] = c
            yield from rec(i + 1, max(k, c + 1))

    labels[0] = 0
    yield from rec(1, 1)


def enumerate_congruences(A: FiniteAlgebra, override: bool | None = None) -> list[Partition]:
    check_gate(A.n, PARTITION_GATE, "partition enumeration", override)
    return [P for P in enumerate_partitions(A.n) if is_congruence(A, P)]


@dataclass(frozen=True)
class RoundTrip:
    congruence: Partition
    ds: Subset
    induced: Partition

    @property
    def relation(self) -> str:
        if self.induced == self.congruence:
            return "equal"
        if self.induced.refines(self.congruence):
            return "refines"
        return "other"


def congruence_roundtrip(A: FiniteAlgebra, override: bool | None = None) -> list[RoundTrip]:
    """For each congruence: its class of 1, and the congruence that class induces."""
    out = []
    for P in enumerate_congruences(A, override):
        F = ds_from_congruence(A, P)
        out.append(RoundTrip(P, F, congruence_from_ds(A, F)))
    return out
