"""Finite implication algebras and the axiom classes they may belong to.

A finite algebra is stored as an ``n x n`` integer table ``arrow`` with
``arrow[i, j] = i -> j``, together with the indices of the constants 0 and 1.
Every derived operation (star, join, meet, product) and both order relations
are materialised once as numpy tables, so the universally quantified axiom
checks are single broadcast comparisons over ``n**2`` or ``n**3`` tuples.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence, Union

import numpy as np

from .errors import AlgebraError, NotQWAlgebraError

Element = Union[int, str]

PASS = "pass"
FAIL = "fail"
NOT_EVALUATED = "not evaluated"

BE_TAGS = ("be_reflexive", "be_top", "be_unit", "be_exchange")
AXIOM_TAGS = BE_TAGS + ("bounded", "involutive", "qw")


class FiniteAlgebra:
    """An algebra ``(X, ->, 0, 1)`` on ``n`` named elements.

    Instances are immutable: the table is copied into a read-only array and
    every derived table is computed lazily and cached.
    """

    def __init__(self, names: Sequence[str], arrow, zero: int, one: int):
        names = tuple(names)
        n = len(names)
        if n < 1:
            raise AlgebraError("an algebra needs at least one element")
        for nm in names:
            if (
                not isinstance(nm, str)
                or not nm
                or not nm.isprintable()
                or any(ch.isspace() or ch in "#," for ch in nm)
            ):
                raise AlgebraError(f"invalid element name {nm!r}")
        if len(set(names)) != n:
            raise AlgebraError("element names must be distinct")
        table = np.array(arrow, dtype=np.int64)
        if table.shape != (n, n):
            raise AlgebraError(f"arrow table has shape {table.shape}, expected {(n, n)}")
        if table.size and (table.min() < 0 or table.max() >= n):
            raise AlgebraError("arrow table entry out of range")
        for c in (zero, one):
            if not (0 <= int(c) < n):
                raise AlgebraError(f"constant index {c} out of range")
        zero, one = int(zero), int(one)
        if zero == one and n > 1:
            raise AlgebraError("zero and one coincide in a non-degenerate algebra")
        table.setflags(write=False)
        self._names = names
        self._arrow = table
        self._zero = zero
        self._one = one
        self._index = {nm: i for i, nm in enumerate(names)}

    @classmethod
    def from_rows(cls, names: Sequence[str], rows: Iterable[Sequence[str]], zero: str, one: str) -> "FiniteAlgebra":
        """Build from a table written with element names, as in the text format."""
        names = tuple(names)
        index = {nm: i for i, nm in enumerate(names)}
        try:
            table = [[index[v] for v in row] for row in rows]
            return cls(names, table, index[zero], index[one])
        except KeyError as exc:
            raise AlgebraError(f"unknown element name {exc.args[0]!r}") from None

    # -- basic accessors -------------------------------------------------

    @property
    def names(self) -> tuple[str, ...]:
        return self._names

    @property
    def arrow(self) -> np.ndarray:
        return self._arrow

    @property
    def zero(self) -> int:
        return self._zero

    @property
    def one(self) -> int:
        return self._one

    @property
    def n(self) -> int:
        return len(self._names)

    def __len__(self) -> int:
        return self.n

    def index(self, x: Element) -> int:
        """Resolve an element given by index or by name."""
        if isinstance(x, (int, np.integer)):
            if not 0 <= x < self.n:
                raise AlgebraError(f"element index {x} out of range for n={self.n}")
            return int(x)
        try:
            return self._index[x]
        except KeyError:
            raise AlgebraError(f"unknown element {x!r}") from None

    def name(self, i: int) -> str:
        return self._names[i]

    def rows(self) -> list[list[str]]:
        return [[self._names[v] for v in row] for row in self._arrow.tolist()]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteAlgebra):
            return NotImplemented
        return (
            self._names == other._names
            and self._zero == other._zero
            and self._one == other._one
            and np.array_equal(self._arrow, other._arrow)
        )

    def __hash__(self) -> int:
        return hash((self._names, self._zero, self._one, self._arrow.tobytes()))

    def __repr__(self) -> str:
        return f"FiniteAlgebra(n={self.n}, names={list(self._names)})"

    # -- derived tables --------------------------------------------------

    @cached_property
    def star_vec(self) -> np.ndarray:
        return self._ro(self._arrow[:, self._zero])

    @cached_property
    def join_table(self) -> np.ndarray:
        # (x -> y) -> y
        return self._ro(self._arrow[self._arrow, np.arange(self.n)[None, :]])

    @cached_property
    def meet_table(self) -> np.ndarray:
        # ((x* -> y*) -> y*)*  ==  (x* join y*)*
        s = self.star_vec
        return self._ro(s[self.join_table[np.ix_(s, s)]])

    @cached_property
    def odot_table(self) -> np.ndarray:
        # (x -> y*)*
        s = self.star_vec
        return self._ro(s[self._arrow[:, s]])

    @cached_property
    def leq_table(self) -> np.ndarray:
        return self._ro(self._arrow == self._one)

    @cached_property
    def leq_q_table(self) -> np.ndarray:
        return self._ro(self.meet_table == np.arange(self.n)[:, None])

    @cached_property
    def axioms(self) -> "AxiomReport":
        """Cached :func:`verify_qw` report."""
        return verify_qw(self)

    @property
    def is_qw(self) -> bool:
        return self.axioms.is_qw

    @staticmethod
    def _ro(a: np.ndarray) -> np.ndarray:
        a.setflags(write=False)
        return a

    # -- constructions ---------------------------------------------------

    def relabel(self, perm: Sequence[int], names: Sequence[str] | None = None) -> "FiniteAlgebra":
        """Transport the structure along ``perm`` (old index -> new index)."""
        p = np.asarray(perm, dtype=np.int64)
        if sorted(p.tolist()) != list(range(self.n)):
            raise AlgebraError("relabelling is not a permutation")
        inv = np.argsort(p)
        table = p[self._arrow[np.ix_(inv, inv)]]
        if names is None:
            names = [self._names[i] for i in inv]
        return FiniteAlgebra(names, table, int(p[self._zero]), int(p[self._one]))


# -- element-wise operations -----------------------------------------------


def star(A: FiniteAlgebra, x: Element) -> int:
    return int(A.arrow[A.index(x), A.zero])


def join(A: FiniteAlgebra, x: Element, y: Element) -> int:
    return int(A.join_table[A.index(x), A.index(y)])


def meet(A: FiniteAlgebra, x: Element, y: Element) -> int:
    return int(A.meet_table[A.index(x), A.index(y)])


def odot(A: FiniteAlgebra, x: Element, y: Element) -> int:
    return int(A.odot_table[A.index(x), A.index(y)])


def leq(A: FiniteAlgebra, x: Element, y: Element) -> bool:
    return bool(A.leq_table[A.index(x), A.index(y)])


def leq_q(A: FiniteAlgebra, x: Element, y: Element) -> bool:
    return bool(A.leq_q_table[A.index(x), A.index(y)])


def powers(A: FiniteAlgebra, x: Element) -> list[int]:
    """Distinct product powers ``x, x.x, x.x.x, ...`` up to the first repeat.

    The sequence is determined by its last term, so once a value recurs it
    is periodic from there on and the returned list covers every power.
    """
    x = A.index(x)
    seen: dict[int, int] = {}
    out = []
    p = x
    while p not in seen:
        seen[p] = len(out)
        out.append(p)
        p = int(A.odot_table[p, x])
    return out


# -- axiom checks ------------------------------------------------------------


@dataclass(frozen=True)
class AxiomReport:
    """Verdicts for every axiom class, in check order.

    ``status`` maps each tag to ``"pass"``, ``"fail"`` or ``"not evaluated"``;
    a tag is not evaluated when an earlier class it depends on failed.
    ``witnesses`` holds the lexicographically first violating tuple (as
    element names) for every failed tag.
    """

    status: dict[str, str]
    witnesses: dict[str, tuple[str, ...]] = field(default_factory=dict)
    is_commutative: bool = False
    is_wajsberg: bool = False
    qw_split_agrees: bool | None = None

    @property
    def is_be(self) -> bool:
        return all(self.status[t] == PASS for t in BE_TAGS)

    @property
    def is_bounded(self) -> bool:
        return self.status["bounded"] == PASS

    @property
    def is_involutive(self) -> bool:
        return self.status["involutive"] == PASS

    @property
    def is_qw(self) -> bool:
        return self.status["qw"] == PASS

    def to_dict(self) -> dict:
        return {
            "status": dict(self.status),
            "witnesses": {k: list(v) for k, v in self.witnesses.items()},
            "is_be": self.is_be,
            "is_bounded": self.is_bounded,
            "is_involutive": self.is_involutive,
            "is_qw": self.is_qw,
            "is_commutative": self.is_commutative,
            "is_wajsberg": self.is_wajsberg,
            "qw_split_agrees": self.qw_split_agrees,
        }


def _grid(n: int, k: int) -> tuple[np.ndarray, ...]:
    ar = np.arange(n)
    return tuple(ar.reshape([n if i == j else 1 for i in range(k)]) for j in range(k))


def first_violation(ok: np.ndarray) -> tuple[int, ...] | None:
    """Index tuple of the first ``False`` entry in C order, or None."""
    bad = np.argwhere(~np.asarray(ok, dtype=bool))
    if len(bad) == 0:
        return None
    return tuple(int(i) for i in bad[0])


def _be_checks(A: FiniteAlgebra) -> dict[str, np.ndarray]:
    T, one = A.arrow, A.one
    n = A.n
    x = np.arange(n)
    X, Y, Z = _grid(n, 3)
    return {
        "be_reflexive": T[x, x] == one,
        "be_top": T[:, one] == one,
        "be_unit": T[one, :] == x,
        "be_exchange": T[X, T[Y, Z]] == T[Y, T[X, Z]],
    }


def qw_tables(A: FiniteAlgebra) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Truth arrays for the QW axiom and its two-part split, over all tuples."""
    T, M = A.arrow, A.meet_table
    X, Y, Z = _grid(A.n, 3)
    rhs = M[T[X, Y], T[X, Z]]
    qw = T[X, M[M[X, Y], M[Z, X]]] == rhs
    X2, Y2 = _grid(A.n, 2)
    absorb = T[X2, M[X2, Y2]] == T[X2, Y2]
    distrib = T[X, M[Y, M[Z, X]]] == rhs
    return qw, absorb, distrib


def _check(A: FiniteAlgebra, through_qw: bool) -> AxiomReport:
    status: dict[str, str] = {t: NOT_EVALUATED for t in AXIOM_TAGS}
    wit: dict[str, tuple[str, ...]] = {}

    def record(tag: str, ok: np.ndarray) -> bool:
        w = first_violation(ok)
        if w is None:
            status[tag] = PASS
            return True
        status[tag] = FAIL
        wit[tag] = tuple(A.name(i) for i in w)
        return False

    be_ok = all([record(t, ok) for t, ok in _be_checks(A).items()])
    commutative = False
    if be_ok:
        commutative = bool(np.array_equal(A.join_table, A.join_table.T))
    if not be_ok or not record("bounded", A.arrow[A.zero, :] == A.one):
        return AxiomReport(status, wit, commutative)
    s = A.star_vec
    if not record("involutive", s[s] == np.arange(A.n)) or not through_qw:
        return AxiomReport(status, wit, commutative)
    qw, absorb, distrib = qw_tables(A)
    is_qw = record("qw", qw)
    agrees = is_qw == bool(absorb.all() and distrib.all())
    wajsberg = is_qw and bool(np.array_equal(A.leq_table, A.leq_q_table))
    return AxiomReport(status, wit, commutative, wajsberg, agrees)


def verify_be(A: FiniteAlgebra) -> AxiomReport:
    """BE axioms, boundedness and involution; the QW axiom is left unevaluated."""
    return _check(A, through_qw=False)


def verify_qw(A: FiniteAlgebra) -> AxiomReport:
    """Full axiom report, evaluated in the order BE, bounded, involutive, QW."""
    return _check(A, through_qw=True)


def is_commutative(A: FiniteAlgebra) -> bool:
    """True iff ``(x -> y) -> y == (y -> x) -> x`` for every pair."""
    return bool(np.array_equal(A.join_table, A.join_table.T))


def is_wajsberg(A: FiniteAlgebra) -> bool:
    """A QW algebra is Wajsberg iff its two orders coincide."""
    require_qw(A)
    return bool(np.array_equal(A.leq_table, A.leq_q_table))


def require_qw(A: FiniteAlgebra) -> None:
    rep = A.axioms
    if not rep.is_qw:
        failed = next(t for t in AXIOM_TAGS if rep.status[t] == FAIL)
        raise NotQWAlgebraError(f"not a QW algebra: {failed} fails at {rep.witnesses[failed]}")


def direct_product(A: FiniteAlgebra, B: FiniteAlgebra) -> FiniteAlgebra:
    """Coordinatewise product; element ``(a, b)`` is named ``a.b``."""
    na, nb = A.n, B.n
    names = [f"{a}.{b}" for a in A.names for b in B.names]
    ia = np.repeat(np.arange(na), nb)
    ib = np.tile(np.arange(nb), na)
    ta = A.arrow[np.ix_(ia, ia)]
    tb = B.arrow[np.ix_(ib, ib)]
    table = ta * nb + tb
    return FiniteAlgebra(names, table, A.zero * nb + B.zero, A.one * nb + B.one)
