"""Filters, deductive systems, ideals and the linearity diagnostics built on them.

Predicates take an algebra and a :class:`~qwalg.subsets.Subset` and return a
:class:`~qwalg.subsets.Verdict`.  Where two characterizations of the same
notion are known to agree on QW algebras, both are evaluated and a mismatch
raises :class:`~qwalg.errors.FalsificationError`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Literal

import numpy as np

from .algebra import Element, FiniteAlgebra, first_violation, powers
from .errors import FalsificationError, NotInFamilyError, PreconditionError
from .gates import SUBSET_GATE, check_gate, within
from .laws import LawResult
from .subsets import Subset, Verdict, check_width

Family = Literal["filters", "deductive_systems"]


def _first_pair(A: FiniteAlgebra, bad: np.ndarray) -> tuple[str, ...] | None:
    w = first_violation(~bad)
    return None if w is None else tuple(A.name(i) for i in w)


def _fail(tag: str, names: tuple[str, ...] | None = None) -> Verdict:
    return Verdict(False, (tag,) + (names or ()))


def _agree(A: FiniteAlgebra, what: str, *verdicts: bool) -> None:
    if A.is_qw and len(set(map(bool, verdicts))) > 1:
        raise FalsificationError(f"{what}: equivalent characterizations disagree ({[bool(v) for v in verdicts]})")


@lru_cache(maxsize=256)
def perspective_table(A: FiniteAlgebra) -> np.ndarray:
    """``P[x, y]`` iff some ``a`` has ``x <= a <= x`` and ``y <= a <= y``."""
    mutual = (A.leq_table & A.leq_table.T).astype(np.int64)
    P = (mutual @ mutual) > 0
    P.setflags(write=False)
    return P


def are_perspective(A: FiniteAlgebra, x: Element, y: Element) -> bool:
    return bool(perspective_table(A)[A.index(x), A.index(y)])


# -- filter-like conditions on a membership mask ------------------------------


def _product_closed(A, m):
    return m[:, None] & m[None, :] & ~m[A.odot_table]


def _filters_by_arrow(A, m):
    # x in F, y in X, y -> x not in F; reported as (x, y)
    return m[:, None] & ~m[A.arrow.T]


def _q_up(A, m):
    return m[:, None] & A.leq_q_table & ~m[None, :]


def _up(A, m):
    return m[:, None] & A.leq_table & ~m[None, :]


def _join_closed(A, m):
    return m[:, None] & ~m[A.join_table]


def _perspective_closed(A, m):
    return m[:, None] & perspective_table(A) & ~m[None, :]


def _check_all(A: FiniteAlgebra, m: np.ndarray, conds: list[tuple[str, Callable]]) -> Verdict:
    if not m.any():
        return _fail("empty")
    for tag, cond in conds:
        w = _first_pair(A, cond(A, m))
        if w is not None:
            return _fail(tag, w)
    return Verdict(True)


def is_filter(A: FiniteAlgebra, F: Subset) -> Verdict:
    """Non-empty, closed under the product, and ``y -> x`` in F for every x in F."""
    check_width(A, F)
    m = F.mask()
    v = _check_all(A, m, [("product_closed", _product_closed), ("arrow_closed", _filters_by_arrow)])
    alt = _check_all(A, m, [("product_closed", _product_closed), ("q_upward_closed", _q_up)])
    _agree(A, f"filter test on {F.names(A)}", v, alt)
    return v


def is_deductive_system(A: FiniteAlgebra, F: Subset) -> Verdict:
    """Contains 1 and is closed under modus ponens."""
    check_width(A, F)
    m = F.mask()
    if not m[A.one]:
        v = _fail("contains_one")
    else:
        bad = m[:, None] & m[A.arrow] & ~m[None, :]
        w = _first_pair(A, bad)
        v = Verdict(True) if w is None else _fail("modus_ponens", w)
    if A.is_qw:
        pc = ("product_closed", _product_closed)
        up = _check_all(A, m, [pc, ("upward_closed", _up)])
        jn = _check_all(A, m, [pc, ("join_closed", _join_closed)])
        ps = _check_all(A, m, [pc, ("arrow_closed", _filters_by_arrow), ("perspective_closed", _perspective_closed)])
        _agree(A, f"deductive-system test on {F.names(A)}", v, up, jn, ps)
    return v


def is_ideal(A: FiniteAlgebra, I: Subset) -> Verdict:
    """Non-empty, ``x* -> y`` in I for x, y in I, and downward closed for the quantum order."""
    check_width(A, I)
    m = I.mask()
    s = A.star_vec

    def star_arrow(A, m):
        return m[:, None] & m[None, :] & ~m[A.arrow[s, :]]

    def q_down(A, m):
        # y in I, x <=_Q y, x not in I; reported as (y, x)
        return m[:, None] & A.leq_q_table.T & ~m[None, :]

    return _check_all(A, m, [("star_arrow_closed", star_arrow), ("q_downward_closed", q_down)])


# -- closure operators ---------------------------------------------------------


def _horn_filter_closure(A: FiniteAlgebra, m: np.ndarray) -> np.ndarray:
    """Least superset of ``m`` satisfying the product and arrow conditions (empty stays empty)."""
    m = m.copy()
    while True:
        idx = np.flatnonzero(m)
        new = m.copy()
        new[A.odot_table[np.ix_(idx, idx)].ravel()] = True
        new[A.arrow[:, idx].ravel()] = True
        if (new == m).all():
            return m
        m = new


def _horn_ds_closure(A: FiniteAlgebra, m: np.ndarray) -> np.ndarray:
    m = m.copy()
    m[A.one] = True
    while True:
        # y joins when some x in F has x -> y in F
        new = m | (m[:, None] & m[A.arrow]).any(axis=0)
        if (new == m).all():
            return m
        m = new


def _next_closure(n: int, closure: Callable[[int], int]) -> list[int]:
    """All closed sets of a closure operator on ``range(n)``, as bit masks."""
    out = []
    a = closure(0)
    full = (1 << n) - 1
    out.append(a)
    while a != full:
        for i in range(n - 1, -1, -1):
            bit = 1 << i
            if a & bit:
                continue
            low = a & (bit - 1)
            b = closure(low | bit)
            if b & (bit - 1) == low:
                a = b
                out.append(a)
                break
        else:  # pragma: no cover - the loop always finds a successor
            break
    return out


def _bits_closure(A: FiniteAlgebra, fn) -> Callable[[int], int]:
    def cl(bits: int) -> int:
        return Subset.from_mask(fn(A, Subset(bits, A.n).mask())).bits
    return cl


@lru_cache(maxsize=256)
def _filters(A: FiniteAlgebra) -> tuple[Subset, ...]:
    closed = _next_closure(A.n, _bits_closure(A, _horn_filter_closure))
    return tuple(sorted(Subset(b, A.n) for b in closed if b))


@lru_cache(maxsize=256)
def _deductive_systems(A: FiniteAlgebra) -> tuple[Subset, ...]:
    closed = _next_closure(A.n, _bits_closure(A, _horn_ds_closure))
    return tuple(sorted(Subset(b, A.n) for b in closed))


def enumerate_filters(A: FiniteAlgebra, override: bool | None = None) -> list[Subset]:
    """Every filter of ``A`` in ascending bit-vector order."""
    check_gate(A.n, SUBSET_GATE, "filter enumeration", override)
    return list(_filters(A))


def enumerate_deductive_systems(A: FiniteAlgebra, override: bool | None = None) -> list[Subset]:
    """Every deductive system of ``A`` in ascending bit-vector order."""
    check_gate(A.n, SUBSET_GATE, "deductive-system enumeration", override)
    ds = list(_deductive_systems(A))
    if A.is_qw and not set(ds) <= set(_filters(A)):
        raise FalsificationError("a deductive system is not a filter")
    return ds


def generated_filter(A: FiniteAlgebra, Y: Subset) -> Subset:
    """Least filter containing ``Y``: the quantum-order upset of all finite products of members."""
    check_width(A, Y)
    if not Y.bits:
        raise PreconditionError("cannot generate a filter from the empty set")
    ys = list(Y)
    prods = set(ys)
    frontier = list(ys)
    while frontier:
        nxt = []
        for p in frontier:
            for y in ys:
                q = int(A.odot_table[p, y])
                if q not in prods:
                    prods.add(q)
                    nxt.append(q)
        frontier = nxt
    up = A.leq_q_table[sorted(prods)].any(axis=0)
    G = Subset.from_mask(up)
    if A.is_qw and within(A.n, SUBSET_GATE):
        meet = Subset.full(A.n)
        for F in _filters(A):
            if Y.issubset(F):
                meet = meet & F
        if meet != G:
            raise FalsificationError(f"generated filter of {Y.names(A)} disagrees with the intersection of filters")
    return G


def extend_filter(A: FiniteAlgebra, F: Subset, x: Element) -> Subset:
    """Least filter containing ``F`` and ``x``."""
    x = A.index(x)
    if not is_filter(A, F):
        raise PreconditionError(f"{F.names(A)} is not a filter")
    G = generated_filter(A, F | Subset.of(A, [x]))
    if A.is_qw:
        pw = powers(A, x)
        fs = list(F)
        prods = A.odot_table[np.ix_(fs, pw)].ravel()
        direct = Subset.from_mask(A.leq_q_table[prods].any(axis=0))
        if direct != G or (x in F and G != F):
            raise FalsificationError(f"extension of {F.names(A)} by {A.name(x)} is inconsistent")
    return G


# -- maximality and primality --------------------------------------------------


def _family(A: FiniteAlgebra, family: Family) -> tuple[Subset, ...]:
    if family == "filters":
        return _filters(A)
    if family == "deductive_systems":
        return _deductive_systems(A)
    raise ValueError(f"unknown family {family!r}")


def _product_witness_maximal(A: FiniteAlgebra, F: Subset) -> bool:
    """Every x outside F has some f in F and power x^k with f . x^k = 0."""
    if F.is_full():
        return False
    fs = list(F)
    for x in range(A.n):
        if x in F:
            continue
        pw = powers(A, x)
        if not (A.odot_table[np.ix_(fs, pw)] == A.zero).any():
            return False
    return True


def is_maximal(A: FiniteAlgebra, F: Subset, family: Family = "filters") -> Verdict:
    """Proper, and no proper member of ``family`` strictly contains ``F``."""
    check_width(A, F)
    member = is_filter(A, F) if family == "filters" else is_deductive_system(A, F)
    if not member:
        raise NotInFamilyError(f"{F.names(A)} is not in family {family}")
    if family == "filters" and not within(A.n, SUBSET_GATE):
        ok = _product_witness_maximal(A, F)
        return Verdict(True) if ok else _fail("product_witness")
    check_gate(A.n, SUBSET_GATE, "maximality scan")
    if F.is_full():
        v = _fail("not_proper")
    else:
        bigger = [G for G in _family(A, family) if F.bits != G.bits and F.issubset(G) and not G.is_full()]
        v = Verdict(True) if not bigger else _fail("contained_in", tuple(bigger[0].names(A)))
    if family == "filters":
        _agree(A, f"maximality of filter {F.names(A)}", v, _product_witness_maximal(A, F))
    return v


def is_strongly_maximal(A: FiniteAlgebra, F: Subset) -> Verdict:
    """Every x outside F has a power whose star lies in F (vacuous for the full set)."""
    check_width(A, F)
    s = A.star_vec
    for x in range(A.n):
        if x in F:
            continue
        if not any(int(s[p]) in F for p in powers(A, x)):
            return _fail("no_power_star", (A.name(x),))
    return Verdict(True)


def is_prime(A: FiniteAlgebra, F: Subset) -> Verdict:
    """For every pair, ``x -> y`` or ``y -> x`` is in F."""
    check_width(A, F)
    m = F.mask()
    bad = ~m[A.arrow] & ~m[A.arrow.T]
    w = _first_pair(A, bad)
    v = Verdict(True) if w is None else _fail("incomparable", w)
    if A.is_qw and is_deductive_system(A, F):
        jbad = m[A.join_table] & ~m[:, None] & ~m[None, :]
        _agree(A, f"primality of {F.names(A)}", v, not jbad.any())
    return v


def is_commutative_filter(A: FiniteAlgebra, F: Subset) -> Verdict:
    """``y -> x`` in F implies ``((x -> y) -> y) -> x`` in F."""
    check_width(A, F)
    m = F.mask()
    T = A.arrow
    x = np.arange(A.n)
    bad = m[T.T] & ~m[T[A.join_table, x[:, None]]]
    w = _first_pair(A, bad)
    return Verdict(True) if w is None else _fail("commutativity", w)


# -- whole-algebra linearity -----------------------------------------------------


def is_weakly_linear(A: FiniteAlgebra) -> Verdict:
    """The order ``x <= y iff x -> y = 1`` is total."""
    LE = A.leq_table
    w = _first_pair(A, ~(LE | LE.T))
    v = Verdict(True) if w is None else _fail("incomparable", w)
    if A.is_qw:
        x = np.arange(A.n)
        J, M = A.join_table, A.meet_table
        by_join = ((J == x[None, :]) | (J.T == x[:, None])).all()
        by_meet = ((M == x[None, :]) | (M.T == x[:, None])).all()
        _agree(A, "weak linearity", v, by_join, by_meet)
    return v


def is_quasi_linear(A: FiniteAlgebra) -> Verdict:
    """``x`` not quantum-below ``y`` forces ``y`` strictly below ``x``."""
    LE, LQ = A.leq_table, A.leq_q_table
    eye = np.eye(A.n, dtype=bool)
    bad = ~LQ & ~(LE.T & ~eye)
    w = _first_pair(A, bad)
    v = Verdict(True) if w is None else _fail("quasi_linearity", w)
    if A.is_qw:
        via_q = not (~LE & ~(LQ.T & ~eye)).any()
        T = A.arrow
        # z -> x == z -> y != 1 with x != y, indexed [z, x, y]
        clash = (T[:, :, None] == T[:, None, :]) & (T != A.one)[:, :, None] & ~eye[None, :, :]
        _agree(A, "quasi-linearity", v, via_q, not clash.any())
    return v


def weakly_linear_identity_suite(A: FiniteAlgebra) -> list[LawResult]:
    """Identities that hold in every weakly linear QW algebra."""
    if not A.is_qw or not is_weakly_linear(A):
        raise PreconditionError("identity suite needs a weakly linear QW algebra")
    T, M, J, S = A.arrow, A.meet_table, A.join_table, A.star_vec
    n, zero, one = A.n, A.zero, A.one
    ar = np.arange(n)
    X, Y, Z = ar[:, None, None], ar[None, :, None], ar[None, None, :]
    x2, y2 = ar[:, None], ar[None, :]
    P = perspective_table(A)
    checks = [
        ("prelinear_meet", 3, M[T[T[X, Y], Z], T[T[Y, X], Z]] == Z),
        ("orthogonal_arrows", 3, (M[X, Y] != zero) | (M[T[Z, X], T[Z, Y]] == S[Z])),
        ("orthogonal_swap", 3, (M[X, M[Y, Z]] != zero) | (M[X, M[Z, Y]] == zero)),
        ("perspective_join_top", 2, ~(P & (J == one)) | ((x2 == one) & (y2 == one))),
    ]
    out = []
    for name, arity, ok in checks:
        ok = np.broadcast_to(ok, (n,) * arity)
        wv = first_violation(ok)
        out.append(LawResult(name, "weakly_linear", n ** arity,
                             None if wv is None else tuple(A.name(i) for i in wv)))
    return out


# -- aggregate classification ---------------------------------------------------


@dataclass(frozen=True)
class FilterClassification:
    members: tuple[str, ...]
    is_filter: bool
    is_deductive_system: bool
    is_ideal: bool
    is_proper: bool
    is_maximal_filter: bool
    is_maximal_ds: bool
    is_strongly_maximal: bool
    is_prime: bool
    is_commutative_filter: bool
    witnesses: dict[str, tuple[str, ...]] = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = {k: getattr(self, k) for k in self.__dataclass_fields__ if k != "witnesses"}
        d["members"] = list(self.members)
        d["witnesses"] = {k: list(v) for k, v in self.witnesses.items()}
        return d


def classify(A: FiniteAlgebra, F: Subset) -> FilterClassification:
    check_width(A, F)
    verdicts: dict[str, Verdict] = {
        "is_filter": is_filter(A, F),
        "is_deductive_system": is_deductive_system(A, F),
        "is_ideal": is_ideal(A, F),
    }
    verdicts["is_proper"] = Verdict(True) if not F.is_full() else _fail("full")
    if verdicts["is_filter"]:
        verdicts["is_maximal_filter"] = is_maximal(A, F, "filters")
    else:
        verdicts["is_maximal_filter"] = _fail("not_in_family")
    if verdicts["is_deductive_system"]:
        verdicts["is_maximal_ds"] = is_maximal(A, F, "deductive_systems")
    else:
        verdicts["is_maximal_ds"] = _fail("not_in_family")
    verdicts["is_strongly_maximal"] = is_strongly_maximal(A, F)
    verdicts["is_prime"] = is_prime(A, F)
    verdicts["is_commutative_filter"] = is_commutative_filter(A, F)
    if A.is_qw and verdicts["is_deductive_system"] and not verdicts["is_filter"]:
        raise FalsificationError(f"{F.names(A)} is a deductive system but not a filter")
    if (A.is_qw and verdicts["is_filter"] and verdicts["is_strongly_maximal"]
            and F != Subset.full(A.n) and not verdicts["is_maximal_filter"]):
        raise FalsificationError(f"{F.names(A)} is strongly maximal but not maximal")
    return FilterClassification(
        members=tuple(F.names(A)),
        witnesses={k[3:]: v.witness for k, v in verdicts.items() if not v},
        **{k: bool(v) for k, v in verdicts.items()},
    )
