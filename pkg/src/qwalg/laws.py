"""A battery of identities and implications that hold in finite QW algebras.

Each law is a vectorised predicate over all ``n**arity`` element tuples.  A
law also names the weakest axiom class in which it is known to hold:
``"be"``, ``"bounded"``, ``"involutive"`` or ``"qw"``.  :func:`check_laws`
only runs laws whose class the algebra belongs to, and reports the first
violating tuple of each law that fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from types import SimpleNamespace
from typing import Callable

import numpy as np

from .algebra import FiniteAlgebra, _grid, first_violation, verify_qw

LEVELS = ("be", "bounded", "involutive", "qw")


@dataclass(frozen=True)
class Law:
    name: str
    level: str
    arity: int
    holds: Callable[..., np.ndarray]


def _ops(A: FiniteAlgebra) -> SimpleNamespace:
    return SimpleNamespace(
        T=A.arrow, S=A.star_vec, J=A.join_table, M=A.meet_table, O=A.odot_table,
        LE=A.leq_table, LQ=A.leq_q_table, zero=A.zero, one=A.one,
    )


def _imp(p, q):
    return ~np.asarray(p) | np.asarray(q)


LAWS: list[Law] = []


def law(name: str, level: str, arity: int):
    def deco(fn):
        LAWS.append(Law(name, level, arity, fn))
        return fn
    return deco


# -- BE algebras --------------------------------------------------------------

law("weakening", "be", 2)(lambda o, x, y: o.T[x, o.T[y, x]] == o.one)
law("below_join", "be", 2)(lambda o, x, y: o.LE[x, o.J[x, y]])

# -- bounded ------------------------------------------------------------------

law("star_exchange", "bounded", 2)(lambda o, x, y: o.T[x, o.S[y]] == o.T[y, o.S[x]])
law("below_double_star", "bounded", 1)(lambda o, x: o.LE[x, o.S[o.S[x]]])

# -- involutive ---------------------------------------------------------------

law("star_swap", "involutive", 2)(lambda o, x, y: o.T[o.S[x], y] == o.T[o.S[y], x])
law("contraposition", "involutive", 2)(lambda o, x, y: o.T[o.S[x], o.S[y]] == o.T[y, x])
law("star_currying", "involutive", 3)(
    lambda o, x, y, z: o.T[o.S[o.T[o.S[x], y]], z] == o.T[o.S[x], o.T[o.S[y], z]]
)
law("currying", "involutive", 3)(
    lambda o, x, y, z: o.T[x, o.T[y, z]] == o.T[o.S[o.T[x, o.S[y]]], z]
)
law("q_below_meet_join", "involutive", 2)(
    lambda o, x, y: _imp(o.LQ[x, y], (o.M[y, x] == x) & (o.J[x, y] == y))
)
law("q_reflexive", "involutive", 1)(lambda o, x: o.LQ[x, x])
law("q_antisymmetric", "involutive", 2)(lambda o, x, y: _imp(o.LQ[x, y] & o.LQ[y, x], x == y))
law("de_morgan_meet", "involutive", 2)(lambda o, x, y: o.M[x, y] == o.S[o.J[o.S[x], o.S[y]]])
law("de_morgan_join", "involutive", 2)(lambda o, x, y: o.J[x, y] == o.S[o.M[o.S[x], o.S[y]]])
law("q_implies_leq", "involutive", 2)(lambda o, x, y: _imp(o.LQ[x, y], o.LE[x, y]))
law("q_bounds", "involutive", 1)(lambda o, x: o.LQ[o.zero, x] & o.LQ[x, o.one])
law("meet_constants", "involutive", 1)(
    lambda o, x: (o.M[o.zero, x] == o.zero) & (o.M[x, o.zero] == o.zero)
    & (o.M[o.one, x] == x) & (o.M[x, o.one] == x)
)
law("meet_absorb_left", "involutive", 2)(
    lambda o, x, y: (o.M[x, o.M[y, x]] == o.M[y, x]) & (o.M[x, o.M[x, y]] == o.M[x, y])
)
law("meet_arrow", "involutive", 3)(
    lambda o, x, y, z: o.T[o.M[x, y], z] == o.T[o.T[y, x], o.T[y, z]]
)
law("arrow_join", "involutive", 3)(
    lambda o, x, y, z: o.T[z, o.J[x, y]] == o.T[o.T[x, y], o.T[z, y]]
)
law("meet_below_join", "involutive", 2)(
    lambda o, x, y: o.LE[o.M[x, y], x] & o.LE[o.M[x, y], y] & o.LE[x, o.J[x, y]] & o.LE[y, o.J[x, y]]
)
law("q_cancellation", "involutive", 3)(
    lambda o, x, y, z: _imp(o.LQ[x, z] & o.LQ[y, z] & (o.T[z, x] == o.T[z, y]), x == y)
)
law("q_residual_product", "involutive", 2)(lambda o, x, y: _imp(o.LQ[x, y], o.O[o.T[y, x], y] == x))
law("arrow_product_star", "involutive", 3)(
    lambda o, x, y, z: o.T[x, o.O[z, o.S[y]]] == o.S[o.O[o.T[z, y], x]]
)
law("product_commutative", "involutive", 2)(lambda o, x, y: o.O[x, y] == o.O[y, x])
law("product_via_star", "involutive", 2)(lambda o, x, y: o.O[x, y] == o.S[o.T[y, o.S[x]]])

# -- QW -------------------------------------------------------------------------

law("product_associative", "qw", 3)(lambda o, x, y, z: o.O[o.O[x, y], z] == o.O[x, o.O[y, z]])
law("arrow_meet_right", "qw", 2)(
    lambda o, x, y: (o.T[x, o.M[y, x]] == o.T[x, y]) & (o.T[o.T[x, y], o.M[y, x]] == x)
)
law("q_below_arrows", "qw", 2)(lambda o, x, y: o.LQ[x, o.T[o.S[x], y]] & o.LQ[x, o.T[y, x]])
law("arrow_zero", "qw", 2)(
    lambda o, x, y: (o.T[x, y] == o.zero) == ((x == o.one) & (y == o.zero))
)
law("star_arrow_meet", "qw", 2)(lambda o, x, y: o.M[o.S[o.T[x, y]], x] == o.S[o.T[x, y]])
law("meet_join_idempotent", "qw", 2)(
    lambda o, x, y: (o.M[o.M[x, y], y] == o.M[x, y]) & (o.J[o.J[x, y], y] == o.J[x, y])
)
law("absorption", "qw", 2)(lambda o, x, y: (o.J[x, o.M[y, x]] == x) & (o.M[x, o.J[y, x]] == x))
law("q_meet_join_bounds", "qw", 2)(lambda o, x, y: o.LQ[o.M[x, y], y] & o.LQ[y, o.J[x, y]])
law("join_arrow_left", "qw", 2)(
    lambda o, x, y: (o.T[o.J[x, y], x] == o.T[y, x]) & (o.T[o.J[y, x], x] == o.T[y, x])
)
law("join_arrow_right", "qw", 2)(
    lambda o, x, y: (o.T[o.J[x, y], y] == o.T[x, y]) & (o.T[o.J[y, x], y] == o.T[x, y])
)
law("leq_via_meet", "qw", 2)(lambda o, x, y: o.LE[x, y] == (o.M[y, x] == x))
law("q_join_absorb", "qw", 2)(lambda o, x, y: _imp(o.LQ[x, y], o.J[y, x] == y))
law("q_star_antitone", "qw", 2)(lambda o, x, y: _imp(o.LQ[x, y], o.LQ[o.S[y], o.S[x]]))
law("q_arrow_monotone", "qw", 3)(
    lambda o, x, y, z: _imp(o.LQ[x, y], o.LQ[o.T[y, z], o.T[x, z]] & o.LQ[o.T[z, x], o.T[z, y]])
)
law("q_meet_join_monotone", "qw", 3)(
    lambda o, x, y, z: _imp(o.LQ[x, y], o.LQ[o.M[x, z], o.M[y, z]] & o.LQ[o.J[x, z], o.J[y, z]])
)
law("meet_reassociate", "qw", 3)(
    lambda o, x, y, z: o.M[o.M[x, y], o.M[y, z]] == o.M[o.M[x, y], z]
)
law("q_transitive", "qw", 3)(lambda o, x, y, z: _imp(o.LQ[x, y] & o.LQ[y, z], o.LQ[x, z]))
law("q_join_below_star_arrow", "qw", 2)(lambda o, x, y: o.LQ[o.J[x, y], o.T[o.S[x], y]])
law("star_arrow_fixpoint", "qw", 2)(
    lambda o, x, y: o.T[o.S[o.T[o.S[x], y]], o.S[o.T[x, o.S[y]]]] == o.T[o.S[x], y]
)
law("star_arrow_swap", "qw", 2)(
    lambda o, x, y: o.T[o.S[o.T[x, y]], o.S[o.T[y, x]]] == o.T[x, y]
)
law("arrow_prelinear_fix", "qw", 2)(lambda o, x, y: o.T[o.T[y, x], o.T[x, y]] == o.T[x, y])
law("prelinearity", "qw", 2)(lambda o, x, y: o.J[o.T[x, y], o.T[y, x]] == o.one)
law("meet_arrow_meet", "qw", 3)(
    lambda o, x, y, z: o.T[o.M[z, x], o.M[y, x]] == o.T[o.M[z, x], y]
)
law("meet_swap_equivalent", "qw", 2)(
    lambda o, x, y: (o.T[o.S[o.M[x, y]], o.S[o.M[y, x]]] == o.one) & (o.T[o.M[x, y], o.M[y, x]] == o.one)
)
law("join_swap_equivalent", "qw", 2)(
    lambda o, x, y: (o.T[o.S[o.J[x, y]], o.S[o.J[y, x]]] == o.one) & (o.T[o.J[x, y], o.J[y, x]] == o.one)
)
law("meet_zero_symmetric", "qw", 2)(lambda o, x, y: (o.M[x, y] == o.zero) == (o.M[y, x] == o.zero))
law("join_one_symmetric", "qw", 2)(lambda o, x, y: (o.J[x, y] == o.one) == (o.J[y, x] == o.one))
law("product_currying", "qw", 3)(lambda o, x, y, z: o.T[x, o.T[y, z]] == o.T[o.O[x, y], z])
law("q_residuation", "qw", 3)(lambda o, x, y, z: _imp(o.LQ[x, o.T[y, z]], o.LE[o.O[x, y], z]))
law("residuation", "qw", 3)(lambda o, x, y, z: _imp(o.LE[o.O[x, y], z], o.LE[x, o.T[y, z]]))
law("modus_ponens_product", "qw", 2)(lambda o, x, y: o.LE[o.O[o.T[x, y], x], y])
law("q_product_monotone", "qw", 3)(
    lambda o, x, y, z: _imp(o.LQ[x, y], o.LQ[o.O[x, z], o.O[y, z]])
)


@dataclass(frozen=True)
class LawResult:
    name: str
    level: str
    instances: int
    witness: tuple[str, ...] | None

    @property
    def holds(self) -> bool:
        return self.witness is None


def algebra_level(A: FiniteAlgebra) -> int:
    """Index into :data:`LEVELS` of the strongest class ``A`` belongs to, or -1."""
    rep = verify_qw(A)
    flags = (rep.is_be, rep.is_bounded, rep.is_involutive, rep.is_qw)
    level = -1
    for i, f in enumerate(flags):
        if not f:
            break
        level = i
    return level


def check_laws(A: FiniteAlgebra, laws: list[Law] | None = None) -> list[LawResult]:
    """Evaluate every applicable law over all element tuples of ``A``."""
    level = algebra_level(A)
    o = _ops(A)
    out = []
    for lw in laws if laws is not None else LAWS:
        if LEVELS.index(lw.level) > level:
            continue
        grids = _grid(A.n, lw.arity)
        ok = np.broadcast_to(lw.holds(o, *grids), (A.n,) * lw.arity)
        w = first_violation(ok)
        out.append(LawResult(lw.name, lw.level, A.n ** lw.arity,
                             None if w is None else tuple(A.name(i) for i in w)))
    return out
