"""Enumeration of finite QW algebras up to isomorphism.

Models are searched in a fixed layout with ``zero = 0`` and ``one = n - 1``.
The star column is chosen first, one involution per conjugacy class; the
remaining cells are filled in row-major order.  After every choice the axioms
are propagated to a fixpoint over all ground instances at once: the partial
table is padded with an extra "unknown" index ``U`` whose row and column are
``U``, so evaluating a term with numpy fancy indexing yields ``U`` exactly
where some operand is still unknown.  An instance whose two sides are both
known and differ is a contradiction; an instance with one side known and the
other blocked only at its outermost cell forces that cell.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .algebra import FiniteAlgebra, _grid, verify_qw
from .errors import AlgebraError, Contradiction, GateError
from .gates import SEARCH_GATE, check_gate

UNSET = -1

# -- terms --------------------------------------------------------------------
# ("v", i) variable, ("c", "zero" | "one") constant, ("a", l, r) arrow.

X, Y, Z = ("v", 0), ("v", 1), ("v", 2)
ZERO, ONE = ("c", "zero"), ("c", "one")


def _arrow(l, r):
    return ("a", l, r)


def _star(t):
    return ("a", t, ZERO)


def _meet(a, b):
    # ((a* -> b*) -> b*)*
    return _star(_arrow(_arrow(_star(a), _star(b)), _star(b)))


@dataclass(frozen=True)
class _Equation:
    name: str
    arity: int
    lhs: tuple
    rhs: tuple


EQUATIONS = (
    _Equation("be_reflexive", 1, _arrow(X, X), ONE),
    _Equation("be_top", 1, _arrow(X, ONE), ONE),
    _Equation("be_unit", 1, _arrow(ONE, X), X),
    _Equation("bounded", 1, _arrow(ZERO, X), ONE),
    _Equation("involutive", 1, _star(_star(X)), X),
    _Equation("be_exchange", 3, _arrow(X, _arrow(Y, Z)), _arrow(Y, _arrow(X, Z))),
    # consequence of exchange and involution: x* -> y* = y -> (x* -> 0) = y -> x
    _Equation("contraposition", 2, _arrow(_star(X), _star(Y)), _arrow(Y, X)),
    _Equation("qw", 3, _arrow(X, _meet(_meet(X, Y), _meet(Z, X))), _meet(_arrow(X, Y), _arrow(X, Z))),
)


# -- partial tables --------------------------------------------------------------


@dataclass(frozen=True)
class PartialTable:
    """An arrow table with some entries unassigned (``-1``)."""

    n: int
    cells: np.ndarray = field(compare=False)
    zero: int = 0
    one: int = 0

    def __post_init__(self):
        cells = np.array(self.cells, dtype=np.int64)
        if cells.shape != (self.n, self.n):
            raise AlgebraError(f"partial table has shape {cells.shape}, expected {(self.n, self.n)}")
        if ((cells < UNSET) | (cells >= self.n)).any():
            raise AlgebraError("partial table entry out of range")
        cells.setflags(write=False)
        object.__setattr__(self, "cells", cells)

    @classmethod
    def empty(cls, n: int) -> "PartialTable":
        return cls(n, np.full((n, n), UNSET), 0, n - 1)

    @classmethod
    def from_algebra(cls, A: FiniteAlgebra) -> "PartialTable":
        return cls(A.n, A.arrow, A.zero, A.one)

    def __eq__(self, other):
        if not isinstance(other, PartialTable):
            return NotImplemented
        return (self.n, self.zero, self.one) == (other.n, other.zero, other.one) and np.array_equal(
            self.cells, other.cells
        )

    def __hash__(self):
        return hash((self.n, self.zero, self.one, self.cells.tobytes()))

    def assign(self, x: int, y: int, v: int) -> "PartialTable":
        cells = self.cells.copy()
        cells[x, y] = v
        return PartialTable(self.n, cells, self.zero, self.one)

    @property
    def unassigned(self) -> int:
        return int((self.cells == UNSET).sum())

    @property
    def is_complete(self) -> bool:
        return self.unassigned == 0

    def to_algebra(self, names: Sequence[str] | None = None) -> FiniteAlgebra:
        if not self.is_complete:
            raise AlgebraError("partial table has unassigned entries")
        return FiniteAlgebra(names or default_names(self.n, self.zero, self.one), self.cells, self.zero, self.one)

    def _padded(self) -> np.ndarray:
        n = self.n
        Tp = np.full((n + 1, n + 1), n, dtype=np.int64)
        Tp[:n, :n] = np.where(self.cells == UNSET, n, self.cells)
        return Tp


def default_names(n: int, zero: int = 0, one: int | None = None) -> list[str]:
    """``0, a, b, ..., 1`` in index order, with 0 and 1 at the constants."""
    if one is None:
        one = n - 1
    if n == 1:
        return ["0"]
    letters = iter(_letters())
    return ["0" if i == zero else "1" if i == one else next(letters) for i in range(n)]


def _letters() -> Iterator[str]:
    alphabet = "abcdefghijklmnopqrstuvwxyz"
    for size in itertools.count(1):
        for combo in itertools.product(alphabet, repeat=size):
            yield "".join(combo)


class _Propagator:
    """Unit propagation over every ground instance of :data:`EQUATIONS`."""

    def __init__(self, n: int, zero: int, one: int):
        self.n = n
        self.consts = {"zero": zero, "one": one}
        self.grids = {k: _grid(n, k) for k in (1, 2, 3)}

    def _eval(self, term, Tp, env, memo):
        got = memo.get(term)
        if got is not None:
            return got
        kind = term[0]
        if kind == "v":
            out = env[term[1]]
        elif kind == "c":
            out = np.int64(self.consts[term[1]])
        else:
            out = Tp[self._eval(term[1], Tp, env, memo), self._eval(term[2], Tp, env, memo)]
        memo[term] = out
        return out

    def _force(self, term, target, mask, Tp, env, memo, star, out):
        """Collect cells forced by requiring ``term == target`` where ``mask``."""
        U = self.n
        val = self._eval(term, Tp, env, memo)
        if (mask & (val != U) & (val != target)).any():
            raise Contradiction(f"instance value clash in {term[0]!r}")
        if term[0] != "a":
            return
        m = mask & (val == U)
        if not m.any():
            return
        a = self._eval(term[1], Tp, env, memo)
        b = self._eval(term[2], Tp, env, memo)
        shape = m.shape
        a, b, t = (np.broadcast_to(v, shape) for v in (a, b, target))
        top = m & (a != U) & (b != U)
        if top.any():
            out.append((a[top], b[top], t[top]))
        if star is not None and term[2] == ZERO:
            # the star is a known bijection, so t* = v pins t = v*
            inner = m & (a == U)
            if inner.any():
                self._force(term[1], star[t], inner, Tp, env, memo, star, out)

    def run(self, Tp: np.ndarray) -> int:
        """Propagate in place; return the number of forced cells."""
        n, U = self.n, self.n
        zero = self.consts["zero"]
        forced = 0
        while True:
            out: list = []
            star_col = Tp[:n, zero]
            star = None
            if (star_col != U).all():
                star = np.append(star_col, U)
            for eq in EQUATIONS:
                env = self.grids[eq.arity]
                memo: dict = {}
                L = self._eval(eq.lhs, Tp, env, memo)
                R = self._eval(eq.rhs, Tp, env, memo)
                shape = (n,) * eq.arity
                L = np.broadcast_to(L, shape)
                R = np.broadcast_to(R, shape)
                if ((L != U) & (R != U) & (L != R)).any():
                    raise Contradiction(f"{eq.name} violated")
                self._force(eq.rhs, L, L != U, Tp, env, memo, star, out)
                self._force(eq.lhs, R, R != U, Tp, env, memo, star, out)
            self._involution_parity(Tp, out)
            if not out:
                return forced
            i = np.concatenate([o[0] for o in out])
            j = np.concatenate([o[1] for o in out])
            v = np.concatenate([o[2] for o in out])
            key = i * n + j
            order = np.lexsort((v, key))
            key, v = key[order], v[order]
            same = key[1:] == key[:-1]
            if (same & (v[1:] != v[:-1])).any():
                raise Contradiction("two values forced into one cell")
            first = np.concatenate(([True], ~same))
            key, v = key[first], v[first]
            Tp[key // n, key % n] = v
            forced += len(key)

    def _involution_parity(self, Tp, out):
        # every element but one has a known partner: the last one is self-paired
        n, U, zero = self.n, self.n, self.consts["zero"]
        col = Tp[:n, zero]
        unknown = np.flatnonzero(col == U)
        if len(unknown) == 1:
            x = unknown[0]
            # if x is some known element's star, the involution equation already pins it
            if x not in set(col[col != U].tolist()):
                out.append((np.array([x]), np.array([zero]), np.array([x])))


def propagate(P: PartialTable) -> PartialTable:
    """Least fixpoint of unit propagation; raises :class:`Contradiction`."""
    Tp = P._padded()
    _Propagator(P.n, P.zero, P.one).run(Tp)
    n = P.n
    cells = np.where(Tp[:n, :n] == n, UNSET, Tp[:n, :n])
    return PartialTable(n, cells, P.zero, P.one)


# -- canonical forms and isomorphism ---------------------------------------------


@lru_cache(maxsize=None)
def _middle_perms(n: int) -> tuple[np.ndarray, np.ndarray]:
    """All permutations of ``range(n)`` fixing 0 and n-1, with their inverses."""
    if n <= 2:
        G = np.arange(n)[None, :]
    else:
        mids = np.array(list(itertools.permutations(range(1, n - 1))), dtype=np.int64).reshape(-1, n - 2)
        G = np.concatenate([np.zeros((len(mids), 1), np.int64), mids, np.full((len(mids), 1), n - 1)], axis=1)
    Ginv = np.argsort(G, axis=1)
    G.setflags(write=False)
    Ginv.setflags(write=False)
    return G, Ginv


CANONICAL_GATE = 10


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Arrow table in layout ``zero = 0``, ``one = n - 1``, lexicographically least."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    def table(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64).reshape(self.n, self.n)

    def to_algebra(self) -> FiniteAlgebra:
        one = self.n - 1
        return FiniteAlgebra(default_names(self.n, 0, one), self.table(), 0, one)


def _layout_perm(A: FiniteAlgebra) -> np.ndarray:
    """Old index -> new index sending zero to 0 and one to n-1, others in order."""
    n = A.n
    if n == 1:
        return np.zeros(1, np.int64)
    perm = np.empty(n, np.int64)
    perm[A.zero], perm[A.one] = 0, n - 1
    rest = [i for i in range(n) if i not in (A.zero, A.one)]
    perm[rest] = np.arange(1, n - 1)
    return perm


def _min_relabel(T: np.ndarray, G: np.ndarray, Ginv: np.ndarray) -> tuple[np.ndarray, int]:
    # Q[k, u, v] = G[k, T[Ginv[k, u], Ginv[k, v]]]
    k = np.arange(len(G))[:, None, None]
    Q = G[k, T[Ginv[:, :, None], Ginv[:, None, :]]]
    flat = Q.reshape(len(G), -1)
    best = np.lexsort(flat.T[::-1])[0]
    return Q[best], int(best)


def canonical_form(A: FiniteAlgebra, override: bool | None = None) -> CanonicalForm:
    """Least row-major relabelling over every bijection that fixes the constants."""
    check_gate(A.n, CANONICAL_GATE, "canonical form", override)
    p = _layout_perm(A)
    inv = np.argsort(p)
    T = p[A.arrow[np.ix_(inv, inv)]]
    G, Ginv = _middle_perms(A.n)
    Q, _ = _min_relabel(T, G, Ginv)
    return CanonicalForm(A.n, tuple(tuple(r) for r in Q.tolist()))


@dataclass(frozen=True)
class IsoResult:
    holds: bool
    witness: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.holds


def _signature(A: FiniteAlgebra, x: int) -> tuple:
    T = A.arrow
    return (
        x == A.zero,
        x == A.one,
        int(A.star_vec[x] == x),
        int((T[x] == A.one).sum()),
        int((T[:, x] == A.one).sum()),
        int(A.leq_q_table[x].sum()),
    )


def is_isomorphic(A: FiniteAlgebra, B: FiniteAlgebra) -> IsoResult:
    """Backtracking search for a constant-preserving bijection ``phi`` with
    ``phi(x -> y) = phi(x) -> phi(y)``.  The witness maps A-indices to B-indices."""
    n = A.n
    if B.n != n:
        return IsoResult(False)
    sa = [_signature(A, x) for x in range(n)]
    sb = [_signature(B, x) for x in range(n)]
    if sorted(sa) != sorted(sb):
        return IsoResult(False)
    TA, TB = A.arrow.tolist(), B.arrow.tolist()
    phi = [-1] * n
    used = [False] * n

    def settle(pending: list[tuple[int, int]], trail: list[int]) -> bool:
        # record pairs and close under the arrow on mapped elements
        while pending:
            x, fx = pending.pop()
            if phi[x] != -1:
                if phi[x] != fx:
                    return False
                continue
            if used[fx] or sa[x] != sb[fx]:
                return False
            phi[x], used[fx] = fx, True
            trail.append(x)
            for y in trail:
                for u, v in ((x, y), (y, x)):
                    pending.append((TA[u][v], TB[phi[u]][phi[v]]))
        return True

    def undo(trail, upto):
        while len(trail) > upto:
            x = trail.pop()
            used[phi[x]] = False
            phi[x] = -1

    trail: list[int] = []
    if not settle([(A.zero, B.zero), (A.one, B.one)], trail):
        return IsoResult(False)

    def rec() -> bool:
        x = next((i for i in range(n) if phi[i] == -1), None)
        if x is None:
            return True
        for fx in range(n):
            if used[fx] or sa[x] != sb[fx]:
                continue
            mark = len(trail)
            if settle([(x, fx)], trail) and rec():
                return True
            undo(trail, mark)
        return False

    if rec():
        return IsoResult(True, tuple(phi))
    return IsoResult(False)


# -- the search ---------------------------------------------------------------------


def involution_types(n: int) -> list[np.ndarray]:
    """One star column per conjugacy class of involutions on the middle elements.

    Fixed points come first, then adjacent pairs ``(2i, 2i+1)``.
    """
    if n == 1:
        return [np.zeros(1, np.int64)]
    m = n - 2
    out = []
    for pairs in range(m // 2, -1, -1):
        fixed = m - 2 * pairs
        s = np.empty(n, np.int64)
        s[0], s[n - 1] = n - 1, 0
        for i in range(1, fixed + 1):
            s[i] = i
        for p in range(pairs):
            a = fixed + 1 + 2 * p
            s[a], s[a + 1] = a + 1, a
        out.append(s)
    return out


@dataclass
class SearchStats:
    nodes: int = 0
    prunes: int = 0
    isomorph_rejections: int = 0
    leaves: int = 0

    def add(self, other: "SearchStats") -> None:
        self.nodes += other.nodes
        self.prunes += other.prunes
        self.isomorph_rejections += other.isomorph_rejections
        self.leaves += other.leaves

    def to_dict(self) -> dict:
        return {
            "nodes": self.nodes,
            "prunes": self.prunes,
            "isomorph_rejections": self.isomorph_rejections,
            "leaves": self.leaves,
        }


@dataclass
class SearchReport:
    order: int
    models: list[FiniteAlgebra]
    forms: list[CanonicalForm]
    stats: SearchStats
    complete: bool = True

    @property
    def count(self) -> int:
        return len(self.models)

    def __iter__(self):
        return iter(self.models)

    def __len__(self):
        return self.count


class _Search:
    def __init__(self, n: int, star: np.ndarray, limit: int | None = None):
        self.n = n
        self.star = star
        self.limit = limit
        self.prop = _Propagator(n, 0, n - 1)
        self.stats = SearchStats()
        self.seen: dict[CanonicalForm, None] = {}
        G, Ginv = _middle_perms(n)
        # symmetries of the skeleton: perms of the middle that commute with the star
        keep = (G[:, star] == star[G]).all(axis=1)
        self.G, self.Ginv = G[keep], Ginv[keep]

    def _stabilizer(self, Tp, G, Ginv):
        n = self.n
        Gp = np.concatenate([G, np.full((len(G), 1), n)], axis=1)
        T = Tp[:n, :n]
        k = np.arange(len(G))[:, None, None]
        Q = Gp[k, T[Ginv[:, :, None], Ginv[:, None, :]]]
        ok = (Q == T[None]).all(axis=(1, 2))
        return G[ok], Ginv[ok]

    def run(self) -> Iterator[CanonicalForm]:
        n = self.n
        Tp = np.full((n + 1, n + 1), n, dtype=np.int64)
        Tp[:n, 0] = self.star
        try:
            self.prop.run(Tp)
        except Contradiction:
            self.stats.prunes += 1
            return
        yield from self._rec(Tp, self.G, self.Ginv)

    def _rec(self, Tp, G, Ginv) -> Iterator[CanonicalForm]:
        n = self.n
        self.stats.nodes += 1
        free = np.flatnonzero(Tp[:n, :n].ravel() == n)
        if len(free) == 0:
            yield from self._leaf(Tp)
            return
        x, y = divmod(int(free[0]), n)
        G, Ginv = self._stabilizer(Tp, G, Ginv)
        H = G[(G[:, x] == x) & (G[:, y] == y)]
        reps = [v for v in range(n) if v == H[:, v].min()]
        for v in reps:
            child = Tp.copy()
            child[x, y] = v
            try:
                self.prop.run(child)
            except Contradiction:
                self.stats.prunes += 1
                continue
            yield from self._rec(child, G, Ginv)
            if self.limit is not None and len(self.seen) >= self.limit:
                return

    def _leaf(self, Tp) -> Iterator[CanonicalForm]:
        n = self.n
        self.stats.leaves += 1
        A = FiniteAlgebra(default_names(n), Tp[:n, :n], 0, n - 1)
        rep = verify_qw(A)
        if not rep.is_qw:
            raise RuntimeError(f"search produced a table that fails verification: {rep.witnesses}")
        cf = canonical_form(A, override=True)
        if cf in self.seen:
            self.stats.isomorph_rejections += 1
            return
        self.seen[cf] = None
        yield cf


def _search_star(args) -> tuple[list[CanonicalForm], SearchStats]:
    n, star = args
    s = _Search(n, np.asarray(star))
    forms = list(s.run())
    return forms, s.stats


def iter_qw(n: int, limit: int | None = None, override: bool | None = None) -> Iterator[CanonicalForm]:
    """Canonical forms of order-``n`` QW algebras in search order, without repeats."""
    check_gate(n, SEARCH_GATE, "model search", override)
    if n < 1:
        raise GateError("order must be at least 1")
    seen: set[CanonicalForm] = set()
    for star in involution_types(n):
        s = _Search(n, star, None if limit is None else limit - len(seen))
        for cf in s.run():
            if cf not in seen:
                seen.add(cf)
                yield cf
                if limit is not None and len(seen) >= limit:
                    return


def enumerate_qw(
    n: int,
    limit: int | None = None,
    override: bool | None = None,
    workers: int | None = None,
) -> SearchReport:
    """All QW algebras of order ``n`` up to isomorphism, sorted by canonical form.

    With ``workers > 1`` (and no ``limit``) each star-column type is searched
    in its own process; the merged output is identical to a serial run.
    """
    check_gate(n, SEARCH_GATE, "model search", override)
    if n < 1:
        raise GateError("order must be at least 1")
    stats = SearchStats()
    stars = [s.tolist() for s in involution_types(n)]
    if workers and workers > 1 and limit is None:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_search_star, [(n, s) for s in stars]))
    else:
        results = []
        for star in stars:
            remaining = None if limit is None else limit - sum(len(f) for f, _ in results)
            if remaining is not None and remaining <= 0:
                break
            s = _Search(n, np.asarray(star), remaining)
            results.append((list(s.run()), s.stats))
    # the star type is an isomorphism invariant, so different star columns never share a form
    forms: list[CanonicalForm] = []
    for found, st in results:
        stats.add(st)
        forms.extend(found)
    complete = limit is None or len(forms) < limit
    ordered = sorted(forms)
    if limit is not None:
        ordered = ordered[:limit]
    return SearchReport(n, [cf.to_algebra() for cf in ordered], ordered, stats, complete)


# -- brute-force oracle -------------------------------------------------------------

ORACLE_GATE = 5


def _skeleton(n: int) -> np.ndarray:
    """Entries fixed by single axiom instances: row 1, column 1, diagonal, row 0."""
    T = np.full((n, n), UNSET, dtype=np.int64)
    one = n - 1
    T[0, :] = one
    T[:, one] = one
    T[np.arange(n), np.arange(n)] = one
    T[one, :] = np.arange(n)
    return T


def oracle_qw(n: int, override: bool | None = None) -> list[CanonicalForm]:
    """Every completion of the skeleton that passes :func:`verify_qw`, bucketed
    by canonical form.  The star column is drawn only from involutions, which
    is exactly the involution axiom restricted to the skeleton."""
    check_gate(n, ORACLE_GATE, "brute-force oracle", override)
    if n == 1:
        A = FiniteAlgebra(["0"], [[0]], 0, 0)
        return [canonical_form(A)] if verify_qw(A).is_qw else []
    base = _skeleton(n)
    one = n - 1
    mids = list(range(1, n - 1))
    stars = []
    for img in itertools.permutations(mids):
        s = dict(zip(mids, img))
        if all(s[s[x]] == x for x in mids):
            stars.append(img)
    names = default_names(n)
    found: set[CanonicalForm] = set()
    for img in stars:
        T = base.copy()
        T[one, 0] = 0
        T[mids, 0] = img
        free = np.argwhere(T == UNSET)
        for values in itertools.product(range(n), repeat=len(free)):
            T[free[:, 0], free[:, 1]] = values
            A = FiniteAlgebra(names, T, 0, one)
            if verify_qw(A).is_qw:
                found.add(canonical_form(A))
    return sorted(found)
