import numpy as np

from qwalg.algebra import FiniteAlgebra, verify_qw
from qwalg.algebra import _grid
from qwalg.laws import LAWS, LEVELS, _ops, algebra_level, check_laws


def test_every_law_holds_on_corpus(corpus):
    for name, A in corpus.items():
        bad = [r for r in check_laws(A) if not r.holds]
        assert not bad, (name, bad[:3])


def test_all_laws_run_on_qw_algebras(om6):
    results = check_laws(om6)
    assert len(results) == len(LAWS)
    assert sum(r.instances for r in results) == sum(6 ** lw.arity for lw in LAWS)


def test_split_axiom_agrees_on_corpus(corpus):
    for A in corpus.values():
        assert verify_qw(A).qw_split_agrees


def test_laws_gated_by_level():
    # 1 -> 0 = 1 breaks the unit law, so no class is reached
    A = FiniteAlgebra(["0", "1"], [[1, 1], [1, 1]], 0, 1)
    assert algebra_level(A) == -1
    assert check_laws(A) == []


def test_laws_skip_classes_not_reached():
    # bounded BE table on three elements that is not involutive: m* = 0
    A = FiniteAlgebra(["0", "m", "1"], [[2, 2, 2], [0, 2, 2], [0, 1, 2]], 0, 2)
    assert LEVELS[algebra_level(A)] == "bounded"
    results = {r.name: r for r in check_laws(A)}
    assert "contraposition" not in results
    assert set(results) == {lw.name for lw in LAWS if lw.level in ("be", "bounded")}


def test_witness_is_first_violation(om6):
    T = om6.arrow.copy()
    T[om6.index("a"), om6.index("c")] = om6.one
    A = FiniteAlgebra(om6.names, T, om6.zero, om6.one)
    o = _ops(A)
    failures = 0
    for lw in LAWS:
        [r] = check_laws_forced(A, lw)
        ok = np.broadcast_to(lw.holds(o, *_grid(A.n, lw.arity)), (A.n,) * lw.arity)
        bad = np.argwhere(~ok)
        if len(bad) == 0:
            assert r.holds
        else:
            failures += 1
            assert r.witness == tuple(A.name(i) for i in bad[0])
    assert failures > 0


def check_laws_forced(A, lw):
    """Run one law regardless of the class the algebra reaches."""
    from qwalg import laws

    saved = laws.algebra_level
    laws.algebra_level = lambda _A: len(LEVELS) - 1
    try:
        return check_laws(A, [lw])
    finally:
        laws.algebra_level = saved
