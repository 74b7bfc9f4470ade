import numpy as np
import pytest

from qwalg.algebra import (
    FAIL,
    NOT_EVALUATED,
    FiniteAlgebra,
    direct_product,
    is_commutative,
    is_wajsberg,
    join,
    leq,
    leq_q,
    meet,
    odot,
    powers,
    star,
    verify_be,
    verify_qw,
)
from qwalg.catalog import boolean2, boolean4, lukasiewicz_chain, trivial
from qwalg.errors import AlgebraError, NotQWAlgebraError


def test_star_values(om6, wl5):
    assert om6.name(star(om6, "b")) == "d"
    assert wl5.name(star(wl5, "a")) == "b"
    for A in (om6, wl5, boolean4()):
        assert star(A, A.one) == A.zero
        assert star(A, A.zero) == A.one


def test_join_values(om6, wl5):
    assert om6.name(join(om6, "a", "c")) == "1"
    # a -> b = a in the fixture, so (a -> b) -> b = a -> b = a
    assert wl5.name(join(wl5, "a", "b")) == "a"
    for A in (om6, wl5):
        for x in range(A.n):
            assert join(A, x, A.one) == A.one
            assert join(A, A.one, x) == A.one


def test_meet_values(om6, wl5):
    assert om6.name(meet(om6, "a", "c")) == "0"
    assert wl5.name(meet(wl5, "a", "c")) == "c"
    assert wl5.name(meet(wl5, "c", "a")) == "a"
    for A in (om6, wl5):
        for x in range(A.n):
            assert meet(A, A.zero, x) == A.zero == meet(A, x, A.zero)
            assert meet(A, A.one, x) == x


def test_product_values(om6):
    assert om6.name(odot(om6, "b", "b")) == "b"
    assert om6.name(odot(om6, "a", "c")) == "0"
    for x in range(om6.n):
        assert odot(om6, x, om6.one) == x
        assert odot(om6, x, om6.zero) == om6.zero
    assert [om6.name(p) for p in powers(om6, "b")] == ["b"]


def test_orders(om6, wl5):
    assert leq(om6, "a", "b") and leq(om6, "b", "a")
    assert not leq_q(om6, "b", "a")
    assert leq(wl5, "c", "a") and leq(wl5, "a", "c")
    assert not leq_q(wl5, "a", "c") and not leq_q(wl5, "c", "a")
    for A in (om6, wl5):
        for x in range(A.n):
            assert leq(A, x, x)
            assert leq_q(A, A.zero, x) and leq_q(A, x, A.one)


def test_meet_tables_transcribed(om6, wl5):
    # meet tables printed alongside the two worked examples
    om6_meet = [
        "0 0 0 0 0 0",
        "0 a b 0 d a",
        "0 a b c 0 b",
        "0 0 b c d c",
        "0 a 0 c d d",
        "0 a b c d 1",
    ]
    wl5_meet = [
        "0 0 0 0 0",
        "0 a b c a",
        "0 b b c b",
        "0 a b c c",
        "0 a b c 1",
    ]
    for A, rows in ((om6, om6_meet), (wl5, wl5_meet)):
        got = [" ".join(A.name(v) for v in row) for row in A.meet_table]
        assert got == rows


def test_worked_examples_are_qw(om6, wl5):
    for A in (om6, wl5):
        rep = verify_qw(A)
        assert rep.is_be and rep.is_bounded and rep.is_involutive and rep.is_qw
        assert rep.qw_split_agrees
        assert not rep.witnesses


def test_boolean2_passes_be():
    rep = verify_be(boolean2())
    assert rep.is_be and rep.is_bounded and rep.is_involutive
    assert rep.status["qw"] == NOT_EVALUATED


def test_broken_unit_law_witness():
    A = FiniteAlgebra(["0", "1"], [[1, 1], [1, 1]], 0, 1)
    rep = verify_qw(A)
    assert rep.status["be_unit"] == FAIL
    assert rep.witnesses["be_unit"] == ("0",)
    assert rep.status["bounded"] == NOT_EVALUATED
    assert not rep.is_qw


def test_perturbed_example_fails_qw(om6):
    T = om6.arrow.copy()
    T[om6.index("a"), om6.index("c")] = om6.one
    rep = verify_qw(FiniteAlgebra(om6.names, T, om6.zero, om6.one))
    assert not rep.is_qw
    failed = [t for t, s in rep.status.items() if s == FAIL]
    assert failed and all(rep.witnesses[t] for t in failed)


def test_failed_tags_always_have_witnesses():
    rng = np.random.default_rng(7)
    for _ in range(200):
        n = int(rng.integers(2, 5))
        A = FiniteAlgebra([str(i) for i in range(n)], rng.integers(0, n, (n, n)), 0, n - 1)
        rep = verify_qw(A)
        for tag, status in rep.status.items():
            assert (status == FAIL) == (tag in rep.witnesses)
        if rep.is_qw:
            assert rep.is_be and rep.is_bounded and rep.is_involutive


def test_commutative_and_wajsberg(om6, wl5):
    assert not is_commutative(om6)
    assert is_commutative(lukasiewicz_chain(3))
    assert is_commutative(boolean2())
    assert not is_wajsberg(om6)
    assert not is_wajsberg(wl5)
    assert is_wajsberg(lukasiewicz_chain(3))


def test_wajsberg_rejects_non_qw():
    A = FiniteAlgebra(["0", "1"], [[1, 1], [1, 1]], 0, 1)
    with pytest.raises(NotQWAlgebraError):
        is_wajsberg(A)


def test_degenerate_algebra():
    A = trivial()
    assert A.n == 1 and A.zero == A.one
    assert verify_qw(A).is_qw


@pytest.mark.parametrize(
    "names, table, zero, one",
    [
        ([], [], 0, 0),
        (["a", "a"], [[0, 0], [0, 0]], 0, 1),
        (["0", "1"], [[0, 5], [0, 1]], 0, 1),
        (["0", "1"], [[0, 1]], 0, 1),
        (["0", "1"], [[1, 1], [0, 1]], 0, 0),
        (["0", "x y"], [[1, 1], [0, 1]], 0, 1),
    ],
)
def test_rejects_malformed(names, table, zero, one):
    with pytest.raises(AlgebraError):
        FiniteAlgebra(names, table, zero, one)


def test_relabel_is_structure_preserving(om6):
    perm = [0, 2, 1, 4, 3, 5]
    B = om6.relabel(perm)
    for x in range(6):
        for y in range(6):
            assert B.arrow[perm[x], perm[y]] == perm[om6.arrow[x, y]]
    assert B.name(perm[1]) == "a"


def test_table_is_read_only(om6):
    with pytest.raises(ValueError):
        om6.arrow[0, 0] = 3


def test_direct_product_of_qw_is_qw(om6, wl5):
    P = direct_product(boolean2(), wl5)
    assert P.n == 10 and verify_qw(P).is_qw
    assert direct_product(lukasiewicz_chain(3), boolean2()).is_qw
