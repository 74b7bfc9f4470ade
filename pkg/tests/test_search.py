import itertools

import numpy as np
import pytest

from qwalg.algebra import FiniteAlgebra, direct_product, is_commutative, is_wajsberg, verify_qw
from qwalg.catalog import boolean4, lukasiewicz_chain
from qwalg.errors import Contradiction, GateError
from qwalg.search import (
    UNSET,
    PartialTable,
    canonical_form,
    enumerate_qw,
    involution_types,
    is_isomorphic,
    iter_qw,
    oracle_qw,
    propagate,
)


def test_empty_table_skeleton():
    n = 5
    P = propagate(PartialTable.empty(n))
    T = P.cells
    assert (T[n - 1] == np.arange(n)).all()
    assert (T[:, n - 1] == n - 1).all()
    assert (np.diag(T) == n - 1).all()
    assert (T[0] == n - 1).all()
    free = [(x, y) for x in range(1, n - 1) for y in range(n - 1) if x != y]
    assert all(T[x, y] == UNSET for x, y in free)


def test_order_three_forces_middle_star():
    P = propagate(PartialTable.empty(3))
    assert P.cells[1, 0] == 1


def test_worked_example_is_a_fixpoint(om6):
    P = PartialTable.from_algebra(om6)
    assert propagate(P) == P


def test_contradiction_on_bad_table(om6):
    T = om6.arrow.copy()
    T[om6.index("a"), om6.index("c")] = om6.one
    with pytest.raises(Contradiction):
        propagate(PartialTable(6, T, om6.zero, om6.one))


def test_propagation_never_loses_a_model(small_models):
    # erase cells of known models: propagation must not contradict and must agree where it fills
    rng = np.random.default_rng(11)
    for models in small_models.values():
        for A in models:
            for _ in range(10):
                cells = A.arrow.copy()
                cells[rng.random(cells.shape) < 0.5] = UNSET
                P = propagate(PartialTable(A.n, cells, A.zero, A.one))
                known = P.cells != UNSET
                assert (P.cells[known] == A.arrow[known]).all()


def test_involution_types():
    for n in range(2, 8):
        for s in involution_types(n):
            assert (s[s] == np.arange(n)).all()
            assert s[0] == n - 1 and s[n - 1] == 0
        assert len(involution_types(n)) == (n - 2) // 2 + 1


@pytest.mark.parametrize("n, count", [(1, 1), (2, 1)])
def test_tiny_orders(n, count):
    assert enumerate_qw(n).count == count


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_search_matches_oracle(n):
    rep = enumerate_qw(n)
    assert rep.forms == oracle_qw(n)
    assert rep.count == len(rep.models)
    for A in rep.models:
        assert verify_qw(A).is_qw
    for A, B in itertools.combinations(rep.models, 2):
        assert not is_isomorphic(A, B)


def test_output_is_sorted_and_canonical():
    rep = enumerate_qw(5)
    assert rep.forms == sorted(rep.forms)
    for A, cf in zip(rep.models, rep.forms):
        assert canonical_form(A) == cf
    assert list(iter_qw(5)) and set(iter_qw(5)) == set(rep.forms)


def test_limit():
    rep = enumerate_qw(6, limit=3)
    assert rep.count == 3 and not rep.complete
    assert enumerate_qw(4, limit=10).complete


def test_gate(monkeypatch):
    monkeypatch.delenv("QW_GATE_OVERRIDE", raising=False)
    with pytest.raises(GateError):
        enumerate_qw(9)


def test_worked_examples_found(om6, wl5):
    assert any(is_isomorphic(A, wl5) for A in enumerate_qw(5).models)
    assert any(is_isomorphic(A, om6) for A in enumerate_qw(6).models)


def test_commutative_models_are_wajsberg(small_models):
    for models in small_models.values():
        for A in models:
            if A.n > 1:
                assert is_wajsberg(A) == is_commutative(A)


def test_products_of_models_are_qw(small_models):
    pool = [A for n in (2, 3, 4) for A in small_models[n]]
    for A, B in itertools.product(pool, repeat=2):
        assert verify_qw(direct_product(A, B)).is_qw


# -- isomorphism and canonical forms -----------------------------------------------------------


def test_self_isomorphism(om6):
    r = is_isomorphic(om6, om6)
    assert r and r.witness == tuple(range(6))


def test_swapped_relabelling(om6):
    # a <-> b and c <-> d
    perm = [0, 2, 1, 4, 3, 5]
    B = om6.relabel(perm, names=om6.names)
    for x, y in itertools.product(range(6), repeat=2):
        assert B.arrow[perm[x], perm[y]] == perm[om6.arrow[x, y]]
    r = is_isomorphic(om6, B)
    assert r
    phi = r.witness
    for x, y in itertools.product(range(6), repeat=2):
        assert phi[om6.arrow[x, y]] == B.arrow[phi[x], phi[y]]
    assert canonical_form(om6) == canonical_form(B)


def test_non_automorphisms_fail_transport(om6):
    for p in itertools.permutations(range(1, 5)):
        perm = [0, *p, 5]
        transported = all(
            perm[om6.arrow[x, y]] == om6.arrow[perm[x], perm[y]] for x in range(6) for y in range(6)
        )
        moved = om6.relabel(perm, names=om6.names)
        assert (moved == om6) == transported


def test_size_guard(om6, wl5):
    assert not is_isomorphic(om6, wl5)


def test_canonical_form_idempotent(corpus):
    for A in corpus.values():
        cf = canonical_form(A)
        assert canonical_form(cf.to_algebra()) == cf


def test_canonical_form_is_isomorphism_invariant(corpus):
    rng = np.random.default_rng(5)
    for A in corpus.values():
        if A.n < 3:
            continue
        perm = rng.permutation(A.n)
        B = A.relabel(perm)
        assert canonical_form(A) == canonical_form(B)
        assert is_isomorphic(A, B)


def test_distinct_forms_for_non_isomorphic_models():
    L4, B4 = lukasiewicz_chain(4), boolean4()
    assert not is_isomorphic(L4, B4)
    assert canonical_form(L4) != canonical_form(B4)


def test_order_five_matches_oracle():
    assert enumerate_qw(5).forms == oracle_qw(5)
