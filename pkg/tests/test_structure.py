import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qwalg.algebra import is_commutative, meet, star
from qwalg.catalog import boolean2, lukasiewicz_chain
from qwalg.errors import NotInFamilyError, PreconditionError
from qwalg.structure import (
    are_perspective,
    classify,
    enumerate_deductive_systems,
    enumerate_filters,
    extend_filter,
    generated_filter,
    is_commutative_filter,
    is_deductive_system,
    is_filter,
    is_ideal,
    is_maximal,
    is_prime,
    is_quasi_linear,
    is_strongly_maximal,
    is_weakly_linear,
    weakly_linear_identity_suite,
)
from qwalg.subsets import Subset


def S(A, *names):
    return Subset.of(A, names)


# -- naive oracle: definitions read literally, plain loops ---------------------


def naive_filter(A, members):
    if not members:
        return False
    T, O = A.arrow.tolist(), A.odot_table.tolist()
    return all(O[x][y] in members for x in members for y in members) and all(
        T[y][x] in members for x in members for y in range(A.n)
    )


def naive_ds(A, members):
    T = A.arrow.tolist()
    return A.one in members and all(
        y in members for x in members for y in range(A.n) if T[x][y] in members
    )


def all_subsets(n):
    for r in range(n + 1):
        for c in itertools.combinations(range(n), r):
            yield set(c)


def as_sorted(subsets):
    return sorted(subsets, key=lambda s: sum(1 << i for i in s))


def test_enumeration_matches_subset_scan(corpus):
    for name, A in corpus.items():
        want_f = as_sorted(s for s in all_subsets(A.n) if naive_filter(A, s))
        want_d = as_sorted(s for s in all_subsets(A.n) if naive_ds(A, s))
        assert [set(F) for F in enumerate_filters(A)] == want_f, name
        assert [set(F) for F in enumerate_deductive_systems(A)] == want_d, name


def test_predicates_match_subset_scan(om6, wl5):
    for A in (om6, wl5):
        for s in all_subsets(A.n):
            F = Subset.of(A, s)
            assert bool(is_filter(A, F)) == naive_filter(A, s)
            assert bool(is_deductive_system(A, F)) == naive_ds(A, s)


# -- worked examples ------------------------------------------------------------


def test_orthomodular_filters(om6):
    X = Subset.full(6)
    expected = [S(om6, "1"), S(om6, "a", "1"), S(om6, "b", "1"), S(om6, "c", "1"), S(om6, "d", "1"), X]
    assert enumerate_filters(om6) == expected
    assert enumerate_deductive_systems(om6) == [S(om6, "1"), X]


def test_filter_predicate_examples(om6):
    assert is_filter(om6, S(om6, "a", "1"))
    assert not is_filter(om6, S(om6, "a", "b"))
    assert not is_filter(om6, S(om6, "a", "b", "1"))
    v = is_filter(om6, Subset.empty(6))
    assert not v and v.witness == ("empty",)


def test_deductive_system_examples(om6):
    assert not is_deductive_system(om6, S(om6, "a", "1"))
    assert is_deductive_system(om6, S(om6, "1"))
    assert is_deductive_system(om6, Subset.full(6))


def test_ideal_examples(catalog, om6):
    for A in catalog.values():
        assert is_ideal(A, Subset.of(A, [A.zero]))
        assert is_ideal(A, Subset.full(A.n))
    # direct scan of both ideal conditions for {0, c}
    I = {om6.index("0"), om6.index("c")}
    T, LQ, s = om6.arrow, om6.leq_q_table, om6.star_vec
    closed = all(T[s[x], y] in I for x in I for y in I)
    down = all(x in I for y in I for x in range(6) if LQ[x, y])
    assert bool(is_ideal(om6, Subset.of(om6, I))) == (closed and down)


def test_small_enumerations(wl5):
    B = boolean2()
    assert enumerate_filters(B) == [S(B, "1"), Subset.full(2)]
    fs = enumerate_filters(wl5)
    assert S(wl5, "1") in fs and Subset.full(5) in fs
    for F, G in itertools.product(fs, fs):
        assert F & G in fs
    L3 = lukasiewicz_chain(3)
    assert enumerate_filters(L3) == enumerate_deductive_systems(L3)


def test_generated_filters(om6, catalog):
    assert generated_filter(om6, S(om6, "b")) == S(om6, "b", "1")
    for A in catalog.values():
        assert generated_filter(A, Subset.of(A, [A.one])) == Subset.of(A, [A.one])
        assert generated_filter(A, Subset.of(A, [A.zero])).is_full()
    with pytest.raises(PreconditionError):
        generated_filter(om6, Subset.empty(6))


def test_extend_filter(om6, catalog):
    assert extend_filter(om6, S(om6, "1"), "a") == S(om6, "a", "1")
    assert extend_filter(om6, S(om6, "a", "1"), "b").is_full()
    for A in catalog.values():
        for F in enumerate_filters(A):
            for x in F:
                assert extend_filter(A, F, x) == F


def test_maximality_examples(om6):
    assert is_maximal(om6, S(om6, "a", "1"), "filters")
    assert is_maximal(om6, S(om6, "1"), "deductive_systems")
    v = is_maximal(om6, S(om6, "1"), "filters")
    assert not v and v.witness[0] == "contained_in"
    with pytest.raises(NotInFamilyError):
        is_maximal(om6, S(om6, "a", "1"), "deductive_systems")


def test_strong_maximality_examples(om6, catalog):
    v = is_strongly_maximal(om6, S(om6, "a", "1"))
    assert not v
    assert not is_strongly_maximal(om6, S(om6, "1"))
    # b is idempotent and b* = d lies outside {a, 1}
    assert om6.name(star(om6, "b")) == "d"
    for A in catalog.values():
        assert is_strongly_maximal(A, Subset.full(A.n))


def test_prime_examples(om6, wl5, catalog):
    assert not is_prime(om6, S(om6, "1"))
    assert is_prime(wl5, S(wl5, "1"))
    for A in catalog.values():
        assert is_prime(A, Subset.full(A.n))


def test_perspectivity(om6, catalog):
    for A in catalog.values():
        for x in range(A.n):
            assert are_perspective(A, x, x)
            assert are_perspective(A, x, A.zero) == (x == A.zero)
            for y in range(A.n):
                assert are_perspective(A, x, y) == are_perspective(A, y, x)
                assert are_perspective(A, x, y) == are_perspective(A, star(A, x), star(A, y))
                if A.leq_table[x, y] and A.leq_table[y, x]:
                    assert are_perspective(A, x, y)
    assert are_perspective(om6, meet(om6, "a", "c"), meet(om6, "c", "a"))


def test_commutative_filters(om6, corpus):
    assert is_commutative_filter(om6, S(om6, "c", "1"))
    for A in corpus.values():
        for F in enumerate_filters(A):
            assert is_commutative_filter(A, F)


def test_commutative_filter_matches_scan(catalog):
    for A in catalog.values():
        T = A.arrow
        for s in all_subsets(A.n):
            literal = all(
                T[T[T[x, y], y], x] in s for x in range(A.n) for y in range(A.n) if T[y, x] in s
            )
            assert bool(is_commutative_filter(A, Subset.of(A, s))) == literal


def test_linearity_examples(om6, wl5):
    assert is_weakly_linear(wl5)
    assert is_quasi_linear(wl5)
    v = is_weakly_linear(om6)
    assert not v and v.witness[1:] == ("a", "c")
    assert is_weakly_linear(boolean2())
    assert is_quasi_linear(lukasiewicz_chain(3))
    # quasi-linearity of the orthomodular example, read literally over all pairs
    LQ, LE = om6.leq_q_table, om6.leq_table
    literal = all(LQ[x, y] or (LE[y, x] and x != y) for x in range(6) for y in range(6))
    assert bool(is_quasi_linear(om6)) == literal


def test_weakly_linear_identity_suite(wl5, om6):
    results = weakly_linear_identity_suite(wl5)
    assert len(results) == 4 and all(r.holds for r in results)
    with pytest.raises(PreconditionError):
        weakly_linear_identity_suite(om6)


# -- structural laws over the corpus ----------------------------------------------


def test_structure_laws(corpus):
    for name, A in corpus.items():
        filters = enumerate_filters(A)
        systems = enumerate_deductive_systems(A)
        assert set(systems) <= set(filters), name
        T = A.arrow
        for F in filters:
            assert A.one in F
            assert all(T[x, y] in F for x in F for y in F)
            if is_strongly_maximal(A, F) and not F.is_full():
                assert is_maximal(A, F, "filters")
            if any(star(A, x) == x for x in F):
                assert F.is_full()
        if is_commutative(A):
            assert filters == systems
        if filters == systems:
            for F in filters:
                if not F.is_full() and is_maximal(A, F, "filters"):
                    assert is_strongly_maximal(A, F)


def test_perspective_closed_filters_are_deductive_systems(catalog):
    for A in catalog.values():
        P = [[are_perspective(A, x, y) for y in range(A.n)] for x in range(A.n)]
        for s in all_subsets(A.n):
            F = Subset.of(A, s)
            closed = all(y in s for x in s for y in range(A.n) if P[x][y])
            assert bool(is_deductive_system(A, F)) == (bool(is_filter(A, F)) and closed)


def test_classification_record(om6):
    c = classify(om6, S(om6, "a", "1"))
    assert c.is_filter and not c.is_deductive_system
    assert c.is_maximal_filter and not c.is_strongly_maximal
    assert c.witnesses["strongly_maximal"]
    d = c.to_dict()
    assert d["members"] == ["a", "1"]


@st.composite
def algebra_and_subsets(draw):
    from qwalg.catalog import named_catalog

    A = draw(st.sampled_from(list(named_catalog().values())))
    bits = st.integers(min_value=1, max_value=(1 << A.n) - 1)
    return A, Subset(draw(bits), A.n), Subset(draw(bits), A.n)


@settings(max_examples=150, deadline=None)
@given(algebra_and_subsets())
def test_generated_filter_is_a_closure(data):
    A, Y, Z = data
    G = generated_filter(A, Y)
    assert Y.issubset(G)
    assert is_filter(A, G)
    assert generated_filter(A, G) == G
    assert G.issubset(generated_filter(A, Y | Z))
    assert (generated_filter(A, Y) == Y) == bool(is_filter(A, Y))
