"""Congruences induced by deductive systems, and the quotients they give."""

# %%
from qwalg import catalog
from qwalg.congruence import (
    check_prime_iff_weakly_linear,
    check_strongly_maximal_iff_locally_finite,
    congruence_from_ds,
    congruence_roundtrip,
    element_order,
    quotient,
)
from qwalg.search import enumerate_qw
from qwalg.structure import enumerate_deductive_systems
from qwalg.subsets import Subset

B = catalog.boolean4()
F = Subset.of(B, ["a", "1"])
P = congruence_from_ds(B, F)
print("classes:", [[B.name(x) for x in b] for b in P.blocks()])

# %% The quotient is the two-element Boolean algebra.
Q = quotient(B, F)
print(Q.algebra.names, Q.algebra.rows())

# %% Orders of elements; the idempotent b of the orthomodular example never reaches 0.
A = catalog.orthomodular6()
print({A.name(x): element_order(A, x) for x in range(A.n)})

# %% Both sides of each equivalence, evaluated separately.
for F in enumerate_deductive_systems(A):
    for check in (check_strongly_maximal_iff_locally_finite(A, F), check_prime_iff_weakly_linear(A, F)):
        print(F.names(A), check.name, check.lhs, check.rhs)

# %% Congruences versus deductive systems: going congruence -> 1-class -> congruence
# can land on a strictly finer partition.
for A in enumerate_qw(4).models:
    for rt in congruence_roundtrip(A):
        if rt.relation != "equal":
            print(A.rows(), rt.congruence.blocks(), "->", rt.induced.blocks())
