"""Axioms and derived operations on the six-element orthomodular example."""

# %%
from qwalg import catalog, join, leq, leq_q, meet, odot, star, verify_qw
from qwalg.laws import check_laws

A = catalog.orthomodular6()
print(A)
for row, name in zip(A.rows(), A.names):
    print(f"{name} -> ", " ".join(row))

# %% The axiom report records every class in check order.
rep = verify_qw(A)
for tag, status in rep.status.items():
    print(f"{tag:<14} {status}")
print("commutative:", rep.is_commutative, " wajsberg:", rep.is_wajsberg)

# %% Derived operations are table lookups.
print("b* =", A.name(star(A, "b")))
print("a join c =", A.name(join(A, "a", "c")))
print("a meet c =", A.name(meet(A, "a", "c")))
print("b . b =", A.name(odot(A, "b", "b")))

# %% The two orders differ: a and b sit below each other under the arrow order only.
print("a <= b:", leq(A, "a", "b"), " b <= a:", leq(A, "b", "a"))
print("b <=_Q a:", leq_q(A, "b", "a"))

# %% Break one entry and the report names the first failing triple.
T = A.arrow.copy()
T[A.index("a"), A.index("c")] = A.one
broken = type(A)(A.names, T, A.zero, A.one)
bad = verify_qw(broken)
print({t: w for t, w in bad.witnesses.items()})

# %% The identity battery runs every law the algebra's class supports.
results = check_laws(A)
print(sum(r.instances for r in results), "instances,", sum(not r.holds for r in results), "violations")
