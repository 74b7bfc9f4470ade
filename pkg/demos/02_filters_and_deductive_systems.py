"""Filters, deductive systems and the maximality notions."""

# %%
from qwalg import catalog
from qwalg.structure import (
    classify,
    enumerate_deductive_systems,
    enumerate_filters,
    generated_filter,
    is_quasi_linear,
    is_weakly_linear,
)
from qwalg.subsets import Subset

A = catalog.orthomodular6()

# %% Every filter, with its classification flags.
for F in enumerate_filters(A):
    c = classify(A, F)
    flags = [k for k in ("is_deductive_system", "is_maximal_filter", "is_strongly_maximal", "is_prime") if getattr(c, k)]
    print(F.names(A), flags)

print("deductive systems:", [F.names(A) for F in enumerate_deductive_systems(A)])

# %% {a, 1} is maximal, but b is idempotent with b* = d outside it, so not strongly maximal.
c = classify(A, Subset.of(A, ["a", "1"]))
print("maximal:", c.is_maximal_filter, " strongly maximal:", c.is_strongly_maximal, c.witnesses["strongly_maximal"])

# %% Generated filters.
print(generated_filter(A, Subset.of(A, ["b"])).names(A))
print(generated_filter(A, Subset.of(A, ["a", "c"])).names(A))

# %% Linearity on both worked examples.
for B in (A, catalog.weakly_linear5()):
    wl, ql = is_weakly_linear(B), is_quasi_linear(B)
    print(B.n, "weakly linear", bool(wl), wl.witness, " quasi-linear", bool(ql), ql.witness)
