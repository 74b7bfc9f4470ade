"""Enumerating QW algebras of small order up to isomorphism."""

# %%
import time

from qwalg import catalog
from qwalg.search import enumerate_qw, is_isomorphic, oracle_qw

for n in range(1, 8):
    t = time.perf_counter()
    rep = enumerate_qw(n)
    print(f"n={n}: {rep.count} models in {time.perf_counter() - t:.2f} s", rep.stats.to_dict())

# %% The brute-force oracle agrees at small orders.
for n in range(1, 5):
    print(n, enumerate_qw(n).forms == oracle_qw(n))

# %% Both worked examples turn up in the search.
for n, target in ((5, catalog.weakly_linear5()), (6, catalog.orthomodular6())):
    hits = [i for i, A in enumerate(enumerate_qw(n).models) if is_isomorphic(A, target)]
    print(n, "example found at", hits)

# %% Models come back in canonical layout: 0 first, 1 last.
for A in enumerate_qw(4).models:
    print(A.names, A.rows())
