"""Small named QW algebras used as fixtures, demos and regression corpus."""

from __future__ import annotations

from importlib import resources

import numpy as np

from .algebra import FiniteAlgebra, direct_product
from .textio import parse


def load_fixture(name: str) -> FiniteAlgebra:
    """Load one of the bundled ``.qw`` files by stem."""
    text = resources.files("qwalg.data").joinpath(f"{name}.qw").read_text()
    return parse(text).to_algebra()


def orthomodular6() -> FiniteAlgebra:
    """Six-element QW algebra from an orthomodular lattice; neither weakly linear nor Wajsberg."""
    return load_fixture("orthomodular6")


def weakly_linear5() -> FiniteAlgebra:
    """Five-element weakly linear and quasi-linear QW algebra whose quantum order is not total."""
    return load_fixture("weakly_linear5")


def trivial() -> FiniteAlgebra:
    return FiniteAlgebra(["0"], [[0]], 0, 0)


def lukasiewicz_chain(n: int) -> FiniteAlgebra:
    """The ``n``-element MV chain with ``i -> j = min(n-1, n-1-i+j)``."""
    if n < 2:
        raise ValueError("a Lukasiewicz chain needs at least two elements")
    i = np.arange(n)
    table = np.minimum(n - 1, n - 1 - i[:, None] + i[None, :])
    if n == 2:
        names = ["0", "1"]
    elif n == 3:
        names = ["0", "m", "1"]
    else:
        names = ["0"] + [f"{k}/{n - 1}" for k in range(1, n - 1)] + ["1"]
    return FiniteAlgebra(names, table, 0, n - 1)


def boolean2() -> FiniteAlgebra:
    return FiniteAlgebra(["0", "1"], [[1, 1], [0, 1]], 0, 1)


def boolean4() -> FiniteAlgebra:
    """Four-element Boolean algebra ``{0, a, b, 1}`` with ``a`` and ``b`` complementary."""
    prod = direct_product(boolean2(), boolean2())
    # product order is 0.0, 0.1, 1.0, 1.1
    return FiniteAlgebra(["0", "a", "b", "1"], prod.arrow, 0, 3)


def named_catalog() -> dict[str, FiniteAlgebra]:
    """The hand-built corpus, keyed by a short stable name."""
    return {
        "trivial": trivial(),
        "boolean2": boolean2(),
        "boolean4": boolean4(),
        "luk3": lukasiewicz_chain(3),
        "luk4": lukasiewicz_chain(4),
        "luk5": lukasiewicz_chain(5),
        "weakly_linear5": weakly_linear5(),
        "orthomodular6": orthomodular6(),
    }
