"""Finite quantum-Wajsberg algebras: axioms, filters, quotients and model search."""

from .algebra import (
    AxiomReport,
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
from .catalog import load_fixture, named_catalog
from .congruence import (
    Partition,
    QuotientAlgebra,
    EquivalenceCheck,
    check_prime_iff_weakly_linear,
    check_strongly_maximal_iff_locally_finite,
    congruence_from_ds,
    ds_from_congruence,
    element_order,
    enumerate_congruences,
    equiv_characterizations_agree,
    is_congruence,
    is_locally_finite,
    quotient,
)
from .errors import (
    AlgebraError,
    Contradiction,
    FalsificationError,
    GateError,
    NotInFamilyError,
    NotQWAlgebraError,
    ParseError,
    PreconditionError,
    QWError,
    WidthMismatchError,
)
from .laws import check_laws
from .search import (
    CanonicalForm,
    PartialTable,
    SearchReport,
    canonical_form,
    enumerate_qw,
    is_isomorphic,
    propagate,
)
from .structure import (
    classify,
    enumerate_deductive_systems,
    enumerate_filters,
    is_commutative_filter,
    is_deductive_system,
    is_filter,
    is_ideal,
    is_maximal,
    is_prime,
    is_quasi_linear,
    is_strongly_maximal,
    is_weakly_linear,
)
from .subsets import Subset, Verdict
from .textio import AlgebraDocument, dumps, load, parse, serialize

__version__ = "0.1.0"
