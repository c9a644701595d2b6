"""Numerical semigroups, their toric ideals and determinantal presentations.

Quick tour::

    >>> from semigroup_forge import make_semigroup, pseudo_frobenius, construct_matrix
    >>> H = make_semigroup([6, 13, 40, 41])
    >>> pseudo_frobenius(H)
    [33, 34, 35]
    >>> print(construct_matrix(H).matrix)
    [X1^2 X2^3 X3 X4 / X2 X3 X4 X1^7]
"""

from .binomials import (
    Binomial,
    MonomialMatrix,
    WeightedRing,
    check_common_difference,
    format_monomial,
    is_in_defining_ideal,
    minors2,
    parse_binomial,
    parse_monomial,
)
from .enumeration import enumerate_semigroups, iter_semigroups
from .errors import *  # noqa: F401,F403
from .families import FamilyParams, family_j1, family_jn1
from .groebner import (
    Caps,
    GroebnerBasis,
    buchberger,
    is_groebner,
    nak_certificate,
    nakayama_dimension,
    normal_form,
    quotient_dimension,
    standard_monomials,
)
from .records import RunRecord, build_record, run_search
from .semigroup import (
    AperySet,
    Factorization,
    NumericalSemigroup,
    apery_set,
    factorizations,
    frobenius,
    gaps,
    make_semigroup,
    max_order,
    membership,
    pf_witness,
    pseudo_frobenius,
)
from .stretched import (
    ArithmeticPFProfile,
    NotStretched,
    StretchedProfile,
    arithmetic_pf_profile,
    is_stretched,
    stretched_oracle,
    stretched_profile,
)
from .structure import (
    DeterminantalCertificate,
    MainTheoremReport,
    classify_apery,
    complete_residue_check,
    construct_matrix,
    detect_j,
    find_template_matrix,
    verify_main_theorem,
)
from .tangent_cone import TangentConeReport, cm_by_formula, cm_by_sally, tangent_cone_report
from .toric import ToricGenerators, factorization_graph, is_minimal_presentation, minimal_generators

__version__ = "0.1.0"
