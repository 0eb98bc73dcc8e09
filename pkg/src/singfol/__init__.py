"""Exact invariants and formal linearization of polynomial singular
foliations at a fixed point of their generators.

Everything is computed over the rationals with exact arithmetic; every
structural claim (involutivity, membership certificates, nilpotency,
flatness of the constructed connection) is re-verified before being
reported.
"""

from .errors import (
    DimensionMismatch,
    InputRejected,
    InternalCheckError,
    ParseError,
    PreconditionError,
    SingfolError,
)
from .poly import INFINITE_ORDER, MINUS_INFINITY, Polynomial
from .vecfield import (
    PolyVectorField,
    euler_field,
    homogeneity_defect,
    homogeneity_defect_inverse,
    pushforward,
)
from .modalg import (
    FoliationModule,
    InvolutivityVerdict,
    MembershipCertificate,
    dense_membership,
    homogeneous_generators,
)
from .liealg import (
    CoboundaryResult,
    LeviData,
    LieAlgebra,
    Representation,
    Subspace,
    ce_solve,
    killing_form,
    levi_subalgebra,
    solvable_radical,
)
from .holonomy import (
    ArtinReesCertificate,
    IsotropyData,
    artin_rees_certify,
    holonomy_filtration,
    isotropy_algebra,
    linear_holonomy,
    semisimple_holonomy,
)
from .levinorm import (
    DefectReport,
    JetField,
    LeviConnection,
    RadicalDecomposition,
    improve_step,
    induced_isotropy_section,
    initial_connection,
    jet,
    linearize,
    radical_foliation,
    semidirect_product,
    verify_connection,
)
from .dsl import FoliationSpec, parse_field, parse_spec

__version__ = "0.1.0"
