"""Exact computations with finite-dimensional bialgebroids and Hopf algebroids."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    AxiomError,
    CapExceeded,
    CorestFailure,
    DimensionMismatch,
    HopfGaloisError,
    IllDefined,
    InvalidIdealCoideal,
    InvalidSubring,
    InvariantViolation,
    NotLeftHopf,
    ParseError,
)
from .exactla import GF, QQ, Field, LinMap, QuotientSpace, Subspace, coequalizer, equalizer, image, kernel, rref, solve  # noqa: E402
from .algebroid import (  # noqa: E402
    BalancedTensor,
    BasedAlgebra,
    LeftBialgebroid,
    ValidationReport,
    balanced_tensor,
    bialgebroid,
    bplus,
    hopf_algebra,
    is_coideal,
    is_comodule_subring,
    is_left_ideal_coideal,
    takeuchi_subspace,
    validate_bialgebroid,
)
from .hopf import (  # noqa: E402
    HopfData,
    beta_map,
    check_bbeta_condition,
    hopf_data,
    invert_beta,
    purity_check,
    translation_map,
)
from .galois import (  # noqa: E402
    GaloisReport,
    build_xi,
    build_zeta,
    check_coequalizer_condition,
    check_connection,
    check_equalizer_condition,
    cotensor_square,
    enumerate_subspaces,
    phi,
    psi,
    verify_bijection,
)
from .rewrite import PresentedAlgebra, ReductionSystem, check_confluence, normal_form  # noqa: E402
from .casestudies import laurent_case_study, sl2_case_study  # noqa: E402
