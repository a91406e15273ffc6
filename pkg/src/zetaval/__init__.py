"""Validated enclosures and exact special values of zeta and L-functions.

Every numeric result is either an exact rational or an interval/box that
provably contains the true value, with all rounding directed outward and all
truncation errors bounded by closed-form remainder terms.
"""

from .characters import (
    DirichletCharacter,
    ParityFlag,
    char_value,
    gauss_sum,
    make_elementary,
    make_kronecker,
    parity,
)
from .dedekind import (
    DedekindParams,
    RealQuadraticField,
    dedekind_enclosure,
    hilbert_volume,
    ideal_count,
    siegel_zeta_minus1,
)
from .dirichlet import (
    L1Params,
    erfc_enclosure,
    exp_integral,
    l_one_quadratic,
    l_truncated,
)
from .elliptic import (
    ReductionInfo,
    ReductionKind,
    WeierstrassCurve,
    count_points,
    derive_quantities,
    hasse_weil_partial,
    local_zeta,
    trace,
)
from .errors import (
    DivisionByZeroInterval,
    DomainError,
    NotPrime,
    PoleProximity,
    SingularModel,
    UncertifiedDivisor,
    ZetavalError,
)
from .exact import (
    QuadraticDiscriminant,
    bernoulli,
    index_table,
    is_prime,
    kronecker,
    primes_up_to,
    primitive_root,
    sigma1,
)
from .functions import atan, cexp, cos, euler_gamma, exp, ln2, log, neg_power, pi, sin
from .interval import (
    CertifiedSign,
    ComplexBox,
    PrecisionContext,
    RealInterval,
    certify_nonzero,
)
from .zeta import (
    EMParams,
    Enclosure,
    ZetaEvenValue,
    functional_eq_check,
    moduli_volume,
    zeta_auto,
    zeta_em,
    zeta_even,
    zeta_neg,
)

__version__ = "0.1.0"

__all__ = [
    "CertifiedSign",
    "ComplexBox",
    "DedekindParams",
    "DirichletCharacter",
    "DivisionByZeroInterval",
    "DomainError",
    "EMParams",
    "Enclosure",
    "L1Params",
    "NotPrime",
    "ParityFlag",
    "PoleProximity",
    "PrecisionContext",
    "QuadraticDiscriminant",
    "RealInterval",
    "RealQuadraticField",
    "ReductionInfo",
    "ReductionKind",
    "SingularModel",
    "UncertifiedDivisor",
    "WeierstrassCurve",
    "ZetaEvenValue",
    "ZetavalError",
    "atan",
    "bernoulli",
    "cexp",
    "certify_nonzero",
    "char_value",
    "cos",
    "count_points",
    "dedekind_enclosure",
    "derive_quantities",
    "erfc_enclosure",
    "euler_gamma",
    "exp",
    "exp_integral",
    "functional_eq_check",
    "gauss_sum",
    "hasse_weil_partial",
    "hilbert_volume",
    "ideal_count",
    "index_table",
    "is_prime",
    "kronecker",
    "l_one_quadratic",
    "l_truncated",
    "ln2",
    "local_zeta",
    "log",
    "make_elementary",
    "make_kronecker",
    "moduli_volume",
    "neg_power",
    "parity",
    "pi",
    "primes_up_to",
    "primitive_root",
    "sigma1",
    "sin",
    "siegel_zeta_minus1",
    "trace",
    "zeta_auto",
    "zeta_em",
    "zeta_even",
    "zeta_neg",
]
