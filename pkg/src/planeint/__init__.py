"""Exact arithmetic, classification and factorization in the three integer
rings of the plane: Gaussian (θ² = -1), hyperbolic (θ² = +1) and parabolic
(θ² = 0) integers."""

from .analytic import (
    OutOfSectorError,
    PolarForm,
    RealElement,
    euler_check,
    exp_theta,
    polar_decompose,
    pow_moivre,
)
from .classify import (
    IrreducibleForm,
    PrimeIntegerReport,
    classify,
    is_irreducible,
    is_prime,
    prime_integer_behavior,
)
from .core import (
    Classification,
    Element,
    KindMismatchError,
    NotInvertibleError,
    RingError,
    RingKind,
    WrongRingError,
    diagonal_coords,
    elliptic,
    format_element,
    from_diagonal_coords,
    hyperbolic,
    inner_product,
    lex_less,
    norm_data,
    normalize_associate,
    one,
    parabolic,
    theta,
    zero,
)
from .euclid import (
    DivResult,
    DivisorIsZeroDivisorError,
    FGIdeal,
    IdealDecomposition,
    d_ideal_is_prime_witness,
    decompose,
    div_rem,
    divides,
    ideal_contains,
)
from .factor import (
    Factorization,
    ZeroDivisorFactorizationError,
    diff_two_squares,
    extended_gcd,
    factor,
    int_factor,
    is_prime_int,
    split,
    sum_two_squares,
    two_adic_valuation,
)
from .oracle import (
    InfiniteDivisorSetError,
    OracleVerdict,
    Verdict,
    divisors,
    oracle_irreducible,
    oracle_prime,
)
from .quadratic import (
    GeneralParams,
    QuadraticPoly,
    canonicalize,
    classify_quadratic,
    general_mul,
    general_norm_trace,
)

__version__ = "0.1.0"

__all__ = [
    "Classification",
    "DivResult",
    "DivisorIsZeroDivisorError",
    "Element",
    "FGIdeal",
    "Factorization",
    "GeneralParams",
    "IdealDecomposition",
    "InfiniteDivisorSetError",
    "IrreducibleForm",
    "KindMismatchError",
    "NotInvertibleError",
    "OracleVerdict",
    "OutOfSectorError",
    "PolarForm",
    "PrimeIntegerReport",
    "QuadraticPoly",
    "RealElement",
    "RingError",
    "RingKind",
    "Verdict",
    "WrongRingError",
    "ZeroDivisorFactorizationError",
    "canonicalize",
    "classify",
    "classify_quadratic",
    "d_ideal_is_prime_witness",
    "decompose",
    "diagonal_coords",
    "diff_two_squares",
    "div_rem",
    "divides",
    "divisors",
    "elliptic",
    "euler_check",
    "exp_theta",
    "extended_gcd",
    "factor",
    "format_element",
    "from_diagonal_coords",
    "general_mul",
    "general_norm_trace",
    "hyperbolic",
    "ideal_contains",
    "inner_product",
    "int_factor",
    "is_irreducible",
    "is_prime",
    "is_prime_int",
    "lex_less",
    "norm_data",
    "normalize_associate",
    "one",
    "oracle_irreducible",
    "oracle_prime",
    "parabolic",
    "polar_decompose",
    "pow_moivre",
    "prime_integer_behavior",
    "split",
    "sum_two_squares",
    "theta",
    "two_adic_valuation",
    "zero",
]
