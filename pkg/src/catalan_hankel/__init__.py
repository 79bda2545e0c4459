"""Exact Hankel determinants of Catalan convolution powers.

Builds the determinant tables D(n) of the shifted sequences, fits the
residue-class polynomials they satisfy, extracts generating-function
numerators, and mechanically checks every translation, pattern, degree,
leading-coefficient, and palindromicity claim the tables are expected to
obey.  All arithmetic is exact.
"""

from .analysis import (
    GFExtraction,
    PolyFit,
    PolyFitSpec,
    TranslationClaim,
    check_translation,
    expected_gf_degree,
    expected_pal_class,
    extract_gf,
    fit_subsequence_poly,
    product_formula,
)
from .conjectures import (
    Budget,
    ConjectureReport,
    ConjectureStatus,
    checker_ids,
    generate_table,
    run_checker,
)
from .hankel import DetTable, HankelKey, bareiss_det, cofactor_det, det_value, hankel_matrix
from .numbers import (
    bernoulli,
    binomial,
    cot_coefficient,
    double_factorial_product,
    odd_double_factorial,
    second_polygonal,
    tangent_coefficient,
)
from .ratpoly import (
    PalindromeClass,
    RatPoly,
    finite_differences,
    leading_info,
    newton_interpolate,
    palindrome_class,
)
from .sequences import (
    Family,
    SeqSpec,
    catalan_conv,
    central_binomial,
    conv_power_oracle,
    seq_prefix,
    seq_value,
)

__version__ = "0.1.0"
