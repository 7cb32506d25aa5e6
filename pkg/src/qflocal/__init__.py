"""Exact congruence counts and local densities for quadratic lattices.

The library computes finite-level representation counts r_m(t; L) and
their stabilised local densities for lattices assembled from the basic
dyadic blocks (split and anisotropic even planes, rank-one blocks, and
the anisotropic ternary lattice), together with a brute-force enumeration
oracle, an executable half-lift involution, convolution engines for
orthogonal sums, and rational generating series.  All arithmetic is exact.
"""

from .closed_counts import (
    count_h0,
    count_h1,
    count_l3,
    count_lattice,
    count_lattice_info,
    count_sum_squares,
    count_typeI,
    decompose_pow4,
    n3_mod8,
    sqrt_count_mod2,
    sum_squares_count,
)
from .compose import (
    Stratum,
    StratifiedRefusal,
    convolve_lattice,
    convolve_naive,
    convolve_stratified,
    tail_valuation_sum,
)
from .densities import (
    DensityValue,
    Diverges,
    NonStabilizationError,
    Oscillates,
    SingularTargetError,
    ThresholdInfo,
    VanishingRule,
    density,
    density_q,
    stable_threshold,
    vanishing_constraints,
)
from .genseries import RationalSeries, coefficient, series_h0, series_h1
from .halflift import (
    DescentReport,
    HalfLiftCertificate,
    verify_descent,
    verify_fibre_invariance,
    verify_half_lift,
)
from .lattice import (
    L3,
    LatticeError,
    LatticeParseError,
    LatticeSpec,
    ScaledH0,
    ScaledH1,
    TypeI,
    format_lattice,
    parse_lattice,
    q_value,
)
from .oracle import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    EnumBudget,
    count_enumerate,
    count_q_enumerate,
    count_sum_squares_enumerate,
)
from .padic import INFINITY, Target, is_prime, residue_valuation, unit_part, valuation

__version__ = "0.1.0"
