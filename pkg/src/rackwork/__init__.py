"""Verification toolkit for finite self-distributive structures.

Builds racks and weak racks on finite carriers, equips them with
trigonometric (cos/sin) and exponential maps, checks the Euler-style
diagonal formula and hyperbolic factorization, verifies quantum
Yang-Baxter equations and three-map systems exhaustively, enumerates all
racks on tiny carriers, and evaluates exact trace-product closed forms for
sums of powers of unimodular 2x2 rational matrices.
"""

from .errors import (
    CarrierMismatch,
    CarrierTooLarge,
    DeterminantNotOne,
    IndexOutOfRange,
    InvalidFile,
    KindMismatch,
    LevelTooLarge,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotLeftInvertible,
    RackworkError,
    SizeMismatch,
)
from .tables import (
    GroupTable,
    OpTable,
    apply,
    derive_diamond,
    is_left_invertible,
    make_op_table,
    validate_group,
)
from .structures import (
    RACK,
    UNCHECKED,
    WEAK_RACK,
    AxiomReport,
    Structure,
    boolean_weak_rack_implication,
    boolean_weak_rack_lattice,
    check_morphism,
    check_rack_axioms,
    check_weak_rack_axioms,
    conjugation_rack,
    direct_product,
    dual_rack,
    make_structure,
    product_with_dual,
    trivial_rack,
)
from .trig import (
    TrigContext,
    TrigReport,
    check_trig_properties,
    make_trig_context,
    t_cos,
    t_sin,
    trig_derived_rack,
)
from .euler import (
    PairMap,
    box_apply,
    check_euler_formula,
    check_exp_homomorphism,
    check_hyperbolic_factorization,
    cosh_map,
    exp_map,
    sinh_map,
)
from .ybe import (
    SystemReport,
    check_mixed,
    check_qybe,
    check_yb_system,
    lift,
    w_map,
    z_map,
)
from .matseries import (
    Mat2Q,
    Rat,
    SumResult,
    brute_sum,
    det,
    mat2,
    mat_mul,
    mat_pow,
    random_unimodular,
    trace,
    trace_product_sum,
)
from .census import EnumResult, enumerate_racks, enumerate_weak_racks

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
