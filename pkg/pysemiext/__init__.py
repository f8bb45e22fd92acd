from .semigroup import (
    FiniteSemigroup,
    validate,
    green,
    regularity,
    stability,
    direct_power,
    is_ideal,
    is_morphism,
)
from .partial import (
    PartialInjection,
    SymmetricInverseSemigroup,
    pi_compose,
    pi_invert,
    count_In,
    enumerate_In,
)
from .extension import (
    ExtElement,
    ExtensionSemigroup,
    ZERO,
    ext_product,
    ext_enumerate,
    materialize,
    j0_ideal,
    quotient,
    box,
    box_star,
    rank_ideal,
)
from .green_ext import char_R, char_L, char_H, char_D, char_J, cross_check_green, eggbox_export
from .bicyclic import BicyclicElement, BicyclicMonoid, bc_mul, bc_green, verify_h_example
from .ideal_series import IdealSeries, coord_bounded, rank_series, power_series_build, big_series_build, verify_series
from .zoo import builtin, load_cayley, parse_cayley, resolve
from . import errors

__all__ = [
    "FiniteSemigroup",
    "validate",
    "green",
    "regularity",
    "stability",
    "direct_power",
    "is_ideal",
    "is_morphism",
    "PartialInjection",
    "SymmetricInverseSemigroup",
    "pi_compose",
    "pi_invert",
    "count_In",
    "enumerate_In",
    "ExtElement",
    "ExtensionSemigroup",
    "ZERO",
    "ext_product",
    "ext_enumerate",
    "materialize",
    "j0_ideal",
    "quotient",
    "box",
    "box_star",
    "rank_ideal",
    "char_R",
    "char_L",
    "char_H",
    "char_D",
    "char_J",
    "cross_check_green",
    "eggbox_export",
    "BicyclicElement",
    "BicyclicMonoid",
    "bc_mul",
    "bc_green",
    "verify_h_example",
    "IdealSeries",
    "coord_bounded",
    "rank_series",
    "power_series_build",
    "big_series_build",
    "verify_series",
    "builtin",
    "load_cayley",
    "parse_cayley",
    "resolve",
    "errors",
]
