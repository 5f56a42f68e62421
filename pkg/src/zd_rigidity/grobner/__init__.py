"""Strong Gröbner bases over the integers and Laurent submodule operations."""

from zd_rigidity.grobner.basis import StrongGBasis, normal_form, strong_groebner
from zd_rigidity.grobner.orders import GREVLEX, LEX, MonomialOrder, OrderKind, elimination_order
from zd_rigidity.grobner.submodule import (
    SubmoduleHandle,
    is_member,
    module_colon,
    normalize_vector,
    saturate_vars,
    submodule_equal,
)

__all__ = [
    "GREVLEX",
    "LEX",
    "MonomialOrder",
    "OrderKind",
    "StrongGBasis",
    "SubmoduleHandle",
    "elimination_order",
    "is_member",
    "module_colon",
    "normal_form",
    "normalize_vector",
    "saturate_vars",
    "strong_groebner",
    "submodule_equal",
]
