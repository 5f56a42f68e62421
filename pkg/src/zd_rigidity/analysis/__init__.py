"""Decision procedures on finitely presented dual modules."""

from zd_rigidity.analysis.connectedness import is_connected, verify_connectedness_certificate
from zd_rigidity.analysis.mixing import mixing_search, shell, verify_not_mixing
from zd_rigidity.analysis.structure import (
    fraction_field_rank,
    is_noetherian,
    is_torsion,
    is_zero_module,
    relation_rank,
)
from zd_rigidity.models.presentation import ModulePresentation

__all__ = [
    "ModulePresentation",
    "fraction_field_rank",
    "is_connected",
    "is_noetherian",
    "is_torsion",
    "is_zero_module",
    "mixing_search",
    "relation_rank",
    "shell",
    "verify_connectedness_certificate",
    "verify_not_mixing",
]
