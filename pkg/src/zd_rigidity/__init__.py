"""
zd-rigidity: topological rigidity of algebraic Z^d-actions.

A connected, mixing, Noetherian algebraic Z^d-action is described by its dual module over
the Laurent polynomial ring R_d = Z[u1^±1, ..., ud^±1]. The package decides the hypotheses
of the rigidity criterion on finite presentations of such modules, classifies their
entropy, and produces numerical evidence for the analytic steps of the argument.
"""

from zd_rigidity.errors import RigidityError
from zd_rigidity.models.presentation import ModulePresentation
from zd_rigidity.rigidity import hypothesis_trail, verdict

__version__ = "0.1.0"

__all__ = ["ModulePresentation", "RigidityError", "__version__", "hypothesis_trail", "verdict"]
