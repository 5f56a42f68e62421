"""Named presentations of the standard example systems.

Each builder returns a fresh ModulePresentation. ``EXAMPLES`` maps the names accepted by
the CLI (``--example``) to the zero-argument builders.
"""

from collections.abc import Callable

from zd_rigidity.errors import PresentationError
from zd_rigidity.laurent.poly import LaurentPoly
from zd_rigidity.models.presentation import ModulePresentation

FRACTION_FIELD_NOTE = (
    "The fraction field F_d of R_d is torsion-free and its dual system has infinite entropy, "
    "yet it has no non-trivial periodic orbits, so every equivariant continuous map into it "
    "from a Noetherian system is trivial. F_d is not finitely generated and has no finite "
    "presentation, so the engine cannot represent it."
)


def ledrappier() -> ModulePresentation:
    """R_2/(1 + u1 + u2): the three-dot system x(m+1,n) + x(m,n) + x(m,n+1) = 0 in T."""
    return ModulePresentation.from_text(2, 1, ["1 + u1 + u2"], name="ledrappier")


def full_shift(d: int) -> ModulePresentation:
    """R_d with no relations: the shift on T^{Z^d}."""
    return ModulePresentation.create(d, 1, (), name=f"full-shift-{d}")


def torus_shift(d: int, n: int) -> ModulePresentation:
    """R_d^n with no relations: the shift on (T^n)^{Z^d}."""
    return ModulePresentation.create(d, n, (), name=f"torus-shift-{d}-{n}")


def diagonal_binomial() -> ModulePresentation:
    """R_2/(u1 u2 − 1): the shift by (1, 1) acts trivially, so the system is not mixing."""
    return ModulePresentation.from_text(2, 1, ["u1*u2 - 1"], name="diagonal-binomial")


def times_two() -> ModulePresentation:
    """R_1/(u − 2): the ×2 map on the 2-adic solenoid, entropy log 2."""
    return ModulePresentation.from_text(1, 1, ["u1 - 2"], name="times-two")


def two_torsion() -> ModulePresentation:
    """R_2/(2): the full Z/2 shift on (Z/2)^{Z^2}, a disconnected group."""
    return ModulePresentation.from_text(2, 1, ["2"], name="two-torsion")


def fraction_field(d: int) -> ModulePresentation:
    """Refuse the fraction field F_d, which has no finite presentation.

    Raises:
        PresentationError: Always
    """
    raise PresentationError(
        FRACTION_FIELD_NOTE, details={"d": str(d), "module": "fraction field"}
    )


def principal(f: LaurentPoly, name: str | None = None) -> ModulePresentation:
    """R_d/(f) for an arbitrary nonzero f."""
    return ModulePresentation.create(f.dim, 1, [[f]], name=name)


EXAMPLES: dict[str, Callable[[], ModulePresentation]] = {
    "ledrappier": ledrappier,
    "full-shift-1": lambda: full_shift(1),
    "full-shift-2": lambda: full_shift(2),
    "torus-shift-2-2": lambda: torus_shift(2, 2),
    "diagonal-binomial": diagonal_binomial,
    "times-two": times_two,
    "two-torsion": two_torsion,
}

__all__ = [
    "EXAMPLES",
    "FRACTION_FIELD_NOTE",
    "diagonal_binomial",
    "fraction_field",
    "full_shift",
    "ledrappier",
    "principal",
    "times_two",
    "torus_shift",
    "two_torsion",
]
