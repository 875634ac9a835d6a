"""Exact scalars for the ghost-layered max-plus semiring.

An element carries an exact rational magnitude and a layer tag:

* tangible -- an invertible max-plus number (a maximum attained once),
* ghost    -- the non-invertible copy of a magnitude, produced whenever a
  maximum is attained more than once or inherited from a ghost factor,
* zero     -- the additive identity, printed ``-`` (stands for minus
  infinity).

Addition keeps the larger magnitude and ghosts ties; multiplication adds
magnitudes, and any ghost factor ghosts the product.  The multiplicative
identity is tangible ``0``.  Magnitudes are exact rationals, so every
comparison and every tie is decided without rounding.

Scalars are immutable values; all operations are pure.

Token syntax (used by matrix files and reports): tangible ``10`` or
``-3/2``, ghost ``10v`` or ``-3/2v``, zero ``-``.  Decimal literals such
as ``23.5`` are accepted on input and stored exactly.
"""

from __future__ import annotations

import enum
from fractions import Fraction

__all__ = [
    "Layer",
    "Scalar",
    "ZERO",
    "ONE",
    "tangible",
    "ghost",
    "parse_scalar",
    "NonInvertibleError",
    "ScalarParseError",
]


class NonInvertibleError(ArithmeticError):
    """Raised when inverting a ghost or zero element."""


class ScalarParseError(ValueError):
    """Raised for a malformed scalar token."""


class Layer(enum.Enum):
    TANGIBLE = "tangible"
    GHOST = "ghost"
    ZERO = "zero"


def _canonical(value):
    """Normalize a magnitude to int when integral, Fraction otherwise."""
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else value
    if isinstance(value, int):
        return value
    raise TypeError(f"magnitude must be an exact rational, got {type(value).__name__}")


class Scalar:
    """A single semiring element.  Treat instances as immutable."""

    __slots__ = ("value", "layer")

    def __init__(self, value, layer: Layer):
        # The zero element stores a canonical magnitude so that equality
        # of scalars is plain structural equality.
        self.value = 0 if layer is Layer.ZERO else _canonical(value)
        self.layer = layer

    # -- layer predicates ------------------------------------------------

    @property
    def is_tangible(self) -> bool:
        return self.layer is Layer.TANGIBLE

    @property
    def is_ghost(self) -> bool:
        return self.layer is Layer.GHOST

    @property
    def is_zero(self) -> bool:
        return self.layer is Layer.ZERO

    @property
    def is_ghost_or_zero(self) -> bool:
        """True when the element ghost-surpasses zero."""
        return self.layer is not Layer.TANGIBLE

    # -- semiring operations ---------------------------------------------

    def __add__(self, other: "Scalar") -> "Scalar":
        if self.layer is Layer.ZERO:
            return other
        if other.layer is Layer.ZERO:
            return self
        if self.value > other.value:
            return self
        if other.value > self.value:
            return other
        # Equal magnitudes: a repeated maximum is no longer invertible.
        if self.layer is Layer.GHOST:
            return self
        return Scalar(self.value, Layer.GHOST)

    def __mul__(self, other: "Scalar") -> "Scalar":
        if self.layer is Layer.ZERO or other.layer is Layer.ZERO:
            return ZERO
        if self.layer is Layer.GHOST or other.layer is Layer.GHOST:
            return Scalar(self.value + other.value, Layer.GHOST)
        return Scalar(self.value + other.value, Layer.TANGIBLE)

    def __pow__(self, k: int) -> "Scalar":
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"exponent must be a non-negative integer, got {k!r}")
        if k == 0:
            return ONE
        if self.layer is Layer.ZERO:
            return ZERO
        return Scalar(self.value * k, self.layer)

    def root(self, k: int) -> "Scalar":
        """The k-th root: divides the magnitude by k, keeping the layer."""
        if not isinstance(k, int) or k < 1:
            raise ValueError(f"root index must be a positive integer, got {k!r}")
        if self.layer is Layer.ZERO:
            return ZERO
        return Scalar(Fraction(self.value, k), self.layer)

    def inverse(self) -> "Scalar":
        """Multiplicative inverse; only tangible elements are invertible."""
        if self.layer is not Layer.TANGIBLE:
            raise NonInvertibleError(f"{self.token()} is not invertible")
        return Scalar(-self.value, Layer.TANGIBLE)

    # -- layer maps --------------------------------------------------------

    def as_ghost(self) -> "Scalar":
        """Ghost projection: re-layer tangibles to ghost, fix ghost and zero."""
        if self.layer is Layer.TANGIBLE:
            return Scalar(self.value, Layer.GHOST)
        return self

    def as_tangible(self) -> "Scalar":
        """Tangible representative: re-layer ghosts to tangible, fix zero.

        This is the canonical choice of invertible witness for a
        magnitude; it preserves the stored value exactly.
        """
        if self.layer is Layer.GHOST:
            return Scalar(self.value, Layer.TANGIBLE)
        return self

    # -- relations ---------------------------------------------------------

    def value_compare(self, other: "Scalar") -> int:
        """Total order on magnitudes, layer-blind, with zero minimal."""
        if self.layer is Layer.ZERO:
            return 0 if other.layer is Layer.ZERO else -1
        if other.layer is Layer.ZERO:
            return 1
        if self.value < other.value:
            return -1
        if self.value > other.value:
            return 1
        return 0

    def value_equiv(self, other: "Scalar") -> bool:
        """True when the two elements have the same magnitude (layer-blind)."""
        return self.value_compare(other) == 0

    def ghost_surpasses(self, other: "Scalar") -> bool:
        """True when self equals other up to a ghost supplement.

        Holds iff self == other, or self is ghost with magnitude at least
        that of other.
        """
        if self == other:
            return True
        if self.layer is Layer.GHOST:
            return self.value_compare(other) >= 0
        return False

    # -- value plumbing ----------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.layer is other.layer and self.value == other.value

    def __hash__(self) -> int:
        return hash((self.layer, self.value))

    def __repr__(self) -> str:
        return f"Scalar({self.token()!r})"

    def token(self) -> str:
        """Canonical text form: ``10``, ``-3/2``, ``10v``, ``-``."""
        if self.layer is Layer.ZERO:
            return "-"
        text = str(self.value)
        return text + "v" if self.layer is Layer.GHOST else text


ZERO = Scalar(0, Layer.ZERO)
ONE = Scalar(0, Layer.TANGIBLE)


def tangible(value) -> Scalar:
    return Scalar(value, Layer.TANGIBLE)


def ghost(value) -> Scalar:
    return Scalar(value, Layer.GHOST)


def parse_scalar(token: str) -> Scalar:
    """Parse a scalar token; the inverse of :meth:`Scalar.token`."""
    text = token.strip()
    if text == "-":
        return ZERO
    layer = Layer.TANGIBLE
    if text.endswith("v"):
        layer = Layer.GHOST
        text = text[:-1]
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ScalarParseError(f"bad scalar token {token!r}") from exc
    return Scalar(value, layer)
