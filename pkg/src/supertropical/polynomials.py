"""Univariate tropical polynomials over the ghost-layered max-plus scalars.

A polynomial is a finite map from degree to a non-zero scalar
coefficient; evaluation takes the supertropical sum of ``coeff * x**d``
over the support, i.e. the dominant monomial wins and ties ghost.

The essential form keeps exactly the monomials that attain the maximum
somewhere: the ones lying on the upper concave envelope of the points
``(degree, magnitude)``.  A monomial that merely ties the envelope at a
single point still dominates there and is kept.

Corner roots sit where dominance passes from one essential monomial to
the next; their multiplicity is the degree gap.  Where a ghost essential
monomial dominates, every point of its dominance stretch is a root; the
stretch is reported as a closed interval rather than enumerated.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

from .scalars import ONE, ZERO, Scalar, parse_scalar, tangible

__all__ = [
    "TropicalPolynomial",
    "CornerRoot",
    "GhostStretch",
    "RootProfile",
    "PrimaryFactorization",
    "expand_primary",
    "parse_polynomial",
    "PolynomialParseError",
]


class PolynomialParseError(ValueError):
    """Raised for malformed polynomial text."""


@dataclass(frozen=True)
class CornerRoot:
    """A root where two essential monomials exchange dominance."""

    value: Scalar  # tangible
    multiplicity: int
    high_degree: int  # degree of the essential monomial dominating above the root
    low_degree: int  # degree of the essential monomial dominating below it


@dataclass(frozen=True)
class GhostStretch:
    """Closed interval of magnitudes on which a ghost monomial dominates.

    ``None`` endpoints are unbounded.  Every point of the stretch is a
    root, so the interval is reported instead of an enumeration.
    """

    low: Scalar | None
    high: Scalar | None
    degree: int  # degree of the dominating ghost monomial


@dataclass(frozen=True)
class RootProfile:
    """Corner roots, ghost-dominance stretches, and the zero-root order."""

    corners: tuple[CornerRoot, ...]
    ghost_stretches: tuple[GhostStretch, ...]
    zero_multiplicity: int  # lowest essential degree; order of the zero root


@dataclass(frozen=True)
class PrimaryFactorization:
    """Factorization of a polynomial function into linear-power factors.

    ``factors`` pairs each root (possibly zero) with its multiplicity,
    listed by strictly decreasing magnitude; ``scale`` is the leading
    coefficient.  ``complete`` is False when an essential coefficient is
    ghost, in which case the ghost stretches are not representable as
    primary factors and the factorization only captures the corner data.
    """

    scale: Scalar
    factors: tuple[tuple[Scalar, int], ...]
    complete: bool

    def expand(self) -> "TropicalPolynomial":
        return expand_primary(self.factors, self.scale)


class TropicalPolynomial:
    """Immutable univariate polynomial with non-zero scalar coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Mapping[int, Scalar]):
        coeffs = {}
        for degree, coeff in coefficients.items():
            if not isinstance(degree, int) or degree < 0:
                raise ValueError(f"degree must be a non-negative integer, got {degree!r}")
            if not isinstance(coeff, Scalar):
                raise TypeError("coefficients must be Scalar values")
            if not coeff.is_zero:
                coeffs[degree] = coeff
        self._coeffs = coeffs

    # -- construction helpers ----------------------------------------------

    @classmethod
    def constant(cls, c: Scalar) -> "TropicalPolynomial":
        return cls({0: c})

    @classmethod
    def from_root(cls, r: Scalar) -> "TropicalPolynomial":
        """The linear factor ``x + r``; ``r`` zero gives plain ``x``."""
        return cls({1: ONE, 0: r})

    # -- basic structure -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    @property
    def degree(self) -> int:
        if not self._coeffs:
            raise ValueError("the zero polynomial has no degree")
        return max(self._coeffs)

    @property
    def support(self) -> tuple[int, ...]:
        """Degrees with non-zero coefficient, descending."""
        return tuple(sorted(self._coeffs, reverse=True))

    def coefficient(self, degree: int) -> Scalar:
        return self._coeffs.get(degree, ZERO)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TropicalPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __repr__(self) -> str:
        return f"TropicalPolynomial({self.text()!r})"

    # -- semiring operations -------------------------------------------------

    def evaluate(self, x: Scalar) -> Scalar:
        result = ZERO
        for degree, coeff in self._coeffs.items():
            result = result + coeff * x**degree
        return result

    def __add__(self, other: "TropicalPolynomial") -> "TropicalPolynomial":
        coeffs = dict(self._coeffs)
        for degree, coeff in other._coeffs.items():
            coeffs[degree] = coeffs.get(degree, ZERO) + coeff
        return TropicalPolynomial(coeffs)

    def __mul__(self, other: "TropicalPolynomial") -> "TropicalPolynomial":
        coeffs: dict[int, Scalar] = {}
        for d1, c1 in self._coeffs.items():
            for d2, c2 in other._coeffs.items():
                degree = d1 + d2
                coeffs[degree] = coeffs.get(degree, ZERO) + c1 * c2
        return TropicalPolynomial(coeffs)

    def __pow__(self, m: int) -> "TropicalPolynomial":
        if not isinstance(m, int) or m < 0:
            raise ValueError(f"exponent must be a non-negative integer, got {m!r}")
        result = TropicalPolynomial.constant(ONE)
        for _ in range(m):
            result = result * self
        return result

    def scale(self, c: Scalar) -> "TropicalPolynomial":
        return TropicalPolynomial({d: coeff * c for d, coeff in self._coeffs.items()})

    def compose_power(self, m: int) -> "TropicalPolynomial":
        """Substitute ``x**m`` for ``x``: degree d becomes m*d."""
        if not isinstance(m, int) or m < 1:
            raise ValueError(f"power must be a positive integer, got {m!r}")
        return TropicalPolynomial({d * m: c for d, c in self._coeffs.items()})

    def reverse_scale(self, c: Scalar) -> "TropicalPolynomial":
        """``c * x**n * f(1/x)``: coefficient of degree d moves to n-d, then scales."""
        n = self.degree
        return TropicalPolynomial({n - d: coeff * c for d, coeff in self._coeffs.items()})

    def as_tangible(self) -> "TropicalPolynomial":
        """Coefficient-wise tangible representative."""
        return TropicalPolynomial({d: c.as_tangible() for d, c in self._coeffs.items()})

    def ghost_surpasses(self, other: "TropicalPolynomial") -> bool:
        """Coefficient-wise surpassing at every degree (absent = zero)."""
        degrees = set(self._coeffs) | set(other._coeffs)
        return all(self.coefficient(d).ghost_surpasses(other.coefficient(d)) for d in degrees)

    # -- essential form and roots ---------------------------------------------

    def essential(self) -> "TropicalPolynomial":
        """Keep exactly the monomials that attain the maximum somewhere."""
        points = [(d, self._coeffs[d].value) for d in self.support]
        essential: dict[int, Scalar] = {}
        for d, v in points:
            dominated = False
            for dl, vl in points:
                if dl <= d:
                    continue
                for dr, vr in points:
                    if dr >= d:
                        continue
                    # Chord from (dl, vl) to (dr, vr) evaluated at d.
                    chord = vl + (vr - vl) * Fraction(dl - d, dl - dr)
                    if chord > v:
                        dominated = True
                        break
                if dominated:
                    break
            if not dominated:
                essential[d] = self._coeffs[d]
        return TropicalPolynomial(essential)

    def root_profile(self) -> RootProfile:
        """Corner roots, ghost stretches, and zero-root order of this polynomial."""
        ess = self.essential()
        if ess.is_zero:
            return RootProfile((), (), 0)
        degrees = ess.support
        coeffs = [ess.coefficient(d) for d in degrees]
        # Tie magnitude between consecutive essential monomials.
        ties: list[Fraction | int] = []
        for j in range(len(degrees) - 1):
            dl, dr = degrees[j], degrees[j + 1]
            vl, vr = coeffs[j].value, coeffs[j + 1].value
            ties.append(Fraction(vr - vl, dl - dr))
        for j in range(len(ties) - 1):
            assert ties[j] >= ties[j + 1], "essential support is not concave"
        corners: list[CornerRoot] = []
        j = 0
        while j < len(ties):
            k = j
            while k + 1 < len(ties) and ties[k + 1] == ties[j]:
                k += 1
            corners.append(
                CornerRoot(
                    value=tangible(ties[j]),
                    multiplicity=degrees[j] - degrees[k + 1],
                    high_degree=degrees[j],
                    low_degree=degrees[k + 1],
                )
            )
            j = k + 1
        stretches: list[GhostStretch] = []
        for idx, coeff in enumerate(coeffs):
            if not coeff.is_ghost:
                continue
            high = tangible(ties[idx - 1]) if idx > 0 else None
            low = tangible(ties[idx]) if idx < len(ties) else None
            stretches.append(GhostStretch(low=low, high=high, degree=degrees[idx]))
        return RootProfile(tuple(corners), tuple(stretches), degrees[-1])

    def corner_roots(self) -> tuple[CornerRoot, ...]:
        return self.root_profile().corners

    def is_root(self, r: Scalar) -> bool:
        """True when evaluation at r lands in the ghost-or-zero part."""
        return self.evaluate(r).is_ghost_or_zero

    def factor(self) -> PrimaryFactorization:
        """Factor the essential form into linear-power factors.

        Complete (and functionally faithful) exactly when every essential
        coefficient is tangible; otherwise the ghost stretches escape the
        factorization and the result is flagged partial.
        """
        ess = self.essential()
        profile = self.root_profile()
        factors: list[tuple[Scalar, int]] = [
            (corner.value, corner.multiplicity) for corner in profile.corners
        ]
        if profile.zero_multiplicity > 0:
            factors.append((ZERO, profile.zero_multiplicity))
        complete = all(ess.coefficient(d).is_tangible for d in ess.support)
        return PrimaryFactorization(
            scale=ess.coefficient(ess.degree), factors=tuple(factors), complete=complete
        )

    # -- sampling ---------------------------------------------------------------

    def sample_points(self) -> tuple[Scalar, ...]:
        """Tangible probe points: corner roots, midpoints, and outer points."""
        roots = [c.value.value for c in self.corner_roots()]
        points: list = []
        if not roots:
            points = [0, 1, -1]
        else:
            points.append(roots[0] + 1)
            for j, r in enumerate(roots):
                points.append(r)
                if j + 1 < len(roots):
                    points.append(Fraction(r + roots[j + 1], 2))
            points.append(roots[-1] - 1)
        return tuple(tangible(p) for p in points)

    # -- text form ----------------------------------------------------------------

    def text(self) -> str:
        """Render as ``x^4 + 10x^3 + 74v x + 84``; the zero polynomial is ``-``."""
        if self.is_zero:
            return "-"
        terms = []
        for d in self.support:
            c = self._coeffs[d]
            if d == 0:
                terms.append(c.token())
                continue
            xpart = "x" if d == 1 else f"x^{d}"
            if c == ONE:
                terms.append(xpart)
            elif c.is_ghost:
                terms.append(f"{c.token()} {xpart}")
            else:
                terms.append(f"{c.token()}{xpart}")
        return " + ".join(terms)


_TERM_RE = re.compile(r"^(?P<c>[^x\s]+)?\s*(?P<x>x(?:\^(?P<e>\d+))?)?$")


def parse_polynomial(text: str) -> TropicalPolynomial:
    """Parse the polynomial text form; the inverse of :meth:`text`."""
    body = text.strip()
    if body == "-":
        return TropicalPolynomial({})
    coeffs: dict[int, Scalar] = {}
    for raw in body.split("+"):
        term = raw.strip()
        match = _TERM_RE.match(term)
        if not match or (match.group("c") is None and match.group("x") is None):
            raise PolynomialParseError(f"bad polynomial term {raw!r}")
        if match.group("x") is None:
            degree = 0
            coeff = parse_scalar(match.group("c"))
        else:
            degree = int(match.group("e") or 1)
            coeff = parse_scalar(match.group("c")) if match.group("c") else ONE
        coeffs[degree] = coeffs.get(degree, ZERO) + coeff
    return TropicalPolynomial(coeffs)


def expand_primary(
    factors: Iterable[tuple[Scalar, int]], scale: Scalar = ONE
) -> TropicalPolynomial:
    """Multiply out ``scale * prod (x + r)**m`` over the given factors."""
    result = TropicalPolynomial.constant(scale)
    for root, multiplicity in factors:
        result = result * TropicalPolynomial.from_root(root) ** multiplicity
    return result
