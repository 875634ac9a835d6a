"""Matrix algebra over the ghost-layered max-plus scalars.

The determinant is the permanent-style sum of permutation weights; it is
tangible exactly when a single all-tangible permutation strictly
dominates.  All dominant permutations are recorded, which is what the
singularity analysis and the index-set machinery of the characteristic
polynomial run on.

Determinants and characteristic coefficients are computed by exhaustive
enumeration under explicit size bounds: correctness over speed, with the
bound surfaced as a distinct error so callers can tell capability from
failure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial
from typing import Callable, Iterable, Sequence

from .polynomials import TropicalPolynomial
from .scalars import Layer, ONE, Scalar, ZERO, parse_scalar, tangible

__all__ = [
    "DEFAULT_DET_BOUND",
    "DEFAULT_CHAR_BOUND",
    "SizeBoundError",
    "MatrixParseError",
    "Matrix",
    "DetResult",
    "CharCoefficient",
    "CharReport",
    "StrongNonsingularity",
    "identity",
    "diagonal",
    "permutation_matrix",
    "generalized_permutation",
    "transposition",
    "row_multiplier",
    "gaussian",
    "eval_poly",
    "strong_nonsingularity",
    "format_matrix",
    "parse_matrix",
    "matrix_to_json",
    "matrix_from_json",
    "format_permutation",
    "mat_vec",
    "vec_add",
    "vec_scale",
    "vec_as_tangible",
    "vec_ghost_surpasses",
    "vec_is_ghost_or_zero",
    "from_columns",
]

DEFAULT_DET_BOUND = 10
DEFAULT_CHAR_BOUND = 8


class SizeBoundError(Exception):
    """The matrix exceeds the configured brute-force enumeration bound."""

    def __init__(self, n: int, bound: int, what: str):
        super().__init__(f"{what} on a {n}x{n} matrix exceeds the bound {bound}")
        self.n = n
        self.bound = bound


class MatrixParseError(ValueError):
    """Raised for malformed matrix text or JSON."""


class Matrix:
    """Dense rectangular matrix of scalars.  Treat instances as immutable."""

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, entries: Iterable[Iterable[Scalar]]):
        grid = tuple(tuple(row) for row in entries)
        if not grid or not grid[0]:
            raise ValueError("matrix needs at least one row and one column")
        width = len(grid[0])
        for row in grid:
            if len(row) != width:
                raise ValueError("matrix rows have unequal lengths")
            for entry in row:
                if not isinstance(entry, Scalar):
                    raise TypeError("matrix entries must be Scalar values")
        self.rows = len(grid)
        self.cols = width
        self._e = grid

    # -- structure ----------------------------------------------------------

    def __getitem__(self, index: tuple[int, int]) -> Scalar:
        i, j = index
        return self._e[i][j]

    def row(self, i: int) -> tuple[Scalar, ...]:
        return self._e[i]

    def column(self, j: int) -> tuple[Scalar, ...]:
        return tuple(row[j] for row in self._e)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def _require_square(self, what: str) -> int:
        if not self.is_square:
            raise ValueError(f"{what} requires a square matrix, got {self.rows}x{self.cols}")
        return self.rows

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._e == other._e

    def __hash__(self) -> int:
        return hash(self._e)

    def __repr__(self) -> str:
        return f"Matrix({format_matrix(self)!r})"

    def _map(self, fn: Callable[[Scalar], Scalar]) -> "Matrix":
        return Matrix(tuple(fn(x) for x in row) for row in self._e)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("matrix addition needs equal shapes")
        return Matrix(
            tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self._e, other._e)
        )

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("matrix product needs compatible shapes")
        cols = [other.column(j) for j in range(other.cols)]
        out = []
        for row in self._e:
            out_row = []
            for col in cols:
                acc = ZERO
                for a, b in zip(row, col):
                    acc = acc + a * b
                out_row.append(acc)
            out.append(tuple(out_row))
        return Matrix(out)

    def __pow__(self, m: int) -> "Matrix":
        n = self._require_square("matrix power")
        if not isinstance(m, int) or m < 0:
            raise ValueError(f"matrix power must be a non-negative integer, got {m!r}")
        result = identity(n)
        base = self
        while m:
            if m & 1:
                result = result * base
            m >>= 1
            if m:
                base = base * base
        return result

    def scale(self, c: Scalar) -> "Matrix":
        return self._map(lambda x: c * x)

    def transpose(self) -> "Matrix":
        return Matrix(tuple(self.column(j) for j in range(self.cols)))

    def trace(self) -> Scalar:
        n = self._require_square("trace")
        acc = ZERO
        for i in range(n):
            acc = acc + self._e[i][i]
        return acc

    def as_ghost(self) -> "Matrix":
        return self._map(Scalar.as_ghost)

    def as_tangible(self) -> "Matrix":
        return self._map(Scalar.as_tangible)

    def ghost_surpasses(self, other: "Matrix") -> bool:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("surpassing needs equal shapes")
        return all(
            a.ghost_surpasses(b) for ra, rb in zip(self._e, other._e) for a, b in zip(ra, rb)
        )

    def value_equiv(self, other: "Matrix") -> bool:
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        return all(
            a.value_equiv(b) for ra, rb in zip(self._e, other._e) for a, b in zip(ra, rb)
        )

    def is_ghost_or_zero(self) -> bool:
        """True when every entry is ghost or zero."""
        return all(x.is_ghost_or_zero for row in self._e for x in row)

    # -- determinant and friends -------------------------------------------------

    def minor(self, r: int, c: int) -> "Matrix":
        """Delete row r and column c."""
        return Matrix(
            tuple(x for j, x in enumerate(row) if j != c)
            for i, row in enumerate(self._e)
            if i != r
        )

    def determinant(self, bound: int = DEFAULT_DET_BOUND) -> "DetResult":
        n = self._require_square("determinant")
        if n > bound:
            raise SizeBoundError(n, bound, "determinant")
        best = None
        dominant: list[tuple[tuple[int, ...], bool]] = []
        for perm in itertools.permutations(range(n)):
            value = 0
            ghostly = False
            dead = False
            for i, j in enumerate(perm):
                s = self._e[i][j]
                if s.layer is Layer.ZERO:
                    dead = True
                    break
                value = value + s.value
                if s.layer is Layer.GHOST:
                    ghostly = True
            if dead:
                continue
            if best is None or value > best:
                best = value
                dominant = [(perm, ghostly)]
            elif value == best:
                dominant.append((perm, ghostly))
        if best is None:
            return DetResult(ZERO, (), False)
        if len(dominant) == 1:
            perm, ghostly = dominant[0]
            value = Scalar(best, Layer.GHOST if ghostly else Layer.TANGIBLE)
            return DetResult(value, (perm,), not ghostly)
        return DetResult(Scalar(best, Layer.GHOST), tuple(p for p, _ in dominant), False)

    def det_by_expansion(self) -> Scalar:
        """Determinant by expansion along the first row; the cross-oracle."""
        n = self._require_square("determinant")
        if n == 1:
            return self._e[0][0]
        acc = ZERO
        for j in range(n):
            entry = self._e[0][j]
            if entry.is_zero:
                continue
            acc = acc + entry * self.minor(0, j).det_by_expansion()
        return acc

    def adjoint(self, bound: int = DEFAULT_DET_BOUND) -> "Matrix":
        """Entry (i, j) is the determinant of the (j, i) minor."""
        n = self._require_square("adjoint")
        if n > bound:
            raise SizeBoundError(n, bound, "adjoint")
        if n == 1:
            return Matrix(((ONE,),))
        return Matrix(
            tuple(self.minor(j, i).determinant(bound).value for j in range(n))
            for i in range(n)
        )

    def quasi_inverse(self, bound: int = DEFAULT_DET_BOUND) -> "Matrix":
        """The adjoint scaled by the inverse determinant; needs a tangible determinant."""
        det = self.determinant(bound)
        return self.adjoint(bound).scale(det.value.inverse())

    def char_poly(self, bound: int = DEFAULT_CHAR_BOUND) -> "CharReport":
        """Characteristic coefficients with their dominant subset-permutations.

        The k-th coefficient is the best weight over all permutations of
        all k-subsets of indices (the principal k-minors pooled together).
        """
        n = self._require_square("characteristic polynomial")
        if n > bound:
            raise SizeBoundError(n, bound, "characteristic polynomial")
        coefficients = [CharCoefficient(ONE, (((), ()),))]
        for k in range(1, n + 1):
            best = None
            dominant: list[tuple[tuple[int, ...], tuple[int, ...], bool]] = []
            for subset in itertools.combinations(range(n), k):
                for images in itertools.permutations(subset):
                    value = 0
                    ghostly = False
                    dead = False
                    for i, j in zip(subset, images):
                        s = self._e[i][j]
                        if s.layer is Layer.ZERO:
                            dead = True
                            break
                        value = value + s.value
                        if s.layer is Layer.GHOST:
                            ghostly = True
                    if dead:
                        continue
                    if best is None or value > best:
                        best = value
                        dominant = [(subset, images, ghostly)]
                    elif value == best:
                        dominant.append((subset, images, ghostly))
            if best is None:
                coefficients.append(CharCoefficient(ZERO, ()))
            elif len(dominant) == 1:
                subset, images, ghostly = dominant[0]
                value = Scalar(best, Layer.GHOST if ghostly else Layer.TANGIBLE)
                coefficients.append(CharCoefficient(value, ((subset, images),)))
            else:
                value = Scalar(best, Layer.GHOST)
                coefficients.append(
                    CharCoefficient(value, tuple((s, im) for s, im, _ in dominant))
                )
        return CharReport(n, tuple(coefficients))

    # -- structural predicates ------------------------------------------------------

    def is_nonsingular(self, bound: int = DEFAULT_DET_BOUND) -> bool:
        return self.determinant(bound).value.is_tangible

    def is_strictly_singular(self, bound: int = DEFAULT_DET_BOUND) -> bool:
        return self.determinant(bound).value.is_zero

    def is_definite(self, bound: int = DEFAULT_DET_BOUND) -> bool:
        """Nonsingular with determinant 0 attained on an all-0 diagonal."""
        n = self._require_square("definiteness")
        if any(self._e[i][i] != ONE for i in range(n)):
            return False
        det = self.determinant(bound)
        return det.value == ONE

    def is_diagonally_dominant(self, bound: int = DEFAULT_DET_BOUND) -> bool:
        """Nonsingular with the diagonal as the dominant permutation."""
        det = self.determinant(bound)
        if not det.value.is_tangible:
            return False
        return det.dominant_permutations[0] == tuple(range(self.rows))

    def is_quasi_zero(self) -> bool:
        """Zero diagonal, ghost-or-zero off-diagonal."""
        n = self._require_square("quasi-zero check")
        for i in range(n):
            for j in range(n):
                if i == j:
                    if not self._e[i][j].is_zero:
                        return False
                elif not self._e[i][j].is_ghost_or_zero:
                    return False
        return True

    def is_quasi_identity(self, bound: int = DEFAULT_DET_BOUND) -> bool:
        """Nonsingular, multiplicatively idempotent, identity plus quasi-zero."""
        n = self._require_square("quasi-identity check")
        for i in range(n):
            for j in range(n):
                if i == j:
                    if self._e[i][j] != ONE:
                        return False
                elif not self._e[i][j].is_ghost_or_zero:
                    return False
        if not self.is_nonsingular(bound):
            return False
        return self * self == self


@dataclass(frozen=True)
class DetResult:
    """Determinant value plus every permutation attaining its magnitude."""

    value: Scalar
    dominant_permutations: tuple[tuple[int, ...], ...]
    unique_tangible: bool

    @property
    def nonsingular(self) -> bool:
        return self.value.is_tangible

    @property
    def strictly_singular(self) -> bool:
        return self.value.is_zero


@dataclass(frozen=True)
class CharCoefficient:
    """One characteristic coefficient with its dominant (subset, images) pairs."""

    value: Scalar
    dominant: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]

    @property
    def index_set(self) -> tuple[int, ...] | None:
        """The dominant index subset, when it is unambiguous.

        A tangible coefficient always has exactly one dominant pair; a
        ghost coefficient may still be carried by a single subset (via
        several permutations or a ghost entry), in which case that subset
        is reported.  Ambiguous or zero coefficients report None.
        """
        subsets = {pair[0] for pair in self.dominant}
        if len(subsets) != 1:
            return None
        return next(iter(subsets))


@dataclass(frozen=True)
class CharReport:
    """Characteristic polynomial data for an n x n matrix."""

    size: int
    coefficients: tuple[CharCoefficient, ...]  # index k = 0..n

    def polynomial(self) -> TropicalPolynomial:
        n = self.size
        return TropicalPolynomial(
            {n - k: coeff.value for k, coeff in enumerate(self.coefficients)}
        )

    @property
    def trace(self) -> Scalar:
        return self.coefficients[1].value

    @property
    def determinant_value(self) -> Scalar:
        return self.coefficients[self.size].value


@dataclass(frozen=True)
class StrongNonsingularity:
    """Whether every checked power stays nonsingular, and how far we looked."""

    holds: bool
    checked_up_to: int
    failed_power: int | None
    cap: int


def strong_nonsingularity(
    matrix: Matrix, m_max: int | None = None, bound: int = DEFAULT_DET_BOUND
) -> StrongNonsingularity:
    """Check nonsingularity of all powers up to a cap (default min(n!, 720))."""
    n = matrix._require_square("strong nonsingularity")
    cap = m_max if m_max is not None else min(factorial(n), 720)
    power = identity(n)
    for m in range(1, cap + 1):
        power = power * matrix
        if not power.determinant(bound).value.is_tangible:
            return StrongNonsingularity(False, m, m, cap)
    return StrongNonsingularity(True, cap, None, cap)


# -- constructors ---------------------------------------------------------------


def identity(n: int) -> Matrix:
    if n < 1:
        raise ValueError("identity needs n >= 1")
    return Matrix(
        tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)
    )


def diagonal(entries: Sequence[Scalar]) -> Matrix:
    n = len(entries)
    return Matrix(
        tuple(entries[i] if i == j else ZERO for j in range(n)) for i in range(n)
    )


def permutation_matrix(perm: Sequence[int]) -> Matrix:
    """Matrix with entry 0 at (i, perm[i]) and zero elsewhere."""
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError(f"{perm!r} is not a permutation of 0..{n - 1}")
    return Matrix(
        tuple(ONE if j == perm[i] else ZERO for j in range(n)) for i in range(n)
    )


def generalized_permutation(perm: Sequence[int], scalars: Sequence[Scalar]) -> Matrix:
    """Invertible matrix: tangible scalars[i] at (i, perm[i]), zero elsewhere."""
    n = len(perm)
    if len(scalars) != n:
        raise ValueError("need one scalar per row")
    for s in scalars:
        if not s.is_tangible:
            raise ValueError("generalized permutation entries must be tangible")
    if sorted(perm) != list(range(n)):
        raise ValueError(f"{perm!r} is not a permutation of 0..{n - 1}")
    return Matrix(
        tuple(scalars[i] if j == perm[i] else ZERO for j in range(n)) for i in range(n)
    )


def transposition(n: int, i: int, j: int) -> Matrix:
    """Identity with rows i and j swapped; self-inverse."""
    _check_index(n, i)
    _check_index(n, j)
    perm = list(range(n))
    perm[i], perm[j] = perm[j], perm[i]
    return permutation_matrix(perm)


def row_multiplier(n: int, i: int, c: Scalar) -> Matrix:
    """Identity with row i scaled by an invertible scalar."""
    _check_index(n, i)
    if not c.is_tangible:
        raise ValueError("row multiplier must be tangible")
    entries = [[ONE if a == b else ZERO for b in range(n)] for a in range(n)]
    entries[i][i] = c
    return Matrix(entries)


def gaussian(n: int, i: int, j: int, c: Scalar) -> Matrix:
    """Identity plus entry c at (i, j), i != j: adds row j scaled by c to row i.

    Not invertible.
    """
    _check_index(n, i)
    _check_index(n, j)
    if i == j:
        raise ValueError("gaussian matrix needs i != j")
    entries = [[ONE if a == b else ZERO for b in range(n)] for a in range(n)]
    entries[i][j] = c
    return Matrix(entries)


def _check_index(n: int, i: int) -> None:
    if not 0 <= i < n:
        raise IndexError(f"index {i} out of range for size {n}")


def eval_poly(f: TropicalPolynomial, matrix: Matrix) -> Matrix:
    """Evaluate a polynomial at a square matrix: sum of coeff * A**d."""
    n = matrix._require_square("polynomial evaluation")
    if f.is_zero:
        zero_row = (ZERO,) * n
        return Matrix((zero_row,) * n)
    result: Matrix | None = None
    power = identity(n)
    for d in range(f.degree + 1):
        if d > 0:
            power = power * matrix
        coeff = f.coefficient(d)
        if coeff.is_zero:
            continue
        term = power.scale(coeff)
        result = term if result is None else result + term
    assert result is not None
    return result


# -- permutation formatting ---------------------------------------------------------


def format_permutation(
    images: Sequence[int], elements: Sequence[int] | None = None
) -> str:
    """Cycle notation, 1-based, fixed points shown: ``(1)(2)(3 4)``.

    ``elements`` names the indices being permuted (for permutations on an
    index subset); by default positions 0..len-1.
    """
    if elements is None:
        elements = tuple(range(len(images)))
    if not elements:
        return "()"
    mapping = dict(zip(elements, images))
    seen = set()
    cycles = []
    for start in sorted(mapping):
        if start in seen:
            continue
        cycle = [start]
        seen.add(start)
        nxt = mapping[start]
        while nxt != start:
            cycle.append(nxt)
            seen.add(nxt)
            nxt = mapping[nxt]
        cycles.append(cycle)
    return "".join("(" + " ".join(str(i + 1) for i in cycle) + ")" for cycle in cycles)


# -- vectors --------------------------------------------------------------------------

Vector = tuple[Scalar, ...]


def mat_vec(matrix: Matrix, v: Vector) -> Vector:
    if matrix.cols != len(v):
        raise ValueError("matrix-vector product needs compatible shapes")
    out = []
    for row in range(matrix.rows):
        acc = ZERO
        for a, b in zip(matrix.row(row), v):
            acc = acc + a * b
        out.append(acc)
    return tuple(out)


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_scale(c: Scalar, v: Vector) -> Vector:
    return tuple(c * x for x in v)


def vec_as_tangible(v: Vector) -> Vector:
    return tuple(x.as_tangible() for x in v)


def vec_ghost_surpasses(u: Vector, v: Vector) -> bool:
    return all(a.ghost_surpasses(b) for a, b in zip(u, v))


def vec_is_ghost_or_zero(v: Vector) -> bool:
    return all(x.is_ghost_or_zero for x in v)


def from_columns(columns: Sequence[Vector]) -> Matrix:
    if not columns:
        raise ValueError("need at least one column")
    height = len(columns[0])
    return Matrix(tuple(col[i] for col in columns) for i in range(height))


# -- text and JSON interchange ----------------------------------------------------------


def format_matrix(matrix: Matrix) -> str:
    """One row per line, right-aligned whitespace-separated scalar tokens."""
    tokens = [[entry.token() for entry in matrix.row(i)] for i in range(matrix.rows)]
    widths = [max(len(tokens[i][j]) for i in range(matrix.rows)) for j in range(matrix.cols)]
    lines = [
        "  ".join(tok.rjust(width) for tok, width in zip(row, widths)) for row in tokens
    ]
    return "\n".join(lines)


def parse_matrix(text: str) -> Matrix:
    """Parse matrix text; blank lines and ``#`` comment lines are skipped."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.strip()
        if not body or body.startswith("#"):
            continue
        try:
            rows.append(tuple(parse_scalar(tok) for tok in body.split()))
        except ValueError as exc:
            raise MatrixParseError(f"line {lineno}: {exc}") from exc
    if not rows:
        raise MatrixParseError("no matrix rows found")
    widths = {len(row) for row in rows}
    if len(widths) != 1:
        raise MatrixParseError("matrix rows have unequal lengths")
    return Matrix(rows)


def _scalar_to_json(s: Scalar) -> dict:
    from fractions import Fraction

    value = Fraction(s.value)
    return {
        "layer": s.layer.value,
        "numerator": value.numerator,
        "denominator": value.denominator,
    }


def _scalar_from_json(obj: dict) -> Scalar:
    from fractions import Fraction

    try:
        layer = Layer(obj["layer"])
    except (KeyError, ValueError, TypeError) as exc:
        raise MatrixParseError(f"bad scalar object {obj!r}") from exc
    if layer is Layer.ZERO:
        return ZERO
    try:
        value = Fraction(obj.get("numerator", 0), obj.get("denominator", 1))
    except (TypeError, ZeroDivisionError) as exc:
        raise MatrixParseError(f"bad scalar object {obj!r}") from exc
    return Scalar(value, layer)


def matrix_to_json(matrix: Matrix) -> dict:
    return {
        "rows": matrix.rows,
        "cols": matrix.cols,
        "entries": [
            [_scalar_to_json(matrix[i, j]) for j in range(matrix.cols)]
            for i in range(matrix.rows)
        ],
    }


def matrix_from_json(obj: dict) -> Matrix:
    try:
        entries = obj["entries"]
        grid = [[_scalar_from_json(cell) for cell in row] for row in entries]
        matrix = Matrix(grid)
        if matrix.rows != obj["rows"] or matrix.cols != obj["cols"]:
            raise MatrixParseError("declared shape does not match entries")
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, MatrixParseError):
            raise
        raise MatrixParseError(f"bad matrix object: {exc}") from exc
    return matrix
