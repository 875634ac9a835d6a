"""Spectral theory: eigenvalues, adjoint-column eigenvectors, dependence.

Eigenvalues are the corner roots of the characteristic polynomial.  Each
corner root sits between two essential coefficients; the set difference
of their dominant index subsets designates the columns of the adjoint of
``A + lambda*I`` whose tangible values are eigenvectors.

The eigenvector matrix W takes one representative column per distinct
eigenvalue (smallest designated column first).  Dependence of n vectors
in n-space is decided by the determinant of W: ghost or zero means
dependent.  For fewer vectors than the dimension the maximal-minor rule
is used (all k x k row-selected minors ghost or zero means dependent);
that rule extends the square criterion and is labelled as an extension
in the verdict.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial

from .matrices import (
    DEFAULT_CHAR_BOUND,
    DEFAULT_DET_BOUND,
    CharReport,
    DetResult,
    Matrix,
    Vector,
    eval_poly,
    from_columns,
    identity,
    mat_vec,
    vec_add,
    vec_as_tangible,
    vec_is_ghost_or_zero,
    vec_scale,
)
from .polynomials import (
    GhostStretch,
    PrimaryFactorization,
    TropicalPolynomial,
    expand_primary,
)
from .scalars import ONE, Scalar, ZERO, tangible

__all__ = [
    "Eigenvalue",
    "EigenvectorRecord",
    "DependenceVerdict",
    "Spectrum",
    "GeneralizedEigenReport",
    "GeneralizedSubspace",
    "FactorizationError",
    "spectrum",
    "eigenvalues",
    "eigenvector",
    "eigenvector_matrix",
    "eigenmatrix",
    "difference_criterion",
    "diagonal_distinct_after_power",
    "vectors_dependent",
    "power_eigenpair_holds",
    "is_generalized_eigenvector",
    "generalized_subspaces",
]


class FactorizationError(ValueError):
    """Raised when a ghost essential coefficient blocks primary factorization."""


@dataclass(frozen=True)
class Eigenvalue:
    """A corner eigenvalue with its designated adjoint columns."""

    value: Scalar  # tangible
    multiplicity: int
    index_diff: tuple[int, ...] | None  # designated columns (0-based), None if ambiguous
    high_coefficient: int  # index of the flanking coefficient on the high-degree side
    low_coefficient: int


@dataclass(frozen=True)
class EigenvectorRecord:
    eigenvalue: Scalar
    column: int  # source column (0-based)
    vector: Vector  # tangible values
    verified: bool  # A*v ghost-surpasses lambda*v


@dataclass(frozen=True)
class DependenceVerdict:
    """Outcome of a dependence test on a list of vectors."""

    dependent: bool
    method: str  # "determinant" or "maximal-minors" (labelled extension)
    det: DetResult | None  # square case
    independent_minor_rows: tuple[int, ...] | None  # a tangible minor's rows, if any
    witness: tuple[Scalar, ...] | None  # verified tangible combination, if found


@dataclass(frozen=True)
class Spectrum:
    """Full spectral report of a square matrix."""

    char: CharReport
    polynomial: TropicalPolynomial
    essential: TropicalPolynomial
    eigenvalues: tuple[Eigenvalue, ...]  # strictly decreasing magnitudes
    ghost_stretches: tuple[GhostStretch, ...]
    zero_eigenvalue_multiplicity: int
    eigenvectors: tuple[EigenvectorRecord, ...]  # all designated columns, per eigenvalue
    matrix_W: Matrix | None  # one representative column per distinct eigenvalue
    dependence: DependenceVerdict | None  # None when some eigenvector is unavailable
    difference_criterion: bool | None  # None when some index set is ambiguous

    def records_for(self, lam: Scalar) -> tuple[EigenvectorRecord, ...]:
        return tuple(r for r in self.eigenvectors if r.eigenvalue.value_equiv(lam))


def eigenmatrix(matrix: Matrix, lam: Scalar) -> Matrix:
    """``A + lambda*I``."""
    n = matrix.rows
    return matrix + identity(n).scale(lam)


def _index_diffs(
    char: CharReport, profile_corners, n: int
) -> list[tuple[int, ...] | None]:
    """I-set per corner root: set difference of the flanking index subsets."""
    diffs: list[tuple[int, ...] | None] = []
    for corner in profile_corners:
        hi_idx = n - corner.high_degree
        lo_idx = n - corner.low_degree
        hi_set = char.coefficients[hi_idx].index_set
        lo_set = char.coefficients[lo_idx].index_set
        if hi_set is None or lo_set is None:
            diffs.append(None)
        else:
            diffs.append(tuple(sorted(set(lo_set) - set(hi_set))))
    return diffs


def spectrum(
    matrix: Matrix,
    det_bound: int = DEFAULT_DET_BOUND,
    char_bound: int = DEFAULT_CHAR_BOUND,
    char_report: CharReport | None = None,
    witness_cap: int = 0,
) -> Spectrum:
    """Compute the spectral report: eigenvalues, eigenvectors, dependence."""
    n = matrix.rows
    char = char_report if char_report is not None else matrix.char_poly(char_bound)
    poly = char.polynomial()
    essential = poly.essential()
    profile = poly.root_profile()
    diffs = _index_diffs(char, profile.corners, n)

    eigvals = tuple(
        Eigenvalue(
            value=corner.value,
            multiplicity=corner.multiplicity,
            index_diff=diff,
            high_coefficient=n - corner.high_degree,
            low_coefficient=n - corner.low_degree,
        )
        for corner, diff in zip(profile.corners, diffs)
    )

    records: list[EigenvectorRecord] = []
    representatives: list[Vector] = []
    all_extractable = len(eigvals) > 0
    for ev in eigvals:
        if not ev.index_diff:
            all_extractable = False
            continue
        adj = eigenmatrix(matrix, ev.value).adjoint(det_bound)
        per_value: list[EigenvectorRecord] = []
        for t in ev.index_diff:
            vec = vec_as_tangible(adj.column(t))
            lhs = mat_vec(matrix, vec)
            rhs = vec_scale(ev.value, vec)
            verified = all(a.ghost_surpasses(b) for a, b in zip(lhs, rhs))
            per_value.append(EigenvectorRecord(ev.value, t, vec, verified))
        records.extend(per_value)
        representatives.append(per_value[0].vector)

    matrix_W = None
    dependence = None
    if all_extractable and representatives:
        matrix_W = from_columns(representatives)
        dependence = vectors_dependent(representatives, witness_cap=witness_cap)

    if any(diff is None for diff in diffs):
        criterion = None
    else:
        seen: set[int] = set()
        criterion = True
        for diff in diffs:
            if seen & set(diff):
                criterion = False
                break
            seen |= set(diff)

    return Spectrum(
        char=char,
        polynomial=poly,
        essential=essential,
        eigenvalues=eigvals,
        ghost_stretches=profile.ghost_stretches,
        zero_eigenvalue_multiplicity=profile.zero_multiplicity,
        eigenvectors=tuple(records),
        matrix_W=matrix_W,
        dependence=dependence,
        difference_criterion=criterion,
    )


def eigenvalues(matrix: Matrix, char_bound: int = DEFAULT_CHAR_BOUND) -> tuple[Eigenvalue, ...]:
    return spectrum(matrix, char_bound=char_bound).eigenvalues


def eigenvector(
    matrix: Matrix,
    lam: Scalar,
    column: int,
    det_bound: int = DEFAULT_DET_BOUND,
    char_bound: int = DEFAULT_CHAR_BOUND,
) -> Vector:
    """Tangible value of the given adjoint column of ``A + lambda*I``.

    The column must be one designated for the eigenvalue.  The returned
    vector is checked against ``A*v`` ghost-surpassing ``lambda*v``; a
    failure there would be a defect, not an input error.
    """
    spec = spectrum(matrix, det_bound=det_bound, char_bound=char_bound)
    for ev in spec.eigenvalues:
        if ev.value.value_equiv(lam):
            if ev.index_diff is None or column not in ev.index_diff:
                raise ValueError(
                    f"column {column} is not designated for eigenvalue {lam.token()}"
                )
            vec = vec_as_tangible(eigenmatrix(matrix, ev.value).adjoint(det_bound).column(column))
            lhs = mat_vec(matrix, vec)
            rhs = vec_scale(ev.value, vec)
            assert all(
                a.ghost_surpasses(b) for a, b in zip(lhs, rhs)
            ), "extracted eigenvector fails its defining relation"
            return vec
    raise ValueError(f"{lam.token()} is not a corner eigenvalue")


def eigenvector_matrix(matrix: Matrix, det_bound: int = DEFAULT_DET_BOUND) -> Matrix:
    """One representative eigenvector column per distinct eigenvalue."""
    spec = spectrum(matrix, det_bound=det_bound)
    if spec.matrix_W is None:
        raise ValueError("not every eigenvalue has an extractable eigenvector")
    return spec.matrix_W


def difference_criterion(matrix: Matrix, char_bound: int = DEFAULT_CHAR_BOUND) -> bool | None:
    """Pairwise disjointness of the designated column sets over corner roots."""
    return spectrum(matrix, char_bound=char_bound).difference_criterion


def diagonal_distinct_after_power(matrix: Matrix, m: int) -> bool:
    """Whether the diagonal entries of ``A**m`` have pairwise distinct magnitudes.

    Requires n! to divide m, so the diagonal of the power carries the
    dominant cycle data.
    """
    n = matrix.rows
    if m % factorial(n) != 0:
        raise ValueError(f"power {m} is not a multiple of {n}! = {factorial(n)}")
    power = matrix**m
    diag = [power[i, i] for i in range(n)]
    for a, b in itertools.combinations(diag, 2):
        if a.value_equiv(b):
            return False
    return True


# -- dependence -------------------------------------------------------------------


def vectors_dependent(
    vectors: list[Vector] | tuple[Vector, ...],
    witness_cap: int = 50_000,
    det_bound: int = DEFAULT_DET_BOUND,
) -> DependenceVerdict:
    """Decide supertropical dependence of k vectors in n-space (k <= n).

    The square case goes through the determinant.  The k < n case uses
    the maximal-minor rule, an extension of the square criterion: the
    vectors are dependent iff every k x k row-selected minor is ghost or
    zero.  For dependent families a tangible witness combination is
    searched over magnitudes built from entry differences; a returned
    witness is always verified, but absence of one proves nothing.
    """
    vectors = [tuple(v) for v in vectors]
    k = len(vectors)
    if k == 0:
        raise ValueError("need at least one vector")
    n = len(vectors[0])
    if any(len(v) != n for v in vectors):
        raise ValueError("vectors have unequal dimensions")
    if k > n:
        raise ValueError(f"{k} vectors in dimension {n}: only k <= n is supported")

    det = None
    minor_rows = None
    if k == n:
        det = from_columns(vectors).determinant(det_bound)
        dependent = not det.value.is_tangible
        method = "determinant"
    else:
        dependent = True
        for rows in itertools.combinations(range(n), k):
            sub = [tuple(v[i] for i in rows) for v in vectors]
            if from_columns(sub).determinant(det_bound).value.is_tangible:
                dependent = False
                minor_rows = rows
                break
        method = "maximal-minors"

    witness = None
    if dependent and witness_cap > 0:
        witness = _search_witness(vectors, witness_cap)
    return DependenceVerdict(dependent, method, det, minor_rows, witness)


def _search_witness(vectors: list[Vector], cap: int) -> tuple[Scalar, ...] | None:
    """Bounded grid search for tangible coefficients ghosting the combination."""
    targets = sorted({x.value for v in vectors for x in v if not x.is_zero})
    if not targets:
        return None
    candidate_sets: list[list[Scalar]] = []
    for v in vectors[1:]:
        magnitudes = sorted(
            {t - x.value for x in v if not x.is_zero for t in targets}
        )
        if not magnitudes:
            return None
        candidate_sets.append([tangible(m) for m in magnitudes])
    total = 1
    for cands in candidate_sets:
        total *= len(cands)
    if total > cap:
        # Trim each axis to keep the product enumerable.
        per_axis = max(2, int(cap ** (1 / max(1, len(candidate_sets)))))
        candidate_sets = [c[:per_axis] for c in candidate_sets]
    first = vectors[0]
    for combo in itertools.product(*candidate_sets):
        acc = first
        for c, v in zip(combo, vectors[1:]):
            acc = vec_add(acc, vec_scale(c, v))
        if vec_is_ghost_or_zero(acc):
            return (ONE, *combo)
    return None


def power_eigenpair_holds(matrix: Matrix, lam: Scalar, v: Vector, i: int) -> bool:
    """Whether ``A**i * v`` ghost-surpasses ``lam**i * v``."""
    if i < 1:
        raise ValueError("power must be >= 1")
    lhs = mat_vec(matrix**i, v)
    rhs = vec_scale(lam**i, v)
    return all(a.ghost_surpasses(b) for a, b in zip(lhs, rhs))


# -- generalized eigenvectors ---------------------------------------------------------


@dataclass(frozen=True)
class GeneralizedEigenReport:
    eigenvalue: Scalar
    multiplicity: int | None  # minimal m with (A + lam*I)**m * v ghost, None if not found
    degenerate: bool  # A**m * v is itself ghost for some checked m
    checked_up_to: int


def is_generalized_eigenvector(
    matrix: Matrix, lam: Scalar, v: Vector, m_max: int | None = None
) -> GeneralizedEigenReport:
    """Search exponents 1..m_max for the defining ghost annihilation."""
    n = matrix.rows
    cap = m_max if m_max is not None else 2 * n
    shifted = eigenmatrix(matrix, lam)
    multiplicity = None
    w = v
    for m in range(1, cap + 1):
        w = mat_vec(shifted, w)
        if vec_is_ghost_or_zero(w):
            multiplicity = m
            break
    degenerate = False
    w = v
    for _ in range(1, cap + 1):
        w = mat_vec(matrix, w)
        if vec_is_ghost_or_zero(w):
            degenerate = True
            break
    return GeneralizedEigenReport(lam, multiplicity, degenerate, cap)


@dataclass(frozen=True)
class GeneralizedSubspace:
    """Generators of the refined generalized eigenspace for one eigenvalue."""

    eigenvalue: Scalar
    multiplicity: int
    generators: Matrix  # columns span the subspace
    representative: Vector  # tangible value of the first non-zero column


def generalized_subspaces(
    matrix: Matrix,
    det_bound: int = DEFAULT_DET_BOUND,
    char_bound: int = DEFAULT_CHAR_BOUND,
    char_report: CharReport | None = None,
) -> tuple[GeneralizedSubspace, ...]:
    """Per distinct eigenvalue, the matrix of its complementary-factor image.

    Writes the characteristic polynomial as a product of linear-power
    factors and evaluates, for each eigenvalue, the product of all other
    factors at the matrix.  Requires every essential coefficient to be
    tangible; ghost stretches make the factorization partial.
    """
    report = char_report if char_report is not None else matrix.char_poly(char_bound)
    fact: PrimaryFactorization = report.polynomial().factor()
    if not fact.complete:
        raise FactorizationError(
            "characteristic polynomial has a ghost essential coefficient; "
            "primary factorization is partial"
        )
    subspaces = []
    for idx, (root, multiplicity) in enumerate(fact.factors):
        if root.is_zero:
            continue
        others = [f for j, f in enumerate(fact.factors) if j != idx]
        complement: TropicalPolynomial = expand_primary(others)
        generators = eval_poly(complement, matrix)
        representative = None
        for j in range(generators.cols):
            col = generators.column(j)
            if any(not x.is_zero for x in col):
                representative = vec_as_tangible(col)
                break
        if representative is None:
            representative = vec_as_tangible(generators.column(0))
        subspaces.append(
            GeneralizedSubspace(root, multiplicity, generators, representative)
        )
    return tuple(subspaces)
