"""Randomized verification suites for the algebra's theorems and conjectures.

Each suite draws matrices from a seeded random model, optionally filters
them to a theorem's hypotheses by rejection sampling, and checks the
asserted relation on every qualifying trial.  Theorem suites must come
back with zero violations; the conjecture suite only reports statistics
and serializes counterexamples for reproduction.

Reports are reproducible bit-exactly from (law, TrialConfig): every
trial derives its own generator from the master seed, the law name, and
the attempt index, so results are independent of evaluation order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import factorial
from typing import Callable, Sequence

from .eigen import Spectrum, generalized_subspaces, spectrum, vectors_dependent
from .matrices import (
    Matrix,
    eval_poly,
    format_matrix,
    generalized_permutation,
    strong_nonsingularity,
)
from .polynomials import TropicalPolynomial
from .scalars import ONE, Scalar, ZERO, ghost, tangible

__all__ = [
    "TrialConfig",
    "LawReport",
    "random_matrix",
    "random_generalized_permutation",
    "random_tangible_polynomial",
    "THEOREM_SUITES",
    "REPORT_SUITES",
    "run_suites",
    "check_cayley_hamilton",
    "check_det_mult",
    "check_adj_antihom",
    "check_det_adj",
    "check_quasi_identity",
    "check_cpip_power",
    "check_cpip_nabla",
    "check_independence_low_dim",
    "check_difference_criterion_theorem",
    "check_generalized_independence",
    "conjecture_experiment",
]


@dataclass(frozen=True)
class TrialConfig:
    """Parameters of the random-matrix model and of the trial harness."""

    n: int = 3
    trials: int = 100
    value_range: tuple[int, int] = (-10, 10)
    zero_density: float = 0.2
    ghost_density: float = 0.1
    master_seed: int = 0
    m_max: int | None = None
    max_attempt_factor: int = 400

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.trials < 0:
            raise ValueError("trials must be non-negative")
        lo, hi = self.value_range
        if lo > hi:
            raise ValueError("value_range must be (low, high) with low <= high")
        for name in ("zero_density", "ghost_density"):
            d = getattr(self, name)
            if not 0.0 <= d <= 1.0:
                raise ValueError(f"{name} must lie in [0, 1]")

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "trials": self.trials,
            "value_range": list(self.value_range),
            "zero_density": self.zero_density,
            "ghost_density": self.ghost_density,
            "master_seed": self.master_seed,
            "m_max": self.m_max,
            "max_attempt_factor": self.max_attempt_factor,
        }


def _rng(cfg: TrialConfig, label: str, index: int) -> random.Random:
    return random.Random(f"{cfg.master_seed}:{label}:{index}")


def random_matrix(cfg: TrialConfig, label: str, index: int) -> Matrix:
    """Independent entries: zero with zero_density, else a uniform integer
    magnitude that is ghost with ghost_density."""
    rng = _rng(cfg, label, index)
    lo, hi = cfg.value_range
    rows = []
    for _ in range(cfg.n):
        row = []
        for _ in range(cfg.n):
            if rng.random() < cfg.zero_density:
                row.append(ZERO)
            else:
                value = rng.randint(lo, hi)
                if rng.random() < cfg.ghost_density:
                    row.append(ghost(value))
                else:
                    row.append(tangible(value))
        rows.append(tuple(row))
    return Matrix(rows)


def random_generalized_permutation(cfg: TrialConfig, label: str, index: int) -> Matrix:
    rng = _rng(cfg, label, index)
    lo, hi = cfg.value_range
    perm = list(range(cfg.n))
    rng.shuffle(perm)
    scalars = [tangible(rng.randint(lo, hi)) for _ in range(cfg.n)]
    return generalized_permutation(perm, scalars)


def random_tangible_polynomial(
    rng: random.Random, max_degree: int = 6, value_range: tuple[int, int] = (-10, 10)
) -> TropicalPolynomial:
    """Random polynomial with tangible coefficients and non-zero leading term."""
    lo, hi = value_range
    degree = rng.randint(1, max_degree)
    coeffs = {degree: tangible(rng.randint(lo, hi))}
    for d in range(degree):
        if rng.random() < 0.85:
            coeffs[d] = tangible(rng.randint(lo, hi))
    return TropicalPolynomial(coeffs)


@dataclass
class LawReport:
    """Outcome of one suite run; serializable and bit-reproducible."""

    law: str
    config: TrialConfig
    theorem: bool = True
    trials_run: int = 0
    attempts: int = 0
    starved: bool = False
    violations: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)
    counterexamples: list = field(default_factory=list)

    @property
    def status(self) -> str:
        if not self.theorem:
            return "report"
        if self.violations:
            return "fail"
        if self.starved:
            return "starved"
        return "pass"

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {
            "law": self.law,
            "status": self.status,
            "theorem": self.theorem,
            "config": self.config.to_json(),
            "trials_run": self.trials_run,
            "attempts": self.attempts,
            "starved": self.starved,
            "violations": self.violations,
            "stats": {k: self.stats[k] for k in sorted(self.stats)},
            "notes": self.notes,
            "counterexamples": self.counterexamples,
        }


def _run_unfiltered(report: LawReport, cfg: TrialConfig, check: Callable[[int, Matrix], None]):
    for i in range(cfg.trials):
        check(i, random_matrix(cfg, report.law, i))
    report.trials_run = cfg.trials
    report.attempts = cfg.trials


def _run_filtered(
    report: LawReport,
    cfg: TrialConfig,
    qualify: Callable[[Matrix], object | None],
    check: Callable[[int, Matrix, object], None],
):
    max_attempts = cfg.max_attempt_factor * max(1, cfg.trials)
    got = 0
    attempts = 0
    while got < cfg.trials and attempts < max_attempts:
        matrix = random_matrix(cfg, report.law, attempts)
        attempts += 1
        ctx = qualify(matrix)
        if ctx is None:
            continue
        check(got, matrix, ctx)
        got += 1
    report.trials_run = got
    report.attempts = attempts
    report.starved = got < cfg.trials
    if attempts:
        report.stats["acceptance_rate"] = round(got / attempts, 6)
    if report.starved:
        report.notes.append(
            f"starved: only {got} of {cfg.trials} qualifying trials within "
            f"{max_attempts} attempts"
        )


# -- theorem suites ----------------------------------------------------------------


def check_cayley_hamilton(cfg: TrialConfig) -> LawReport:
    """Every matrix annihilates its own characteristic polynomial into ghosts."""
    report = LawReport("cayley_hamilton", cfg)
    hatted_ok = 0

    def check(i: int, a: Matrix):
        nonlocal hatted_ok
        f = a.char_poly().polynomial()
        image = eval_poly(f, a)
        if not image.is_ghost_or_zero():
            report.violations.append(
                {"trial": i, "matrix": format_matrix(a), "image": format_matrix(image)}
            )
        if eval_poly(f.as_tangible(), a).is_ghost_or_zero():
            hatted_ok += 1

    _run_unfiltered(report, cfg, check)
    report.stats["tangible_lift_also_ghost"] = hatted_ok
    return report


def check_det_mult(cfg: TrialConfig) -> LawReport:
    """det(AB) ghost-surpasses det(A)det(B); exact for invertible left factors."""
    report = LawReport("det_mult", cfg)

    def check(i: int, a: Matrix):
        b = random_matrix(cfg, "det_mult:B", i)
        lhs = (a * b).determinant().value
        rhs = a.determinant().value * b.determinant().value
        if not lhs.ghost_surpasses(rhs):
            report.violations.append(
                {
                    "trial": i,
                    "matrix": format_matrix(a),
                    "second": format_matrix(b),
                    "lhs": lhs.token(),
                    "rhs": rhs.token(),
                }
            )
        p = random_generalized_permutation(cfg, "det_mult:P", i)
        exact_lhs = (p * a).determinant().value
        exact_rhs = p.determinant().value * a.determinant().value
        if exact_lhs != exact_rhs:
            report.violations.append(
                {
                    "trial": i,
                    "matrix": format_matrix(a),
                    "invertible": format_matrix(p),
                    "lhs": exact_lhs.token(),
                    "rhs": exact_rhs.token(),
                }
            )

    _run_unfiltered(report, cfg, check)
    return report


def check_adj_antihom(cfg: TrialConfig) -> LawReport:
    """adj(AB) ghost-surpasses adj(B) adj(A), entry-wise."""
    report = LawReport("adj_antihom", cfg)

    def check(i: int, a: Matrix):
        b = random_matrix(cfg, "adj_antihom:B", i)
        lhs = (a * b).adjoint()
        rhs = b.adjoint() * a.adjoint()
        if not lhs.ghost_surpasses(rhs):
            report.violations.append(
                {
                    "trial": i,
                    "matrix": format_matrix(a),
                    "second": format_matrix(b),
                    "lhs": format_matrix(lhs),
                    "rhs": format_matrix(rhs),
                }
            )

    _run_unfiltered(report, cfg, check)
    return report


def check_det_adj(cfg: TrialConfig) -> LawReport:
    """det(adj A) matches det(A)^(n-1) and det(A adj A) matches det(A)^n.

    Magnitude equality is asserted always; layer equality is asserted
    when det(A) is tangible and otherwise only counted.
    """
    report = LawReport("det_adj", cfg)
    layer_divergences = 0

    def compare(i: int, a: Matrix, lhs: Scalar, target: Scalar, what: str, tangible_det: bool):
        nonlocal layer_divergences
        if not lhs.value_equiv(target):
            report.violations.append(
                {
                    "trial": i,
                    "matrix": format_matrix(a),
                    "relation": what,
                    "lhs": lhs.token(),
                    "rhs": target.token(),
                }
            )
        elif tangible_det and lhs != target:
            report.violations.append(
                {
                    "trial": i,
                    "matrix": format_matrix(a),
                    "relation": what + " (layer)",
                    "lhs": lhs.token(),
                    "rhs": target.token(),
                }
            )
        elif lhs != target:
            layer_divergences += 1

    def check(i: int, a: Matrix):
        n = a.rows
        d = a.determinant().value
        adj = a.adjoint()
        compare(i, a, adj.determinant().value, d ** (n - 1), "det(adjA) = det(A)^(n-1)", d.is_tangible)
        compare(i, a, (a * adj).determinant().value, d**n, "det(A adjA) = det(A)^n", d.is_tangible)
        if d.is_tangible:
            p = random_generalized_permutation(cfg, "det_adj:P", i)
            lhs = (p * a).quasi_inverse()
            rhs = a.quasi_inverse() * p.quasi_inverse()
            if lhs != rhs:
                report.violations.append(
                    {
                        "trial": i,
                        "matrix": format_matrix(a),
                        "invertible": format_matrix(p),
                        "relation": "(PA)^nabla = A^nabla P^nabla",
                        "lhs": format_matrix(lhs),
                        "rhs": format_matrix(rhs),
                    }
                )

    _run_unfiltered(report, cfg, check)
    report.stats["layer_divergences_on_singular_input"] = layer_divergences
    return report


def check_quasi_identity(cfg: TrialConfig) -> LawReport:
    """A A^nabla and A^nabla A are quasi-identities for nonsingular A."""
    report = LawReport("quasi_identity", cfg)

    def qualify(a: Matrix):
        return a if a.determinant().value.is_tangible else None

    def check(i: int, a: Matrix, _ctx):
        nabla = a.quasi_inverse()
        for what, product in (("A A^nabla", a * nabla), ("A^nabla A", nabla * a)):
            if not product.is_quasi_identity():
                report.violations.append(
                    {
                        "trial": i,
                        "matrix": format_matrix(a),
                        "relation": what,
                        "product": format_matrix(product),
                    }
                )

    _run_filtered(report, cfg, qualify, check)
    return report


def _functional_surpasses(lhs: TropicalPolynomial, rhs: TropicalPolynomial) -> bool:
    points = set(lhs.sample_points()) | set(rhs.sample_points())
    return all(lhs.evaluate(x).ghost_surpasses(rhs.evaluate(x)) for x in points)


def check_cpip_power(cfg: TrialConfig, powers: tuple[int, ...] = (2, 3)) -> LawReport:
    """Characteristic polynomial of A^m at x^m surpasses the m-th power of A's.

    The relation is between polynomial functions: the left side only has
    degrees divisible by m, while the right side fills the gaps with
    ghost monomials that never dominate, so a literal coefficient-wise
    comparison fails even for 1x1 matrices.  The functional check is the
    operative one; coefficient-wise agreement is counted separately.
    """
    report = LawReport("cpip_power", cfg)
    coefficientwise_held = 0
    checked = 0

    def qualify(a: Matrix):
        return a if a.determinant().value.is_tangible else None

    def check(i: int, a: Matrix, _ctx):
        nonlocal coefficientwise_held, checked
        f = a.char_poly().polynomial()
        for m in powers:
            checked += 1
            lhs = (a**m).char_poly().polynomial().compose_power(m)
            rhs = f**m
            coefficientwise_held += lhs.ghost_surpasses(rhs)
            if not _functional_surpasses(lhs, rhs):
                report.violations.append(
                    {
                        "trial": i,
                        "matrix": format_matrix(a),
                        "power": m,
                        "lhs": lhs.text(),
                        "rhs": rhs.text(),
                    }
                )

    _run_filtered(report, cfg, qualify, check)
    report.stats["relations_checked"] = checked
    report.stats["coefficientwise_held"] = coefficientwise_held
    report.stats["semantics_discrepancies"] = checked - coefficientwise_held
    return report


def check_cpip_nabla(cfg: TrialConfig) -> LawReport:
    """det(A) times the quasi-inverse's char polynomial surpasses the reversal."""
    report = LawReport("cpip_nabla", cfg)
    strict = 0

    def qualify(a: Matrix):
        return a if a.determinant().value.is_tangible else None

    def check(i: int, a: Matrix, _ctx):
        nonlocal strict
        d = a.determinant().value
        lhs = a.quasi_inverse().char_poly().polynomial().scale(d)
        rhs = a.char_poly().polynomial().reverse_scale(ONE)
        coeff_ok = lhs.ghost_surpasses(rhs)
        if not coeff_ok:
            report.violations.append(
                {
                    "trial": i,
                    "matrix": format_matrix(a),
                    "lhs": lhs.text(),
                    "rhs": rhs.text(),
                    "functional_held": _functional_surpasses(lhs, rhs),
                }
            )
        elif lhs != rhs:
            strict += 1

    _run_filtered(report, cfg, qualify, check)
    report.stats["strict_surpassings"] = strict
    return report


def _qualify_distinct_tangible(a: Matrix) -> Spectrum | None:
    """Hypotheses shared by the independence theorems: tangible coefficients
    and as many distinct eigenvalues as the dimension."""
    rep = a.char_poly()
    if any(not c.value.is_tangible for c in rep.coefficients):
        return None
    spec = spectrum(a, char_report=rep)
    if len(spec.eigenvalues) != a.rows:
        return None
    if any(ev.multiplicity != 1 for ev in spec.eigenvalues):
        return None
    return spec


def check_independence_low_dim(cfg: TrialConfig) -> LawReport:
    """In dimensions 2 and 3, distinct eigenvalues give independent eigenvectors."""
    if cfg.n in (2, 3):
        effective = cfg
        note = None
    else:
        effective = TrialConfig(
            n=3,
            trials=cfg.trials,
            value_range=cfg.value_range,
            zero_density=cfg.zero_density,
            ghost_density=cfg.ghost_density,
            master_seed=cfg.master_seed,
            m_max=cfg.m_max,
            max_attempt_factor=cfg.max_attempt_factor,
        )
        note = f"suite needs n in {{2, 3}}; ran at n=3 instead of n={cfg.n}"
    report = LawReport("independence_low_dim", effective)
    if note:
        report.notes.append(note)

    def check(i: int, a: Matrix, spec: Spectrum):
        if spec.dependence is None or spec.dependence.dependent:
            det = spec.dependence.det if spec.dependence else None
            report.violations.append(
                {
                    "trial": i,
                    "matrix": format_matrix(a),
                    "det_W": det.value.token() if det else None,
                }
            )

    _run_filtered(report, effective, _qualify_distinct_tangible, check)
    return report


def check_difference_criterion_theorem(cfg: TrialConfig) -> LawReport:
    """Disjoint designated-column sets force independent eigenvectors.

    Also checks the diagonal normalization of the eigenvector matrix:
    after sorting, its k-th designated entry has the magnitude of the
    product of the first k-1 eigenvalues times the k-th to the n-k.
    """
    report = LawReport("difference_criterion", cfg)

    def qualify(a: Matrix):
        spec = _qualify_distinct_tangible(a)
        if spec is None or spec.difference_criterion is not True:
            return None
        return spec

    def check(i: int, a: Matrix, spec: Spectrum):
        n = a.rows
        if spec.dependence is None or spec.dependence.dependent:
            det = spec.dependence.det if spec.dependence else None
            report.violations.append(
                {
                    "trial": i,
                    "matrix": format_matrix(a),
                    "failure": "dependent eigenvectors",
                    "det_W": det.value.token() if det else None,
                }
            )
            return
        running = 0
        for k, ev in enumerate(spec.eigenvalues):
            if ev.index_diff is None or len(ev.index_diff) != 1:
                report.violations.append(
                    {
                        "trial": i,
                        "matrix": format_matrix(a),
                        "failure": "designated column set is not a singleton",
                        "eigenvalue": ev.value.token(),
                    }
                )
                return
            j_k = ev.index_diff[0]
            expected = running + ev.value.value * (n - k - 1)
            record = spec.records_for(ev.value)[0]
            actual = record.vector[j_k]
            if not actual.value_equiv(tangible(expected)):
                report.violations.append(
                    {
                        "trial": i,
                        "matrix": format_matrix(a),
                        "failure": "diagonal normalization",
                        "eigenvalue": ev.value.token(),
                        "expected": tangible(expected).token(),
                        "actual": actual.token(),
                    }
                )
            running += ev.value.value

    _run_filtered(report, cfg, qualify, check)
    return report


def check_generalized_independence(cfg: TrialConfig) -> LawReport:
    """Strong nonsingularity makes the refined generalized eigenspaces independent.

    The claim is about tangible members of the subspaces, so each one
    contributes its first ghost-free generator column; subspaces with no
    tangible column have nothing to test.  Because the strong-
    nonsingularity filter is truncated at a power cap, an apparent
    dependence is re-probed much deeper before it counts: matrices whose
    first singular power lies beyond the cap are filter false positives,
    not theorem violations.
    """
    report = LawReport("generalized_independence", cfg)
    cap_used = None
    vacuous = 0
    members_total = 0
    false_positives = 0

    def tangible_member(generators: Matrix):
        for j in range(generators.cols):
            col = generators.column(j)
            if any(x.is_tangible for x in col) and all(not x.is_ghost for x in col):
                return col
        return None

    def qualify(a: Matrix):
        nonlocal cap_used
        rep = a.char_poly()
        if not rep.polynomial().factor().complete:
            return None
        strength = strong_nonsingularity(a, cfg.m_max)
        cap_used = strength.cap
        if not strength.holds:
            return None
        return rep

    def check(i: int, a: Matrix, rep):
        nonlocal vacuous, members_total, false_positives
        subs = generalized_subspaces(a, char_report=rep)
        vectors = [v for s in subs if (v := tangible_member(s.generators)) is not None]
        members_total += len(vectors)
        if len(vectors) < 2:
            vacuous += 1
            return
        verdict = vectors_dependent(vectors, witness_cap=0)
        if verdict.dependent:
            deep = strong_nonsingularity(a, min(8 * (cap_used or 1), 2000))
            if not deep.holds:
                false_positives += 1
                return
            report.violations.append(
                {
                    "trial": i,
                    "matrix": format_matrix(a),
                    "vectors": [[x.token() for x in v] for v in vectors],
                }
            )

    _run_filtered(report, cfg, qualify, check)
    report.stats["vacuous_trials"] = vacuous
    report.stats["tangible_members"] = members_total
    report.stats["filter_false_positives"] = false_positives
    if cap_used is not None:
        report.notes.append(f"strong nonsingularity checked for powers 1..{cap_used}")
    return report


# -- the conjecture experiment ---------------------------------------------------------


def conjecture_experiment(cfg: TrialConfig) -> LawReport:
    """Probe the quasi-inverse conjectures on dependent-eigenvector inputs.

    Filters to nonsingular matrices with a full set of distinct
    eigenvalues whose eigenvectors are nevertheless dependent, then
    records, per trial: strictness of the reversal relation, whether the
    quasi-inverse's polynomial loses essential monomials and distinct
    eigenvalues, and independence of the quasi-inverse's eigenvectors.
    No pass/fail judgment is made; counterexamples are serialized.
    """
    report = LawReport("conjecture", cfg, theorem=False)
    counters = {
        "c1_surpasses": 0,
        "c1_strict": 0,
        "c2_essential_differs": 0,
        "c2_fewer_distinct": 0,
        "c2_conditional_holds": 0,
        "c3_independent": 0,
        "c3_unevaluable": 0,
        "conjecture2_applicable": 0,
        "conjecture2_holds": 0,
    }

    def qualify(a: Matrix):
        if not a.determinant().value.is_tangible:
            return None
        spec = spectrum(a)
        if len(spec.eigenvalues) != a.rows:
            return None
        if any(ev.multiplicity != 1 for ev in spec.eigenvalues):
            return None
        if spec.dependence is None or not spec.dependence.dependent:
            return None
        return spec

    def check(i: int, a: Matrix, spec: Spectrum):
        n = a.rows
        d = spec.char.determinant_value
        nabla = a.quasi_inverse()
        nspec = spectrum(nabla)
        failures = []

        lhs = nspec.polynomial.scale(d)
        rhs = spec.polynomial.reverse_scale(ONE)
        surpasses = lhs.ghost_surpasses(rhs)
        strict = surpasses and lhs != rhs
        counters["c1_surpasses"] += surpasses
        counters["c1_strict"] += strict
        if not strict:
            failures.append("strict reversal surpassing")

        essential_differs = nspec.polynomial != nspec.essential
        fewer = len(nspec.eigenvalues) < n
        counters["c2_essential_differs"] += essential_differs
        counters["c2_fewer_distinct"] += fewer
        conditional = (not essential_differs) or fewer
        counters["c2_conditional_holds"] += conditional
        if not conditional:
            failures.append("fewer distinct eigenvalues for the quasi-inverse")

        if nspec.dependence is None:
            counters["c3_unevaluable"] += 1
        else:
            independent = not nspec.dependence.dependent
            counters["c3_independent"] += independent
            if not independent:
                failures.append("independence of quasi-inverse eigenvectors")

        applicable = (
            len(nspec.eigenvalues) == n
            and all(ev.multiplicity == 1 for ev in nspec.eigenvalues)
            and nspec.dependence is not None
        )
        if applicable:
            counters["conjecture2_applicable"] += 1
            holds = not nspec.dependence.dependent
            counters["conjecture2_holds"] += holds
            if not holds:
                failures.append("full-spectrum quasi-inverse independence")

        if failures:
            report.counterexamples.append(
                {"trial": i, "matrix": format_matrix(a), "failed": failures}
            )

    _run_filtered(report, cfg, qualify, check)
    report.stats.update(counters)
    return report


# -- registry ------------------------------------------------------------------------

THEOREM_SUITES: tuple[str, ...] = (
    "cayley_hamilton",
    "det_mult",
    "adj_antihom",
    "det_adj",
    "quasi_identity",
    "cpip_power",
    "cpip_nabla",
    "independence_low_dim",
    "difference_criterion",
    "generalized_independence",
)

REPORT_SUITES: tuple[str, ...] = ("conjecture",)

_REGISTRY: dict[str, Callable[[TrialConfig], LawReport]] = {
    "cayley_hamilton": check_cayley_hamilton,
    "det_mult": check_det_mult,
    "adj_antihom": check_adj_antihom,
    "det_adj": check_det_adj,
    "quasi_identity": check_quasi_identity,
    "cpip_power": check_cpip_power,
    "cpip_nabla": check_cpip_nabla,
    "independence_low_dim": check_independence_low_dim,
    "difference_criterion": check_difference_criterion_theorem,
    "generalized_independence": check_generalized_independence,
    "conjecture": conjecture_experiment,
}


def run_suites(names: Sequence[str] | None, cfg: TrialConfig) -> dict[str, LawReport]:
    """Run the named suites (all theorem suites by default), in a fixed order."""
    selected = tuple(names) if names else THEOREM_SUITES
    unknown = [name for name in selected if name not in _REGISTRY]
    if unknown:
        raise ValueError(
            f"unknown suites {unknown}; available: {', '.join(sorted(_REGISTRY))}"
        )
    return {name: _REGISTRY[name](cfg) for name in selected}
