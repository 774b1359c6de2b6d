"""Two-variable generalized means.

A mean is a positive function M on pairs of positive reals that is
symmetric, positively homogeneous, monotone (non-strictly) in each
argument, and between-valued (min(a,b) <= M(a,b) <= max(a,b), which
forces M(a,a) = a).  Built-in instances cover the arithmetic, geometric,
harmonic, min, max and power-mean families; arbitrary user evaluators are
wrapped as ``custom`` means and can be vetted by randomized sampling.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import DomainError

__all__ = [
    "MeanSpec",
    "AxiomResult",
    "ValidationReport",
    "DominanceReport",
    "arithmetic_mean",
    "geometric_mean",
    "harmonic_mean",
    "min_mean",
    "max_mean",
    "power_mean",
    "custom_mean",
    "parse_mean",
    "evaluate",
    "evaluate_pairs",
    "validate_mean_axioms",
    "dominates_geometric",
]

SAMPLE_RANGE = (1e-3, 1e3)


@dataclass(frozen=True)
class MeanSpec:
    """A two-variable mean: a named kind plus its evaluator.

    ``dominates_geometric_claim`` is an analytically asserted flag stating
    whether sqrt(a*b) <= M(a,b) holds for all positive a, b; ``None`` means
    unknown (typical for custom evaluators).
    """

    kind: str
    evaluator: Callable[[float, float], float]
    exponent: Optional[float] = None
    dominates_geometric_claim: Optional[bool] = None

    @property
    def name(self) -> str:
        if self.kind == "power":
            return f"power:{self.exponent:g}"
        return self.kind

    def __call__(self, a, b):
        return evaluate(self, a, b)


def _power_eval(p: float):
    # Factor out the dominant argument so a**p never overflows for large |p|.
    def ev(a, b):
        big, small = np.maximum(a, b), np.minimum(a, b)
        if p > 0:
            ratio = small / big
            return big * ((1.0 + ratio**p) / 2.0) ** (1.0 / p)
        ratio = big / small
        return small * ((1.0 + ratio**p) / 2.0) ** (1.0 / p)

    return ev


def arithmetic_mean() -> MeanSpec:
    return MeanSpec("arithmetic", lambda a, b: 0.5 * (a + b),
                    dominates_geometric_claim=True)


def geometric_mean() -> MeanSpec:
    return MeanSpec("geometric", lambda a, b: np.sqrt(a * b),
                    dominates_geometric_claim=True)


def harmonic_mean() -> MeanSpec:
    return MeanSpec("harmonic", lambda a, b: 2.0 * a * b / (a + b),
                    dominates_geometric_claim=False)


def min_mean() -> MeanSpec:
    return MeanSpec("min", np.minimum, dominates_geometric_claim=False)


def max_mean() -> MeanSpec:
    return MeanSpec("max", np.maximum, dominates_geometric_claim=True)


def power_mean(p: float) -> MeanSpec:
    """The p-th power mean ((a^p + b^p)/2)^(1/p); p = 0 is the geometric mean.

    Power means increase with p, so the geometric mean (p = 0) is dominated
    exactly when p >= 0.
    """
    p = float(p)
    if p == 0.0:
        return MeanSpec("power", lambda a, b: np.sqrt(a * b), exponent=0.0,
                        dominates_geometric_claim=True)
    return MeanSpec("power", _power_eval(p), exponent=p,
                    dominates_geometric_claim=p >= 0)


def custom_mean(evaluator: Callable[[float, float], float],
                dominates_geometric_claim: Optional[bool] = None) -> MeanSpec:
    """Wrap a user-supplied evaluator; its axioms are NOT checked here."""
    return MeanSpec("custom", evaluator,
                    dominates_geometric_claim=dominates_geometric_claim)


_BUILTINS = {
    "arithmetic": arithmetic_mean,
    "geometric": geometric_mean,
    "harmonic": harmonic_mean,
    "min": min_mean,
    "max": max_mean,
}


def parse_mean(spec: str) -> MeanSpec:
    """Parse a mean-selection string.

    Grammar: ``"arithmetic" | "geometric" | "harmonic" | "min" | "max" |
    "power:<float>"``.

    Raises
    ------
    DomainError
        If the string matches none of the alternatives.
    """
    spec = spec.strip()
    if spec in _BUILTINS:
        return _BUILTINS[spec]()
    if spec.startswith("power:"):
        try:
            return power_mean(float(spec[len("power:"):]))
        except ValueError as exc:
            raise DomainError(f"bad power mean exponent in {spec!r}") from exc
    raise DomainError(
        f"unknown mean {spec!r}; expected arithmetic|geometric|harmonic|min|max|power:<float>")


def evaluate(mean: MeanSpec, a, b):
    """Evaluate M(a, b) for positive scalars (arrays work for built-ins).

    Raises
    ------
    DomainError
        If any input is not strictly positive.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if np.any(a <= 0) or np.any(b <= 0):
        raise DomainError("mean arguments must be strictly positive")
    out = mean.evaluator(a, b)
    if a.ndim == 0 and b.ndim == 0:
        return float(out)
    return np.asarray(out, dtype=float)


def evaluate_pairs(mean: MeanSpec, a, b) -> np.ndarray:
    """Vectorized evaluate that tolerates scalar-only custom evaluators."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if np.any(a <= 0) or np.any(b <= 0):
        raise DomainError("mean arguments must be strictly positive")
    try:
        out = np.asarray(mean.evaluator(a, b), dtype=float)
        if out.shape == np.broadcast_shapes(a.shape, b.shape):
            return out
    except Exception:
        pass
    af, bf = np.broadcast_arrays(a, b)
    return np.array([mean.evaluator(float(x), float(y))
                     for x, y in zip(af.ravel(), bf.ravel())]).reshape(af.shape)


@dataclass(frozen=True)
class AxiomResult:
    passed: bool
    witness: Optional[tuple] = None


@dataclass(frozen=True)
class ValidationReport:
    """Per-axiom sampling verdicts; witnesses hold the first counterexample."""

    symmetry: AxiomResult
    homogeneity: AxiomResult
    monotonicity: AxiomResult
    betweenness: AxiomResult
    samples: int = 0

    @property
    def passed(self) -> bool:
        return (self.symmetry.passed and self.homogeneity.passed
                and self.monotonicity.passed and self.betweenness.passed)


@dataclass(frozen=True)
class DominanceReport:
    """Did sqrt(a*b) <= M(a,b) + tol hold over all sampled pairs."""

    holds: bool
    witness: Optional[tuple] = None
    samples: int = 0


def _log_uniform(rng, size):
    lo, hi = np.log10(SAMPLE_RANGE[0]), np.log10(SAMPLE_RANGE[1])
    return 10.0 ** rng.uniform(lo, hi, size=size)


def _first_violation(mask, *columns):
    idx = int(np.argmax(mask))
    return tuple(float(c[idx]) for c in columns)


def validate_mean_axioms(mean: MeanSpec, sample_budget: int = 10_000,
                         seed: int = 0, tol: float = 1e-9) -> ValidationReport:
    """Check the four mean axioms on log-uniform random samples.

    Each sampled triple (a, b, r) in [1e-3, 1e3]^3 is used in all four
    checks: symmetry M(a,b) = M(b,a), homogeneity M(ra,rb) = r*M(a,b),
    non-strict monotonicity against a shifted copy of each argument, and
    betweenness min <= M <= max (including equal-argument pairs, which
    forces M(a,a) = a).  Violations are reported, never raised.

    Parameters
    ----------
    mean : MeanSpec
    sample_budget : int
        Number of sampled triples, >= 1.
    seed : int
        Reproducibility seed.
    tol : float
        Comparison slack, scaled by max(1, |values|).
    """
    if sample_budget < 1:
        raise DomainError("sample_budget must be >= 1")
    rng = np.random.default_rng(seed)
    a = _log_uniform(rng, sample_budget)
    b = _log_uniform(rng, sample_budget)
    r = _log_uniform(rng, sample_budget)
    # A slice of exact-tie pairs exercises the forced identity M(a,a) = a.
    n_eq = max(1, sample_budget // 16)
    b[:n_eq] = a[:n_eq]

    m_ab = evaluate_pairs(mean, a, b)
    m_ba = evaluate_pairs(mean, b, a)
    m_r = evaluate_pairs(mean, r * a, r * b)
    up = 1.0 + rng.uniform(0.1, 2.0, size=sample_budget)
    m_up_a = evaluate_pairs(mean, a * up, b)
    m_up_b = evaluate_pairs(mean, a, b * up)

    scale = np.maximum(1.0, np.abs(m_ab))

    sym_bad = np.abs(m_ab - m_ba) > tol * scale
    hom_bad = np.abs(m_r - r * m_ab) > tol * np.maximum(1.0, np.abs(r * m_ab))
    mono_bad = (m_up_a < m_ab - tol * scale) | (m_up_b < m_ab - tol * scale)
    lo, hi = np.minimum(a, b), np.maximum(a, b)
    btw_bad = (m_ab < lo - tol * scale) | (m_ab > hi + tol * scale)

    def result(mask, *cols):
        if not mask.any():
            return AxiomResult(True)
        return AxiomResult(False, _first_violation(mask, *cols))

    return ValidationReport(
        symmetry=result(sym_bad, a, b, m_ab, m_ba),
        homogeneity=result(hom_bad, a, b, r, m_r, r * m_ab),
        monotonicity=result(mono_bad, a, b, up, m_ab),
        betweenness=result(btw_bad, a, b, m_ab),
        samples=sample_budget,
    )


def dominates_geometric(mean: MeanSpec, sample_budget: int = 10_000,
                        seed: int = 0, tol: float = 1e-12) -> DominanceReport:
    """Sample pairs and test sqrt(a*b) <= M(a,b) + tol on every one.

    The witness, when present, is ``(a, b, sqrt(a*b), M(a,b))`` for the
    first sampled violation.
    """
    if sample_budget < 1:
        raise DomainError("sample_budget must be >= 1")
    rng = np.random.default_rng(seed)
    a = _log_uniform(rng, sample_budget)
    b = _log_uniform(rng, sample_budget)
    m = evaluate_pairs(mean, a, b)
    g = np.sqrt(a * b)
    bad = g > m + tol * np.maximum(1.0, g)
    if not bad.any():
        return DominanceReport(True, None, sample_budget)
    return DominanceReport(False, _first_violation(bad, a, b, g, m),
                           sample_budget)
