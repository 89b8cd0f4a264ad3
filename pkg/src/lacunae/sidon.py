"""Sidon constants, Hadamard-set bounds, the lacunary lower inequality and
the joint-distribution deviation of characters."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from ._search import multistart_maximize
from .norms import NormSpace, _FastNorm, sup_norm
from .polynomial import TrigPolynomial, next_pow2

__all__ = [
    "DomainError",
    "SidonEstimate",
    "Arc",
    "StepReport",
    "LacunaryReport",
    "sidon_constant_estimate",
    "hadamard_threshold",
    "hadamard_bound",
    "lacunary_factor",
    "lacunary_inequality_check",
    "joint_distribution_deviation",
    "DEFAULT_DEVIATION_RESOLUTION",
]


class DomainError(ValueError):
    """Input outside the domain where a formula is meaningful."""


@dataclass
class SidonEstimate:
    """value = Σ|a_q| / ‖Σ a_q e_q‖_∞ at the certificate a (normalised to Σ|a_q| = 1)."""

    value: float
    upper: float
    lower_bound: float
    freqs: tuple[int, ...]
    a: tuple[complex, ...]
    starts: int
    evaluations: int
    resolution: int

    def to_json(self) -> dict:
        return {
            "space": "sup",
            "value": self.value,
            "lower_bound": self.lower_bound,
            "upper": self.upper,
            "certificate": {"freqs": list(self.freqs), "a": [[float(x.real), float(x.imag)] for x in self.a]},
            "starts": self.starts,
            "evaluations": self.evaluations,
            "resolution": self.resolution,
        }


def sidon_constant_estimate(E: Iterable[int], starts: int = 32, seed: int = 0, max_evals: int = 6000) -> SidonEstimate:
    """Multi-start maximisation of Σ|a_q| / ‖Σ a_q e_q‖_∞ over moduli and phases.

    The true ratio at the returned certificate lies in [lower_bound, upper]:
    `value` uses the refined sup norm (a lower estimate of ‖f‖_∞, hence
    value = upper), `lower_bound` divides by the certified upper sup bound.
    The Sidon constant itself is at least lower_bound.
    """
    fs = sorted(set(int(q) for q in E))
    if not fs:
        raise ValueError("E must be nonempty")
    m = len(fs)
    if m == 1:
        return SidonEstimate(1.0, 1.0, 1.0, tuple(fs), (1 + 0j,), 0, 0, 1)
    # search on a coarse grid, then polish the winner on a fine one
    coarse = _FastNorm(fs, NormSpace.sup(), sup_oversample=8)
    fine = _FastNorm(fs, NormSpace.sup(), sup_oversample=64)

    def coeffs(x: np.ndarray) -> np.ndarray:
        return np.abs(x[:m]) * np.exp(1j * np.concatenate([[0.0], x[m:]]))

    def ratio_on(ev: _FastNorm):
        def ratio(x: np.ndarray) -> float:
            a = coeffs(x)
            s = np.sum(np.abs(a))
            return float(s / ev(a)) if s > 0 else 0.0

        return ratio

    seeds = [np.concatenate([np.ones(m), np.zeros(m - 1)])]
    # alternating real signs are extremal for {0,1,2}-like sets
    seeds.append(np.concatenate([np.ones(m), np.where(np.arange(1, m) % 2 == 1, math.pi, 0.0)]))
    rng_start = lambda rng: np.concatenate([rng.uniform(0.1, 1.0, m), rng.uniform(-math.pi, math.pi, m - 1)])  # noqa: E731
    x, _, evals = multistart_maximize(ratio_on(coarse), seeds, rng_start, starts, seed, max_evals)
    x, _, more = multistart_maximize(ratio_on(fine), [x], rng_start, 1, seed, max_evals)
    evals += more
    a = coeffs(x)
    a = a / np.sum(np.abs(a))
    s = sup_norm(TrigPolynomial(dict(zip(fs, (complex(c) for c in a)))))
    return SidonEstimate(1.0 / s.value, 1.0 / s.value, 1.0 / s.upper, tuple(fs), tuple(complex(c) for c in a), starts, evals, s.resolution)


def hadamard_threshold() -> float:
    """sqrt(π²/2 + 1): the Hadamard bound needs a ratio above this."""
    return math.sqrt(math.pi**2 / 2 + 1)


def hadamard_bound(q: float) -> float:
    """Upper bound 1 + π²/(2q² − 2 − π²) for the Sidon constant of a Hadamard set of ratio q."""
    if math.isinf(q):
        return 1.0
    if q <= hadamard_threshold():
        raise DomainError(f"ratio q={q} must exceed sqrt(π²/2+1) ≈ {hadamard_threshold():.6f}")
    return 1 + math.pi**2 / (2 * q * q - 2 - math.pi**2)


def lacunary_factor(q: float) -> float:
    """1 − π²/(2(q² − 1))."""
    return 1 - math.pi**2 / (2 * (q * q - 1))


@dataclass
class StepReport:
    """One induction step ‖π_{p+1}f‖ ≥ ‖π_p f‖ + |a_{p+1}| − π²/(2n_{p+1}²)·‖(π_p f)''‖."""

    index: int
    lhs_lower: float
    rhs_upper: float
    sup_width: float

    @property
    def margin(self) -> float:
        return self.lhs_lower - self.rhs_upper

    @property
    def holds(self) -> bool:
        return self.margin > 0

    @property
    def certified(self) -> bool:
        # margin > 0 is already rigorous; this flags margins that dwarf the enclosure width
        return self.holds and self.sup_width < 0.1 * self.margin


@dataclass
class LacunaryReport:
    factor: float
    ratio_ok: bool
    min_ratio: float
    violations: list[int]
    lhs_lower: float
    rhs_upper: float
    sup_width: float
    steps: list[StepReport] = field(default_factory=list)

    @property
    def margin(self) -> float:
        return self.lhs_lower - self.rhs_upper

    @property
    def holds(self) -> bool:
        return self.ratio_ok and self.margin > 0 and all(s.holds for s in self.steps)

    @property
    def certified(self) -> bool:
        return self.holds and self.sup_width < 0.1 * self.margin and all(s.certified for s in self.steps)

    def to_json(self) -> dict:
        return {
            "factor": self.factor,
            "ratio_ok": self.ratio_ok,
            "min_ratio": self.min_ratio,
            "ratio_violations": self.violations,
            "lhs_lower": self.lhs_lower,
            "rhs_upper": self.rhs_upper,
            "margin": self.margin,
            "holds": self.holds,
            "certified": self.certified,
            "steps": [
                {"index": s.index, "lhs_lower": s.lhs_lower, "rhs_upper": s.rhs_upper, "margin": s.margin, "holds": s.holds}
                for s in self.steps
            ],
        }


def _lacunary_sup(f: TrigPolynomial):
    need = 4 * (f.max_abs_frequency + 1)
    return sup_norm(f, next_pow2(max(need, min(64 * (f.spread + 1), 1 << 22))))


def lacunary_inequality_check(f: TrigPolynomial, k: int, q: float) -> LacunaryReport:
    """Check ‖f‖_∞ ≥ (1 − π²/(2(q²−1)))·(‖π_k f‖_∞ + Σ_{j>k}|a_j|) and every induction step.

    Frequencies are ordered by |n|; π_p f keeps the first p of them.  Lower
    sides use the refined sup norm, upper sides its certified bound, so a
    positive margin is a rigorous statement.  A ratio |n_{j+1}| < q|n_j| for
    j ≥ k is reported in `violations` (1-based j) and makes `holds` false.
    """
    if q * q <= 1 + math.pi**2 / 2:
        raise DomainError("need q² > 1 + π²/2 for a positive factor")
    freqs = sorted(f.support, key=lambda n: (abs(n), n))
    K = len(freqs)
    if not 1 <= k <= K:
        raise ValueError("k must satisfy 1 ≤ k ≤ number of terms")
    if freqs and freqs[0] == 0 and k < 1:
        raise ValueError("frequency 0 must lie in the head")
    violations = [j + 1 for j in range(k - 1, K - 1) if abs(freqs[j + 1]) < q * abs(freqs[j])]
    ratios = [abs(freqs[j + 1]) / abs(freqs[j]) for j in range(k - 1, K - 1) if freqs[j] != 0]
    min_ratio = min(ratios) if ratios else math.inf
    factor = lacunary_factor(q)
    heads = [f.project(freqs[:p]) for p in range(1, K + 1)]
    sups = [_lacunary_sup(h) for h in heads]
    coef = [abs(complex(f[n])) for n in freqs]
    full = sups[-1]
    head_k = sups[k - 1]
    rhs = factor * (head_k.upper + sum(coef[k:]))
    width = max(full.width, head_k.width)
    steps = []
    for p in range(k, K):
        n_next = freqs[p]
        d2 = _lacunary_sup(heads[p - 1].derivative(2))
        loss_upper = math.pi**2 / (2 * n_next**2) * d2.upper
        lhs = sups[p].value
        rhs_step = sups[p - 1].upper + coef[p] - math.pi**2 / (2 * n_next**2) * d2.value
        w = max(sups[p].width, sups[p - 1].width, loss_upper - math.pi**2 / (2 * n_next**2) * d2.value)
        steps.append(StepReport(p + 1, lhs, rhs_step, w))
    return LacunaryReport(factor, not violations, min_ratio, violations, full.value, rhs, width, steps)


# ---------------------------------------------------------------------------
# Joint distribution


@dataclass(frozen=True)
class Arc:
    """The arc {start + s : 0 < s < length} of 𝕋 (angles in radians)."""

    start: float
    length: float

    def __post_init__(self) -> None:
        if not 0 < self.length <= 2 * math.pi:
            raise ValueError("arc length must lie in (0, 2π]")


# a prime just below 2^20: p·k mod N then permutes the grid for every p not divisible by N
DEFAULT_DEVIATION_RESOLUTION = 1048573


def joint_distribution_deviation(
    freqs: Sequence[int], arcs: Sequence[Arc], resolution: int = DEFAULT_DEVIATION_RESOLUTION
) -> float:
    """|m[t : p_i·t ∈ A_i for all i] − Π m[A_i]| by counting grid points t = 2πk/N.

    Angles p_i·t are reduced exactly with integer arithmetic (p_i·k mod N), a
    sample counts only when every angle is strictly inside its arc, and the
    count is accurate to about (number of arc endpoints crossed)/N.
    """
    if len(freqs) != len(arcs):
        raise ValueError("need one arc per frequency")
    if len(set(int(p) for p in freqs)) != len(freqs):
        raise ValueError("frequencies must be distinct")
    N = int(resolution)
    k = np.arange(N, dtype=np.int64)
    inside = np.ones(N, dtype=bool)
    two_pi = 2 * math.pi
    for p, arc in zip(freqs, arcs):
        r = (int(p) % N) * k % N  # < N² fits int64 for N < 3·10^9
        theta = r * (two_pi / N)
        rel = np.mod(theta - arc.start, two_pi)
        if arc.length >= two_pi:
            inside &= rel != 0
        else:
            inside &= (rel > 0) & (rel < arc.length)
    measure = inside.mean()
    product = math.prod(sorted(a.length / two_pi for a in arcs))  # order-independent rounding
    return float(abs(measure - product))
