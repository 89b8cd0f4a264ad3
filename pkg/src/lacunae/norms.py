"""L^p and sup norms of trigonometric polynomials, multinomial expansions,
sign oscillations and unconditionality-constant estimates.

For even p the norm is computed exactly: ‖f‖_p^p = Σ_k |coef_k(f^{p/2})|².
Every other case goes through uniform-grid quadrature, which is exact for
trigonometric polynomials of degree below the grid size.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np
from scipy.optimize import minimize_scalar

from ._search import multistart_maximize
from .exact import GaussianRational, Scalar, abs2, is_exact
from .polynomial import TrigPolynomial, grid_values, next_pow2
from .relations import MultiIndex, enumerate_multiindices

__all__ = [
    "NormSpace",
    "SignVector",
    "SupNorm",
    "ExpansionClass",
    "SignRange",
    "UnconditionalityEstimate",
    "generalized_multinomial",
    "power_coefficients",
    "lp_norm_even_exact",
    "lp_norm_quadrature",
    "sup_norm",
    "projection",
    "norm",
    "norm_power",
    "phi_expansion",
    "evaluate_expansion",
    "phi_truncation",
    "theta",
    "psi",
    "sign_polynomial",
    "sign_range",
    "oscillation",
    "unconditionality_constant",
]


# ---------------------------------------------------------------------------
# Spaces and signs


@dataclass(frozen=True)
class NormSpace:
    """L^p(𝕋) for real p ≥ 1, or C(𝕋) with the sup norm."""

    kind: str = "Lp"
    p: float | Fraction | int | None = 4
    resolution: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("Lp", "sup"):
            raise ValueError("kind must be 'Lp' or 'sup'")
        if self.kind == "Lp":
            if self.p is None or self.p < 1:
                raise ValueError("L^p needs p ≥ 1")
        if self.resolution is not None and self.resolution < 1:
            raise ValueError("resolution must be positive")

    @classmethod
    def lp(cls, p, resolution: int | None = None) -> "NormSpace":
        return cls("Lp", p, resolution)

    @classmethod
    def sup(cls, resolution: int | None = None) -> "NormSpace":
        return cls("sup", None, resolution)

    @property
    def is_even(self) -> bool:
        """True when the exact path applies (p an even integer)."""
        return self.kind == "Lp" and float(self.p).is_integer() and int(self.p) % 2 == 0

    def label(self) -> str:
        return "sup" if self.kind == "sup" else f"L{self.p}"

    def to_json(self) -> dict:
        return {"kind": self.kind, "p": None if self.p is None else str(self.p), "resolution": self.resolution}


@dataclass(frozen=True)
class SignVector:
    mode: str
    values: tuple[complex, ...]

    def __post_init__(self) -> None:
        if self.mode not in ("complex", "real"):
            raise ValueError("mode must be 'complex' or 'real'")
        vals = tuple(complex(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        for v in vals:
            if abs(abs(v) - 1) > 1e-12:
                raise ValueError("signs must be unimodular")
            if self.mode == "real" and v not in (1, -1):
                raise ValueError("real signs must be ±1")


# ---------------------------------------------------------------------------
# Norms


def generalized_multinomial(x, alpha: MultiIndex | Sequence[int]) -> Fraction:
    """(x choose α) = (x choose n)(n choose α) with n = |α|, exactly."""
    entries = alpha.entries if isinstance(alpha, MultiIndex) else tuple(alpha)
    x = Fraction(x)
    n = sum(entries)
    num = Fraction(1)
    for i in range(n):
        num *= x - i
    den = 1
    for a in entries:
        den *= math.factorial(a)
    return num / den


def power_coefficients(f: TrigPolynomial, s: int) -> TrigPolynomial:
    """Fourier coefficients of f^s."""
    return f.power(s)


def _even_p(p) -> int:
    if not float(p).is_integer() or int(p) % 2 or int(p) < 2:
        raise ValueError(f"p must be an even positive integer, got {p}")
    return int(p)


def lp_norm_even_exact(f: TrigPolynomial, p) -> Fraction | float:
    """‖f‖_p^p = Σ_k |coef_k(f^{p/2})|² for even p.

    Exact (a Fraction) when f has exact coefficients; otherwise the same
    formula in floating point.
    """
    p = _even_p(p)
    if not f.terms:
        return Fraction(0) if f.is_exact else 0.0
    h = f.power(p // 2)
    if f.is_exact:
        return sum((abs2(c) for c in h.terms.values()), Fraction(0))
    _, a = h.arrays()
    return float(np.sum(np.abs(a) ** 2))


def _check_resolution(f: TrigPolynomial, resolution: int) -> None:
    need = 4 * (f.max_abs_frequency + 1)
    if resolution < need:
        raise ValueError(f"resolution {resolution} below the required 4·(max|freq|+1) = {need}")


def default_resolution(f: TrigPolynomial, p: float = 2) -> int:
    """A power of two above the precondition and the degree of |f|^p.

    For p not an even integer |f|^p is not a polynomial and the trapezoid
    error decays only algebraically near zeros of f, so the grid is much finer.
    """
    need = max(4 * (f.max_abs_frequency + 1), int(math.ceil(max(p, 2) * (f.spread + 1))) + 1, 64)
    if not (float(p).is_integer() and int(p) % 2 == 0):
        need = max(need, 256 * (f.spread + 1), 1 << 14)
    return next_pow2(need)


def lp_norm_quadrature(f: TrigPolynomial, p, resolution: int | None = None) -> float:
    """(mean over a uniform grid of |f|^p)^{1/p}."""
    if float(p) < 1:
        raise ValueError("p must be at least 1")
    if resolution is None:
        resolution = default_resolution(f, float(p))
    _check_resolution(f, resolution)
    if not f.terms:
        return 0.0
    v = np.abs(grid_values(f, resolution))
    return float(np.mean(v ** float(p)) ** (1.0 / float(p)))


@dataclass(frozen=True)
class SupNorm:
    """Certified enclosure value ≤ ‖f‖_∞ ≤ upper."""

    value: float
    upper: float
    grid_max: float
    argmax: float
    resolution: int

    @property
    def width(self) -> float:
        return self.upper - self.value

    def __iter__(self):
        return iter((self.value, self.upper))


def _local_peaks(v: np.ndarray, k: int) -> np.ndarray:
    left, right = np.roll(v, 1), np.roll(v, -1)
    peaks = np.nonzero((v >= left) & (v >= right))[0]
    if len(peaks) == 0:
        peaks = np.array([int(np.argmax(v))])
    return peaks[np.argsort(v[peaks])[::-1][:k]]


def sup_norm(f: TrigPolynomial, resolution: int | None = None, refine: int = 8) -> SupNorm:
    """Grid maximum refined by bounded Brent search, plus a rigorous upper bound.

    With D = spread of f and M = ‖f‖_∞, the grid maximum G obeys both
    M ≤ G / (1 − πD/(2·res))        (Bernstein for an exponential sum of type D/2)
    M ≤ G / sqrt(cos(πD/res))       (Szegő's bound for the degree-D polynomial |f|²)
    and the smaller bound is reported.
    """
    if resolution is None:
        resolution = next_pow2(max(4 * (f.max_abs_frequency + 1), 64 * (f.spread + 1)))
    _check_resolution(f, resolution)
    if not f.terms:
        return SupNorm(0.0, 0.0, 0.0, 0.0, resolution)
    if len(f.terms) == 1:
        v = abs(complex(next(iter(f.terms.values()))))
        return SupNorm(v, v, v, 0.0, resolution)
    vals = np.abs(grid_values(f, resolution))
    G = float(vals.max())
    h = 2 * math.pi / resolution
    q, a = f.arrays()
    qf = q.astype(float)

    def neg_abs2(t: float) -> float:
        return -float(abs(np.exp(1j * qf * t) @ a) ** 2)

    best, arg = G, float(int(np.argmax(vals)) * h)
    for k in _local_peaks(vals, refine):
        t0 = float(k) * h
        r = minimize_scalar(neg_abs2, bounds=(t0 - h, t0 + h), method="bounded", options={"xatol": 1e-13})
        v = math.sqrt(max(-r.fun, 0.0))
        if v > best:
            best, arg = v, float(r.x) % (2 * math.pi)
    D = f.spread
    x = math.pi * D / resolution
    factor = min(1.0 / (1.0 - x / 2.0), 1.0 / math.sqrt(math.cos(x)))
    upper = max(G * factor * (1 + 1e-12), best)
    return SupNorm(best, upper, G, arg, resolution)


def projection(f: TrigPolynomial, F: Iterable[int]) -> TrigPolynomial:
    return f.project(F)


def norm_power(f: TrigPolynomial, space: NormSpace):
    """‖f‖_p^p on L^p (exact for even p and exact f), ‖f‖_∞ on C(𝕋)."""
    if space.kind == "sup":
        return sup_norm(f, space.resolution).value
    if space.is_even:
        return lp_norm_even_exact(f, int(space.p))
    return lp_norm_quadrature(f, space.p, space.resolution) ** float(space.p)


def norm(f: TrigPolynomial, space: NormSpace) -> float:
    if space.kind == "sup":
        return sup_norm(f, space.resolution).value
    if space.is_even:
        return float(lp_norm_even_exact(f, int(space.p))) ** (1.0 / float(space.p))
    return lp_norm_quadrature(f, space.p, space.resolution)


# ---------------------------------------------------------------------------
# Multinomial expansions


@dataclass
class ExpansionClass:
    """Multi-indices sharing the frequency Σα_i q_i, with their coefficients (p/2 choose α)."""

    target_frequency: int
    members: list[tuple[MultiIndex, Fraction]] = field(default_factory=list)

    def evaluate(self, w: Sequence[complex]) -> complex:
        """Σ_members coeff·Π w_i^{α_i}, with w_i = ε_i z_i."""
        total = 0j
        for alpha, c in self.members:
            term = complex(c)
            for wi, ai in zip(w, alpha.entries):
                if ai:
                    term *= complex(wi) ** ai
            total += term
        return total


def phi_expansion(q: Sequence[int], p, truncation: int) -> list[ExpansionClass]:
    """Group all α ∈ ℕ^m with |α| ≤ truncation by Σα_i q_i.

    Members whose coefficient (p/2 choose α) vanishes are omitted, so for an
    even p the expansion is complete once truncation ≥ p/2.
    """
    q = [int(x) for x in q]
    if len(set(q)) != len(q):
        raise ValueError("frequencies in q must be distinct")
    if truncation < 0:
        raise ValueError("truncation must be nonnegative")
    half = Fraction(p) / 2 if not isinstance(p, float) else Fraction(p).limit_denominator(10**12) / 2
    classes: dict[int, ExpansionClass] = {}
    for w in range(truncation + 1):
        for alpha in enumerate_multiindices(len(q), w):
            c = generalized_multinomial(half, alpha)
            if c == 0:
                continue
            t = sum(a * qi for a, qi in zip(alpha.entries, q))
            classes.setdefault(t, ExpansionClass(t)).members.append((alpha, c))
    return [classes[t] for t in sorted(classes)]


def evaluate_expansion(classes: Sequence[ExpansionClass], eps: Sequence[complex], z: Sequence[complex]) -> float:
    """Σ_classes |Σ_members coeff·Π (ε_i z_i)^{α_i}|², the expansion of ∫|1 + Σε_i z_i e_{q_i}|^p."""
    w = [complex(e) * complex(x) for e, x in zip(eps, z)]
    return float(sum(abs(cl.evaluate(w)) ** 2 for cl in classes))


def phi_truncation(p, m: int, rho: float, tol: float = 1e-8, max_weight: int = 400) -> int:
    """Smallest W with Σ_{w>W} |(p/2 choose w)|(mρ)^w < tol (needs mρ < 1)."""
    r = m * rho
    if r >= 1:
        raise ValueError("the expansion converges only for m·ρ < 1")
    half = float(p) / 2
    terms = []
    c = 1.0
    for w in range(max_weight + 1):
        terms.append(abs(c) * r**w)
        c *= (half - w) / (w + 1)
    tail = 0.0
    for W in range(max_weight, -1, -1):
        if tail >= tol:
            return W + 1
        tail += terms[W]
    return 0


def _theta_poly(r: Sequence[int], eps: Sequence[Scalar], z: Sequence[Scalar]) -> TrigPolynomial:
    if len(eps) != len(r) - 1 or len(z) != len(r) - 1:
        raise ValueError("theta needs len(eps) = len(z) = len(r) − 1")
    terms: dict[int, Scalar] = {int(r[0]): 1}
    exact = all(is_exact(x) for x in list(eps) + list(z))
    for ri, e, x in zip(r[1:], eps, z):
        c = e * x if exact else complex(e) * complex(x)
        terms[int(ri)] = terms.get(int(ri), 0) + c
    return TrigPolynomial(terms)


def theta(r: Sequence[int], eps: Sequence[Scalar] | SignVector, z: Sequence[Scalar], space: NormSpace):
    """Θ_r(ε, z) = ‖e_{r_0} + Σ ε_i z_i e_{r_i}‖_p^p (‖·‖_∞ in C(𝕋))."""
    if isinstance(eps, SignVector):
        eps = eps.values
    return norm_power(_theta_poly(r, list(eps), list(z)), space)


def psi(r: Sequence[int], j: int, eps: Scalar, z: Sequence[Scalar], space: NormSpace):
    """Θ_r with signs (1,…,1, ε,…,ε): the first j coordinates unsigned."""
    m = len(r) - 1
    if not 0 <= j <= m:
        raise ValueError("split j must satisfy 0 ≤ j ≤ m")
    return theta(r, [1] * j + [eps] * (m - j), z, space)


# ---------------------------------------------------------------------------
# Sign oscillation


def sign_polynomial(f: TrigPolynomial, g: TrigPolynomial, p) -> dict[int, Scalar]:
    """Laurent coefficients b_d with ‖εf + g‖_p^p = Σ_d b_d ε^d for |ε| = 1 (p even).

    With s = p/2 and c_k = C(s,k) f^k g^{s−k}, the norm is
    Σ_{k,l} ε^{k−l} ⟨c_k, c_l⟩.  Exact for exact f, g.
    """
    s = _even_p(p) // 2
    exact = f.is_exact and g.is_exact
    one = TrigPolynomial({0: 1})
    fpow = [one]
    gpow = [one]
    for _ in range(s):
        fpow.append(fpow[-1].convolve(f))
        gpow.append(gpow[-1].convolve(g))
    c = [fpow[k].convolve(gpow[s - k]).scale(math.comb(s, k)) for k in range(s + 1)]
    out: dict[int, Scalar] = {}
    for k in range(s + 1):
        for l in range(s + 1):
            ip = 0
            for q, ck in c[k].terms.items():
                cl = c[l].terms.get(q)
                if cl is not None:
                    if exact:
                        cl_conj = cl.conjugate() if isinstance(cl, GaussianRational) else cl
                        ip = ip + ck * cl_conj
                    else:
                        ip += complex(ck) * complex(cl).conjugate()
            if ip != 0:
                out[k - l] = out.get(k - l, 0) + ip
    return out


@dataclass(frozen=True)
class SignRange:
    """Extremes of ‖εf + g‖ over the sign set."""

    norm_max: float
    norm_min: float
    eps_max: complex
    eps_min: complex

    @property
    def oscillation(self) -> float:
        return self.norm_max - self.norm_min


def _extremes_on_circle(fun, samples: int) -> tuple[float, float, float, float]:
    """(max, argmax θ, min, argmin θ) of a smooth 2π-periodic function:
    uniform sampling followed by one bounded Brent pass around each extreme."""
    th = 2 * math.pi * np.arange(samples) / samples
    vals = np.array([fun(t) for t in th])
    h = 2 * math.pi / samples
    out = []
    for sign in (1.0, -1.0):
        k = int(np.argmax(sign * vals))
        t0 = th[k]
        # search the offset from t0 so the relative x-tolerance stays tiny
        r = minimize_scalar(lambda u: -sign * fun(t0 + u), bounds=(-h, h), method="bounded", options={"xatol": 1e-13})
        v, t = (float(-sign * r.fun), float(t0 + r.x)) if -r.fun >= sign * vals[k] else (float(vals[k]), float(t0))
        out.append((v, t % (2 * math.pi)))
    (vmax, tmax), (vmin, tmin) = out
    return vmax, tmax, vmin, tmin


def sign_range(f: TrigPolynomial, g: TrigPolynomial, space: NormSpace, sign_mode: str = "complex", sign_samples: int = 64) -> SignRange:
    if sign_mode not in ("complex", "real"):
        raise ValueError("sign_mode must be 'complex' or 'real'")
    if sign_mode == "real":
        a, b = norm(f + g, space), norm(g - f, space)
        return SignRange(max(a, b), min(a, b), 1 if a >= b else -1, -1 if a >= b else 1)
    if space.is_even:
        p = int(space.p)
        # |εf + g|^p has degree ≤ p·spread, so this grid integrates it exactly; evaluating
        # from grid values keeps relative accuracy where εf + g nearly vanishes
        support = TrigPolynomial({q: 1 for q in set(f.support) | set(g.support)})
        res = default_resolution(support, p)
        F, G = grid_values(f, res), grid_values(g, res)

        def power_at(theta_: float) -> float:
            return float(np.mean(np.abs(complex(math.cos(theta_), math.sin(theta_)) * F + G) ** p))

        # optimise the smooth p-th power; its root has a cusp where the norm vanishes
        vmax, tmax, vmin, tmin = _extremes_on_circle(power_at, max(sign_samples, 32 * (p // 2 + 1)))
        vmax, vmin = vmax ** (1.0 / p), vmin ** (1.0 / p)
    else:
        ff = f.to_float()

        def norm_at(theta_: float) -> float:
            return norm(ff.scale(complex(math.cos(theta_), math.sin(theta_))) + g, space)

        vmax, tmax, vmin, tmin = _extremes_on_circle(norm_at, sign_samples)
    return SignRange(vmax, vmin, complex(math.cos(tmax), math.sin(tmax)), complex(math.cos(tmin), math.sin(tmin)))


def oscillation(f: TrigPolynomial, g: TrigPolynomial, space: NormSpace, sign_mode: str = "complex", sign_samples: int = 64) -> float:
    """max − min of ‖εf + g‖ over ε ∈ 𝕋 (complex) or ε = ±1 (real)."""
    return sign_range(f, g, space, sign_mode, sign_samples).oscillation


# ---------------------------------------------------------------------------
# Unconditionality constants


@dataclass
class UnconditionalityEstimate:
    """value = ‖Σ ε_q a_q e_q‖ / ‖Σ ε′_q a_q e_q‖ for the certificate (a, ε, ε′)."""

    value: float
    lower_bound: float
    freqs: tuple[int, ...]
    a: tuple[complex, ...]
    eps: tuple[complex, ...]
    eps_prime: tuple[complex, ...]
    space: NormSpace
    sign_mode: str
    starts: int
    evaluations: int

    def to_json(self) -> dict:
        cplx = lambda v: [[float(x.real), float(x.imag)] for x in v]  # noqa: E731
        return {
            "space": self.space.label(),
            "value": self.value,
            "lower_bound": self.lower_bound,
            "certificate": {
                "freqs": list(self.freqs),
                "a": cplx(self.a),
                "eps": cplx(self.eps),
                "eps_prime": cplx(self.eps_prime),
            },
            "sign_mode": self.sign_mode,
            "starts": self.starts,
            "evaluations": self.evaluations,
        }


class _FastNorm:
    """Norm of Σ a_q e_q for a fixed frequency set, tuned for optimizer loops."""

    def __init__(self, freqs: Sequence[int], space: NormSpace, sup_oversample: int = 64):
        self.freqs = np.array(sorted(freqs), dtype=np.int64)
        self.space = space
        rel = self.freqs - self.freqs[0]
        self.rel = rel
        self.D = int(rel[-1])
        if space.kind == "sup":
            res = next_pow2(max(64, sup_oversample * (self.D + 1)))
            t = 2 * np.pi * np.arange(res) / res
            self.basis = np.exp(1j * np.outer(rel.astype(float), t)) if len(rel) * res <= 1 << 24 else None
            self.res = res
        elif not space.is_even:
            res = space.resolution or next_pow2(max(64, int(math.ceil(float(space.p) * 4 * (self.D + 1)))))
            t = 2 * np.pi * np.arange(res) / res
            self.basis = np.exp(1j * np.outer(rel.astype(float), t))
            self.res = res

    def __call__(self, a: np.ndarray) -> float:
        sp = self.space
        if sp.kind == "sup":
            if self.basis is not None:
                return float(np.abs(a @ self.basis).max())
            A = np.zeros(self.res, dtype=np.complex128)
            np.add.at(A, self.rel % self.res, a)
            return float(np.abs(np.fft.ifft(A)).max() * self.res)
        if sp.is_even:
            dense = np.zeros(self.D + 1, dtype=np.complex128)
            dense[self.rel] = a
            h = dense
            for _ in range(int(sp.p) // 2 - 1):
                h = np.convolve(h, dense)
            return float(np.sum(np.abs(h) ** 2)) ** (1.0 / float(sp.p))
        v = np.abs(a @ self.basis)
        return float(np.mean(v ** float(sp.p)) ** (1.0 / float(sp.p)))

    def certified(self, a: Sequence[complex]) -> tuple[float, float]:
        """(lower, upper) enclosure of the true norm."""
        f = TrigPolynomial(dict(zip((int(q) for q in self.freqs), (complex(x) for x in a))))
        sp = self.space
        if sp.kind == "sup":
            s = sup_norm(f)
            return s.value, s.upper
        v = norm(f, sp)
        slack = 1e-12 if sp.is_even else 1e-9
        return v * (1 - slack), v * (1 + slack)


def _real_signs(m: int) -> np.ndarray:
    """All ±1 vectors of length m with first entry 1."""
    rows = [(1,) + s for s in itertools.product((1, -1), repeat=m - 1)]
    return np.array(rows, dtype=float)


def _coeffs_from_params(x: np.ndarray, m: int) -> np.ndarray:
    mod = np.abs(x[:m])
    ph = np.concatenate([[0.0], x[m : 2 * m - 1]])
    return mod * np.exp(1j * ph)


def _known_seeds(freqs: Sequence[int]) -> list[np.ndarray]:
    """Coefficient vectors that are extremal for small relation patterns:
    (ϱ, 1, ϱ) with ϱ = 6^{−1/4} on a 3-term progression, all ones on q1+q2=q3+q4."""
    fs = sorted(freqs)
    m = len(fs)
    seeds = []
    rho = 6 ** -0.25
    pos = {q: i for i, q in enumerate(fs)}
    for i in range(m):
        for j in range(i + 1, m):
            mid2 = fs[i] + fs[j]
            if mid2 % 2 == 0 and mid2 // 2 in pos and mid2 // 2 not in (fs[i], fs[j]):
                a = np.full(m, 1e-3, dtype=complex)
                a[i] = a[j] = rho
                a[pos[mid2 // 2]] = 1.0
                seeds.append(a)
    s = set(fs)
    for i in range(m):
        for j in range(i + 1, m):
            for k in range(j + 1, m):
                l_ = fs[i] + fs[k] - fs[j]
                if l_ in s and l_ not in (fs[i], fs[j], fs[k]):
                    a = np.full(m, 1e-3, dtype=complex)
                    for q in (fs[i], fs[j], fs[k], l_):
                        a[pos[q]] = 1.0
                    seeds.append(a)
    seeds.append(np.ones(m, dtype=complex))
    return seeds


def _params_from_coeffs(a: np.ndarray) -> np.ndarray:
    m = len(a)
    ph = np.angle(a) - np.angle(a[0])
    return np.concatenate([np.abs(a), ph[1:m]])


def unconditionality_constant(
    freqs: Iterable[int],
    space: NormSpace,
    sign_mode: str = "real",
    starts: int = 32,
    seed: int = 0,
    max_evals: int = 4000,
) -> UnconditionalityEstimate:
    """Lower-bound estimate of the unconditionality constant of a frequency set.

    Real mode maximises max_ε ‖Σε a e‖ / min_ε ‖Σε a e‖ over ε ∈ {±1}^m
    (enumerated) and complex a (multi-start Nelder–Mead).  Complex mode uses
    homogeneity: the ratio ‖Σ ε a e‖ / ‖Σ a e‖ is maximised jointly over a
    and the sign phases ε, with ε′ = 1.
    """
    if sign_mode not in ("complex", "real"):
        raise ValueError("sign_mode must be 'complex' or 'real'")
    fs = sorted(set(int(q) for q in freqs))
    if not fs:
        raise ValueError("need at least one frequency")
    m = len(fs)
    evaluator = _FastNorm(fs, space)
    one = tuple([1 + 0j] * m)
    if m == 1 or (space.kind == "Lp" and float(space.p) == 2):
        a = tuple([1 + 0j] * m)
        return UnconditionalityEstimate(1.0, 1.0, tuple(fs), a, one, one, space, sign_mode, 0, 0)

    if sign_mode == "real":
        signs = _real_signs(m)

        def ratio(x: np.ndarray) -> float:
            a = _coeffs_from_params(x, m)
            if not np.any(a):
                return 0.0
            vals = np.array([evaluator(s * a) for s in signs])
            lo = vals.min()
            return float(vals.max() / lo) if lo > 0 else 0.0

        seeds = [_params_from_coeffs(a) for a in _known_seeds(fs)]
        dim = 2 * m - 1
    else:

        def ratio(x: np.ndarray) -> float:
            a = _coeffs_from_params(x, m)
            eps = np.exp(1j * np.concatenate([[0.0], x[2 * m - 1 :]]))
            den = evaluator(a)
            return float(evaluator(eps * a) / den) if den > 0 else 0.0

        seeds = []
        for a in _known_seeds(fs):
            for flip in range(m):
                ph = np.zeros(m - 1)
                if flip:
                    ph[flip - 1] = math.pi
                seeds.append(np.concatenate([_params_from_coeffs(a), ph]))
        dim = 3 * m - 2

    def random_start(rng: np.random.Generator) -> np.ndarray:
        x = np.concatenate([rng.uniform(0.1, 1.0, m), rng.uniform(-math.pi, math.pi, dim - m)])
        return x

    best_x, best_val, evals = multistart_maximize(ratio, seeds, random_start, starts, seed, max_evals)
    a = _coeffs_from_params(best_x, m)
    a = a / np.sum(np.abs(a))
    if sign_mode == "real":
        vals = [evaluator(s * a) for s in signs]
        eps = tuple(complex(v) for v in signs[int(np.argmax(vals))])
        eps_p = tuple(complex(v) for v in signs[int(np.argmin(vals))])
    else:
        eps = tuple(complex(v) for v in np.exp(1j * np.concatenate([[0.0], best_x[2 * m - 1 :]])))
        eps_p = one
    num = evaluator.certified(np.array(eps) * a)
    den = evaluator.certified(np.array(eps_p) * a)
    value = num[0] / den[0] if space.kind == "sup" else evaluator(np.array(eps) * a) / evaluator(np.array(eps_p) * a)
    lower = num[0] / den[1]
    return UnconditionalityEstimate(
        float(value), float(lower), tuple(fs), tuple(complex(x) for x in a), eps, eps_p, space, sign_mode, starts, evals
    )
