"""Example spectra, the geometric-sequence classification, Diophantine
families for powers of j, exact identity checks, and density/growth
diagnostics."""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .relations import Status, Verdict, Window, Witness, check_I, check_J, find_relation_pruned

__all__ = [
    "SequenceSpec",
    "UncertifiedFloorError",
    "GeometricProfile",
    "PropertyMeasurement",
    "Classification",
    "DiophantineSolution",
    "IdentityCheck",
    "GrowthReport",
    "generate",
    "certified_floor_powers",
    "geometric_expected",
    "classify_geometric",
    "diophantine_geometric",
    "diophantine_families",
    "fixed_identities",
    "identity_suite",
    "density_estimate",
    "growth_admissible",
]

UNBOUNDED = math.inf


class UncertifiedFloorError(ArithmeticError):
    """σ^k is too close to an integer to certify its floor at the maximal precision."""


# ---------------------------------------------------------------------------
# Sequence specifications


@dataclass(frozen=True)
class SequenceSpec:
    """A recipe for an integer spectrum.

    kind is one of geometric (param j), integer_part_power (param σ as an
    int, Fraction or sympy-parsable string such as "(1+sqrt(5))/2"),
    polynomial (param: coefficients c_0, c_1, … of P(k) = Σ c_i k^i, indexed
    from k = 1) or explicit (param: the values).  Modifiers are applied in
    order to the generated set.
    """

    kind: str
    param: object
    modifiers: tuple[tuple[str, object], ...] = ()

    def __post_init__(self) -> None:
        if self.kind == "geometric":
            if abs(int(self.param)) < 2:
                raise ValueError("geometric sequences need |j| ≥ 2")
        elif self.kind == "integer_part_power":
            pass  # σ > 1 is checked when σ is evaluated
        elif self.kind == "polynomial":
            coeffs = tuple(int(c) for c in self.param)
            while coeffs and coeffs[-1] == 0:
                coeffs = coeffs[:-1]
            if len(coeffs) < 2:
                raise ValueError("polynomial sequences need degree ≥ 1")
            object.__setattr__(self, "param", coeffs)
        elif self.kind == "explicit":
            object.__setattr__(self, "param", tuple(int(v) for v in self.param))
        else:
            raise ValueError(f"unknown sequence kind {self.kind!r}")
        for name, _ in self.modifiers:
            if name not in ("translate", "scale", "symmetrize", "adjoin", "union"):
                raise ValueError(f"unknown modifier {name!r}")

    # constructors
    @classmethod
    def geometric(cls, j: int) -> "SequenceSpec":
        return cls("geometric", int(j))

    @classmethod
    def integer_part_power(cls, sigma) -> "SequenceSpec":
        return cls("integer_part_power", sigma)

    @classmethod
    def polynomial(cls, coeffs: Sequence[int]) -> "SequenceSpec":
        return cls("polynomial", tuple(coeffs))

    @classmethod
    def power(cls, d: int) -> "SequenceSpec":
        """k^d for k ≥ 1."""
        return cls("polynomial", tuple([0] * d + [1]))

    @classmethod
    def explicit(cls, values: Iterable[int]) -> "SequenceSpec":
        return cls("explicit", tuple(values))

    # modifiers
    def _with(self, name: str, arg=None) -> "SequenceSpec":
        return SequenceSpec(self.kind, self.param, self.modifiers + ((name, arg),))

    def translate(self, s: int) -> "SequenceSpec":
        return self._with("translate", int(s))

    def scale(self, c: int) -> "SequenceSpec":
        if int(c) == 0:
            raise ValueError("scale factor must be nonzero")
        return self._with("scale", int(c))

    def symmetrize(self) -> "SequenceSpec":
        return self._with("symmetrize")

    def adjoin(self, h: int) -> "SequenceSpec":
        return self._with("adjoin", int(h))

    def union(self, other: "SequenceSpec") -> "SequenceSpec":
        return self._with("union", other)

    @property
    def name(self) -> str:
        base = {
            "geometric": lambda: f"{self.param}^k",
            "integer_part_power": lambda: f"[({self.param})^k]",
            "polynomial": lambda: "P(k)=" + "+".join(f"{c}k^{i}" for i, c in enumerate(self.param) if c),
            "explicit": lambda: "explicit",
        }[self.kind]()
        for mod, arg in self.modifiers:
            base += {
                "translate": f"+{arg}",
                "scale": f"*{arg}",
                "symmetrize": "∪−",
                "adjoin": f"∪{{{arg}}}",
                "union": f"∪({arg.name if isinstance(arg, SequenceSpec) else arg})",
            }[mod]
        return base


def _default_precision_bits() -> int:
    env = os.environ.get("LACUNAE_PRECISION")
    return max(53, int(env)) if env else 128


def certified_floor_powers(sigma, count: int, max_bits: int = 1 << 16) -> list[int]:
    """[σ^k] for k = 0..count−1 with certified floors.

    Rational σ is handled exactly.  Otherwise σ is evaluated by sympy to a
    number of digits matching the working precision, widened to an interval
    and raised to the k-th power in mpmath interval arithmetic; the
    precision doubles until the interval contains no integer.  Powers
    that sympy already reduces to a rational are floored exactly.
    """
    import sympy
    from mpmath import iv
    from mpmath.libmp import round_floor, to_int

    expr = sympy.nsimplify(sigma) if isinstance(sigma, (int, Fraction)) else sympy.sympify(sigma)
    if expr.is_Rational:
        s = Fraction(int(expr.p), int(expr.q))
        if s <= 1:
            raise ValueError("σ must exceed 1")
        return [math.floor(s**k) for k in range(count)]
    if not bool(expr > 1):
        raise ValueError("σ must exceed 1")
    out = []
    for k in range(count):
        power = expr**k
        if power.is_Rational:  # e.g. sqrt(3)^2: no interval can separate it from an integer
            out.append(int(sympy.floor(power)))
            continue
        bits = _default_precision_bits()
        while True:
            if bits > max_bits:
                raise UncertifiedFloorError(f"floor of σ^{k} not certified at {max_bits} bits")
            dps = int(bits * 0.30103) + 10
            approx = sympy.N(expr, dps)
            iv.prec = bits + 32
            slack = iv.mpf(10) ** (-(dps - 5))
            s_iv = iv.mpf(approx) + iv.mpf([-1, 1]) * slack
            val = s_iv**k
            # exact floors of the endpoints (math.floor would round through a float)
            lo, hi = (int(to_int(e, round_floor)) for e in val._mpi_)
            if lo == hi:
                out.append(lo)
                break
            bits *= 2
    return out


def _base_terms(spec: SequenceSpec, count: int) -> list[int]:
    if spec.kind == "explicit":
        vals = sorted(set(spec.param))
        if len(vals) < count:
            raise ValueError(f"explicit sequence has only {len(vals)} distinct values")
        return vals[:count]
    seen: set[int] = set()
    out: list[int] = []
    k = 0 if spec.kind in ("geometric", "integer_part_power") else 1
    batch = max(count, 8)
    while len(out) < count:
        if spec.kind == "geometric":
            new = [int(spec.param) ** i for i in range(k, k + batch)]
        elif spec.kind == "integer_part_power":
            new = certified_floor_powers(spec.param, k + batch)[k:]
        else:
            new = [sum(c * i**e for e, c in enumerate(spec.param)) for i in range(k, k + batch)]
        k += batch
        for v in new:
            if v not in seen:
                seen.add(v)
                out.append(v)
                if len(out) == count:
                    break
        if k > 64 * count + 1000:
            raise ValueError("sequence does not produce enough distinct values")
    return out


def _apply(spec: SequenceSpec, count: int) -> list[int]:
    vals = _base_terms(spec, count)
    for mod, arg in spec.modifiers:
        if mod == "translate":
            vals = [v + arg for v in vals]
        elif mod == "scale":
            vals = [v * arg for v in vals]
        elif mod == "symmetrize":
            vals = vals + [-v for v in vals]
        elif mod == "adjoin":
            vals = vals + [arg]
        elif mod == "union":
            vals = vals + _apply(arg, count)
    return vals


def generate(spec: SequenceSpec, count: int) -> Window:
    """The first `count` distinct terms (modifiers applied afterwards), increasing."""
    if count < 1:
        raise ValueError("count must be positive")
    return Window.of(_apply(spec, count), name=spec.name)


# ---------------------------------------------------------------------------
# Geometric sequences


@dataclass(frozen=True)
class GeometricProfile:
    """Largest n for which I(n), complex J(n) and real J(n) hold (math.inf: all n)."""

    j: int
    i_level: float
    cj_level: float
    rj_level: float

    def levels(self) -> dict[str, float]:
        return {"I": self.i_level, "CJ": self.cj_level, "RJ": self.rj_level}


def geometric_expected(j: int) -> GeometricProfile:
    if abs(j) < 2:
        raise ValueError("need |j| ≥ 2")
    a = abs(j)
    return GeometricProfile(j, a if j > 0 else a - 1, a, UNBOUNDED if j % 2 else a)


@dataclass
class PropertyMeasurement:
    """Measured level of one property.  level None means it held for every n ≤ n_max."""

    prop: str
    level: int | None
    n_max: int
    witness: Witness | None = None
    inconclusive_at: int | None = None
    verdicts: dict[int, str] = field(default_factory=dict)

    def display(self) -> str:
        if self.inconclusive_at is not None:
            return f"?{self.inconclusive_at}"
        return str(self.level) if self.level is not None else f"≥{self.n_max}"

    def agrees_with(self, expected: float) -> bool:
        if self.inconclusive_at is not None:
            return False
        if self.level is None:
            return expected >= self.n_max
        return self.level == expected

    def to_json(self) -> dict:
        return {
            "level": self.display(),
            "witness": self.witness.to_json() if self.witness else None,
            "verdicts": {str(k): v for k, v in self.verdicts.items()},
        }


@dataclass
class Classification:
    j: int
    n_max: int
    window_len: int
    measured: dict[str, PropertyMeasurement]
    expected: GeometricProfile

    @property
    def agrees(self) -> bool:
        exp = self.expected.levels()
        return all(self.measured[k].agrees_with(exp[k]) for k in ("I", "CJ", "RJ"))

    def row(self) -> tuple[str, str, str]:
        return tuple(self.measured[k].display() for k in ("I", "CJ", "RJ"))  # type: ignore[return-value]

    def to_json(self) -> dict:
        fmt = lambda v: "∞" if v == UNBOUNDED else int(v)  # noqa: E731
        return {
            "j": self.j,
            "n_max": self.n_max,
            "window_len": self.window_len,
            "measured": {k: m.to_json() for k, m in self.measured.items()},
            "row": list(self.row()),
            "expected": {k: fmt(v) for k, v in self.expected.levels().items()},
            "agrees": self.agrees,
        }


def _measure(prop: str, window: Window, n_max: int, removal_budget: int) -> PropertyMeasurement:
    """Sweep n = 2..n_max; the level is the last n before the first failure (I(1), J(1) hold trivially)."""
    meas = PropertyMeasurement(prop, None, n_max)
    for n in range(2, n_max + 1):
        if prop == "I":
            v: Verdict = check_I(window, n, removal_budget)
        else:
            v = check_J(window, n, "complex" if prop == "CJ" else "real")
        meas.verdicts[n] = v.status.value
        if v.status is Status.FAILS:
            meas.level, meas.witness = n - 1, v.witness
            return meas
        if v.status is Status.INCONCLUSIVE:
            meas.inconclusive_at = n
            return meas
    return meas


def classify_geometric(
    j: int, n_max: int, window_len: int, removal_budget: int = 2, break_len: int = 2, jobs: int = 1
) -> Classification:
    """Measure the I / complex-J / real-J levels of {j^k} on a window and compare with the closed form.

    The J checks use the `break_len` elements nearest 0 as break and the rest
    of the window as tail.
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    if window_len < 10:
        raise ValueError("window_len must be at least 10")
    w = generate(SequenceSpec.geometric(j), window_len)
    order = w.by_depth()
    w = w.with_break(order[:break_len], break_len)
    props = ("I", "CJ", "RJ")
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=min(jobs, 3)) as ex:
            results = list(ex.map(_measure, props, [w] * 3, [n_max] * 3, [removal_budget] * 3))
    else:
        results = [_measure(p, w, n_max, removal_budget) for p in props]
    return Classification(j, n_max, window_len, dict(zip(props, results)), geometric_expected(j))


# ---------------------------------------------------------------------------
# Diophantine equation Σ ζ_i j^{k_i} = 0


@dataclass(frozen=True, order=True)
class DiophantineSolution:
    exponents: tuple[int, ...]
    coeffs: tuple[int, ...]

    def value(self, j: int) -> int:
        return sum(c * j**k for c, k in zip(self.coeffs, self.exponents))

    def to_json(self) -> dict:
        return {"exponents": list(self.exponents), "coeffs": list(self.coeffs)}


def diophantine_geometric(j: int, exponent_bound: int, n: int | None = None) -> list[DiophantineSolution]:
    """All Σζ_i j^{k_i} = 0 with 0 ≤ k_1 < … < k_m ≤ bound, ζ_1 > 0, ζ_i ≠ 0, Σ|ζ_i| ≤ 2n (n defaults to |j|).

    Exponents are scanned upward; after choosing the coefficients below k the
    partial sum must be divisible by |j|^k, since every later term is.
    """
    if abs(j) < 2:
        raise ValueError("need |j| ≥ 2")
    n = abs(j) if n is None else n
    W = 2 * n
    a = abs(j)
    out: list[DiophantineSolution] = []

    def rec(k: int, partial: int, w: int, exps: list[int], cs: list[int]) -> None:
        if k > exponent_bound or partial % (a**k):
            return
        rec(k + 1, partial, w, exps, cs)
        jk = j**k
        for c in range(-(W - w), W - w + 1):
            if c == 0 or (not cs and c < 0):
                continue
            exps.append(k)
            cs.append(c)
            nxt = partial + c * jk
            if nxt == 0 and len(cs) >= 2:
                out.append(DiophantineSolution(tuple(exps), tuple(cs)))
            rec(k + 1, nxt, w + abs(c), exps, cs)
            exps.pop()
            cs.pop()

    rec(0, 0, 0, [], [])
    return sorted(set(out))


def diophantine_families(j: int, exponent_bound: int) -> list[DiophantineSolution]:
    """The two shift families |j|·j^k − sgn(j)·j^{k+1} = 0 and |j|·j^k + (j − sgn j)·j^{k+1} − j^{k+2} = 0."""
    a, s = abs(j), (1 if j > 0 else -1)
    out = [DiophantineSolution((k, k + 1), (a, -s)) for k in range(exponent_bound)]
    out += [DiophantineSolution((k, k + 1, k + 2), (a, j - s, -1)) for k in range(exponent_bound - 1)]
    return sorted(out)


# ---------------------------------------------------------------------------
# Identities


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    n: int | None
    lhs: int
    rhs: int

    @property
    def verified(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {"name": self.name, "n": self.n, "verified": self.verified, "lhs": str(self.lhs), "rhs": str(self.rhs)}


def _sum_pow(terms: Sequence[tuple[int, int]], d: int) -> int:
    """Σ mult·base^d over (mult, base) pairs."""
    return sum(mult * b**d for mult, b in terms)


# (degree, lhs terms, rhs terms) with (multiplicity, base) pairs
_FIXED = [
    (2, [(1, 7), (1, 1)], [(2, 5)]),
    (2, [(1, 18), (1, 1)], [(1, 15), (1, 10)]),
    (3, [(1, 12), (1, 1)], [(1, 10), (1, 9)]),
    (4, [(1, 158), (1, 59)], [(1, 134), (1, 133)]),
    (4, [(1, 12231), (1, 2903)], [(1, 10381), (1, 10203)]),
    (5, [(1, 67), (1, 28), (1, 24)], [(1, 62), (1, 54), (1, 3)]),
    (6, [(1, 23), (1, 15), (1, 10)], [(1, 22), (1, 19), (1, 3)]),
    (7, [(1, 149), (1, 123), (1, 14), (1, 10)], [(1, 146), (1, 129), (1, 90), (1, 15)]),
    (8, [(1, 43), (1, 20), (1, 11), (1, 10), (1, 1)], [(1, 41), (1, 35), (1, 32), (1, 28), (1, 5)]),
    (9, [(1, 23), (1, 18), (1, 14), (2, 13), (1, 1)], [(1, 22), (1, 21), (1, 15), (1, 10), (1, 9), (1, 5)]),
    (10, [(1, 38), (1, 33), (2, 26), (1, 15), (1, 8), (1, 1)], [(1, 36), (1, 35), (1, 32), (1, 29), (1, 24), (1, 23), (1, 22)]),
]


def _identity_name(d: int, lhs, rhs) -> str:
    side = lambda ts: "+".join((f"{m}·" if m > 1 else "") + f"{b}^{d}" for m, b in ts)  # noqa: E731
    return f"{side(lhs)}={side(rhs)}"


def fixed_identities() -> list[IdentityCheck]:
    """Equal sums of like powers, one per degree 2..10 (two for degrees 2 and 4)."""
    return [IdentityCheck(_identity_name(d, l, r), None, _sum_pow(l, d), _sum_pow(r, d)) for d, l, r in _FIXED]


def _fibonacci(upto: int) -> list[int]:
    """F_0 = F_1 = 1, F_{n+2} = F_{n+1} + F_n."""
    F = [1, 1]
    while len(F) <= upto:
        F.append(F[-1] + F[-2])
    return F


def identity_suite(n_range: Iterable[int] = range(1, 51)) -> list[IdentityCheck]:
    """Fixed identities plus three parametric families for every n in n_range:
    Fibonacci squares, Binet cubes and Ramanujan biquadrates."""
    ns = list(n_range)
    out = fixed_identities()
    F = _fibonacci(max(ns, default=0) + 2)
    for n in ns:
        a, b, c = F[n], F[n + 1], F[n + 2]
        out.append(IdentityCheck("fibonacci-squares", n, (a * c + b * b) ** 2 + (b * b) ** 2, (a * b + b * c) ** 2 + 1))
    for n in ns:
        out.append(IdentityCheck("binet-cubes", n, (9 * n**4) ** 3 + (1 + 9 * n**3) ** 3, (3 * n * (1 + 3 * n**3)) ** 3 + 1))
    for n in ns:
        out.append(
            IdentityCheck(
                "ramanujan-biquadrates",
                n,
                (4 * n**5 - 5 * n) ** 4 + (6 * n**4 - 3) ** 4 + (4 * n**4 + 1) ** 4,
                (4 * n**5 + n) ** 4 + (2 * n**4 - 1) ** 4 + 3**4,
            )
        )
    return out


# ---------------------------------------------------------------------------
# Density and growth


def density_estimate(window: Window, h: int) -> Fraction:
    """max_a |E ∩ (a, a+h]| / h over the window (the maximum is attained with a+1 ∈ E)."""
    if h < 1:
        raise ValueError("h must be positive")
    els = window.elements
    if not els:
        return Fraction(0)
    if h > els[-1] - els[0] + 1:
        raise ValueError("h exceeds the span of the window")
    best, hi = 0, 0
    for lo in range(len(els)):
        while hi < len(els) and els[hi] <= els[lo] + h - 1:
            hi += 1
        best = max(best, hi - lo)
    return Fraction(best, h)


@dataclass
class GrowthReport:
    p: int
    ratio_ok: bool
    min_ratio: Fraction | None
    witness: Witness | None
    stats: dict

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "ratio_ok": self.ratio_ok,
            "min_ratio": None if self.min_ratio is None else str(self.min_ratio),
            "min_ratio_float": None if self.min_ratio is None else float(self.min_ratio),
            "witness": self.witness.to_json() if self.witness else None,
            "stats": self.stats,
        }


def growth_admissible(window: Window, p: int) -> GrowthReport:
    """Check |n_{k+1}/n_k| ≥ p+1 along the window and search Ζ_p relations with growth pruning.

    When the ratio condition holds every candidate top element is pruned, so
    the empty search is itself the certificate that the window is p-independent.
    """
    if p < 1:
        raise ValueError("p must be positive")
    order = window.by_depth()
    if len({abs(x) for x in order}) != len(order):
        raise ValueError("window must be strictly increasing in absolute value")
    ratios = [Fraction(abs(b), abs(a)) for a, b in zip(order, order[1:]) if a != 0]
    min_ratio = min(ratios) if ratios else None
    ratio_ok = min_ratio is None or min_ratio >= p + 1
    witness, stats = find_relation_pruned(order, p)
    return GrowthReport(p, ratio_ok, min_ratio, witness, stats)
