"""Trigonometric polynomials Σ a_q e_q with exact or floating coefficients."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping

import numpy as np

from .exact import GaussianRational, Scalar, format_rational, is_exact, parse_scalar_part

__all__ = ["TrigPolynomial", "grid_values", "next_pow2"]


def _normalize(c):
    if isinstance(c, GaussianRational):
        return c.re if c.im == 0 else c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    return complex(c)


@dataclass(frozen=True, eq=False)
class TrigPolynomial:
    """Finitely supported map frequency → coefficient.

    Coefficients are kept exact (Fraction / GaussianRational) when every
    input coefficient is exact, and as Python complex otherwise.  Zero
    coefficients are dropped.
    """

    terms: Mapping[int, Scalar]

    def __post_init__(self) -> None:
        raw = {int(q): c for q, c in dict(self.terms).items()}
        exact = all(is_exact(c) for c in raw.values())
        clean = {}
        for q in sorted(raw):
            c = _normalize(raw[q]) if exact else complex(raw[q])
            if c != 0:
                clean[q] = c
        object.__setattr__(self, "terms", clean)

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_frequencies(cls, freqs: Iterable[int], coeffs: Iterable[Scalar] | None = None) -> "TrigPolynomial":
        freqs = [int(q) for q in freqs]
        if len(set(freqs)) != len(freqs):
            raise ValueError("frequencies must be distinct")
        coeffs = [1] * len(freqs) if coeffs is None else list(coeffs)
        if len(coeffs) != len(freqs):
            raise ValueError("frequency and coefficient lists differ in length")
        return cls(dict(zip(freqs, coeffs)))

    @classmethod
    def monomial(cls, q: int, c: Scalar = 1) -> "TrigPolynomial":
        return cls({q: c})

    @classmethod
    def zero(cls) -> "TrigPolynomial":
        return cls({})

    # -- basic properties ---------------------------------------------------

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(self.terms)

    @property
    def is_exact(self) -> bool:
        return all(is_exact(c) for c in self.terms.values())

    @property
    def max_abs_frequency(self) -> int:
        return max((abs(q) for q in self.terms), default=0)

    @property
    def spread(self) -> int:
        """max frequency − min frequency (the degree of |f|²)."""
        return self.support[-1] - self.support[0] if self.terms else 0

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, q: int) -> Scalar:
        return self.terms.get(q, 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TrigPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self) -> str:
        return f"TrigPolynomial({self.terms!r})"

    def arrays(self) -> tuple[np.ndarray, np.ndarray]:
        """(frequencies as object-free int64 array, coefficients as complex128)."""
        q = np.array(self.support, dtype=np.int64)
        a = np.array([complex(c) for c in self.terms.values()], dtype=np.complex128)
        return q, a

    def to_float(self) -> "TrigPolynomial":
        return TrigPolynomial({q: complex(c) for q, c in self.terms.items()})

    # -- algebra ------------------------------------------------------------

    def __add__(self, other: "TrigPolynomial") -> "TrigPolynomial":
        out = dict(self.terms)
        for q, c in other.terms.items():
            out[q] = out.get(q, 0) + c
        return TrigPolynomial(out)

    def __neg__(self) -> "TrigPolynomial":
        return TrigPolynomial({q: -c for q, c in self.terms.items()})

    def __sub__(self, other: "TrigPolynomial") -> "TrigPolynomial":
        return self + (-other)

    def scale(self, s: Scalar) -> "TrigPolynomial":
        return TrigPolynomial({q: s * c for q, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, TrigPolynomial):
            return self.convolve(other)
        return self.scale(other)

    __rmul__ = __mul__

    def convolve(self, other: "TrigPolynomial") -> "TrigPolynomial":
        """Product of the two polynomials (convolution of coefficient maps)."""
        if not self.terms or not other.terms:
            return TrigPolynomial.zero()
        if not (self.is_exact and other.is_exact):
            dense = _dense_convolve(self, other)
            if dense is not None:
                return dense
        out: dict[int, Scalar] = {}
        for q1, c1 in self.terms.items():
            for q2, c2 in other.terms.items():
                q = q1 + q2
                out[q] = out.get(q, 0) + c1 * c2
        return TrigPolynomial(out)

    def power(self, s: int) -> "TrigPolynomial":
        if s < 1:
            raise ValueError("power must be a positive integer")
        out = self
        for _ in range(s - 1):
            out = out.convolve(self)
        return out

    def derivative(self, order: int = 1) -> "TrigPolynomial":
        """d^order/dt^order of t ↦ f(e^{it}): coefficients multiplied by (iq)^order."""
        i_pow = [1, GaussianRational(0, 1), -1, GaussianRational(0, -1)][order % 4]
        if not self.is_exact:
            i_pow = complex(i_pow)
        return TrigPolynomial({q: i_pow * (q**order) * c for q, c in self.terms.items()})

    def project(self, freqs: Iterable[int]) -> "TrigPolynomial":
        keep = set(int(q) for q in freqs)
        return TrigPolynomial({q: c for q, c in self.terms.items() if q in keep})

    def evaluate(self, t) -> np.ndarray:
        """f(e^{it}) for scalar or array t."""
        q, a = self.arrays()
        t = np.asarray(t, dtype=float)
        return np.exp(1j * np.multiply.outer(t, q.astype(float))) @ a

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        terms = []
        for q, c in self.terms.items():
            if isinstance(c, GaussianRational):
                re, im = format_rational(c.re), format_rational(c.im)
            elif isinstance(c, Fraction):
                re, im = format_rational(c), "0"
            else:
                re, im = repr(float(c.real)), repr(float(c.imag))
            terms.append({"freq": q, "re": re, "im": im})
        return {"terms": terms}

    @classmethod
    def from_json(cls, data: dict) -> "TrigPolynomial":
        out = {}
        for t in data["terms"]:
            re, im = parse_scalar_part(t.get("re", "0")), parse_scalar_part(t.get("im", "0"))
            if isinstance(re, Fraction) and isinstance(im, Fraction):
                c = GaussianRational(re, im)
            else:
                c = complex(float(re), float(im))
            q = int(t["freq"])
            out[q] = out.get(q, 0) + c
        return cls(out)


def _dense_convolve(f: TrigPolynomial, g: TrigPolynomial, max_len: int = 1 << 22) -> TrigPolynomial | None:
    if f.spread + g.spread + 1 > max_len:
        return None
    qf, af = f.arrays()
    qg, ag = g.arrays()
    df = np.zeros(f.spread + 1, dtype=np.complex128)
    df[qf - qf[0]] = af
    dg = np.zeros(g.spread + 1, dtype=np.complex128)
    dg[qg - qg[0]] = ag
    conv = np.convolve(df, dg)
    base = int(qf[0]) + int(qg[0])
    nz = np.nonzero(conv)[0]
    return TrigPolynomial({base + int(k): complex(conv[k]) for k in nz})


def next_pow2(n: int) -> int:
    return 1 << max(0, int(n - 1).bit_length())


def grid_values(f: TrigPolynomial, resolution: int) -> np.ndarray:
    """f at t_k = 2πk/resolution, k = 0..resolution−1, via one inverse FFT."""
    A = np.zeros(resolution, dtype=np.complex128)
    for q, c in f.terms.items():
        A[q % resolution] += complex(c)
    return np.fft.ifft(A) * resolution
