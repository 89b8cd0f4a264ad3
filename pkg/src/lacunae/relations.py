"""Zero-sum relations on integer sets and window checks for independence properties.

A relation is an integer vector ζ with nonzero entries and Σζ = 0.  Placed on
distinct integers p_i it "vanishes" when Σζ_i p_i = 0.  Every property decided
here reduces to the existence of such vanishing relations of bounded weight
Σ|ζ_i|:

* n-independence and I(n): two distinct n-multisets with the same sum.
* J(n): the same, where the two multisets meet a fixed *break* set a different
  number of times (complex signs) or a different number of times modulo 2
  (real signs).
* J^sym(n): relations η with even coefficient sum and odd break sum.

Infinite sets are represented by finite `Window` prefixes, so every checker
returns a three-valued `Verdict` with the search bounds it actually explored.
"""

from __future__ import annotations

import bisect
import enum
import itertools
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

__all__ = [
    "MultiIndex",
    "Pattern",
    "Relation",
    "Window",
    "Witness",
    "Status",
    "Verdict",
    "canonical_relation",
    "enumerate_multiindices",
    "enumerate_relations",
    "representation_count",
    "is_n_independent",
    "pairing_window",
    "check_I",
    "check_J",
    "check_J_sym",
    "find_relation_pruned",
]


# ---------------------------------------------------------------------------
# Domain types


@dataclass(frozen=True)
class MultiIndex:
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(int(a) for a in self.entries))
        if not self.entries:
            raise ValueError("a multi-index needs at least one entry")
        if any(a < 0 for a in self.entries):
            raise ValueError("multi-index entries must be nonnegative")

    @property
    def weight(self) -> int:
        return sum(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)


@dataclass(frozen=True)
class Pattern:
    """Integer coefficient vector with every entry nonzero; the sum is unconstrained."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a pattern needs at least one coefficient")
        if any(c == 0 for c in self.coeffs):
            raise ValueError("pattern coefficients must be nonzero")

    @property
    def weight(self) -> int:
        return sum(abs(c) for c in self.coeffs)

    @property
    def coeff_sum(self) -> int:
        return sum(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def evaluate(self, points: Sequence[int]) -> int:
        if len(points) != len(self.coeffs):
            raise ValueError("pattern and point list differ in length")
        return sum(c * p for c, p in zip(self.coeffs, points))


def canonical_relation(coeffs: Iterable[int]) -> tuple[int, ...]:
    """Canonical representative of the permutation / global-sign orbit of ζ.

    Both ζ and −ζ are sorted nonincreasingly; the lexicographically larger one
    wins.  Its first entry is then automatically positive.
    """
    c = [int(x) for x in coeffs]
    a = tuple(sorted(c, reverse=True))
    b = tuple(sorted((-x for x in c), reverse=True))
    return max(a, b)


@dataclass(frozen=True)
class Relation(Pattern):
    """A pattern with zero coefficient sum."""

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.coeff_sum != 0:
            raise ValueError(f"relation coefficients must sum to zero, got {self.coeffs}")

    @property
    def canonical(self) -> bool:
        return self.coeffs == canonical_relation(self.coeffs)

    def canonicalized(self) -> "Relation":
        return Relation(canonical_relation(self.coeffs))


def _depth_key(p: int) -> tuple[int, int]:
    return (abs(p), p)


@dataclass(frozen=True)
class Window:
    """A finite, strictly increasing prefix of an integer spectrum.

    `tail_start` and every "prefix" notion below refer to *depth order*:
    elements sorted by (|p|, p).  For sets of positive integers this is plain
    increasing order; for sets like {(−2)^k} or E ∪ −E it keeps "the first
    elements" meaning "the elements closest to 0".
    """

    elements: tuple[int, ...]
    break_set: frozenset[int] | None = None
    tail_start: int | None = None
    name: str = ""

    def __post_init__(self) -> None:
        els = tuple(int(x) for x in self.elements)
        object.__setattr__(self, "elements", els)
        if any(b <= a for a, b in zip(els, els[1:])):
            raise ValueError("window elements must be strictly increasing")
        if self.break_set is not None:
            fs = frozenset(int(x) for x in self.break_set)
            object.__setattr__(self, "break_set", fs)
            if not fs <= set(els):
                raise ValueError("break set must be a subset of the window")
        if self.tail_start is not None and not 0 <= self.tail_start <= len(els):
            raise ValueError("tail_start out of range")

    @classmethod
    def of(cls, values: Iterable[int], **kw) -> "Window":
        """Build a window from any iterable, sorting and dropping duplicates."""
        return cls(tuple(sorted(set(int(v) for v in values))), **kw)

    def __len__(self) -> int:
        return len(self.elements)

    def by_depth(self) -> tuple[int, ...]:
        return tuple(sorted(self.elements, key=_depth_key))

    def with_break(self, break_set: Iterable[int], tail_start: int | None = None) -> "Window":
        return Window(self.elements, frozenset(break_set), tail_start, self.name)

    def symmetrized(self) -> "Window":
        """E ∪ −E, with break F ∪ −F and the tail offset doubled (E must be positive)."""
        if any(p <= 0 for p in self.elements):
            raise ValueError("symmetrization expects a window of positive integers")
        brk = None if self.break_set is None else frozenset(self.break_set | {-b for b in self.break_set})
        ts = None if self.tail_start is None else 2 * self.tail_start
        name = f"{self.name}∪−{self.name}" if self.name else ""
        return Window.of(list(self.elements) + [-p for p in self.elements], break_set=brk, tail_start=ts, name=name)

    def to_json(self) -> dict:
        out: dict = {"name": self.name, "elements": [str(x) for x in self.elements]}
        if self.break_set is not None:
            out["break_set"] = [str(x) for x in sorted(self.break_set)]
        if self.tail_start is not None:
            out["tail_start"] = self.tail_start
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Window":
        brk = data.get("break_set")
        return cls(
            tuple(int(x) for x in data["elements"]),
            None if brk is None else frozenset(int(x) for x in brk),
            data.get("tail_start"),
            data.get("name", ""),
        )


@dataclass(frozen=True)
class Witness:
    """Coefficients placed on distinct points.  For J-type certificates the
    first `break_len` points are break elements."""

    zeta: tuple[int, ...]
    points: tuple[int, ...]
    break_len: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "zeta", tuple(int(c) for c in self.zeta))
        object.__setattr__(self, "points", tuple(int(p) for p in self.points))
        if len(self.zeta) != len(self.points):
            raise ValueError("witness coefficients and points differ in length")
        if len(set(self.points)) != len(self.points):
            raise ValueError("witness points must be distinct")
        if any(c == 0 for c in self.zeta):
            raise ValueError("witness coefficients must be nonzero")
        if not 0 <= self.break_len <= len(self.zeta):
            raise ValueError("break_len out of range")

    @property
    def value(self) -> int:
        return sum(c * p for c, p in zip(self.zeta, self.points))

    @property
    def weight(self) -> int:
        return sum(abs(c) for c in self.zeta)

    @property
    def break_sum(self) -> int:
        return sum(self.zeta[: self.break_len])

    def verify(self, n: int | None = None, sign_mode: str | None = None, symmetric: bool = False) -> bool:
        """Check the certificate from scratch.

        n bounds the weight by 2n; sign_mode adds the J side condition
        (break sum nonzero / odd); symmetric checks the J^sym conditions
        (even total, odd break sum) instead of zero total.
        """
        if self.value != 0:
            return False
        if n is not None and self.weight > 2 * n:
            return False
        total = sum(self.zeta)
        if symmetric:
            return total % 2 == 0 and self.break_sum % 2 == 1
        if total != 0:
            return False
        if sign_mode == "complex":
            return self.break_sum != 0
        if sign_mode == "real":
            return self.break_sum % 2 == 1
        return True

    def to_json(self) -> dict:
        return {"zeta": list(self.zeta), "points": [str(p) for p in self.points], "break_len": self.break_len}


class Status(str, enum.Enum):
    HOLDS = "HoldsOnWindow"
    FAILS = "FailsWithWitness"
    INCONCLUSIVE = "Inconclusive"


@dataclass
class Verdict:
    status: Status
    removed_prefix_len: int | None = None
    witness: Witness | None = None
    bounds: dict = field(default_factory=dict)
    reason: str | None = None

    def __post_init__(self) -> None:
        self.status = Status(self.status)
        if self.status is Status.FAILS:
            if self.witness is None or self.witness.value != 0:
                raise ValueError("a failure verdict needs a vanishing witness")
        if self.status is Status.HOLDS and self.removed_prefix_len is None:
            raise ValueError("a holds verdict records the removed prefix length")

    @property
    def holds(self) -> bool:
        return self.status is Status.HOLDS

    @property
    def fails(self) -> bool:
        return self.status is Status.FAILS

    def to_json(self) -> dict:
        w = self.witness
        return {
            "status": self.status.value,
            "zeta": list(w.zeta) if w else None,
            "points": [str(p) for p in w.points] if w else None,
            "break_len": w.break_len if w else None,
            "removed_prefix_len": self.removed_prefix_len,
            "bounds": self.bounds,
            "reason": self.reason,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Verdict":
        w = None
        if data.get("zeta") is not None:
            w = Witness(tuple(data["zeta"]), tuple(int(p) for p in data["points"]), data.get("break_len") or 0)
        return cls(Status(data["status"]), data.get("removed_prefix_len"), w, dict(data.get("bounds") or {}), data.get("reason"))


# ---------------------------------------------------------------------------
# Enumeration


def enumerate_multiindices(m: int, n: int) -> list[MultiIndex]:
    """All α ∈ ℕ^m with Σα = n, in lexicographic order."""
    if m < 1:
        raise ValueError("m must be at least 1")
    if n < 0:
        raise ValueError("n must be nonnegative")

    def rec(k: int, rest: int) -> Iterator[tuple[int, ...]]:
        if k == 1:
            yield (rest,)
            return
        for a in range(rest + 1):
            for tail in rec(k - 1, rest - a):
                yield (a,) + tail

    return [MultiIndex(e) for e in rec(m, n)]


def enumerate_relations(m: int, n: int) -> list[Relation]:
    """Canonical representatives of Ζ_n^m: m nonzero integers, zero sum, weight ≤ 2n.

    Sorted by weight, then lexicographically decreasing.
    """
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    if m > 2 * n or m == 1:
        return []
    values = [v for v in range(2 * n, -2 * n - 1, -1) if v != 0]
    out = []
    for combo in itertools.combinations_with_replacement(values, m):
        if sum(combo) != 0 or sum(abs(c) for c in combo) > 2 * n:
            continue
        if combo == canonical_relation(combo):
            out.append(Relation(combo))
    out.sort(key=lambda r: (r.weight, tuple(-c for c in r.coeffs)))
    return out


def representation_count(E: Iterable[int], n: int, k: int) -> int:
    """Number of ordered n-tuples of elements of E summing to k."""
    elems = sorted(set(int(e) for e in E))
    if not elems:
        raise ValueError("E must be nonempty")
    if n < 1:
        raise ValueError("n must be positive")
    lo, hi = elems[0], elems[-1]
    counts: Counter[int] = Counter({0: 1})
    for step in range(n):
        left = n - step - 1  # summands still to add after this one
        nxt: Counter[int] = Counter()
        for s, c in counts.items():
            for e in elems:
                t = s + e
                if lo * left <= k - t <= hi * left:
                    nxt[t] += c
        counts = nxt
    return counts.get(k, 0)


# ---------------------------------------------------------------------------
# Multiset collision search


def _collision_search(
    points: Sequence[int], n: int, labels: Sequence[int] | None = None, mode: str = "any"
) -> tuple[Counter, Counter] | None:
    """Smallest pair of equal-sum s-multisets (s ≤ n) over `points`.

    mode "any": any two distinct multisets.  "complex"/"real": the multisets
    must contain a different number of labelled points (resp. different
    parity).  Levels s are swept upward and, inside a level, points are added
    in the given order, so the first hit minimises the weight 2s and then the
    largest point used.  Among simultaneous hits the lexicographically smallest
    index pair wins, which keeps the output reproducible.
    """
    L = len(points)
    if labels is None:
        labels = [0] * L
    prev_groups: list[list[tuple[int, int, tuple[int, ...]]]] | None = None
    for s in range(1, n + 1):
        seen: dict[int, dict[int, tuple[int, ...]]] = {}
        groups: list[list[tuple[int, int, tuple[int, ...]]]] = []
        base: list[tuple[int, int, tuple[int, ...]]] = []
        for i in range(L):
            if s == 1:
                base = [(0, 0, ())]
            else:
                base.extend(prev_groups[i])
            x, lab = points[i], labels[i]
            new = [(sm + x, k + lab, idx + (i,)) for sm, k, idx in base]
            groups.append(new)
            hits = []
            for sm, k, idx in new:
                key = 0 if mode == "any" else (k if mode == "complex" else k & 1)
                bucket = seen.get(sm)
                if bucket is None:
                    seen[sm] = {key: idx}
                    continue
                if mode == "any":
                    hits.append((min(bucket.values()), idx))
                else:
                    for key2, idx2 in bucket.items():
                        if key2 != key:
                            hits.append((idx2, idx))
                bucket.setdefault(key, idx)
            if hits:
                a, b = min(hits)
                return Counter(a), Counter(b)
        prev_groups = groups
    return None


def _relation_from_multisets(points: Sequence[int], a: Counter, b: Counter) -> dict[int, int]:
    coef: Counter = Counter()
    for i, c in a.items():
        coef[points[i]] += c
    for i, c in b.items():
        coef[points[i]] -= c
    return {p: c for p, c in coef.items() if c}


def _relation_witness(coef: dict[int, int]) -> Witness:
    """Order a vanishing relation canonically: coefficients as in the canonical
    relation form, ties broken by depth of the point."""
    zeta = tuple(coef.values())
    sign = 1 if tuple(sorted(zeta, reverse=True)) == canonical_relation(zeta) else -1
    items = sorted(((sign * c, p) for p, c in coef.items()), key=lambda cp: (-cp[0], _depth_key(cp[1])))
    return Witness(tuple(c for c, _ in items), tuple(p for _, p in items))


def _break_witness(coef: dict[int, int], break_set: frozenset[int]) -> Witness:
    """Break points first, then tail points, each in depth order; first coefficient positive."""
    brk = sorted((p for p in coef if p in break_set), key=_depth_key)
    tail = sorted((p for p in coef if p not in break_set), key=_depth_key)
    order = brk + tail
    sign = 1 if coef[order[0]] > 0 else -1
    return Witness(tuple(sign * coef[p] for p in order), tuple(order), len(brk))


def _min_relation(points: Sequence[int], n: int) -> Witness | None:
    hit = _collision_search(points, n)
    if hit is None:
        return None
    return _relation_witness(_relation_from_multisets(points, *hit))


def is_n_independent(E: Iterable[int], n: int) -> Verdict:
    """Decide n-independence of a finite set exactly."""
    pts = sorted(set(int(e) for e in E), key=_depth_key)
    if not pts:
        raise ValueError("E must be nonempty")
    if n < 1:
        raise ValueError("n must be positive")
    bounds = {"n": n, "m_max": min(len(pts), 2 * n), "window_len": len(pts)}
    w = _min_relation(pts, n)
    if w is None:
        return Verdict(Status.HOLDS, 0, None, bounds)
    return Verdict(Status.FAILS, None, w, bounds)


# ---------------------------------------------------------------------------
# Pairing


def pairing_window(zeta: Pattern | Sequence[int], window: Window, tail_start: int = 0) -> int | None:
    """min |Σζ_i p_i| over distinct p_i taken from the window tail.

    The tail is the depth-ordered window from index `tail_start` on.  Returns
    None (no selection) when the tail has fewer than m elements.
    """
    coeffs = zeta.coeffs if isinstance(zeta, Pattern) else Pattern(tuple(zeta)).coeffs
    m = len(coeffs)
    tail = sorted(window.by_depth()[tail_start:])
    if len(tail) < m:
        return None
    last = coeffs[-1]
    best: int | None = None
    for sel in itertools.permutations(range(len(tail)), m - 1):
        partial = sum(c * tail[i] for c, i in zip(coeffs, sel))
        used = set(sel)
        # |partial + last·x| is minimised by x nearest −partial/last
        target = -partial / last
        pos = bisect.bisect_left(tail, target)
        # walk outwards past used points on both sides
        for direction, start in ((-1, pos - 1), (1, pos)):
            j = start
            while 0 <= j < len(tail) and j in used:
                j += direction
            if 0 <= j < len(tail):
                v = abs(partial + last * tail[j])
                if best is None or v < best:
                    best = v
        if best == 0:
            return 0
    return best


# ---------------------------------------------------------------------------
# Window checks


def _first_clean(lo: int, hi: int, has_witness) -> int:
    """Smallest k in [lo, hi] with no witness, given has_witness(hi) is False
    and witnesses only disappear as k grows."""
    while lo < hi:
        mid = (lo + hi) // 2
        if has_witness(mid):
            lo = mid + 1
        else:
            hi = mid
    return lo


def check_I(window: Window, n: int, removal_budget: int = 0) -> Verdict:
    """Window check of I(n) with removable prefixes of length 0..removal_budget."""
    if n < 1:
        raise ValueError("n must be positive")
    if not len(window):
        raise ValueError("window must be nonempty")
    order = window.by_depth()
    L = len(order)
    budget = min(removal_budget, L)
    bounds = {"n": n, "m_max": min(L - budget, 2 * n), "window_len": L, "removal_budget": budget, "removal": "prefix"}
    if L - budget < 2:
        return Verdict(Status.INCONCLUSIVE, bounds=bounds, reason="fewer than two elements left after the removal budget")
    deep = _min_relation(order[budget:], n)
    if deep is not None:
        return Verdict(Status.FAILS, None, deep, bounds)
    cache: dict[int, bool] = {}

    def has_witness(r: int) -> bool:
        if r not in cache:
            cache[r] = _min_relation(order[r:], n) is not None
        return cache[r]

    r = _first_clean(0, budget, has_witness)
    return Verdict(Status.HOLDS, r, None, bounds)


def _resolve_break(window: Window) -> tuple[list[int], int]:
    order = window.by_depth()
    if window.break_set is None:
        brk = list(order[:2])
        t0 = len(brk) if window.tail_start is None else window.tail_start
    else:
        brk = sorted(window.break_set, key=_depth_key)
        if window.tail_start is not None:
            t0 = window.tail_start
        else:
            t0 = max(order.index(b) for b in brk) + 1 if brk else 0
    return brk, t0


def _tail(order: Sequence[int], offset: int, brk: set[int]) -> list[int]:
    return [p for p in order[offset:] if p not in brk]


def _persistent_check(window: Window, n: int, min_tail: int, search, bounds: dict) -> Verdict:
    """Shared driver for the J-type checks.

    A witness at the deepest admissible tail offset is reported as a failure;
    since witnesses can only disappear as the tail shrinks, that means every
    tested offset has one.  Otherwise the smallest witness-free offset is
    returned as the removed prefix (depth index where the tail starts).
    """
    order = window.by_depth()
    brk_list, t0 = _resolve_break(window)
    brk = set(brk_list)
    offsets = [o for o in range(t0, len(order) + 1) if len(_tail(order, o, brk)) >= min_tail]
    bounds.update(
        {"n": n, "m_max": 2 * n, "window_len": len(order), "break": [str(b) for b in brk_list], "tail_start": t0, "min_tail": min_tail}
    )
    if not brk_list:
        return Verdict(Status.INCONCLUSIVE, bounds=bounds, reason="empty break set")
    if not offsets:
        return Verdict(Status.INCONCLUSIVE, bounds=bounds, reason="tail shorter than min_tail at every offset")
    deepest = offsets[-1]
    bounds["offsets"] = [offsets[0], deepest]
    w = search(brk_list, _tail(order, deepest, brk))
    if w is not None:
        return Verdict(Status.FAILS, None, w, bounds)
    cache: dict[int, bool] = {}

    def has_witness(k: int) -> bool:
        o = offsets[k]
        if o not in cache:
            cache[o] = search(brk_list, _tail(order, o, brk)) is not None
        return cache[o]

    k = _first_clean(0, len(offsets) - 1, has_witness)
    return Verdict(Status.HOLDS, offsets[k], None, bounds)


def check_J(window: Window, n: int, sign_mode: str = "complex", min_tail: int | None = None) -> Verdict:
    """Window check of complex or real J(n).

    The break F is `window.break_set` (default: the two elements nearest 0);
    the tail at offset o is the depth-ordered window from o on, minus F.
    `min_tail` (default 2n−1, the most tail points a relation of weight 2n with
    a break point can use) is the shortest tail an offset may leave.
    """
    if sign_mode not in ("complex", "real"):
        raise ValueError("sign_mode must be 'complex' or 'real'")
    if n < 1:
        raise ValueError("n must be positive")
    mt = 2 * n - 1 if min_tail is None else min_tail

    def search(brk: list[int], tail: list[int]) -> Witness | None:
        pts = brk + tail
        labels = [1] * len(brk) + [0] * len(tail)
        hit = _collision_search(pts, n, labels, sign_mode)
        if hit is None:
            return None
        return _break_witness(_relation_from_multisets(pts, *hit), frozenset(brk))

    return _persistent_check(window, n, mt, search, {"mode": sign_mode})


def _dfs_tail(
    pts: Sequence[int], top: int, target: int, weight: int, parity: int | None, balance: int | None
) -> list[tuple[int, int]] | None:
    """Coefficients c_i ≠ 0 on a subset of pts[0..top] with pts[top] used,
    Σ|c_i| = weight and Σc_i p_i = target.

    parity fixes Σc_i mod 2, balance fixes Σc_i exactly.  Points are visited
    from the largest down and a branch is cut as soon as the remaining weight
    cannot reach the residual with points no larger than the next candidate.
    """

    def rec(i: int, resid: int, w: int, bal: int | None, par: int | None, chosen: list) -> list | None:
        if w == 0:
            if resid == 0 and (bal is None or bal == 0) and (par is None or par == 0):
                return list(chosen)
            return None
        if i < 0:
            return None
        if abs(resid) > w * abs(pts[i]):
            return None
        if bal is not None and (abs(bal) > w or (w - bal) % 2):
            return None
        if par is not None and par != w % 2:  # Σc ≡ Σ|c| (mod 2)
            return None
        p = pts[i]
        for mag in range(1, w + 1):
            for c in (mag, -mag):
                chosen.append((c, p))
                got = rec(
                    i - 1,
                    resid - c * p,
                    w - mag,
                    None if bal is None else bal - c,
                    None if par is None else (par - c) % 2,
                    chosen,
                )
                if got is not None:
                    return got
                chosen.pop()
        return rec(i - 1, resid, w, bal, par, chosen)

    p = pts[top]
    for mag in range(1, weight + 1):
        for c in (mag, -mag):
            got = rec(
                top - 1,
                target - c * p,
                weight - mag,
                None if balance is None else balance - c,
                None if parity is None else (parity - c) % 2,
                [(c, p)],
            )
            if got is not None:
                return got
    return None


def _break_assignments(brk: Sequence[int], max_weight: int) -> Iterator[tuple[int, tuple[tuple[int, int], ...]]]:
    """All (weight, ((c, p), ...)) with nonzero c on a nonempty subset of brk,
    odd coefficient sum and weight ≤ max_weight."""
    for size in range(1, len(brk) + 1):
        for subset in itertools.combinations(brk, size):
            ranges = [[c for c in range(-max_weight, max_weight + 1) if c] for _ in subset]
            for cs in itertools.product(*ranges):
                w = sum(abs(c) for c in cs)
                if w <= max_weight and sum(cs) % 2 == 1:
                    yield w, tuple(zip(cs, subset))


def _eta_search(brk: Sequence[int], tail: Sequence[int], n: int) -> Witness | None:
    """Smallest η (weight, then largest tail point) with Σ|η| ≤ 2n, Ση even,
    odd break sum, vanishing on F ∪ tail."""
    tail_sorted = sorted(tail, key=_depth_key)
    assignments = sorted(_break_assignments(brk, 2 * n - 1), key=lambda a: (a[0], a[1]))
    for total in range(2, 2 * n + 1, 2):
        for top in range(len(tail_sorted)):
            for wb, assign in assignments:
                wt = total - wb
                if wt < 1:
                    continue
                v = sum(c * p for c, p in assign)
                # tail sum must be odd so that the total is even
                got = _dfs_tail(tail_sorted, top, -v, wt, 1, None)
                if got is not None:
                    coef = {p: c for c, p in assign}
                    coef.update({p: c for c, p in got})
                    brk_pts = sorted((p for _, p in assign), key=_depth_key)
                    tail_pts = sorted((p for _, p in got), key=_depth_key)
                    order = brk_pts + tail_pts
                    sign = 1 if coef[order[0]] > 0 else -1
                    return Witness(tuple(sign * coef[p] for p in order), tuple(order), len(brk_pts))
    return None


def check_J_sym(window: Window, n: int, min_tail: int | None = None) -> Verdict:
    """Window check of the symmetric condition J^sym(n) on a set of positive integers.

    Searches relations η (nonzero entries, Σ|η| ≤ 2n, Ση even) whose break
    part has odd sum, by enumerating break assignments and completing them in
    the tail with a pruned depth-first search.  Agrees with real J(n) on
    E ∪ −E when that window uses break F ∪ −F and a doubled tail offset.
    """
    if any(p <= 0 for p in window.elements):
        raise ValueError("check_J_sym expects a window of positive integers")
    if n < 1:
        raise ValueError("n must be positive")
    mt = 2 * n - 1 if min_tail is None else min_tail
    return _persistent_check(window, n, mt, lambda brk, tail: _eta_search(brk, tail, n), {"mode": "symmetric"})


def find_relation_pruned(points: Sequence[int], p: int) -> tuple[Witness | None, dict]:
    """Smallest ζ ∈ Ζ_p vanishing on distinct points, by pruned depth-first search.

    Before searching below a candidate top point x_t, the growth bound
    |x_t| ≤ p|x_{t−1}| + (p−1)|x_{t−2}| must hold (the two nearest smaller
    points bound the two largest remaining terms); tops violating it carry no
    relation and are skipped outright.
    """
    pts = sorted(set(int(x) for x in points), key=_depth_key)
    stats = {"tops": len(pts), "pruned_tops": 0, "searched_tops": 0}
    viable = []
    for t in range(len(pts)):
        a1 = abs(pts[t - 1]) if t >= 1 else 0
        a2 = abs(pts[t - 2]) if t >= 2 else 0
        if abs(pts[t]) > p * a1 + (p - 1) * a2:
            stats["pruned_tops"] += 1
        else:
            viable.append(t)
    stats["searched_tops"] = len(viable)
    for total in range(2, 2 * p + 1, 2):
        for t in viable:
            got = _dfs_tail(pts, t, 0, total, None, 0)
            if got is not None:
                return _relation_witness({q: c for c, q in got}), stats
    return None, stats
