"""Command-line front end: ``lacunae <group> <command> [options]``.

Every command prints one JSON document (keys sorted) by default.  With
``--format csv`` list results become one row per element and dict results a
single row; ``--format human`` prints aligned ``key: value`` lines.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction
from typing import Any, Callable, Sequence

from . import __version__
from .exact import GaussianRational
from .norms import (
    NormSpace,
    lp_norm_even_exact,
    lp_norm_quadrature,
    phi_expansion,
    sign_range,
    sup_norm,
    unconditionality_constant,
)
from .polynomial import TrigPolynomial
from .relations import (
    Window,
    check_I,
    check_J,
    check_J_sym,
    enumerate_multiindices,
    enumerate_relations,
    is_n_independent,
    pairing_window,
)
from .sequences import (
    SequenceSpec,
    UncertifiedFloorError,
    classify_geometric,
    density_estimate,
    diophantine_families,
    diophantine_geometric,
    generate,
    growth_admissible,
    identity_suite,
)
from .sidon import (
    Arc,
    DEFAULT_DEVIATION_RESOLUTION,
    hadamard_bound,
    hadamard_threshold,
    joint_distribution_deviation,
    lacunary_inequality_check,
    sidon_constant_estimate,
)


class UsageError(ValueError):
    """Bad command-line input (reported with exit code 2)."""


# ---------------------------------------------------------------------------
# input parsing


def _load_json(text: str) -> Any:
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            text = fh.read()
    elif text == "-":
        text = sys.stdin.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON: {exc.msg}") from None


def _scalar(v: Any):
    """int / "p/q" / float / [re, im] → exact or complex coefficient."""
    if isinstance(v, bool):
        raise UsageError("boolean is not a coefficient")
    if isinstance(v, int):
        return v
    if isinstance(v, float):
        return v
    if isinstance(v, str):
        try:
            return Fraction(v)
        except ValueError:
            try:
                return complex(v.replace("i", "j"))
            except ValueError:
                raise UsageError(f"cannot parse coefficient {v!r}") from None
    if isinstance(v, list) and len(v) == 2:
        re, im = (_scalar(x) for x in v)
        if isinstance(re, (int, Fraction)) and isinstance(im, (int, Fraction)):
            return GaussianRational(re, im)
        return complex(float(re), float(im))
    raise UsageError(f"cannot parse coefficient {v!r}")


def parse_poly(text: str) -> TrigPolynomial:
    """A bare list of frequencies (all-ones coefficients), a list of
    [freq, coeff] pairs, a {freq: coeff} object or {"terms": [...]}."""
    data = _load_json(text)
    if isinstance(data, dict) and "terms" in data:
        return TrigPolynomial.from_json(data)
    if isinstance(data, dict):
        return TrigPolynomial({int(k): _scalar(v) for k, v in data.items()})
    if isinstance(data, list):
        if all(isinstance(x, int) and not isinstance(x, bool) for x in data):
            return TrigPolynomial.from_frequencies(data)
        if all(isinstance(x, list) and len(x) == 2 for x in data):
            freqs = [int(x[0]) for x in data]
            return TrigPolynomial.from_frequencies(freqs, [_scalar(x[1]) for x in data])
    raise UsageError("unrecognised polynomial format")


def parse_int_list(text: str) -> list[int]:
    data = _load_json(text)
    if not isinstance(data, list):
        raise UsageError("expected a JSON list of integers")
    try:
        return [int(x) for x in data]
    except (TypeError, ValueError):
        raise UsageError("expected a JSON list of integers") from None


def _sequence_spec(args) -> SequenceSpec | None:
    chosen = [k for k in ("geometric", "power", "polynomial", "sigma", "explicit") if getattr(args, k, None) is not None]
    if len(chosen) > 1:
        raise UsageError("give at most one of --geometric/--power/--polynomial/--sigma/--explicit")
    if not chosen:
        return None
    kind = chosen[0]
    val = getattr(args, kind)
    spec = {
        "geometric": lambda: SequenceSpec.geometric(val),
        "power": lambda: SequenceSpec.power(val),
        "polynomial": lambda: SequenceSpec.polynomial(parse_int_list(val)),
        "sigma": lambda: SequenceSpec.integer_part_power(val),
        "explicit": lambda: SequenceSpec.explicit(parse_int_list(val)),
    }[kind]()
    if args.translate is not None:
        spec = spec.translate(args.translate)
    if args.scale is not None:
        spec = spec.scale(args.scale)
    if args.symmetrize:
        spec = spec.symmetrize()
    for h in args.adjoin or ():
        spec = spec.adjoin(h)
    return spec


def window_from_args(args, required: bool = True) -> Window | None:
    spec = _sequence_spec(args)
    if getattr(args, "window", None) is not None:
        if spec is not None:
            raise UsageError("give either --window or a sequence, not both")
        data = _load_json(args.window)
        w = Window.from_json(data) if isinstance(data, dict) else Window.of(int(x) for x in data)
    elif spec is not None:
        w = generate(spec, args.len)
    elif required:
        raise UsageError("a window is required (--window or --geometric/--power/... with --len)")
    else:
        return None
    brk = getattr(args, "break_set", None)
    ts = getattr(args, "tail_start", None)
    if brk is not None:
        w = w.with_break(parse_int_list(brk), ts)
    elif ts is not None:
        w = Window(w.elements, w.break_set, ts, w.name)
    return w


def space_from_args(args) -> NormSpace:
    if args.sup:
        return NormSpace.sup(args.resolution)
    p = Fraction(args.p) if "/" in args.p else (int(args.p) if args.p.lstrip("-").isdigit() else float(args.p))
    return NormSpace.lp(p, args.resolution)


# ---------------------------------------------------------------------------
# output


def _jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, complex):
        return [x.real, x.imag]
    if isinstance(x, float) and not math.isfinite(x):
        return "inf" if x > 0 else ("-inf" if x < 0 else "nan")
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _flatten(d: Any, prefix: str = "") -> dict[str, Any]:
    if not isinstance(d, dict):
        return {prefix or "value": d if not isinstance(d, list) else json.dumps(d, sort_keys=True, ensure_ascii=False)}
    out: dict[str, Any] = {}
    for k in sorted(d):
        key = f"{prefix}.{k}" if prefix else str(k)
        v = d[k]
        if isinstance(v, dict):
            out.update(_flatten(v, key))
        elif isinstance(v, list):
            out[key] = json.dumps(v, sort_keys=True, ensure_ascii=False)
        else:
            out[key] = "" if v is None else v
    return out


def render(result: Any, fmt: str) -> str:
    data = _jsonable(result)
    if fmt == "json":
        return json.dumps(data, sort_keys=True, ensure_ascii=False) + "\n"
    if fmt == "csv":
        rows = [_flatten(r) for r in (data if isinstance(data, list) else [data])]
        fields: list[str] = []
        for r in rows:
            fields += [k for k in r if k not in fields]
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    # human
    if isinstance(data, list):
        return "".join(json.dumps(r, sort_keys=True, ensure_ascii=False) + "\n" for r in data)
    flat = _flatten(data)
    width = max((len(k) for k in flat), default=0)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in flat.items())


# ---------------------------------------------------------------------------
# command implementations


def cmd_rel_enumerate(args):
    if args.multiindices:
        return [list(a.entries) for a in enumerate_multiindices(args.m, args.n)]
    return [list(r.coeffs) for r in enumerate_relations(args.m, args.n)]


def cmd_rel_independent(args):
    return is_n_independent(parse_int_list(args.set), args.n).to_json()


def cmd_rel_pairing(args):
    w = window_from_args(args)
    value = pairing_window(parse_int_list(args.zeta), w, args.tail_start or 0)
    return {"pairing": value, "no_selection": value is None}


def cmd_rel_check_i(args):
    return check_I(window_from_args(args), args.n, args.budget).to_json()


def cmd_rel_check_j(args):
    return check_J(window_from_args(args), args.n, args.sign_mode, args.min_tail).to_json()


def cmd_rel_check_jsym(args):
    return check_J_sym(window_from_args(args), args.n, args.min_tail).to_json()


def cmd_norm_exact(args):
    f = parse_poly(args.poly)
    return {"norm_p^p": lp_norm_even_exact(f, _int_p(args.p))}


def _int_p(text: str):
    try:
        return int(text)
    except ValueError:
        return float(text)


def cmd_norm_quad(args):
    f = parse_poly(args.poly)
    p = float(args.p)
    value = lp_norm_quadrature(f, p, args.resolution)
    return {"norm": value, "norm_p^p": value**p, "p": args.p}


def cmd_norm_sup(args):
    s = sup_norm(parse_poly(args.poly), args.resolution)
    return {"value": s.value, "upper": s.upper, "grid_max": s.grid_max, "argmax": s.argmax, "resolution": s.resolution}


def cmd_expand(args):
    q = parse_int_list(args.q)
    p = Fraction(args.p)
    return [
        {
            "frequency": cl.target_frequency,
            "members": [{"alpha": list(a.entries), "coeff": c} for a, c in cl.members],
        }
        for cl in phi_expansion(q, p, args.truncation)
    ]


def cmd_oscillation(args):
    r = sign_range(parse_poly(args.f), parse_poly(args.g), space_from_args(args), args.sign_mode, args.samples)
    return {
        "oscillation": r.oscillation,
        "norm_max": r.norm_max,
        "norm_min": r.norm_min,
        "eps_max": complex(r.eps_max),
        "eps_min": complex(r.eps_min),
    }


def cmd_uncond(args):
    est = unconditionality_constant(
        parse_int_list(args.freqs), space_from_args(args), args.sign_mode, args.starts, args.seed, args.max_evals
    )
    return est.to_json()


def cmd_sidon_estimate(args):
    return sidon_constant_estimate(parse_int_list(args.set), args.starts, args.seed, args.max_evals).to_json()


def cmd_sidon_hadamard(args):
    return {"bound": hadamard_bound(args.q), "q": args.q, "threshold": hadamard_threshold()}


def cmd_sidon_lacunary(args):
    f = parse_poly(args.poly)
    return lacunary_inequality_check(f, args.k, args.q).to_json()


def cmd_sidon_deviation(args):
    freqs = parse_int_list(args.freqs)
    raw = _load_json(args.arcs)
    try:
        arcs = [Arc(float(a), float(b)) for a, b in raw]
    except (TypeError, ValueError) as exc:
        raise UsageError(f"arcs must be [[start, length], ...]: {exc}") from None
    res = args.resolution or DEFAULT_DEVIATION_RESOLUTION
    return {"deviation": joint_distribution_deviation(freqs, arcs, res), "resolution": res}


def reference_constants(args) -> list[dict]:
    """Sidon estimates of the reference sets next to their closed-form targets."""
    rows = []

    def add(name, E, reference, relation, ok):
        rows.append({"set": name, "freqs": list(E), "reference": reference, "relation": relation, **ok})

    for q in (2, 3, 4, 5):
        E = (0, 1, q)
        est = sidon_constant_estimate(E, args.starts, args.seed)
        if q == 2:
            ref = math.sqrt(2)
            add("{0,1,2}", E, ref, "≈", {"estimate": est.value, "ok": abs(est.value - ref) <= 5e-3})
        else:
            ref = 1 / math.cos(math.pi / (2 * q))
            add(f"{{0,1,{q}}}", E, ref, "≥", {"estimate": est.value, "ok": est.value >= ref - 5e-3})
    for q in (4, 5):
        E = tuple(q**k for k in range(5))
        est = sidon_constant_estimate(E, args.starts, args.seed)
        bound = hadamard_bound(q)
        add(f"{{{q}^k}}_(k<5)", E, bound, "≤", {"estimate": est.value, "ok": est.value <= bound})
    return rows


def cmd_sidon(args):
    if args.paper_constants:
        return reference_constants(args)
    raise UsageError("choose a sidon subcommand or --paper-constants")


def cmd_seq_generate(args):
    w = window_from_args(args)
    return {"name": w.name, "elements": [str(x) for x in w.elements]}


TABLE_JS = (-3, -2, 2, 3, 4, 5)


def _classification_row(c) -> dict:
    i, cj, rj = c.row()
    return {"j": c.j, "n_max": c.n_max, "len": c.window_len, "I": i, "CJ": cj, "RJ": rj, "agrees": c.agrees}


def cmd_seq_classify(args):
    if args.table:
        out = []
        for j in TABLE_JS:
            c = classify_geometric(j, abs(j) + 2, max(args.len or 16, 16), jobs=args.jobs)
            out.append(_classification_row(c))
        return out
    if args.geometric is None:
        raise UsageError("seq classify needs --geometric J or --table")
    c = classify_geometric(args.geometric, args.nmax, args.len or 16, args.budget, args.break_len, jobs=args.jobs)
    out = c.to_json()
    out["row"] = list(c.row())
    return out


def cmd_seq_dioph(args):
    sols = diophantine_geometric(args.j, args.bound, args.n)
    fam = set(diophantine_families(args.j, args.bound))
    return [{**s.to_json(), "in_family": s in fam} for s in sols]


def cmd_seq_identities(args):
    return [c.to_json() for c in identity_suite(range(args.n_min, args.n_max + 1))]


def cmd_seq_density(args):
    return {"density": density_estimate(window_from_args(args), args.h), "h": args.h}


def cmd_seq_growth(args):
    return growth_admissible(window_from_args(args), args.p).to_json()


# ---------------------------------------------------------------------------
# parser


def _global_options(parser: argparse.ArgumentParser, defaults: bool) -> None:
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    parser.add_argument("--format", choices=("json", "csv", "human"), default=d("json"), help="output format")
    parser.add_argument("--seed", type=int, default=d(0), help="random seed for optimisers")
    parser.add_argument("--resolution", type=int, default=d(None), help="grid resolution override")
    parser.add_argument("--jobs", type=int, default=d(1), help="parallel worker processes")
    parser.add_argument("--out", default=d(None), help="write output to this file instead of stdout")


def _sequence_options(p: argparse.ArgumentParser, window: bool = True) -> None:
    if window:
        p.add_argument("--window", help="JSON list of integers or window object (@file, - for stdin)")
    p.add_argument("--geometric", type=int, metavar="J", help="{J^k : k ≥ 0}")
    p.add_argument("--power", type=int, metavar="D", help="{k^D : k ≥ 1}")
    p.add_argument("--polynomial", metavar="JSON", help="coefficients [c0, c1, ...] of P(k), k ≥ 1")
    p.add_argument("--sigma", metavar="EXPR", help="{floor(σ^k)} with σ a sympy expression")
    p.add_argument("--explicit", metavar="JSON", help="explicit list of values")
    p.add_argument("--translate", type=int)
    p.add_argument("--scale", type=int)
    p.add_argument("--symmetrize", action="store_true")
    p.add_argument("--adjoin", type=int, action="append")
    p.add_argument("--len", type=int, default=16, help="number of terms to generate")


def _space_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--p", default="4", help="exponent of L^p (integer, decimal or fraction)")
    p.add_argument("--sup", action="store_true", help="use the sup norm instead of L^p")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    _global_options(common, defaults=False)

    root = argparse.ArgumentParser(prog="lacunae", description=__doc__.splitlines()[0])
    root.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _global_options(root, defaults=True)
    groups = root.add_subparsers(dest="group", metavar="GROUP", required=True)

    def leaf(sub, name: str, fn: Callable, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=fn)
        return p

    # relations
    rel = groups.add_parser("relations", help="zero-sum relations and independence checks")
    rs = rel.add_subparsers(dest="command", metavar="COMMAND", required=True)
    p = leaf(rs, "enumerate", cmd_rel_enumerate, "list Ζ_n^m (or multi-indices with --multiindices)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--multiindices", action="store_true")
    p = leaf(rs, "independent", cmd_rel_independent, "is a finite set n-independent")
    p.add_argument("--set", required=True, help="JSON list of integers")
    p.add_argument("--n", type=int, required=True)
    p = leaf(rs, "pairing", cmd_rel_pairing, "min |Σζ_i p_i| over distinct tail elements")
    p.add_argument("--zeta", required=True)
    p.add_argument("--tail-start", type=int, default=0)
    _sequence_options(p)
    p = leaf(rs, "check-i", cmd_rel_check_i, "I(n) on a window")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--budget", type=int, default=2, help="largest prefix that may be removed")
    _sequence_options(p)
    for name, fn in (("check-j", cmd_rel_check_j), ("check-jsym", cmd_rel_check_jsym)):
        p = leaf(rs, name, fn, "J(n) on a window" if name == "check-j" else "J^sym(n) on a positive window")
        p.add_argument("--n", type=int, required=True)
        if name == "check-j":
            p.add_argument("--sign-mode", choices=("complex", "real"), default="complex")
        p.add_argument("--break", dest="break_set", help="JSON list: the break elements")
        p.add_argument("--tail-start", type=int, help="depth index where the tail begins")
        p.add_argument("--min-tail", type=int)
        _sequence_options(p)

    # norms
    nm = groups.add_parser("norm", help="norms of trigonometric polynomials")
    ns = nm.add_subparsers(dest="command", metavar="COMMAND", required=True)
    for name, fn, h in (
        ("exact", cmd_norm_exact, "exact ‖f‖_p^p for even p"),
        ("quad", cmd_norm_quad, "‖f‖_p by trapezoid quadrature"),
        ("sup", cmd_norm_sup, "sup norm with certified upper bound"),
    ):
        p = leaf(ns, name, fn, h)
        p.add_argument("--poly", required=True, help="[freqs] or [[freq, coeff], ...] or {freq: coeff}")
        if name != "sup":
            p.add_argument("--p", default="4")

    p = leaf(groups, "expand", cmd_expand, "group multi-indices of |1+Σz_i e_{q_i}|^p by frequency")
    p.add_argument("--q", required=True)
    p.add_argument("--p", default="4")
    p.add_argument("--truncation", type=int, default=2)

    p = leaf(groups, "oscillation", cmd_oscillation, "max − min of ‖εf+g‖ over signs ε")
    p.add_argument("--f", required=True)
    p.add_argument("--g", required=True)
    p.add_argument("--sign-mode", choices=("complex", "real"), default="complex")
    p.add_argument("--samples", type=int, default=64)
    _space_options(p)

    p = leaf(groups, "uncond", cmd_uncond, "unconditionality constant estimate")
    p.add_argument("--freqs", required=True)
    p.add_argument("--sign-mode", choices=("complex", "real"), default="real")
    p.add_argument("--starts", type=int, default=32)
    p.add_argument("--max-evals", type=int, default=4000)
    _space_options(p)

    # sidon
    sd = groups.add_parser("sidon", parents=[common], help="Sidon constants and lacunary inequalities")
    sd.add_argument("--paper-constants", action="store_true", help="reproduce the reference Sidon constants")
    sd.add_argument("--starts", type=int, default=32)
    sd.set_defaults(func=cmd_sidon)
    ss = sd.add_subparsers(dest="command", metavar="COMMAND")
    p = leaf(ss, "estimate", cmd_sidon_estimate, "lower estimate of the Sidon constant")
    p.add_argument("--set", required=True)
    p.add_argument("--starts", type=int, default=32)
    p.add_argument("--max-evals", type=int, default=6000)
    p = leaf(ss, "hadamard-bound", cmd_sidon_hadamard, "upper bound for Hadamard sets of ratio q")
    p.add_argument("--q", type=float, required=True)
    p = leaf(ss, "lacunary-check", cmd_sidon_lacunary, "lower lacunary inequality with induction steps")
    p.add_argument("--poly", required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--q", type=float, required=True)
    p = leaf(ss, "deviation", cmd_sidon_deviation, "joint-distribution deviation of characters on arcs")
    p.add_argument("--freqs", required=True)
    p.add_argument("--arcs", required=True, help="[[start, length], ...] in radians")

    # sequences
    sq = groups.add_parser("seq", help="integer sequences and their arithmetic profile")
    qs = sq.add_subparsers(dest="command", metavar="COMMAND", required=True)
    p = leaf(qs, "generate", cmd_seq_generate, "generate a window")
    _sequence_options(p, window=False)
    p = leaf(qs, "classify", cmd_seq_classify, "measure I / complex J / real J levels of {j^k}")
    p.add_argument("--geometric", type=int, metavar="J")
    p.add_argument("--nmax", type=int, default=4)
    p.add_argument("--len", type=int)
    p.add_argument("--budget", type=int, default=2)
    p.add_argument("--break-len", type=int, default=2)
    p.add_argument("--table", action="store_true", help="classify j ∈ {−3,−2,2,3,4,5} at n_max = |j|+2")
    p = leaf(qs, "dioph", cmd_seq_dioph, "solutions of Σζ_i j^{k_i} = 0 with Σ|ζ_i| ≤ 2|j|")
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--bound", type=int, default=8)
    p.add_argument("--n", type=int)
    p = leaf(qs, "identities", cmd_seq_identities, "verify the power-sum identities")
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--n-max", type=int, default=50)
    p = leaf(qs, "density", cmd_seq_density, "max count in a length-h interval, divided by h")
    p.add_argument("--h", type=int, required=True)
    _sequence_options(p)
    p = leaf(qs, "growth", cmd_seq_growth, "ratio condition and pruned relation search")
    p.add_argument("--p", type=int, required=True)
    _sequence_options(p)
    return root


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        result = args.func(args)
    except (ValueError, ZeroDivisionError, UncertifiedFloorError, OSError) as exc:
        print(f"lacunae: error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001
        print(f"lacunae: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    text = render(result, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
