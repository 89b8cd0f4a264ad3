"""Multi-start derivative-free maximisation shared by the constant estimators."""

from __future__ import annotations

from typing import Callable, Sequence

import numpy as np
from scipy.optimize import minimize


def multistart_maximize(
    fun: Callable[[np.ndarray], float],
    seeds: Sequence[np.ndarray],
    random_start: Callable[[np.random.Generator], np.ndarray],
    starts: int,
    seed: int = 0,
    max_evals: int = 4000,
) -> tuple[np.ndarray, float, int]:
    """Run Nelder–Mead from every seed plus random starts; return (x, f(x), evaluations).

    At least `starts` local searches are run in total (seeds count towards
    it).  The best point is polished once more from a fresh simplex.
    """
    rng = np.random.default_rng(seed)
    inits = [np.asarray(s, dtype=float) for s in seeds]
    while len(inits) < starts:
        inits.append(random_start(rng))
    best_x, best_v, evals = None, -np.inf, 0
    opts = {"maxfev": max_evals, "xatol": 1e-10, "fatol": 1e-13, "adaptive": True}
    for x0 in inits:
        r = minimize(lambda x: -fun(x), x0, method="Nelder-Mead", options=opts)
        evals += int(r.nfev)
        if -r.fun > best_v:
            best_x, best_v = np.array(r.x), float(-r.fun)
    r = minimize(lambda x: -fun(x), best_x, method="Nelder-Mead", options=opts)
    evals += int(r.nfev)
    if -r.fun > best_v:
        best_x, best_v = np.array(r.x), float(-r.fun)
    return best_x, best_v, evals
