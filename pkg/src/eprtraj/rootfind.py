"""Bracketed scalar root refinement."""

from __future__ import annotations


def bisect_root(f, lo: float, hi: float, xtol: float = 1e-10,
                max_iter: int = 200) -> float:
    """Bisect ``f`` on ``[lo, hi]`` down to an interval of width ``xtol``.

    ``f(lo)`` and ``f(hi)`` must have opposite signs (an exact zero at either
    endpoint is returned directly).  Bisection is deliberately preferred over
    faster solvers: the functions refined here vary steeply near
    standing-wave nodes and bisection cannot be thrown out of the bracket.
    """
    flo = f(lo)
    if flo == 0.0:
        return lo
    fhi = f(hi)
    if fhi == 0.0:
        return hi
    if (flo < 0.0) == (fhi < 0.0):
        raise ValueError(f"no sign change on [{lo}, {hi}]")
    for _ in range(max_iter):
        if hi - lo <= xtol:
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fm < 0.0) == (flo < 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)
