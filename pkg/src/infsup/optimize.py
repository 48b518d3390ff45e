"""Golden-section search for unimodal functions of one variable."""

import math

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0  # 1/phi
INV_PHI2 = (3.0 - math.sqrt(5.0)) / 2.0  # 1/phi^2


def golden_section(func, lo, hi, *, tol=1e-10, maxiter=200, maximize=False):
    """Locate the extremum of a unimodal ``func`` on ``[lo, hi]``.

    The search stops once the bracket is shorter than
    ``tol * max(1, |lo|, |hi|)`` or after ``maxiter`` shrink steps.
    ``+inf`` values are ordered above every finite value, so functions with
    a saturating sentinel work unchanged.

    Returns ``(x, fx)`` for the best point seen, endpoints of the final
    bracket included.
    """
    sign = -1.0 if maximize else 1.0

    def g(x):
        v = func(x)
        if v != v:  # NaN never wins
            return math.inf
        return sign * v

    a, b = (lo, hi) if lo <= hi else (hi, lo)
    h = b - a
    c = a + INV_PHI2 * h
    d = a + INV_PHI * h
    yc, yd = g(c), g(d)
    for _ in range(maxiter):
        if h <= tol * max(1.0, abs(a), abs(b)):
            break
        if yc < yd:
            b, d, yd = d, c, yc
            h = INV_PHI * h
            c = a + INV_PHI2 * h
            yc = g(c)
        else:
            a, c, yc = c, d, yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = g(d)

    best_x, best_y = (c, yc) if yc < yd else (d, yd)
    for x in (a, b):
        y = g(x)
        if y < best_y:
            best_x, best_y = x, y
    return best_x, sign * best_y
