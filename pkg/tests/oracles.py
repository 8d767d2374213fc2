"""Reference computations that share no code with the package.

The centroid oracles integrate x, y and 1 over the region under the
membership bar graph numerically; the matchpoint oracle compares every
ordered pair of entries in a field.
"""
import numpy as np
from scipy import integrate

_NODES, _WEIGHTS = np.polynomial.legendre.leggauss(8)


def centroid_by_quadrature(y):
    """Centroid of {(x, t): 0 <= x <= 5, 0 <= t <= h(x)} for bar heights ``y``.

    ``y`` has shape (5,) or (N, 5). Tensor Gauss-Legendre on each unit strip,
    split at the integer jumps of h.
    """
    y = np.atleast_2d(np.asarray(y, dtype=float))
    area = np.zeros(len(y))
    mx = np.zeros(len(y))
    my = np.zeros(len(y))
    for i in range(5):
        a, b = float(i), float(i + 1)
        xs = (b - a) / 2 * _NODES + (a + b) / 2
        wx = (b - a) / 2 * _WEIGHTS
        h = y[:, i][:, None]
        ts = h / 2 * _NODES[None, :] + h / 2  # (N, k)
        wt = h / 2 * _WEIGHTS[None, :]
        area += wx.sum() * wt.sum(axis=1)
        mx += (wx * xs).sum() * wt.sum(axis=1)
        my += wx.sum() * (wt * ts).sum(axis=1)
    return mx / area, my / area


def centroid_by_dblquad(y):
    """Same region, integrated adaptively by scipy over each strip."""
    area = mx = my = 0.0
    for i, h in enumerate(y):
        h = float(h)
        if h == 0.0:
            continue
        area += integrate.dblquad(lambda t, x: 1.0, i, i + 1, 0.0, h)[0]
        mx += integrate.dblquad(lambda t, x: x, i, i + 1, 0.0, h)[0]
        my += integrate.dblquad(lambda t, x: t, i, i + 1, 0.0, h)[0]
    return mx / area, my / area


def brute_matchpoints(scores):
    """2 per opponent beaten, 1 per opponent tied, over all ordered pairs."""
    out = []
    for i, own in enumerate(scores):
        mp = 0
        for j, other in enumerate(scores):
            if i == j:
                continue
            if own > other:
                mp += 2
            elif own == other:
                mp += 1
        out.append(mp)
    return out
