"""Uniform-grid quadrature shared by the profile solvers.

Two flavours are used throughout:

* periodic grids (no duplicated endpoint) with plain trapezoid weights --
  spectrally accurate for smooth periodic integrands;
* interval grids on [-pi, pi] including both endpoints.  The free-boundary
  integrands are smooth on the interval but not periodic, where the plain
  trapezoid rule is only O(h^2).  `corrected_trapezoid_weights` adds
  Gregory-style end corrections on the same uniform grid, restoring
  high-order accuracy without leaving the uniform-grid discretization.

Even profiles are stored on the half grid [0, pi]; `even_fold_weights`
folds the corrected full-grid rule onto it.
"""

import numpy as np


def periodic_grid(n, a=-np.pi, b=np.pi):
    """n equispaced nodes on [a, b) with the right endpoint excluded."""
    h = (b - a) / n
    x = a + h * np.arange(n)
    w = np.full(n, h)
    return x, w


def interval_grid(n, a=-np.pi, b=np.pi):
    """n equispaced nodes on [a, b], both endpoints included, trapezoid weights."""
    if n < 2:
        raise ValueError("interval grid needs at least 2 nodes")
    x = np.linspace(a, b, n)
    h = x[1] - x[0]
    w = np.full(n, h)
    w[0] = w[-1] = h / 2
    return x, w


def corrected_trapezoid_weights(x, order=5):
    """Trapezoid weights with symmetric end corrections on `order` nodes each.

    The corrections are chosen so that the rule integrates polynomials up to
    degree 2*order-1 exactly on [x[0], x[-1]] (odd degrees about the centre
    come for free by symmetry).  Weights stay close to the trapezoid values;
    for analytic integrands the accuracy is far beyond O(h^2).
    """
    x = np.asarray(x, dtype=float)
    n = x.size
    if n < 2 * order + 2:
        raise ValueError("grid too small for the requested correction order")
    h = x[1] - x[0]
    a, b = x[0], x[-1]
    w = np.full(n, h)
    w[0] = w[-1] = h / 2

    # Normalized coordinates keep the moment system well conditioned.
    c = 0.5 * (a + b)
    s = 0.5 * (b - a)
    t = (x - c) / s

    K = order
    A = np.empty((K, K))
    rhs = np.empty(K)
    for row, q in enumerate(range(0, 2 * K, 2)):
        A[row] = t[:K] ** q + t[n - K:][::-1] ** q
        rhs[row] = 2.0 * s / (q + 1) - w @ (t ** q)
    delta = np.linalg.solve(A, rhs)
    w = w.copy()
    w[:K] += delta
    w[n - K:] += delta[::-1]
    return w


def half_grid(m):
    """m equispaced nodes on [0, pi]."""
    if m < 2:
        raise ValueError("half grid needs at least 2 nodes")
    return np.linspace(0.0, np.pi, m)


def even_fold_weights(m, order=5):
    """Weights omega on the half grid [0, pi] folding the corrected full-grid
    rule over [-pi, pi].

    For an even function f, the full integral is sum_j 2*omega_j*f(z_j); a
    convolution integral K(z-s)v(s) ds over [-pi, pi] with even v becomes
    sum_j omega_j*(K(z-z_j) + K(z+z_j))*v(z_j).
    """
    z = half_grid(m)
    full = np.linspace(-np.pi, np.pi, 2 * m - 1)
    if order > 0:
        wf = corrected_trapezoid_weights(full, order=order)
    else:
        h = full[1] - full[0]
        wf = np.full(full.size, h)
        wf[0] = wf[-1] = h / 2
    omega = wf[m - 1:].copy()
    omega[0] = wf[m - 1] / 2
    return z, omega


def even_mass_weights(omega):
    """Weights giving the [-pi, pi] integral of an even half-grid function."""
    return 2.0 * omega


def even_convolution_matrix(kernel, z, omega):
    """Matrix of v |-> integral K(z - s) v(s) ds over [-pi, pi] for even v.

    `kernel` is a callable evaluated elementwise on differences and sums of
    half-grid nodes.
    """
    diff = kernel(z[:, None] - z[None, :])
    summ = kernel(z[:, None] + z[None, :])
    return (diff + summ) * omega[None, :]
