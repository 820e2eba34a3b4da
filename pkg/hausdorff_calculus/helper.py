import hausdorff_calculus.errors as errors

import functools
import math
import numpy as np


# Relative finite-difference steps, keyed by (derivative, accuracy order)
_RELATIVE_STEPS = {
    (1, 2): 1e-5,
    (2, 2): 1e-4,
    (1, 4): 1e-3,
    (2, 4): 2e-3,
}

# How many steps a stencil reaches away from its center
STENCIL_REACH = {2: 1, 4: 2}


def default_step(w, derivative=1, order=2):
    """ Returns the default finite-difference step at the mapped coordinate(s) `w` """

    try:
        relative = _RELATIVE_STEPS[(derivative, order)]
    except KeyError:
        raise errors.HausdorffException('unsupported stencil order {}'.format(order))
    return relative * np.maximum(1.0, np.abs(w))


def central_difference(g, w, h, order=2):
    """ Approximates g'(w) with a central stencil of accuracy `order` (2 or 4) """

    if order == 2:
        return (g(w + h) - g(w - h)) / (2.0 * h)
    if order == 4:
        return (g(w - 2.0 * h) - 8.0 * g(w - h) + 8.0 * g(w + h) - g(w + 2.0 * h)) / (12.0 * h)
    raise errors.HausdorffException('unsupported stencil order {}'.format(order))


def second_difference(g, w, h, order=2):
    """ Approximates g''(w) with a central stencil of accuracy `order` (2 or 4) """

    if order == 2:
        return (g(w + h) - 2.0 * g(w) + g(w - h)) / (h * h)
    if order == 4:
        return (-g(w + 2.0 * h) + 16.0 * g(w + h) - 30.0 * g(w) + 16.0 * g(w - h) - g(w - 2.0 * h)) / \
            (12.0 * h * h)
    raise errors.HausdorffException('unsupported stencil order {}'.format(order))


@functools.lru_cache(maxsize=None)
def gauss_legendre(points):
    """ Gets Gauss-Legendre nodes and weights on [-1, 1] """

    nodes, weights = np.polynomial.legendre.leggauss(points)
    nodes.flags.writeable = False
    weights.flags.writeable = False
    return nodes, weights


def composite_rule(a, b, points, panels):
    """ Composite Gauss-Legendre nodes and weights on [a, b], panel by panel from left to right """

    x, w = gauss_legendre(points)
    edges = np.linspace(a, b, panels + 1)
    half = 0.5 * np.diff(edges)
    middle = 0.5 * (edges[1:] + edges[:-1])
    nodes = (middle[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return nodes, weights


def ordered_sum(values, weights, order):
    """ Contracts a tensor-product quadrature sum one axis at a time in the given axis order """

    remaining = list(range(values.ndim))
    for axis in order:
        position = remaining.index(axis)
        values = np.tensordot(values, weights[axis], axes=([position], [0]))
        remaining.pop(position)
    return float(values)


def richardson_order(values):
    """ Observed order from three successive levels (h, h/2, h/4), or None if degenerate """

    if len(values) != 3:
        return None
    coarse = abs(values[0] - values[1])
    fine = abs(values[1] - values[2])
    if coarse == 0.0 or fine == 0.0 or not math.isfinite(coarse / fine):
        return None
    return math.log2(coarse / fine)


def broadcast_value(value, *coords):
    """ Broadcasts a field value to the shape of its coordinates (scalars stay Python floats) """

    shape = np.broadcast(*coords).shape
    value = np.asarray(value, dtype=float)
    if value.shape != shape:
        value = np.broadcast_to(value, shape)
    if not shape:
        return float(value)
    return value
