r"""Integer-order Bessel functions of the first kind.

:math:`J_n(x)` is evaluated by Miller's downward recurrence

.. math::
    J_{k-1}(x) = \frac{2k}{x} J_k(x) - J_{k+1}(x)

started from an arbitrary seed well above both ``n`` and ``|x|`` and
normalized with :math:`J_0(x) + 2\sum_{k\geq 1} J_{2k}(x) = 1`. Upward
recurrence is unstable once ``n > x``, downward recurrence is not.

For ``|x| < SERIES_THRESHOLD`` the ascending series is used instead; it
converges in a handful of terms there and avoids the ``2k/x`` blow-up of the
recurrence at tiny arguments.
"""

import math

import numpy as np

from driven_tls.errors import DomainError

SERIES_THRESHOLD = 1.0
_SERIES_TERMS = 40
_RESCALE_ABOVE = 1.0e250
_RESCALE_BY = 1.0e-250


def _start_order(n_max, x):
    base = max(n_max, int(x))
    m = base + 20 + int(math.sqrt(40.0 * max(base, 1)))
    return m + (m % 2)


def _series(n, x):
    half = 0.5 * x
    term = half**n / math.factorial(n)
    total = term
    sq = half * half
    for k in range(1, _SERIES_TERMS):
        term *= -sq / (k * (k + n))
        total += term
        if abs(term) < 1e-18 * abs(total):
            break
    return total


def _miller(n_max, x):
    m = _start_order(n_max, x)
    values = np.zeros(n_max + 1)

    j_above = 0.0
    j_k = 1.0e-30
    even_sum = j_k  # m is even
    for k in range(m, 0, -1):
        j_below = (2.0 * k / x) * j_k - j_above
        j_above, j_k = j_k, j_below
        if abs(j_k) > _RESCALE_ABOVE:
            j_k *= _RESCALE_BY
            j_above *= _RESCALE_BY
            even_sum *= _RESCALE_BY
            values *= _RESCALE_BY
        order = k - 1
        if order <= n_max:
            values[order] = j_k
        if order > 0 and order % 2 == 0:
            even_sum += j_k

    norm = j_k + 2.0 * even_sum
    return values / norm


def bessel_j_sequence(n_max, x):
    """
    Return J_0(x), ..., J_{n_max}(x) as an array.

    Raises:
        DomainError: on negative n_max or non-finite x
    """
    if n_max < 0:
        raise DomainError("Bessel order must be non-negative")
    x = float(x)
    if not math.isfinite(x):
        raise DomainError("Bessel argument must be finite", details={"x": x})

    if x == 0.0:
        values = np.zeros(n_max + 1)
        values[0] = 1.0
        return values

    ax = abs(x)
    if ax < SERIES_THRESHOLD:
        values = np.array([_series(k, ax) for k in range(n_max + 1)])
    else:
        values = _miller(n_max, ax)

    if x < 0:
        # J_n(-x) = (-1)^n J_n(x)
        values[1::2] *= -1.0
    return values


def bessel_j(n, x):
    """Return J_n(x) for integer n >= 0."""
    return float(bessel_j_sequence(n, x)[n])


def bessel_j_signed(n, x):
    """Return J_n(x) for any integer n, using J_{-n}(x) = (-1)^n J_n(x)."""
    if n >= 0:
        return bessel_j(n, x)
    value = bessel_j(-n, x)
    return -value if n % 2 else value
