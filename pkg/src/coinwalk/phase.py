"""Phase arithmetic on the unit circle.

Every comparison of eigenvalue phases in the package goes through these two
helpers so that values near the branch cut at -pi/pi compare as equal.
"""

import numpy as np

TWO_PI = 2.0 * np.pi


def wrap_phase(x):
    """Reduce phase(s) to the half-open interval [-pi, pi)."""
    y = np.mod(np.asarray(x, dtype=float) + np.pi, TWO_PI) - np.pi
    # np.mod can round up to exactly 2*pi for tiny negative inputs
    y = np.where(y >= np.pi, y - TWO_PI, y)
    if np.ndim(y) == 0:
        return float(y)
    return y


def wrap_angle(x):
    """Reduce angle(s) to [0, 2*pi)."""
    y = np.mod(np.asarray(x, dtype=float), TWO_PI)
    y = np.where(y >= TWO_PI, 0.0, y)
    if np.ndim(y) == 0:
        return float(y)
    return y


def circle_distance(a, b):
    """Shortest arc length between phases `a` and `b`, in [0, pi]."""
    d = np.abs(wrap_phase(np.asarray(a, dtype=float) - np.asarray(b, dtype=float)))
    if np.ndim(d) == 0:
        return float(d)
    return d
