"""Closed-form burning bounds in exact integer arithmetic.

All ceilings of square roots are computed with :func:`math.isqrt`; the
comparison threshold uses :class:`fractions.Fraction`. Nothing here
touches floating point except :func:`threshold_closed_form`, which exists
only for display.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InputError

TABLE1_KS = (3, 4, 5, 6, 7, 8, 9, 10, 20, 50, 100, 200)


def ceil_sqrt(a: int) -> int:
    """Smallest ``m >= 0`` with ``m * m >= a``."""
    if a < 0:
        raise InputError(f"ceil_sqrt of negative {a}")
    if a == 0:
        return 0
    return math.isqrt(a - 1) + 1


def ceil_sqrt_ratio(a: int, d: int) -> int:
    """``ceil(sqrt(a) / d)``: the least ``m`` with ``(m d)^2 >= a``."""
    if a < 0 or d < 1:
        raise InputError(f"need a >= 0 and d >= 1, got a={a}, d={d}")
    return -(-ceil_sqrt(a) // d)


def ceil_sqrt_frac(num: int, den: int) -> int:
    """``ceil(sqrt(num / den))``: the least ``m`` with ``m^2 den >= num``."""
    if num < 0 or den < 1:
        raise InputError(f"need num >= 0 and den >= 1, got {num}/{den}")
    m = math.isqrt(num // den)
    while m * m * den < num:
        m += 1
    return m


def bound_branching(n: int, k: int) -> int:
    """Rounds guaranteed for a ``k+``-branching tree on ``n`` vertices (``k >= 3``)."""
    if k < 3:
        raise InputError(f"branching bound needs k >= 3, got {k}")
    return ceil_sqrt_ratio(4 * (k - 2) * n, k - 1)


def bound_power(n: int, k: int) -> int:
    """Rounds guaranteed for ``G^k`` on ``n`` vertices (``k >= 2``)."""
    if k < 2:
        raise InputError(f"power bound needs k >= 2, got {k}")
    return ceil_sqrt_ratio(4 * (k - 1) * n, k)


def bound_leafstrip(n: int, k: int) -> int:
    """``ceil(sqrt(4n / (3(k-1)))) + 2`` (``k >= 3``)."""
    if k < 3:
        raise InputError(f"leaf-strip bound needs k >= 3, got {k}")
    return ceil_sqrt_frac(4 * n, 3 * (k - 1)) + 2


def caterpillar_lower_bound(n: int, k: int) -> int:
    """``ceil(sqrt(n / (k-1)))``, attained from below by branching caterpillars."""
    if k < 2:
        raise InputError(f"caterpillar bound needs k >= 2, got {k}")
    return ceil_sqrt_frac(n, k - 1)


@dataclass
class BoundReport:
    n: int
    k: int
    bound_branching: int | None = None
    bound_power: int | None = None
    bound_leafstrip: int | None = None
    caterpillar_lb: int | None = None
    exact_b: int | None = None
    smallest: list[str] = field(default_factory=list)

    UPPER = ("bound_branching", "bound_power", "bound_leafstrip")

    def to_json(self) -> dict:
        out = {"n": self.n, "k": self.k}
        for name in self.UPPER + ("caterpillar_lb", "exact_b"):
            value = getattr(self, name)
            if value is not None:
                out[name] = value
        out["smallest"] = list(self.smallest)
        return out


def bound_report(n: int, k: int, exact_b: int | None = None) -> BoundReport:
    """Every bound defined at ``(n, k)``; undefined ones are left as ``None``.

    ``exact_b`` is an externally computed burning number to attach (see
    :func:`burnkit.burning.exact_burning_number`).
    """
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    rep = BoundReport(n, k, exact_b=exact_b)
    if k >= 3:
        rep.bound_branching = bound_branching(n, k)
        rep.bound_leafstrip = bound_leafstrip(n, k)
    if k >= 2:
        rep.bound_power = bound_power(n, k)
        rep.caterpillar_lb = caterpillar_lower_bound(n, k)
    present = {name: getattr(rep, name) for name in rep.UPPER if getattr(rep, name) is not None}
    if present:
        low = min(present.values())
        rep.smallest = [name for name, v in present.items() if v == low]
    return rep


def beats_leafstrip(n: int, k: int) -> bool:
    """Exact test of ``sqrt(X) <= sqrt(Y) + 2`` for the real-valued bounds.

    ``X = 4n(k-2)/(k-1)^2`` and ``Y = 4n/(3(k-1))``. Squaring twice: the
    inequality holds iff ``X - Y - 4 <= 0`` or ``(X - Y - 4)^2 <= 16 Y``.
    """
    if k < 3:
        raise InputError(f"comparison needs k >= 3, got {k}")
    x = Fraction(4 * n * (k - 2), (k - 1) ** 2)
    y = Fraction(4 * n, 3 * (k - 1))
    gap = x - y - 4
    return gap <= 0 or gap * gap <= 16 * y


def threshold_n(k: int) -> int:
    """Largest ``n`` for which the branching bound (unceiled) is within 2 of the leaf-strip one."""
    if k < 3:
        raise InputError(f"threshold needs k >= 3, got {k}")
    # the set of good n is an initial segment: double, then bisect
    hi = 1
    while beats_leafstrip(hi, k):
        hi *= 2
    lo = hi // 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if beats_leafstrip(mid, k):
            lo = mid
        else:
            hi = mid
    return lo


def threshold_closed_form(k: int) -> float:
    """Display-only float value of ``(k-1) / (sqrt((k-2)/(k-1)) - 1/sqrt(3))^2``."""
    return (k - 1) / (math.sqrt((k - 2) / (k - 1)) - 1 / math.sqrt(3)) ** 2


def table1(ks=TABLE1_KS) -> dict[int, int]:
    return {k: threshold_n(k) for k in ks}


def combined_branch_bound(n: int, branch: int) -> dict[str, int]:
    """Upper bounds on ``b(G)`` implied by a ``branch+``-branching spanning tree.

    The branching term needs ``branch >= 3`` and is omitted below that; the
    leaf-strip term is evaluated for any ``branch >= 2``.
    """
    if branch < 2:
        raise InputError(f"branch must be >= 2, got {branch}")
    out: dict[str, int] = {}
    if branch >= 3:
        out["bound_branching"] = bound_branching(n, branch)
    out["bound_leafstrip"] = ceil_sqrt_frac(4 * n, 3 * (branch - 1)) + 2
    out["combined"] = min(out.values())
    return out
