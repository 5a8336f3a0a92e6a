"""Left-order topology on R^n and its trace on [0, 1].

The open rays ``(-inf, m)`` generate the left-order topology on R; on R^n we
use the product topology, whose basic opens are boxes ``prod (-inf, m_i)``.
On [0, 1] the open sets are exactly

    the empty set,  [0, a) for 0 < a <= 1,  and [0, 1],

since every union of rays ``[0, a_j)`` is again a ray (or everything).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from .geometry import (
    ONE,
    ZERO,
    IntervalSet,
    Point,
    as_point,
    as_rational,
    check_dims,
    fmt_rational,
)

UNBOUNDED = None


@dataclass(frozen=True)
class BasisBox:
    """``prod (-inf, m_i)``; a bound of ``None`` leaves that coordinate free."""

    bounds: Tuple[Optional[Fraction], ...]

    def __post_init__(self):
        bounds = tuple(None if b is None else as_rational(b) for b in self.bounds)
        if not bounds:
            raise ValueError("a basis box needs at least one coordinate")
        object.__setattr__(self, "bounds", bounds)

    @classmethod
    def slab(cls, n: int, i: int, m) -> "BasisBox":
        """The subbasic open ``{p : p_i < m}`` in R^n."""
        bounds = [None] * n
        bounds[i] = as_rational(m)
        return cls(tuple(bounds))

    @property
    def dim(self) -> int:
        return len(self.bounds)

    def __contains__(self, p) -> bool:
        return point_in_basis_box(p, self)

    def is_subset(self, other: "BasisBox") -> bool:
        check_dims(self.bounds, other.bounds)
        for a, b in zip(self.bounds, other.bounds):
            if b is None:
                continue
            if a is None or a > b:
                return False
        return True

    def __str__(self):
        return " x ".join(
            "(-inf,inf)" if b is None else "(-inf,%s)" % fmt_rational(b) for b in self.bounds
        )


@dataclass(frozen=True)
class ClosureBox:
    """``prod [x_i, inf)``: the closure of the singleton ``{x}``."""

    lows: Point

    def __post_init__(self):
        object.__setattr__(self, "lows", as_point(self.lows))

    def __contains__(self, y) -> bool:
        check_dims(self.lows, y)
        return all(lo <= c for lo, c in zip(self.lows, y))

    def __str__(self):
        return " x ".join("[%s,inf)" % fmt_rational(lo) for lo in self.lows)


def point_in_basis_box(p, box: BasisBox) -> bool:
    check_dims(p, box.bounds)
    return all(m is None or c < m for c, m in zip(p, box.bounds))


def is_open_in_ir_I(s: IntervalSet) -> bool:
    """True iff ``s`` is open in [0, 1] with the left-order topology."""
    if s.is_empty():
        return True
    if len(s.parts) != 1:
        return False
    part = s.parts[0]
    if part.lo != ZERO or not part.lo_closed:
        return False
    if part.hi_closed:
        return part.hi == ONE
    return True


def is_open_in_standard_I(s: IntervalSet) -> bool:
    """True iff ``s`` is open in [0, 1] with the usual topology."""
    for part in s.parts:
        if part.lo_closed and part.lo != ZERO:
            return False
        if part.hi_closed and part.hi != ONE:
            return False
    return True


def closure_of_point(x) -> ClosureBox:
    return ClosureBox(as_point(x))


def in_closure(y, x) -> bool:
    """Whether ``y`` lies in the closure of ``{x}``.

    Decided from the topology rather than from the closed-box formula: ``y``
    is outside the closure iff some basic open contains ``y`` but not ``x``.
    It is enough to try the slabs ``{p : p_i < x_i}``, the largest basic
    opens in coordinate ``i`` that miss ``x``.
    """
    x, y = as_point(x), as_point(y)
    n = check_dims(x, y)
    for i in range(n):
        separating = BasisBox.slab(n, i, x[i])
        if point_in_basis_box(y, separating) and not point_in_basis_box(x, separating):
            return False
    return True
