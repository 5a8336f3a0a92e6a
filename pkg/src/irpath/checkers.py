"""Decision procedures for d-paths and ir-paths, plus the path algebra.

A d-path in R^n is a continuous, componentwise non-decreasing map
[0, 1] -> R^n.  An ir-path is a map that is continuous when [0, 1] and R^n
both carry the left-order topology, i.e. every preimage of a basis box
``prod (-inf, m_i)`` is open in ir-[0, 1].

:func:`is_ir_path` decides ir-continuity by reducing the (infinite) family
of basis boxes to a finite candidate grid; :func:`is_ir_path_fast` is an
independent characterisation (monotone and right-continuous) kept around so
the two can be cross-checked.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Union

from .geometry import (
    ONE,
    ZERO,
    DomainError,
    Interval,
    IntervalSet,
    Path,
    PLPath,
    Point,
    StepPath,
    as_point,
    as_rational,
    check_dims,
    fmt_point,
    fmt_rational,
    leq,
)
from .topology import BasisBox, in_closure, is_open_in_ir_I

HALF = Fraction(1, 2)


class EndpointMismatch(ValueError):
    pass


class UnrepresentablePath(ValueError):
    """The requested composite is neither piecewise linear nor piecewise constant."""


# -- reports -------------------------------------------------------------------


@dataclass(frozen=True)
class OrderWitness:
    """Times ``t < t_after`` with ``path(t)`` not below ``path(t_after)``."""

    t: Fraction
    t_after: Fraction
    value: Point
    value_after: Point

    def __str__(self):
        return "order violated: path(%s)=%s not <= path(%s)=%s" % (
            fmt_rational(self.t), fmt_point(self.value),
            fmt_rational(self.t_after), fmt_point(self.value_after),
        )


@dataclass(frozen=True)
class JumpWitness:
    """The path takes ``value`` at ``t`` but tends to ``limit`` from ``side``."""

    t: Fraction
    value: Point
    limit: Point
    side: str  # "left" or "right"

    def __str__(self):
        return "jump at t=%s: value %s, %s limit %s" % (
            fmt_rational(self.t), fmt_point(self.value), self.side, fmt_point(self.limit)
        )


@dataclass(frozen=True)
class PreimageWitness:
    """A basis box whose preimage is not open in ir-[0, 1]."""

    box: BasisBox
    preimage: IntervalSet

    def __str__(self):
        return "box %s has preimage %s, not open in ir-I" % (self.box, self.preimage)


Witness = Union[OrderWitness, JumpWitness, PreimageWitness]


@dataclass(frozen=True)
class CheckReport:
    verdict: bool
    witness: Optional[Witness] = None

    def __post_init__(self):
        if self.verdict and self.witness is not None:
            raise ValueError("a positive verdict carries no witness")
        if not self.verdict and self.witness is None:
            raise ValueError("a negative verdict needs a witness")

    def __bool__(self):
        return self.verdict


PASS = CheckReport(True)


# -- monotonicity and continuity ----------------------------------------------


def is_monotone(path: Path) -> CheckReport:
    """Componentwise non-decreasing; the first offending pair is the witness."""
    if isinstance(path, PLPath):
        for t0, v0, t1, v1 in path.segments():
            if not leq(v0, v1):
                return CheckReport(False, OrderWitness(t0, t1, v0, v1))
        return PASS
    for (a, va), (b, vb) in zip(path.pieces, path.pieces[1:]):
        if not leq(va, vb):
            return CheckReport(False, OrderWitness(a.sample(), b.sample(), va, vb))
    return PASS


def _first_jump(path: StepPath) -> Optional[JumpWitness]:
    if len(path.pieces) == 1:
        return None
    (a, va), (b, vb) = path.pieces[0], path.pieces[1]
    if a.hi_closed:
        return JumpWitness(a.hi, va, vb, "right")
    return JumpWitness(b.lo, vb, va, "left")


def is_standard_continuous(path: Path) -> bool:
    """Continuity for the usual topologies on [0, 1] and R^n."""
    if isinstance(path, PLPath):
        return True
    return len(path.pieces) == 1


def is_dpath(path: Path) -> CheckReport:
    if isinstance(path, StepPath):
        jump = _first_jump(path)
        if jump is not None:
            return CheckReport(False, jump)
    return is_monotone(path)


# -- preimages of boxes -------------------------------------------------------


def _pl_below(path: PLPath, i: int, m: Fraction) -> IntervalSet:
    """``{t : path_i(t) < m}`` for a PL path."""
    parts = []
    for t0, v0, t1, v1 in path.segments():
        a, b = v0[i], v1[i]
        if a < m and b < m:
            parts.append(Interval(t0, t1))
        elif a < m <= b:
            cross = t0 + (m - a) / (b - a) * (t1 - t0)
            parts.append(Interval(t0, cross, True, False))
        elif b < m <= a:
            cross = t0 + (m - a) / (b - a) * (t1 - t0)
            parts.append(Interval(cross, t1, False, True))
    return IntervalSet.of(*parts)


def coordinate_sublevel(path: Path, i: int, m) -> IntervalSet:
    """``{t : path_i(t) < m}``; ``m=None`` means no constraint."""
    if m is None:
        return IntervalSet.unit()
    m = as_rational(m)
    if isinstance(path, PLPath):
        return _pl_below(path, i, m)
    return IntervalSet.of(*(iv for iv, v in path.pieces if v[i] < m))


def coordinate_superlevel(path: Path, i: int, m) -> IntervalSet:
    """``{t : path_i(t) > m}``."""
    m = as_rational(m)
    if isinstance(path, PLPath):
        flipped = PLPath(tuple((t, tuple(-c for c in v)) for t, v in path.breakpoints))
        return _pl_below(flipped, i, -m)
    return IntervalSet.of(*(iv for iv, v in path.pieces if v[i] > m))


def preimage_basis(path: Path, box: BasisBox) -> IntervalSet:
    """``{t : path(t) in box}`` as a canonical IntervalSet."""
    check_dims(box.bounds, path.values[0])
    out = IntervalSet.unit()
    for i, m in enumerate(box.bounds):
        if m is not None:
            out = out & coordinate_sublevel(path, i, m)
    return out


def preimage_open_box(path: Path, lows, highs) -> IntervalSet:
    """``{t : lows_i < path_i(t) < highs_i}`` for a two-sided open box.

    Only used for standard-topology checks; ir-continuity never needs it.
    """
    lows, highs = as_point(lows), as_point(highs)
    check_dims(lows, highs, path.values[0])
    out = IntervalSet.unit()
    for i, (lo, hi) in enumerate(zip(lows, highs)):
        out = out & coordinate_superlevel(path, i, lo) & coordinate_sublevel(path, i, hi)
    return out


# -- ir-continuity --------------------------------------------------------------


def critical_values(path: Path, i: int) -> List[Fraction]:
    return sorted({v[i] for v in path.values})


def candidate_bounds(path: Path, i: int) -> List[Fraction]:
    """Ascending bounds ``m`` that realise every distinct sublevel set of coordinate ``i``.

    Between two consecutive attained values the sublevel set of a PL or step
    coordinate keeps its shape, so one bound per gap (the midpoint), each
    attained value, and one bound beyond either end are enough.
    """
    crit = critical_values(path, i)
    out = [crit[0] - 1]
    for a, b in zip(crit, crit[1:]):
        out += [a, (a + b) / 2]
    out += [crit[-1], crit[-1] + 1]
    return out


def is_ir_path(path: Path, exhaustive: bool = False) -> CheckReport:
    """Decide ir-continuity over the candidate grid of basis boxes.

    The grid is the product of :func:`candidate_bounds` over coordinates,
    ordered lexicographically (first coordinate slowest, bounds ascending).
    A negative report carries the lexicographically first box whose
    preimage is not open.

    With ``exhaustive=True`` every grid box is tested in order.  The default
    search gives the same answer and witness without visiting the whole
    grid: opens of ir-[0, 1] are closed under intersection, so a partial box
    with open preimage ``P`` has a failing completion iff ``P`` meets some
    single remaining-coordinate sublevel set in a non-open set (the other
    coordinates are then set to their top candidate, whose sublevel set is
    all of [0, 1]).
    """
    n = path.dim
    cands = [candidate_bounds(path, i) for i in range(n)]
    subs = [[coordinate_sublevel(path, i, m) for m in cands[i]] for i in range(n)]

    def witness(choice):
        box = BasisBox(tuple(cands[i][j] for i, j in enumerate(choice)))
        return CheckReport(False, PreimageWitness(box, preimage_basis(path, box)))

    if exhaustive:
        for choice in itertools.product(*(range(len(c)) for c in cands)):
            pre = IntervalSet.unit()
            for i, j in enumerate(choice):
                pre = pre & subs[i][j]
            if not is_open_in_ir_I(pre):
                return witness(choice)
        return PASS

    def can_fail(pre: IntervalSet, k: int) -> bool:
        if not is_open_in_ir_I(pre):
            return True
        if pre.is_empty():
            return False
        return any(not is_open_in_ir_I(pre & s) for i in range(k, n) for s in subs[i])

    if not can_fail(IntervalSet.unit(), 0):
        return PASS
    pre, choice = IntervalSet.unit(), []
    for k in range(n):
        for j, s in enumerate(subs[k]):
            nxt = pre & s
            if can_fail(nxt, k + 1):
                pre = nxt
                choice.append(j)
                break
    return witness(choice)


def is_ir_path_fast(path: Path) -> CheckReport:
    """ir-continuity as "non-decreasing and right-continuous on [0, 1)".

    For PL paths right-continuity is automatic.  A step path is
    right-continuous on [0, 1) iff every piece except possibly a final
    ``{1}`` is closed on the left and open on the right.
    """
    mono = is_monotone(path)
    if not mono or isinstance(path, PLPath):
        return mono
    for (a, va), (b, vb) in zip(path.pieces, path.pieces[1:]):
        if a.hi_closed:
            return CheckReport(False, JumpWitness(a.hi, va, vb, "right"))
    return PASS


# -- path algebra -------------------------------------------------------------


def constant_path(p) -> PLPath:
    p = as_point(p)
    return PLPath(((ZERO, p), (ONE, p)))


def _as_step(path: Path) -> StepPath:
    if isinstance(path, StepPath):
        return path
    start, _ = path.endpoints()
    if any(v != start for v in path.values):
        raise UnrepresentablePath("cannot join a non-constant PL path with a step path")
    return StepPath(((Interval(ZERO, ONE), start),))


def _squeeze(iv: Interval, offset: Fraction) -> Interval:
    return Interval(offset + iv.lo / 2, offset + iv.hi / 2, iv.lo_closed, iv.hi_closed)


def concatenate(a: Path, b: Path) -> Path:
    """Run ``a`` on [0, 1/2] and ``b`` on [1/2, 1], both at double speed.

    Two PL paths give a PL path.  If either is a step path the result is a
    step path, which requires the other one to be constant.  At t = 1/2 the
    value is ``a(1) = b(0)``; for step paths the midpoint is assigned to
    ``b``'s first piece.
    """
    end_a, start_b = a.endpoints()[1], b.endpoints()[0]
    check_dims(end_a, start_b)
    if end_a != start_b:
        raise EndpointMismatch(f"{fmt_point(end_a)} != {fmt_point(start_b)}")
    if isinstance(a, PLPath) and isinstance(b, PLPath):
        first = [(t / 2, v) for t, v in a.breakpoints]
        second = [(HALF + t / 2, v) for t, v in b.breakpoints[1:]]
        return PLPath(tuple(first + second))
    a, b = _as_step(a), _as_step(b)
    pieces = [(_squeeze(iv, ZERO), v) for iv, v in a.pieces]
    last, v = pieces.pop()
    if not last.is_degenerate:
        pieces.append((Interval(last.lo, last.hi, last.lo_closed, False), v))
    pieces += [(_squeeze(iv, HALF), v) for iv, v in b.pieces]
    return StepPath(tuple(pieces))


def reparametrize(path: Path, f: PLPath) -> PLPath:
    """The composite ``path o f`` for a non-decreasing PL map ``f: I -> I``."""
    if not isinstance(path, PLPath):
        raise TypeError("only PL paths can be reparametrised")
    if f.dim != 1:
        raise DomainError("reparametrisation must be one-dimensional")
    us = [v[0] for v in f.values]
    if any(not ZERO <= u <= ONE for u in us):
        raise DomainError("reparametrisation must take values in [0,1]")
    if any(u0 > u1 for u0, u1 in zip(us, us[1:])):
        raise DomainError("reparametrisation must be non-decreasing")
    inner = path.times[1:-1]
    times = set(f.times)
    for s0, (u0,), s1, (u1,) in f.segments():
        if u0 == u1:
            continue
        for t in inner:
            if u0 < t < u1:
                times.add(s0 + (t - u0) / (u1 - u0) * (s1 - s0))
    return PLPath(tuple((s, path.eval(f.eval(s)[0])) for s in sorted(times)))


def example_ir_not_d(x, y) -> StepPath:
    """Sit at ``x`` on [0, 1) and jump to ``y`` at t = 1.

    For ``x <= y`` with ``x != y`` this is an ir-path that is not a d-path.
    """
    x, y = as_point(x), as_point(y)
    check_dims(x, y)
    if x == y:
        raise ValueError("x == y gives a constant path, which is a d-path")
    if not in_closure(y, x):
        raise ValueError(f"{fmt_point(y)} is not above {fmt_point(x)}; the jump would not be ir-continuous")
    return StepPath(((Interval(ZERO, ONE, True, False), x), (Interval.point(ONE), y)))
