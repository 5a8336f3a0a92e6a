"""Exact rationals, points, subsets of [0, 1] and the two path representations.

Everything here is exact: coordinates and times are :class:`fractions.Fraction`
and floats are refused at the boundary, because the checkers built on top ask
discrete questions (is this endpoint included or not?) that rounding would
answer arbitrarily.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Tuple, Union

Rational = Fraction
Point = Tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


class DomainError(ValueError):
    """A time parameter outside [0, 1], or a malformed interval or path."""


class DimensionMismatch(ValueError):
    pass


def as_rational(value) -> Fraction:
    """Coerce ``value`` to a Fraction, refusing floats.

    Accepts ints, Fractions (or any exact ``numbers.Rational``) and strings
    such as ``"3"``, ``"-1/2"``.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(c in text for c in ".eE"):
            raise ValueError(f"not an exact rational literal: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def as_point(coords: Iterable) -> Point:
    p = tuple(as_rational(c) for c in coords)
    if not p:
        raise DimensionMismatch("points need at least one coordinate")
    return p


def check_dims(*points: Sequence) -> int:
    """Return the common dimension of ``points`` or raise DimensionMismatch."""
    dims = {len(p) for p in points}
    if len(dims) != 1:
        raise DimensionMismatch(f"dimension mismatch: {sorted(dims)}")
    return dims.pop()


def leq(x: Point, y: Point) -> bool:
    """Componentwise order on points."""
    check_dims(x, y)
    return all(a <= b for a, b in zip(x, y))


def fmt_rational(q: Fraction) -> str:
    return str(q)


def fmt_point(p: Point) -> str:
    return "(" + ",".join(fmt_rational(c) for c in p) + ")"


def _as_time(t) -> Fraction:
    t = as_rational(t)
    if not ZERO <= t <= ONE:
        raise DomainError(f"time {t} is outside [0,1]")
    return t


# -- subsets of [0, 1] -------------------------------------------------------


@dataclass(frozen=True)
class Interval:
    """A non-empty subinterval of [0, 1] with explicit endpoint closedness."""

    lo: Fraction
    hi: Fraction
    lo_closed: bool = True
    hi_closed: bool = True

    def __post_init__(self):
        lo, hi = as_rational(self.lo), as_rational(self.hi)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if not ZERO <= lo <= hi <= ONE:
            raise DomainError(f"interval bounds {lo}, {hi} not ordered inside [0,1]")
        if lo == hi and not (self.lo_closed and self.hi_closed):
            raise DomainError("a degenerate interval must be closed at both ends")

    @classmethod
    def point(cls, t) -> "Interval":
        return cls(t, t, True, True)

    @property
    def is_degenerate(self) -> bool:
        return self.lo == self.hi

    def __contains__(self, t) -> bool:
        if t < self.lo or t > self.hi:
            return False
        if t == self.lo and not self.lo_closed:
            return False
        if t == self.hi and not self.hi_closed:
            return False
        return True

    def intersect(self, other: "Interval") -> "Interval | None":
        if self.lo > other.lo:
            lo, lo_closed = self.lo, self.lo_closed
        elif self.lo < other.lo:
            lo, lo_closed = other.lo, other.lo_closed
        else:
            lo, lo_closed = self.lo, self.lo_closed and other.lo_closed
        if self.hi < other.hi:
            hi, hi_closed = self.hi, self.hi_closed
        elif self.hi > other.hi:
            hi, hi_closed = other.hi, other.hi_closed
        else:
            hi, hi_closed = self.hi, self.hi_closed and other.hi_closed
        if lo < hi or (lo == hi and lo_closed and hi_closed):
            return Interval(lo, hi, lo_closed, hi_closed)
        return None

    def sample(self) -> Fraction:
        """Some time inside the interval, preferring a closed endpoint."""
        if self.lo_closed:
            return self.lo
        if self.hi_closed:
            return self.hi
        return (self.lo + self.hi) / 2

    def __str__(self):
        if self.is_degenerate:
            return "{" + fmt_rational(self.lo) + "}"
        return "%s%s,%s%s" % (
            "[" if self.lo_closed else "(",
            fmt_rational(self.lo),
            fmt_rational(self.hi),
            "]" if self.hi_closed else ")",
        )


def _touches(left: Interval, right: Interval) -> bool:
    """True if ``right`` (starting no earlier than ``left``) can be merged into it."""
    if right.lo < left.hi:
        return True
    return right.lo == left.hi and (left.hi_closed or right.lo_closed)


def _canonical(intervals: Iterable[Interval]) -> tuple:
    items = sorted(intervals, key=lambda iv: (iv.lo, not iv.lo_closed))
    merged: list = []
    for iv in items:
        if merged and _touches(merged[-1], iv):
            cur = merged[-1]
            if iv.hi > cur.hi:
                hi, hi_closed = iv.hi, iv.hi_closed
            elif iv.hi == cur.hi:
                hi, hi_closed = cur.hi, cur.hi_closed or iv.hi_closed
            else:
                hi, hi_closed = cur.hi, cur.hi_closed
            merged[-1] = Interval(cur.lo, hi, cur.lo_closed, hi_closed)
        else:
            merged.append(iv)
    return tuple(merged)


@dataclass(frozen=True)
class IntervalSet:
    """A finite union of subintervals of [0, 1] in canonical form.

    The constructor only accepts parts that are already canonical (sorted,
    disjoint, non-adjacent); use :meth:`of` to normalise arbitrary input.
    Canonical form makes ``==`` set equality.
    """

    parts: Tuple[Interval, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if _canonical(parts) != parts:
            raise DomainError(f"interval parts are not canonical: {[str(p) for p in parts]}")

    @classmethod
    def of(cls, *intervals: Interval) -> "IntervalSet":
        return cls(_canonical(intervals))

    @classmethod
    def empty(cls) -> "IntervalSet":
        return cls(())

    @classmethod
    def unit(cls) -> "IntervalSet":
        return cls((Interval(ZERO, ONE),))

    def is_empty(self) -> bool:
        return not self.parts

    def __contains__(self, t) -> bool:
        t = as_rational(t)
        i = bisect.bisect_right([p.lo for p in self.parts], t) - 1
        return i >= 0 and t in self.parts[i]

    def union(self, other: "IntervalSet") -> "IntervalSet":
        return IntervalSet(_canonical(self.parts + other.parts))

    def intersection(self, other: "IntervalSet") -> "IntervalSet":
        out = []
        for a in self.parts:
            for b in other.parts:
                c = a.intersect(b)
                if c is not None:
                    out.append(c)
        return IntervalSet(_canonical(out))

    def complement(self) -> "IntervalSet":
        """Complement inside [0, 1]."""
        out = []
        prev_hi, prev_closed = ZERO, False
        for p in self.parts:
            gap = _gap(prev_hi, not prev_closed, p.lo, not p.lo_closed)
            if gap is not None:
                out.append(gap)
            prev_hi, prev_closed = p.hi, p.hi_closed
        gap = _gap(prev_hi, not prev_closed, ONE, True)
        if gap is not None:
            out.append(gap)
        return IntervalSet(tuple(out))

    __or__ = union
    __and__ = intersection

    def boundary_points(self) -> list:
        return sorted({p.lo for p in self.parts} | {p.hi for p in self.parts})

    def __str__(self):
        if not self.parts:
            return "∅"
        return " ∪ ".join(str(p) for p in self.parts)


def _gap(lo, lo_closed, hi, hi_closed):
    if lo < hi or (lo == hi and lo_closed and hi_closed):
        return Interval(lo, hi, lo_closed, hi_closed)
    return None


# -- paths ---------------------------------------------------------------------


def _slope(t0, v0, t1, v1):
    dt = t1 - t0
    return tuple((b - a) / dt for a, b in zip(v0, v1))


@dataclass(frozen=True)
class PLPath:
    """Piecewise-linear map [0, 1] -> R^n given by its breakpoints.

    Interior breakpoints that do not change the slope are dropped, so two
    PLPaths compare equal exactly when they are the same function.
    """

    breakpoints: Tuple[Tuple[Fraction, Point], ...]

    def __post_init__(self):
        bps = tuple((as_rational(t), as_point(v)) for t, v in self.breakpoints)
        if len(bps) < 2:
            raise DomainError("a PL path needs at least two breakpoints")
        check_dims(*(v for _, v in bps))
        ts = [t for t, _ in bps]
        if ts[0] != ZERO or ts[-1] != ONE:
            raise DomainError("breakpoint times must start at 0 and end at 1")
        if any(a >= b for a, b in zip(ts, ts[1:])):
            raise DomainError("breakpoint times must be strictly increasing")
        kept = [bps[0]]
        for j in range(1, len(bps) - 1):
            t0, v0 = kept[-1]
            t1, v1 = bps[j]
            t2, v2 = bps[j + 1]
            if _slope(t0, v0, t1, v1) != _slope(t1, v1, t2, v2):
                kept.append(bps[j])
        kept.append(bps[-1])
        object.__setattr__(self, "breakpoints", tuple(kept))
        object.__setattr__(self, "_times", [t for t, _ in kept])

    @property
    def dim(self) -> int:
        return len(self.breakpoints[0][1])

    @property
    def times(self) -> list:
        return list(self._times)

    @property
    def values(self) -> list:
        return [v for _, v in self.breakpoints]

    def eval(self, t) -> Point:
        t = _as_time(t)
        j = bisect.bisect_right(self._times, t) - 1
        if j >= len(self.breakpoints) - 1:
            return self.breakpoints[-1][1]
        t0, v0 = self.breakpoints[j]
        t1, v1 = self.breakpoints[j + 1]
        s = (t - t0) / (t1 - t0)
        return tuple(a + s * (b - a) for a, b in zip(v0, v1))

    __call__ = eval

    def endpoints(self) -> Tuple[Point, Point]:
        return self.breakpoints[0][1], self.breakpoints[-1][1]

    def segments(self):
        """Yield ``(t0, v0, t1, v1)`` for each affine piece."""
        for (t0, v0), (t1, v1) in zip(self.breakpoints, self.breakpoints[1:]):
            yield t0, v0, t1, v1


@dataclass(frozen=True)
class StepPath:
    """Piecewise-constant map [0, 1] -> R^n over an exact partition of [0, 1].

    Adjacent pieces carrying the same value are merged on construction.
    """

    pieces: Tuple[Tuple[Interval, Point], ...]

    def __post_init__(self):
        pieces = tuple((iv, as_point(v)) for iv, v in self.pieces)
        if not pieces:
            raise DomainError("a step path needs at least one piece")
        if not all(isinstance(iv, Interval) for iv, _ in pieces):
            raise TypeError("step path pieces must be (Interval, point) pairs")
        check_dims(*(v for _, v in pieces))
        first, last = pieces[0][0], pieces[-1][0]
        if first.lo != ZERO or not first.lo_closed:
            raise DomainError("pieces must start with 0 included")
        if last.hi != ONE or not last.hi_closed:
            raise DomainError("pieces must end with 1 included")
        for (a, _), (b, _) in zip(pieces, pieces[1:]):
            if a.hi != b.lo or a.hi_closed == b.lo_closed:
                raise DomainError(f"pieces {a} and {b} do not partition [0,1]")
        merged = [pieces[0]]
        for iv, v in pieces[1:]:
            prev, pv = merged[-1]
            if pv == v:
                merged[-1] = (Interval(prev.lo, iv.hi, prev.lo_closed, iv.hi_closed), v)
            else:
                merged.append((iv, v))
        object.__setattr__(self, "pieces", tuple(merged))
        object.__setattr__(self, "_los", [iv.lo for iv, _ in merged])

    @property
    def dim(self) -> int:
        return len(self.pieces[0][1])

    @property
    def values(self) -> list:
        return [v for _, v in self.pieces]

    def piece_index(self, t) -> int:
        t = _as_time(t)
        j = bisect.bisect_right(self._los, t) - 1
        if t not in self.pieces[j][0]:
            j -= 1
        return j

    def eval(self, t) -> Point:
        return self.pieces[self.piece_index(t)][1]

    __call__ = eval

    def endpoints(self) -> Tuple[Point, Point]:
        return self.pieces[0][1], self.pieces[-1][1]


Path = Union[PLPath, StepPath]


def eval_path(path: Path, t) -> Point:
    return path.eval(t)


def endpoints(path: Path) -> Tuple[Point, Point]:
    """``(path(0), path(1))``: the initial and terminal points."""
    return path.endpoints()
