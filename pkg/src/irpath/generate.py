"""Seeded random paths for property suites and the golden run."""

from __future__ import annotations

import random
from fractions import Fraction

from .geometry import ONE, ZERO, Interval, PLPath, StepPath

MAX_DEN = 100


def random_rational(rng: random.Random, lo: int = -5, hi: int = 5, max_den: int = MAX_DEN) -> Fraction:
    den = rng.randint(1, max_den)
    return Fraction(rng.randint(lo * den, hi * den), den)


def random_point(rng, n, lo=-5, hi=5):
    return tuple(random_rational(rng, lo, hi) for _ in range(n))


def random_times(rng, count: int, max_den: int = MAX_DEN) -> list:
    """``0``, ``count`` distinct interior times, and ``1``."""
    inner = set()
    while len(inner) < count:
        den = rng.randint(2, max_den)
        inner.add(Fraction(rng.randint(1, den - 1), den))
    return [ZERO] + sorted(inner) + [ONE]


def _increment(rng):
    if rng.random() < 0.2:
        return Fraction(0)
    return random_rational(rng, 0, 3)


def random_monotone_pl(rng, n: int, breakpoints: int) -> PLPath:
    ts = random_times(rng, breakpoints - 2)
    v = random_point(rng, n)
    bps = [(ts[0], v)]
    for t in ts[1:]:
        v = tuple(c + _increment(rng) for c in v)
        bps.append((t, v))
    return PLPath(tuple(bps))


def random_pl(rng, n, breakpoints) -> PLPath:
    ts = random_times(rng, breakpoints - 2)
    return PLPath(tuple((t, random_point(rng, n)) for t in ts))


def random_decreasing_pl(rng, n, breakpoints) -> PLPath:
    """A PL path with at least one strict decrease in some coordinate."""
    path = random_monotone_pl(rng, n, breakpoints)
    bps = [list(v) for v in path.values]
    ts = path.times
    j = rng.randrange(len(bps) - 1)
    i = rng.randrange(n)
    drop = random_rational(rng, 0, 3)
    if drop == 0:
        drop = Fraction(1, rng.randint(1, MAX_DEN))
    delta = bps[j][i] - drop - bps[j + 1][i]
    for later in bps[j + 1:]:
        later[i] += delta
    return PLPath(tuple((t, tuple(v)) for t, v in zip(ts, bps)))


def random_partition(rng, k: int, cuts: int, isolated: float = 0.2) -> list:
    """Intervals partitioning [0, 1] with endpoints on ``{j/k}`` and random closedness."""
    chosen = sorted(rng.sample(range(1, k), min(cuts, k - 1))) if k > 1 else []
    bounds = [ZERO] + [Fraction(j, k) for j in chosen] + [ONE]
    out = []
    lo_closed = True
    if rng.random() < isolated / 2:
        out.append(Interval.point(ZERO))
        lo_closed = False
    for a, b in zip(bounds, bounds[1:]):
        last = b == ONE
        mode = "end" if last else rng.choices(["left", "right", "point"], [3, 2, isolated * 5])[0]
        if last:
            split_end = rng.random() < isolated
            out.append(Interval(a, b, lo_closed, not split_end))
            if split_end:
                out.append(Interval.point(ONE))
        elif mode == "left":
            out.append(Interval(a, b, lo_closed, False))
            lo_closed = True
        elif mode == "right":
            out.append(Interval(a, b, lo_closed, True))
            lo_closed = False
        else:
            out.append(Interval(a, b, lo_closed, False))
            out.append(Interval.point(b))
            lo_closed = False
    return out


def random_step_path(rng, n: int, k: int, cuts: int, monotone: bool = False,
                     pool: int = 4) -> StepPath:
    """A step path aligned to ``{j/k}`` whose values come from a small pool."""
    parts = random_partition(rng, k, cuts)
    values = [random_point(rng, n, -3, 3) for _ in range(pool)]
    if monotone:
        chain = [values[0]]
        for _ in range(pool - 1):
            chain.append(tuple(c + _increment(rng) for c in chain[-1]))
        values = chain
        picks = sorted(rng.randrange(pool) for _ in parts)
    else:
        picks = [rng.randrange(pool) for _ in parts]
    return StepPath(tuple((iv, values[p]) for iv, p in zip(parts, picks)))


def random_ir_step_path(rng, n, k, cuts) -> StepPath:
    """Monotone with every jump taken from the left: an ir-path by construction."""
    chosen = sorted(rng.sample(range(1, k), min(cuts, k - 1))) if k > 1 else []
    bounds = [ZERO] + [Fraction(j, k) for j in chosen] + [ONE]
    parts = [Interval(a, b, True, False) for a, b in zip(bounds, bounds[1:])]
    last = parts.pop()
    if rng.random() < 0.3:
        parts += [last, Interval.point(ONE)]
    else:
        parts.append(Interval(last.lo, ONE, True, True))
    v = random_point(rng, n, -3, 3)
    pieces = []
    for iv in parts:
        pieces.append((iv, v))
        v = tuple(c + _increment(rng) for c in v)
    return StepPath(tuple(pieces))


def random_monotone_map(rng, breakpoints: int) -> PLPath:
    """A non-decreasing PL map from [0, 1] into [0, 1]."""
    ts = random_times(rng, breakpoints - 2)
    us = sorted(random_rational(rng, 0, 1) for _ in ts)
    return PLPath(tuple((t, (u,)) for t, u in zip(ts, us)))
