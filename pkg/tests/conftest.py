from fractions import Fraction

from hypothesis import strategies as st

from irpath.geometry import Interval, IntervalSet, PLPath, StepPath

F = Fraction


def unit_rationals(max_den=12):
    return st.fractions(min_value=0, max_value=1, max_denominator=max_den)


@st.composite
def intervals(draw, max_den=12):
    a, b = sorted([draw(unit_rationals(max_den)), draw(unit_rationals(max_den))])
    if a == b:
        return Interval.point(a)
    return Interval(a, b, draw(st.booleans()), draw(st.booleans()))


@st.composite
def interval_sets(draw, max_parts=4):
    return IntervalSet.of(*draw(st.lists(intervals(), max_size=max_parts)))


def probe_times(*sets, extra=()):
    """Endpoints, midpoints between them and a fixed rational grid."""
    pts = {F(j, 48) for j in range(49)} | set(extra)
    for s in sets:
        pts |= set(s.boundary_points())
    pts = sorted(pts)
    return pts + [(a + b) / 2 for a, b in zip(pts, pts[1:])]


def pl(*bps):
    return PLPath(tuple((F(t), tuple(F(c) for c in v)) for t, v in bps))


def step(*pieces):
    return StepPath(tuple((iv, tuple(F(c) for c in v)) for iv, v in pieces))
