"""Reachability by d-paths and by ir-paths, with witness constructors.

The two predicates are computed independently on purpose: ``in_gamma_d``
uses the componentwise order directly, ``in_gamma_ir`` asks whether ``y``
lies in the closure of ``{x}`` for the left-order topology.  Their
agreement is tested, never assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .checkers import constant_path, example_ir_not_d
from .geometry import PLPath, Path, Point, ZERO, ONE, as_point, check_dims, fmt_point
from .topology import in_closure


class NoWitness(ValueError):
    """The pair is not in the relation, so there is no path to construct."""


@dataclass(frozen=True)
class ReachQuery:
    x: Point
    y: Point

    def __post_init__(self):
        x, y = as_point(self.x), as_point(self.y)
        check_dims(x, y)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    def __str__(self):
        return "%s -> %s" % (fmt_point(self.x), fmt_point(self.y))


def in_gamma_d(q: ReachQuery) -> bool:
    return all(a <= b for a, b in zip(q.x, q.y))


def in_gamma_ir(q: ReachQuery) -> bool:
    return in_closure(q.y, q.x)


def witness_dpath(q: ReachQuery) -> Path:
    """The straight segment from x to y."""
    if not in_gamma_d(q):
        raise NoWitness(f"no d-path {q}")
    if q.x == q.y:
        return constant_path(q.x)
    return PLPath(((ZERO, q.x), (ONE, q.y)))


def witness_irpath(q: ReachQuery) -> Path:
    """Constant path if x == y, otherwise the jump-at-the-end step path."""
    if not in_gamma_ir(q):
        raise NoWitness(f"no ir-path {q}")
    if q.x == q.y:
        return constant_path(q.x)
    return example_ir_not_d(q.x, q.y)
