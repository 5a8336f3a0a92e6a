"""Built-in corpus and the golden suite run by ``irpath goldens``."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .checkers import (
    example_ir_not_d,
    is_dpath,
    is_ir_path,
    is_standard_continuous,
    preimage_basis,
    preimage_open_box,
)
from .generate import random_monotone_pl, random_point
from .geometry import ONE, ZERO, Interval, IntervalSet, PLPath, StepPath
from .reachability import ReachQuery, in_gamma_d, in_gamma_ir
from .topology import BasisBox, is_open_in_ir_I, is_open_in_standard_I

SEED = 20201112

EXAMPLE_X = (Fraction(0), Fraction(0))
EXAMPLE_Y = (Fraction(1), Fraction(1))


def builtin_corpus() -> dict:
    return {
        "example": example_ir_not_d(EXAMPLE_X, EXAMPLE_Y),
        "linear": PLPath(((ZERO, (0, 0)), (ONE, (1, 2)))),
        "decreasing": PLPath(((ZERO, (1,)), (ONE, (0,)))),
        "interior-jump": StepPath((
            (Interval(0, Fraction(1, 2)), (0,)),
            (Interval(Fraction(1, 2), 1, False, True), (1,)),
        )),
        "staircase": StepPath((
            (Interval(0, Fraction(1, 4), True, False), (0, 0)),
            (Interval(Fraction(1, 4), Fraction(3, 4), True, False), (1, 0)),
            (Interval(Fraction(3, 4), 1), (1, 1)),
        )),
    }


@dataclass(frozen=True)
class Golden:
    name: str
    passed: bool
    detail: str


def prop1_grid():
    pairs = bad = 0
    for n in (1, 2, 3):
        pts = list(itertools.product((-1, 0, 1), repeat=n))
        for x, y in itertools.product(pts, pts):
            q = ReachQuery(x, y)
            pairs += 1
            bad += in_gamma_d(q) != in_gamma_ir(q)
    return Golden("prop1-grid", bad == 0, f"pairs={pairs} disagreements={bad}")


def reach_fuzz(count: int, seed: int = SEED, max_dim: int = 6) -> int:
    """Number of random pairs on which the two reachability predicates differ."""
    rng = random.Random(seed)
    bad = 0
    for _ in range(count):
        n = rng.randint(1, max_dim)
        x = random_point(rng, n, -3, 3)
        # bias toward comparable pairs so both verdicts get exercised
        if rng.random() < 0.5:
            y = tuple(c + abs(d) for c, d in zip(x, random_point(rng, n, -2, 2)))
        else:
            y = random_point(rng, n, -3, 3)
        q = ReachQuery(x, y)
        bad += in_gamma_d(q) != in_gamma_ir(q)
    return bad


def prop1_random(count=10_000):
    bad = reach_fuzz(count)
    return Golden("prop1-random", bad == 0, f"pairs={count} disagreements={bad}")


def thm1_random(count=200):
    rng = random.Random(SEED)
    bad = 0
    for _ in range(count):
        path = random_monotone_pl(rng, rng.randint(1, 4), rng.randint(2, 8))
        bad += not is_ir_path(path).verdict
    return Golden("thm1-random", bad == 0, f"paths={count} failures={bad}")


def _tf(v):
    return "true" if v else "false"


def example_goldens(path, x=EXAMPLE_X, y=EXAMPLE_Y):
    ir, d = is_ir_path(path).verdict, is_dpath(path).verdict
    cont = is_standard_continuous(path)
    out = [
        Golden("example-ir-path", ir, "is_ir_path=%s" % _tf(ir)),
        Golden("example-not-continuous", not cont, "is_standard_continuous=%s" % _tf(cont)),
        Golden("example-not-dpath", not d, "is_dpath=%s" % _tf(d)),
    ]
    two_sided = preimage_open_box(path, x, tuple(c + 1 for c in y))
    expected = IntervalSet.of(Interval.point(ONE))
    out.append(Golden(
        "example-standard-preimage",
        two_sided == expected and not is_open_in_standard_I(two_sided),
        "preimage=%s standard_open=%s" % (two_sided, _tf(is_open_in_standard_I(two_sided))),
    ))
    # a box missing x: the first case of the monotone-preimage argument
    below = preimage_basis(path, BasisBox(x))
    out.append(Golden("example-preimage-excludes-x", below.is_empty() and is_open_in_ir_I(below),
                      "preimage=%s" % below))
    # a box holding x but not y
    between = preimage_basis(path, BasisBox(tuple(c + Fraction(1, 2) for c in x)))
    out.append(Golden(
        "example-preimage-holds-x",
        between == IntervalSet.of(Interval(ZERO, ONE, True, False)) and is_open_in_ir_I(between),
        "preimage=%s" % between,
    ))
    return out


def degenerate_coordinate_golden():
    """With a coordinate where x_i = y_i the two-sided box misses the path."""
    x, y = (Fraction(0), Fraction(0)), (Fraction(1), Fraction(0))
    path = example_ir_not_d(x, y)
    pre = preimage_open_box(path, x, tuple(c + 1 for c in y))
    return Golden("example-degenerate-coordinate", pre.is_empty(), "preimage=%s" % pre)


def tampered_example() -> StepPath:
    """Negative control: the built-in jump path with its two values swapped."""
    return StepPath(((Interval(ZERO, ONE, True, False), EXAMPLE_Y), (Interval.point(ONE), EXAMPLE_X)))


def run_goldens(tamper: bool = False) -> list:
    path = tampered_example() if tamper else builtin_corpus()["example"]
    return [
        prop1_grid(),
        prop1_random(),
        thm1_random(),
        *example_goldens(path),
        degenerate_coordinate_golden(),
    ]
