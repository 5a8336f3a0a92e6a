"""Finite topological spaces used as a brute-force oracle.

Finite chains and grids with lower-set (Alexandrov) topologies stand in for
ir-[0, 1] and ir-R^n.  Continuity is checked by listing opens and testing
every preimage, with no reasoning about orders.

Two bridges turn a path into a finite map:

* :func:`discretize` samples ``t = j/k`` into :class:`FiniteChain`.  This
  sees monotonicity but not what happens between samples.
* :func:`discretize_cells` also samples the open cells ``(j/k, (j+1)/k)``
  and uses the quotient topology that ir-[0, 1] induces on those
  ``2k + 1`` pieces (:class:`CellChain`).  For step paths whose breakpoints
  lie on the grid, continuity of this finite map is equivalent to
  ir-continuity of the path.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Hashable, Iterable, Iterator, Tuple

from .geometry import Path, StepPath, as_rational

MAX_POINTS = 64
MAX_K = 64


class OracleError(ValueError):
    pass


class FiniteSpace:
    """A finite set of points with an explicit family of open sets."""

    max_points = MAX_POINTS

    def __init__(self, points: Iterable[Hashable], opens: Iterable[Iterable[Hashable]]):
        self.points = tuple(points)
        if len(set(self.points)) != len(self.points):
            raise OracleError("duplicate points")
        if len(self.points) > self.max_points:
            raise OracleError(f"{len(self.points)} points exceeds the cap of {self.max_points}")
        self.opens = frozenset(frozenset(u) for u in opens)
        self._validate()

    def _validate(self):
        full = frozenset(self.points)
        if frozenset() not in self.opens or full not in self.opens:
            raise OracleError("opens must contain the empty set and the whole space")
        for u in self.opens:
            if not u <= full:
                raise OracleError(f"open set {set(u)} has points outside the space")
        for u, v in itertools.combinations(self.opens, 2):
            if u | v not in self.opens or u & v not in self.opens:
                raise OracleError("opens are not closed under union and intersection")

    def is_open(self, s) -> bool:
        return frozenset(s) in self.opens

    def generating_opens(self) -> Iterator[FrozenSet]:
        return iter(self.opens)

    def __len__(self):
        return len(self.points)


class FiniteChain(FiniteSpace):
    """``0 < 1 < ... < k`` whose opens are the initial segments."""

    max_points = MAX_K + 1

    def __init__(self, k: int):
        if not 1 <= k <= MAX_K:
            raise OracleError(f"chain length k={k} outside 1..{MAX_K}")
        self.k = k
        super().__init__(range(k + 1), (range(j) for j in range(k + 2)))

    def _validate(self):
        super()._validate()
        segments = {frozenset(range(j)) for j in range(self.k + 2)}
        if self.opens != segments:
            raise OracleError("chain opens must be exactly its initial segments")


class CellChain(FiniteSpace):
    """ir-[0, 1] collapsed onto grid points and open grid cells.

    Point ``2j`` stands for ``t = j/k`` and point ``2j + 1`` for the cell
    ``(j/k, (j+1)/k)``.  A set is open iff its preimage in ir-[0, 1] is, so
    the opens are the empty set, the segments ``0..2j-1`` (images of
    ``[0, j/k)``) and the whole space.
    """

    max_points = 2 * MAX_K + 1

    def __init__(self, k: int):
        if not 1 <= k <= MAX_K:
            raise OracleError(f"grid size k={k} outside 1..{MAX_K}")
        self.k = k
        opens = [range(0)] + [range(2 * j) for j in range(1, k + 1)] + [range(2 * k + 1)]
        super().__init__(range(2 * k + 1), opens)

    def time_of(self, index: int) -> Fraction:
        """A representative time for the point or cell ``index``."""
        return Fraction(index, 2 * self.k)


class FiniteGrid:
    """Product of finite chains of rational levels with the lower-set topology.

    Opens are generated by the boxes ``{p : p_i < m_i}``, i.e. products of
    initial segments of the level chains.  Every open is a union of such
    boxes, so continuity into a grid only needs the boxes.
    """

    def __init__(self, levels: Iterable[Iterable]):
        self.levels = tuple(tuple(sorted({as_rational(v) for v in lv})) for lv in levels)
        if not self.levels or any(not lv for lv in self.levels):
            raise OracleError("every coordinate needs at least one level")
        self.points = tuple(itertools.product(*self.levels))
        if len(self.points) > MAX_POINTS:
            raise OracleError(f"grid of {len(self.points)} points exceeds the cap of {MAX_POINTS}")
        self._index = [{v: j for j, v in enumerate(lv)} for lv in self.levels]

    @property
    def dim(self) -> int:
        return len(self.levels)

    def box(self, cuts: Tuple[int, ...]) -> FrozenSet:
        """Points whose level index is below ``cuts[i]`` in every coordinate."""
        return frozenset(
            p for p in self.points
            if all(self._index[i][c] < cut for i, (c, cut) in enumerate(zip(p, cuts)))
        )

    def boxes(self) -> Iterator[FrozenSet]:
        for cuts in itertools.product(*(range(len(lv) + 1) for lv in self.levels)):
            yield self.box(cuts)

    generating_opens = boxes

    def is_open(self, s) -> bool:
        """Down-closed in the product order."""
        s = frozenset(s)
        for p in s:
            for i, c in enumerate(p):
                j = self._index[i][c]
                if j > 0:
                    q = p[:i] + (self.levels[i][j - 1],) + p[i + 1:]
                    if q not in s:
                        return False
        return True

    def to_space(self) -> FiniteSpace:
        """Materialise every open set; small grids only."""
        opens = {frozenset()}
        for p in self.points:
            down = self.box(tuple(self._index[i][c] + 1 for i, c in enumerate(p)))
            opens |= {u | down for u in opens}
        return FiniteSpace(self.points, opens)

    def __len__(self):
        return len(self.points)


@dataclass
class FiniteMap:
    domain: object
    codomain: object
    mapping: Dict = field(default_factory=dict)

    def __post_init__(self):
        missing = [a for a in self.domain.points if a not in self.mapping]
        if missing:
            raise OracleError(f"map undefined on {missing}")
        targets = set(self.codomain.points)
        stray = [a for a in self.domain.points if self.mapping[a] not in targets]
        if stray:
            raise OracleError(f"map sends {stray} outside the codomain")

    def preimage(self, u) -> FrozenSet:
        return frozenset(a for a in self.domain.points if self.mapping[a] in u)


def is_continuous_finite(f: FiniteMap) -> bool:
    return all(f.domain.is_open(f.preimage(u)) for u in f.codomain.generating_opens())


def is_order_preserving(f: FiniteMap) -> bool:
    """Monotonicity of a map from a chain into a grid (componentwise)."""
    pts = f.domain.points
    return all(
        all(a <= b for a, b in zip(f.mapping[p], f.mapping[q]))
        for p, q in zip(pts, pts[1:])
    )


def closure_finite(s, space) -> FrozenSet:
    """Smallest closed superset of ``s``: remove the largest open missing ``s``."""
    s = frozenset(s)
    full = frozenset(space.points)
    if not s <= full:
        raise OracleError("subset has points outside the space")
    outside = full - s
    interior = frozenset().union(*(u for u in space.generating_opens() if u <= outside))
    return full - interior


def _grid_for(values) -> FiniteGrid:
    n = len(values[0])
    return FiniteGrid([v[i] for v in values] for i in range(n))


def discretize(path: Path, k: int) -> FiniteMap:
    """Sample ``path`` at ``t = j/k`` as a map from :class:`FiniteChain`."""
    chain = FiniteChain(k)
    mapping = {j: path.eval(Fraction(j, k)) for j in chain.points}
    return FiniteMap(chain, _grid_for(list(mapping.values())), mapping)


def is_grid_aligned(path: StepPath, k: int) -> bool:
    return all((b * k).denominator == 1 for iv, _ in path.pieces for b in (iv.lo, iv.hi))


def discretize_cells(path: Path, k: int) -> FiniteMap:
    """Sample grid points and open cells as a map from :class:`CellChain`.

    Requires a step path with every piece endpoint on ``{j/k}`` so that the
    path is constant on each open cell.
    """
    if not isinstance(path, StepPath):
        raise OracleError("the cell bridge is exact only for step paths")
    if not is_grid_aligned(path, k):
        raise OracleError(f"piece endpoints are not all multiples of 1/{k}")
    cells = CellChain(k)
    mapping = {c: path.eval(cells.time_of(c)) for c in cells.points}
    return FiniteMap(cells, _grid_for(list(mapping.values())), mapping)
