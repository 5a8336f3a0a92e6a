import itertools
import random
from fractions import Fraction as F

import pytest

from irpath import generate as gen
from irpath.checkers import concatenate, constant_path, example_ir_not_d, is_dpath, is_ir_path
from irpath.geometry import DimensionMismatch
from irpath.reachability import (
    NoWitness,
    ReachQuery,
    in_gamma_d,
    in_gamma_ir,
    witness_dpath,
    witness_irpath,
)


def q(x, y):
    return ReachQuery(x, y)


class TestGammaD:
    def test_ordered(self):
        assert in_gamma_d(q((0, 0), (1, 2)))

    def test_first_coordinate_drops(self):
        assert not in_gamma_d(q((0, 0), (-1, 2)))

    def test_reflexive(self):
        assert in_gamma_d(q((F(1, 3), 2), (F(1, 3), 2)))


class TestGammaIr:
    def test_ordered(self):
        assert in_gamma_ir(q((0, 0), (1, 2)))

    def test_backwards(self):
        assert not in_gamma_ir(q((1,), (0,)))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            ReachQuery((0,), (0, 1))

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_agree_on_small_grid(self, n):
        pts = list(itertools.product((-1, 0, 1), repeat=n))
        for x, y in itertools.product(pts, pts):
            assert in_gamma_d(q(x, y)) == in_gamma_ir(q(x, y))

    def test_agree_on_random_pairs(self):
        rng = random.Random(23)
        for _ in range(2000):
            n = rng.randint(1, 6)
            x = gen.random_point(rng, n, -2, 2)
            y = tuple(c + gen.random_rational(rng, -1, 3) for c in x)
            assert in_gamma_d(q(x, y)) == in_gamma_ir(q(x, y))


class TestWitnesses:
    def test_dpath_line(self):
        path = witness_dpath(q((0, 0), (1, 2)))
        assert is_dpath(path).verdict
        assert path.endpoints() == ((0, 0), (1, 2))

    def test_dpath_constant(self):
        assert witness_dpath(q((1, 1), (1, 1))) == constant_path((1, 1))

    def test_dpath_unreachable(self):
        with pytest.raises(NoWitness):
            witness_dpath(q((0,), (-1,)))

    def test_irpath_jump(self):
        path = witness_irpath(q((0, 0), (1, 1)))
        assert path == example_ir_not_d((0, 0), (1, 1))
        assert is_ir_path(path).verdict

    def test_irpath_constant(self):
        path = witness_irpath(q((2,), (2,)))
        assert path == constant_path((2,))
        assert is_ir_path(path).verdict

    def test_irpath_unreachable(self):
        with pytest.raises(NoWitness):
            witness_irpath(q((0, 1), (1, 0)))

    def test_soundness_and_composition(self):
        rng = random.Random(29)
        for _ in range(200):
            n = rng.randint(1, 4)
            x = gen.random_point(rng, n, -2, 2)
            y = tuple(c + abs(gen.random_rational(rng, -1, 1)) for c in x)
            z = tuple(c + abs(gen.random_rational(rng, -1, 1)) for c in y)
            d1, d2 = witness_dpath(q(x, y)), witness_dpath(q(y, z))
            joined = concatenate(d1, d2)
            assert is_dpath(joined).verdict and joined.endpoints() == (x, z)
            ir = witness_irpath(q(x, z))
            assert is_ir_path(ir).verdict and ir.endpoints() == (x, z)
            assert in_gamma_d(q(x, z)) and in_gamma_ir(q(x, z))
