"""Exact rational convex-membership certificates."""

import random
from fractions import Fraction

import pytest

from grothsnp import convex_certificate


def reconstruct(weights, points):
    dim = len(points[0])
    return tuple(
        sum(w * p[i] for w, p in zip(weights, points)) for i in range(dim)
    )


class TestBasics:
    def test_cloud_point_is_inside(self):
        points = [(2, 0), (0, 2), (1, 5)]
        cert = convex_certificate(points, (1, 5))
        assert cert is not None
        assert sum(cert) == 1
        assert reconstruct(cert, points) == (1, 5)

    def test_midpoint_of_a_segment(self):
        cert = convex_certificate([(2, 0), (0, 2)], (1, 1))
        assert cert == (Fraction(1, 2), Fraction(1, 2))

    def test_point_off_the_segment(self):
        assert convex_certificate([(2, 0), (0, 2)], (2, 2)) is None

    def test_empty_cloud(self):
        assert convex_certificate([], (1, 1)) is None

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            convex_certificate([(1, 0), (0, 1, 0)], (1, 0))

    def test_rational_target(self):
        cert = convex_certificate(
            [(0, 0), (1, 0), (0, 1)], (Fraction(1, 3), Fraction(1, 3))
        )
        assert cert is not None
        assert reconstruct(cert, [(0, 0), (1, 0), (0, 1)]) == (
            Fraction(1, 3),
            Fraction(1, 3),
        )


class TestDegenerate:
    def test_duplicate_points(self):
        cert = convex_certificate([(1, 1), (1, 1), (3, 3)], (2, 2))
        assert cert is not None

    def test_single_point_cloud(self):
        assert convex_certificate([(4, 7)], (4, 7)) is not None
        assert convex_certificate([(4, 7)], (4, 8)) is None

    def test_collinear_cloud_off_line(self):
        points = [(0, 0), (1, 1), (2, 2), (3, 3)]
        assert convex_certificate(points, (2, 2)) is not None
        assert convex_certificate(points, (2, 1)) is None

    def test_interior_of_a_tetrahedron(self):
        points = [(0, 0, 0), (4, 0, 0), (0, 4, 0), (0, 0, 4)]
        inside = (1, 1, 1)
        outside = (3, 3, 3)
        assert convex_certificate(points, inside) is not None
        assert convex_certificate(points, outside) is None


class TestRandomized:
    def test_random_convex_mixes_are_certified(self):
        rng = random.Random(20240811)
        for _ in range(60):
            dim = rng.randint(1, 4)
            points = [
                tuple(rng.randint(0, 6) for _ in range(dim))
                for _ in range(rng.randint(1, 7))
            ]
            raws = [rng.randint(0, 9) for _ in points]
            if sum(raws) == 0:
                raws[0] = 1
            total = sum(raws)
            weights = [Fraction(a, total) for a in raws]
            target = reconstruct(weights, points)
            cert = convex_certificate(points, target)
            assert cert is not None
            assert sum(cert) == 1
            assert all(w >= 0 for w in cert)
            assert reconstruct(cert, points) == target

    def test_points_beyond_the_box_are_rejected(self):
        rng = random.Random(77)
        for _ in range(40):
            dim = rng.randint(1, 3)
            points = [
                tuple(rng.randint(0, 5) for _ in range(dim))
                for _ in range(rng.randint(1, 6))
            ]
            bigger = max(max(p) for p in points) + 1
            target = tuple(bigger for _ in range(dim))
            assert convex_certificate(points, target) is None
