import random

import numpy as np
import pytest
from hypothesis import given, settings as hypothesis_settings, strategies as st
from scipy import stats

from app.core.config import settings
from app.modules.geometry.domain.entities.field_entity import field_new
from app.modules.geometry.domain.entities.subspace_entity import ProjectivePoint, Subspace
from app.modules.geometry.domain.exceptions.geometry_exceptions import (
    DimensionMismatchException,
    InvalidPointException,
    SizeOverflowException,
)
from app.modules.geometry.domain.services.counting import (
    count_subspaces,
    count_subspaces_through_point,
    gaussian_binomial,
    points_in_subspace,
)
from app.modules.geometry.domain.services.projective_space import (
    ProjectiveSpace,
    enumerate_points,
    enumerate_subspaces,
    sample_subspace_containing,
)
from app.shared.domain.exceptions.domain_exceptions import InvalidArgumentsException


def exhaustive_cases():
    cases = [(k, d, q) for q in (2, 3) for k in range(0, 5) for d in range(0, k + 1)]
    cases += [(3, d, q) for q in (4, 5) for d in range(0, 3)]
    return cases


# ============================================================================
# COUNTING
# ============================================================================

class TestCounting:

    def test_gaussian_binomial_large_example(self):
        assert gaussian_binomial(8, 5, 2) == 97155
        assert gaussian_binomial(8, 6, 2) == 10795
        assert gaussian_binomial(8, 7, 2) == 255

    def test_gaussian_binomial_edges(self):
        assert gaussian_binomial(5, 0, 3) == 1
        assert gaussian_binomial(5, 5, 3) == 1
        assert gaussian_binomial(4, 2, 2) == 35

    def test_gaussian_binomial_symmetry(self):
        for s in range(1, 7):
            for r in range(0, s + 1):
                assert gaussian_binomial(s, r, 3) == gaussian_binomial(s, s - r, 3)

    def test_gaussian_binomial_rejects_r_above_s(self):
        with pytest.raises(InvalidArgumentsException):
            gaussian_binomial(2, 3, 2)

    def test_points_in_subspace(self):
        assert points_in_subspace(2, 3) == 15
        assert points_in_subspace(3, 2) == 13
        assert points_in_subspace(2, -1) == 0

    def test_subspaces_through_point(self):
        # cada ponto de PG(3, 2) está em 7 planos e 7 retas
        assert count_subspaces_through_point(3, 2, 2) == 7
        assert count_subspaces_through_point(3, 1, 2) == 7

    def test_count_rejects_d_above_k(self):
        with pytest.raises(InvalidArgumentsException):
            count_subspaces(3, 4, 2)


# ============================================================================
# POINTS
# ============================================================================

class TestPoints:

    def test_pg32_has_15_points(self, gf2):
        assert len(enumerate_points(3, gf2)) == 15

    def test_pg23_has_13_points(self):
        assert len(enumerate_points(2, field_new(3))) == 13

    def test_points_are_normalized_and_distinct(self):
        points = enumerate_points(2, field_new(4))
        assert len(set(points)) == 21
        for point in points:
            lead = next(c for c in point.coords if c != 0)
            assert lead == 1

    def test_pg0_has_one_point(self, gf2):
        assert len(enumerate_points(0, gf2)) == 1

    def test_point_index_is_a_bijection(self, pg32):
        for index, point in enumerate(pg32.points()):
            assert pg32.point_index(point) == index
            assert pg32.point(index) == point

    def test_normalize_scales_leading_entry(self):
        gf3 = field_new(3)
        assert ProjectivePoint.normalize(gf3, (0, 2, 1)).coords == (0, 1, 2)

    def test_zero_vector_is_not_a_point(self, gf2):
        with pytest.raises(InvalidPointException):
            ProjectivePoint(gf2, (0, 0, 0))

    def test_unnormalized_point_is_rejected(self):
        with pytest.raises(InvalidPointException):
            ProjectivePoint(field_new(3), (2, 1))

    def test_point_index_rejects_other_space(self, pg32, gf2):
        with pytest.raises(DimensionMismatchException):
            pg32.point_index(ProjectivePoint(gf2, (1, 0, 0)))


# ============================================================================
# ENUMERATION
# ============================================================================

class TestEnumerateSubspaces:

    @pytest.mark.parametrize("k,d,q", exhaustive_cases())
    def test_count_matches_gaussian_binomial(self, k, d, q):
        subspaces = enumerate_subspaces(k, d, field_new(q))
        assert len(subspaces) == gaussian_binomial(k + 1, d + 1, q)
        assert len(set(subspaces)) == len(subspaces)
        assert all(s.dimension == d for s in subspaces)

    def test_pg32_lines_and_planes(self, pg32):
        assert len(pg32.subspaces(1)) == 35
        assert len(pg32.subspaces(2)) == 15

    def test_top_dimension_is_the_whole_space(self, pg32, gf2):
        assert pg32.subspaces(3) == [Subspace.full(gf2, 3)]

    def test_pg0_single_subspace(self, gf2):
        assert len(enumerate_subspaces(0, 0, gf2)) == 1

    def test_enumeration_is_deterministic(self, gf2):
        assert enumerate_subspaces(3, 1, gf2) == enumerate_subspaces(3, 1, gf2)

    def test_rejects_dimension_out_of_range(self, pg32):
        with pytest.raises(InvalidArgumentsException):
            pg32.subspaces(4)

    def test_refuses_above_cap(self, gf2):
        space = ProjectiveSpace(7, gf2, enumeration_cap=1000)
        with pytest.raises(SizeOverflowException) as exc:
            space.subspaces(4)
        assert exc.value.requested == 97155
        assert exc.value.limit == 1000

    def test_zero_cap_is_honored(self, gf2, mocker):
        mocker.patch.object(settings, "ENUMERATION_CAP", 10_000_000)
        space = ProjectiveSpace(2, gf2, enumeration_cap=0)
        with pytest.raises(SizeOverflowException) as exc:
            space.subspaces(1)
        assert exc.value.limit == 0

    def test_default_cap_comes_from_settings(self, gf2, mocker):
        mocker.patch.object(settings, "ENUMERATION_CAP", 5)
        with pytest.raises(SizeOverflowException):
            ProjectiveSpace(2, gf2).subspaces(1)

    def test_level3_of_pg72(self, gf2):
        space = ProjectiveSpace(7, gf2)
        assert len(space.subspaces(6)) == 255

    @pytest.mark.slow
    def test_level1_of_pg72(self, gf2):
        space = ProjectiveSpace(7, gf2)
        incidence = space.incidence(4)
        assert incidence.shape == (97155, 31)


# ============================================================================
# INCIDENCE
# ============================================================================

class TestIncidence:

    def test_rows_match_subspace_points(self, pg32):
        subspaces = pg32.subspaces(1)
        incidence = pg32.incidence(1)
        for row, subspace in zip(incidence, subspaces):
            assert tuple(int(x) for x in row) == pg32.subspace_point_indices(subspace)

    def test_shape_and_regularity(self):
        space = ProjectiveSpace(3, field_new(3))
        incidence = space.incidence(2)
        assert incidence.shape == (40, 13)
        degrees = np.bincount(incidence.ravel(), minlength=40)
        # cada ponto está em [3 choose 2]_3 = 13 planos
        assert (degrees == count_subspaces_through_point(3, 2, 3)).all()

    def test_rows_are_sorted(self, pg32):
        incidence = pg32.incidence(2)
        assert (np.diff(incidence, axis=1) > 0).all()


# ============================================================================
# SUBSPACE OPERATIONS
# ============================================================================

class TestSubspace:

    def test_from_vectors_canonicalizes(self, gf2):
        a = Subspace.from_vectors(gf2, 3, [(1, 1, 0, 0), (0, 1, 0, 1)])
        b = Subspace.from_vectors(gf2, 3, [(0, 1, 0, 1), (1, 0, 0, 1)])
        assert a == b
        assert hash(a) == hash(b)

    @hypothesis_settings(max_examples=50, deadline=None)
    @given(st.integers(min_value=0, max_value=10_000))
    def test_canonical_under_row_permutations(self, seed):
        field = field_new(3)
        rng = random.Random(seed)
        rows = [[rng.randrange(3) for _ in range(5)] for _ in range(3)]
        shuffled = rows[:]
        rng.shuffle(shuffled)
        assert Subspace.from_vectors(field, 4, rows) == Subspace.from_vectors(field, 4, shuffled)

    def test_dependent_vectors_collapse(self, gf2):
        s = Subspace.from_vectors(gf2, 3, [(1, 0, 0, 0), (1, 0, 0, 0), (0, 0, 0, 0)])
        assert s.dimension == 0

    def test_empty_subspace(self, gf2):
        empty = Subspace.empty(gf2, 3)
        assert empty.dimension == -1
        assert empty.points() == []

    def test_rejects_non_rref_basis(self, gf2):
        with pytest.raises(DimensionMismatchException):
            Subspace(gf2, 2, ((1, 1, 0), (1, 0, 1)))

    def test_contains(self, gf2):
        plane = Subspace.from_vectors(gf2, 3, [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)])
        assert plane.contains(ProjectivePoint(gf2, (1, 1, 1, 0)))
        assert not plane.contains(ProjectivePoint(gf2, (0, 0, 0, 1)))

    def test_points_of_a_plane(self, gf2):
        plane = Subspace.from_vectors(gf2, 3, [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)])
        points = plane.points()
        assert len(points) == 7
        assert all(p.coords[3] == 0 for p in points)

    def test_two_planes_of_pg32_meet_in_a_line(self, pg32):
        planes = pg32.subspaces(2)
        for other in planes[1:]:
            assert planes[0].intersection(other).dimension == 1

    def test_disjoint_lines_of_pg32(self, gf2):
        first = Subspace.from_vectors(gf2, 3, [(1, 0, 0, 0), (0, 1, 0, 0)])
        second = Subspace.from_vectors(gf2, 3, [(0, 0, 1, 0), (0, 0, 0, 1)])
        assert first.intersection(second).is_empty()

    def test_intersection_with_full_space(self, pg32, gf2):
        line = pg32.subspaces(1)[5]
        assert line.intersection(Subspace.full(gf2, 3)) == line

    def test_intersection_across_spaces_raises(self, gf2):
        with pytest.raises(DimensionMismatchException):
            Subspace.full(gf2, 3).intersection(Subspace.full(gf2, 2))

    @pytest.mark.parametrize("k,d", [(3, 2), (4, 3), (5, 3), (7, 4), (7, 5), (7, 6)])
    def test_sharpness_pair_meets_in_dimension_2d_minus_k(self, gf2, k, d):
        space = ProjectiveSpace(k, gf2)
        first, second = space.sharpness_pair(d)
        meet = first.intersection(second)
        assert meet.dimension == 2 * d - k
        shared = set(space.subspace_point_indices(first)) & set(space.subspace_point_indices(second))
        assert len(shared) == points_in_subspace(2, 2 * d - k)


# ============================================================================
# EXHAUSTIVE INVARIANTS
# ============================================================================

SMALL_SPACES = [(k, d, q) for q in (2, 3) for k in range(0, 5) for d in range(0, k + 1)]


def intersection_dimensions(space: ProjectiveSpace, d: int) -> np.ndarray:
    """Dimensão projetiva de S ∩ T para todo par (S, T), -1 quando vazia"""
    incidence = space.incidence(d)
    matrix = np.zeros((len(incidence), space.num_points), dtype=np.int32)
    np.put_along_axis(matrix, incidence, 1, axis=1)
    shared = matrix @ matrix.T

    by_count = {points_in_subspace(space.q, e): e for e in range(0, d + 1)}
    by_count[0] = -1
    return np.vectorize(by_count.__getitem__)(shared)


class TestExhaustiveInvariants:

    @pytest.mark.parametrize("k,d,q", SMALL_SPACES)
    def test_every_subspace_has_expected_point_count(self, k, d, q):
        space = ProjectiveSpace(k, field_new(q))
        expected = points_in_subspace(q, d)

        for subspace in space.subspaces(d):
            vectors = subspace.point_vectors()
            assert len(np.unique(vectors, axis=0)) == expected

        incidence = space.incidence(d)
        assert all(len(set(row.tolist())) == expected for row in incidence)

    @pytest.mark.parametrize("k,d,q", SMALL_SPACES)
    def test_pairwise_intersection_dimension(self, k, d, q):
        space = ProjectiveSpace(k, field_new(q))
        dimensions = intersection_dimensions(space, d)

        assert dimensions.min() >= 2 * d - k
        if 2 * d >= k:
            assert dimensions.min() == 2 * d - k


# ============================================================================
# SAMPLING
# ============================================================================

class TestSampleSubspaceContaining:

    def test_contains_point_and_has_dimension(self, pg32):
        rng = np.random.default_rng(7)
        for point in pg32.points():
            s = pg32.sample_subspace_containing(point, 2, rng)
            assert s.dimension == 2
            assert s.contains(point)

    def test_deterministic_given_seed(self, pg32):
        point = pg32.point(3)
        a = pg32.sample_subspace_containing(point, 1, np.random.default_rng(11))
        b = pg32.sample_subspace_containing(point, 1, np.random.default_rng(11))
        assert a == b

    def test_uniform_over_planes_through_point(self, pg32):
        rng = np.random.default_rng(2024)
        point = pg32.point(0)
        counts = {}
        for _ in range(7000):
            s = pg32.sample_subspace_containing(point, 2, rng)
            counts[s] = counts.get(s, 0) + 1

        assert len(counts) == 7
        statistic, _ = stats.chisquare(list(counts.values()))
        assert statistic < stats.chi2.ppf(0.999, 6)

    def test_full_dimension_returns_whole_space(self, gf2):
        point = ProjectivePoint(gf2, (0, 1, 0))
        s = sample_subspace_containing(point, 2, np.random.default_rng(0))
        assert s == Subspace.full(gf2, 2)

    def test_rejects_dimension_zero(self, pg32):
        with pytest.raises(InvalidArgumentsException):
            pg32.sample_subspace_containing(pg32.point(0), 0, np.random.default_rng(0))
