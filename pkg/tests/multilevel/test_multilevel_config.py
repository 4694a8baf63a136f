from fractions import Fraction

import pytest

from app.modules.multilevel.domain.entities.committee_assignment_entity import (
    CommitteeAssignment,
    equitable_partition,
)
from app.modules.multilevel.domain.exceptions.multilevel_exceptions import InvalidConfigException
from app.modules.multilevel.domain.value_objects.multilevel_config_vo import MultilevelConfig
from app.shared.domain.exceptions.domain_exceptions import InvalidArgumentsException


def make_config(**overrides) -> MultilevelConfig:
    params = dict(n=150, p="3/4", k=3, q=2, d=[2], r=["3/5"])
    params.update(overrides)
    return MultilevelConfig.create(**params)


# ============================================================================
# CONFIG
# ============================================================================

class TestMultilevelConfig:

    # -------- Criação válida --------

    def test_parses_rationals(self):
        config = make_config()
        assert config.p == Fraction(3, 4)
        assert config.level(1).r == Fraction(3, 5)

    def test_decimal_strings_are_exact(self):
        config = make_config(p="0.75", r=["0.6"])
        assert config.p == Fraction(3, 4)
        assert config.level(1).r == Fraction(3, 5)

    def test_large_example(self):
        config = make_config(n=2_000_000, k=7, d=[4, 5, 6], r=["0.6", "0.6", "0.6"])
        assert config.num_levels == 3
        assert config.num_committees == 255

    def test_p_equal_one_is_accepted(self):
        assert make_config(p=1).p == 1

    def test_immutability(self):
        config = make_config()
        with pytest.raises(Exception):
            config.n = 10

    def test_with_p(self):
        assert make_config().with_p(Fraction(4, 5)).p == Fraction(4, 5)

    # -------- Restrições --------

    @pytest.mark.parametrize("d", [1, 3])
    def test_rejects_d_outside_half_open_range(self, d):
        with pytest.raises(InvalidConfigException):
            make_config(d=[d])

    @pytest.mark.parametrize("r", ["1/2", "3/4", "4/5"])
    def test_rejects_r_outside_half_p(self, r):
        with pytest.raises(InvalidConfigException):
            make_config(r=[r])

    @pytest.mark.parametrize("p", ["1/2", "2/5", "11/10"])
    def test_rejects_p_outside_range(self, p):
        with pytest.raises(InvalidConfigException):
            make_config(p=p)

    def test_rejects_fewer_processes_than_committees(self):
        with pytest.raises(InvalidConfigException):
            make_config(n=14)

    def test_rejects_decreasing_levels(self):
        with pytest.raises(InvalidConfigException):
            make_config(n=255, k=7, d=[5, 4], r=["3/5", "3/5"])
        with pytest.raises(InvalidConfigException):
            make_config(n=255, k=7, d=[4, 5], r=["2/3", "3/5"])

    def test_rejects_mismatched_lengths(self):
        with pytest.raises(InvalidConfigException):
            make_config(d=[2], r=["3/5", "3/5"])

    def test_rejects_float_threshold(self):
        with pytest.raises(InvalidArgumentsException):
            make_config(r=[0.6])

    def test_rejects_malformed_rational(self):
        with pytest.raises(InvalidArgumentsException):
            make_config(r=["three fifths"])

    # -------- δ --------

    def test_accepts_deltas_within_limit(self):
        assert make_config(delta=[7]).deltas == (7,)

    @pytest.mark.parametrize("delta", [[0], [8], [3, 3]])
    def test_rejects_invalid_deltas(self, delta):
        with pytest.raises(InvalidConfigException):
            make_config(delta=delta)

    def test_rejects_decreasing_deltas(self):
        with pytest.raises(InvalidConfigException):
            make_config(n=255, k=7, d=[4, 5], r=["3/5", "3/5"], delta=[8, 4])


# ============================================================================
# COMMITTEE ASSIGNMENT
# ============================================================================

class TestEquitablePartition:

    def test_large_example(self):
        sizes = equitable_partition(2_000_000, 255)
        assert sizes.count(7844) == 35
        assert sizes.count(7843) == 220
        assert sizes[:35] == (7844,) * 35
        assert sum(sizes) == 2_000_000

    def test_exact_division(self):
        assert equitable_partition(6000, 15) == (400,) * 15

    def test_one_process_per_committee(self):
        assert equitable_partition(15, 15) == (1,) * 15

    def test_rejects_n_below_m(self):
        with pytest.raises(InvalidArgumentsException):
            equitable_partition(14, 15)

    def test_rejects_no_committees(self):
        with pytest.raises(InvalidArgumentsException):
            equitable_partition(10, 0)


class TestCommitteeAssignment:

    def test_contiguous_blocks(self):
        assignment = CommitteeAssignment.create(8, 3)
        assert assignment.sizes == (3, 3, 2)
        assert list(assignment.members(0)) == [1, 2, 3]
        assert list(assignment.members(1)) == [4, 5, 6]
        assert list(assignment.members(2)) == [7, 8]

    def test_committee_of(self):
        assignment = CommitteeAssignment.create(8, 3)
        assert [assignment.committee_of(i) for i in range(1, 9)] == [0, 0, 0, 1, 1, 1, 2, 2]

    def test_committee_of_rejects_unknown_identity(self):
        with pytest.raises(InvalidArgumentsException):
            CommitteeAssignment.create(8, 3).committee_of(9)

    def test_committee_size_requires_uniform(self):
        assert CommitteeAssignment.create(150, 15).committee_size == 10
        with pytest.raises(InvalidArgumentsException):
            CommitteeAssignment.create(152, 15).committee_size

    def test_rejects_unbalanced_sizes(self):
        with pytest.raises(InvalidArgumentsException):
            CommitteeAssignment((3, 1))

    def test_total(self):
        assert CommitteeAssignment.create(2_000_000, 255).n == 2_000_000
