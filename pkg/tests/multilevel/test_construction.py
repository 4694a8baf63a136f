import pytest

from app.modules.geometry.domain.exceptions.geometry_exceptions import SizeOverflowException
from app.modules.multilevel.domain.entities.multilevel_system_entity import MultilevelSystem
from app.modules.multilevel.domain.exceptions.multilevel_exceptions import (
    InvalidConfigException,
    SamplingExhaustedException,
    UnknownLevelException,
)
from app.modules.multilevel.domain.services.construction import build
from app.modules.multilevel.domain.value_objects.multilevel_config_vo import MultilevelConfig
from app.modules.quorum.domain.services import metrics


def make_large_config(**overrides) -> MultilevelConfig:
    params = dict(n=2_000_000, p="0.75", k=7, q=2, d=[4, 5, 6], r=["0.6", "0.6", "0.6"])
    params.update(overrides)
    return MultilevelConfig.create(**params)


# ============================================================================
# FULL VARIANT
# ============================================================================

class TestBuildFull:

    def test_planes_of_pg32(self, small_system):
        assert small_system.level_sizes() == (15,)
        assert small_system.assignment.sizes == (10,) * 15
        assert small_system.variant == "full"
        assert small_system.seed is None

    def test_every_level_is_intersecting(self, small_system):
        assert metrics.verify_intersecting(small_system.level(1))

    def test_quorum_sizes(self, small_system):
        assert small_system.verify_quorum_sizes()

    def test_nesting_between_levels(self):
        config = MultilevelConfig.create(n=63, p="3/4", k=5, q=2, d=[3, 4], r=["3/5", "3/5"])
        system = build(config)

        assert system.level_sizes() == (651, 63)
        assert system.verify_quorum_sizes()
        assert system.verify_nesting()

    def test_equal_dimensions_share_the_same_system(self):
        config = MultilevelConfig.create(n=63, p="3/4", k=5, q=2, d=[4, 4], r=["3/5", "2/3"])
        system = build(config)
        assert system.level(1) is system.level(2)

    def test_unknown_level(self, small_system):
        with pytest.raises(UnknownLevelException):
            small_system.level(2)
        with pytest.raises(UnknownLevelException):
            small_system.level_spec(0)

    def test_rejects_seed(self, small_config):
        with pytest.raises(InvalidConfigException):
            build(small_config, seed=1)

    def test_rejects_unknown_variant(self, small_config):
        with pytest.raises(InvalidConfigException):
            build(small_config, variant="partial")

    def test_enumeration_cap(self):
        with pytest.raises(SizeOverflowException):
            build(make_large_config(), enumeration_cap=1000)

    def test_large_example_upper_levels(self):
        config = make_large_config(d=[5, 6], r=["0.6", "0.6"])
        system = build(config)
        assert system.level_sizes() == (10795, 255)
        assert system.assignment.sizes.count(7844) == 35

    @pytest.mark.slow
    def test_large_example_all_levels(self):
        system = build(make_large_config())
        assert system.level_sizes() == (97155, 10795, 255)
        assert system.verify_quorum_sizes()


# ============================================================================
# SAMPLED VARIANT
# ============================================================================

class TestBuildSampled:

    def test_requires_seed(self, sampled_config):
        with pytest.raises(InvalidConfigException):
            build(sampled_config, variant="sampled")

    def test_requires_deltas(self, small_config):
        with pytest.raises(InvalidConfigException):
            build(small_config, variant="sampled", seed=1)

    def test_entity_requires_seed(self, small_system):
        with pytest.raises(InvalidConfigException):
            MultilevelSystem(
                small_system.config,
                small_system.assignment,
                small_system.committee_systems,
                variant="sampled",
            )

    @pytest.mark.parametrize("seed", range(50))
    def test_subsystem_covering_and_slashability(self, sampled_config, small_system, seed):
        system = build(sampled_config, variant="sampled", seed=seed)
        level = system.level(1)

        assert level.is_subsystem_of(small_system.level(1))
        assert level.size <= 3 * 15
        assert (level.degrees >= 3).all()
        assert metrics.slashability_bruteforce(level) >= 3

    def test_deterministic_given_seed(self, sampled_config):
        first = build(sampled_config, variant="sampled", seed=42)
        second = build(sampled_config, variant="sampled", seed=42)
        assert first.level(1).quorums == second.level(1).quorums

    def test_all_subspaces_through_each_point(self, small_config, small_system):
        config = MultilevelConfig.create(n=150, p="3/4", k=3, q=2, d=[2], r=["3/5"], delta=[7])
        system = build(config, variant="sampled", seed=5)
        assert set(system.level(1).quorums) == set(small_system.level(1).quorums)

    def test_exhausted_retry_budget(self):
        config = MultilevelConfig.create(n=150, p="3/4", k=3, q=2, d=[2], r=["3/5"], delta=[7])
        with pytest.raises(SamplingExhaustedException) as exc:
            build(config, variant="sampled", seed=5, retry_factor=1)
        assert exc.value.level == 1
        assert 0 <= exc.value.point < 15

    def test_zero_retry_factor_is_not_replaced_by_default(self, sampled_config):
        with pytest.raises(SamplingExhaustedException) as exc:
            build(sampled_config, variant="sampled", seed=5, retry_factor=0)
        assert exc.value.point == 0

    @pytest.mark.slow
    def test_large_example_sampled(self):
        config = make_large_config(delta=[8, 8, 8])
        system = build(config, variant="sampled", seed=2024)

        assert all(size <= 8 * 255 for size in system.level_sizes())
        assert system.verify_quorum_sizes()
