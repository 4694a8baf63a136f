from fractions import Fraction

import pytest

from app.modules.multilevel.application.dtos.multilevel_dtos import BuildSystemDTO
from app.modules.multilevel.application.usecases.build_system_usecase import BuildSystemUseCase
from app.modules.multilevel.application.usecases.compute_metrics_usecase import (
    ComputeMetricsUseCase,
)
from app.modules.multilevel.application.usecases.optimality_sweep_usecase import (
    OptimalitySweepUseCase,
)
from app.modules.multilevel.domain.entities.committee_assignment_entity import CommitteeAssignment
from app.modules.multilevel.domain.entities.multilevel_system_entity import MultilevelSystem
from app.modules.multilevel.domain.exceptions.multilevel_exceptions import InvalidConfigException
from app.modules.multilevel.domain.services.construction import build
from app.modules.multilevel.domain.value_objects.multilevel_config_vo import MultilevelConfig
from app.modules.quorum.domain.entities.intersection_system_entity import IntersectionSystem
from app.modules.geometry.domain.exceptions.geometry_exceptions import NotPrimePowerException

QS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]


# ============================================================================
# BUILD
# ============================================================================

class TestBuildSystemUseCase:

    @pytest.fixture
    def usecase(self, mock_system_repository):
        return BuildSystemUseCase(mock_system_repository)

    def test_builds_without_saving(self, usecase, small_config, mock_system_repository):
        result = usecase.execute(BuildSystemDTO(config=small_config))

        assert result.level_sizes == [15]
        assert result.checksum is None
        mock_system_repository.save.assert_not_called()

    def test_saves_when_output_given(self, usecase, small_config, mock_system_repository):
        result = usecase.execute(BuildSystemDTO(config=small_config, output="system.json"))

        mock_system_repository.save.assert_called_once()
        system, location = mock_system_repository.save.call_args.args
        assert location == "system.json"
        assert system is result.system
        assert result.checksum == "0" * 64

    def test_sampled_variant(self, usecase, sampled_config):
        result = usecase.execute(BuildSystemDTO(config=sampled_config, variant="sampled", seed=3))
        assert result.system.variant == "sampled"
        assert result.level_sizes[0] <= 45

    def test_invalid_variant_seed_combination(self, usecase, small_config, mock_system_repository):
        with pytest.raises(InvalidConfigException):
            usecase.execute(BuildSystemDTO(config=small_config, seed=1))

        mock_system_repository.save.assert_not_called()


# ============================================================================
# METRICS
# ============================================================================

class TestComputeMetricsUseCase:

    def test_pg32_level(self, small_system):
        result = ComputeMetricsUseCase().execute(small_system)
        level = result.levels[0]

        assert result.committees == 15
        assert result.committee_size_min == result.committee_size_max == 10
        assert level.msg == 7
        assert level.load == "7/15"
        assert level.slash_formula == 3
        assert level.slash_measured.value == 3
        assert level.slash_measured.exact
        assert level.slash_witness_pair == 3
        assert level.process_slashability == 6
        assert level.process_formula_applies
        assert level.process_slashability_in_n == "6"
        assert level.upper_bound == "98/15"
        assert level.achieved_over_bound == "45/49"
        assert level.optimality_ratio == "45/49"
        assert level.msg_exponent == "1/2"
        assert level.in_optimality_class

    def test_dense_committee_system_leaves_optimality_class(self, small_config):
        # msg·carga = 14·14/15 contra 7·7/15 de PG_2(3, 2)
        committees = IntersectionSystem.create(
            range(15), [[c for c in range(15) if c != skip] for skip in range(15)]
        )
        system = MultilevelSystem(
            small_config, CommitteeAssignment.create(small_config.n, 15), (committees,)
        )

        level = ComputeMetricsUseCase().execute(system).levels[0]

        assert level.msg == 14
        assert level.load == "14/15"
        assert not level.in_optimality_class

    def test_large_example_rows(self):
        config = MultilevelConfig.create(
            n=2_000_000, p="0.75", k=7, q=2, d=[5, 6], r=["0.6", "0.6"]
        )
        result = ComputeMetricsUseCase(pair_budget=1_000_000, sampled_pairs=2000).execute(
            build(config), seed=1
        )

        assert [level.slash_formula for level in result.levels] == [15, 63]
        assert [level.slash_witness_pair for level in result.levels] == [15, 63]
        # 10795 quóruns excedem o orçamento: modo amostrado
        assert not result.levels[0].slash_measured.exact
        assert result.levels[0].slash_measured.value >= 15
        assert result.levels[1].slash_measured.value == 63
        # 2·10⁶ processos em 255 comitês: tamanhos desiguais
        assert result.levels[0].upper_bound is None

    def test_unequal_committees_use_generalized_bound(self):
        system = build(MultilevelConfig.create(n=152, p="3/4", k=3, q=2, d=[2], r=["3/5"]))
        level = ComputeMetricsUseCase().execute(system).levels[0]

        assert not level.process_formula_applies
        assert level.process_slashability == level.generalized_bound == 6
        assert level.upper_bound is None

    def test_is_deterministic(self, small_system):
        first = ComputeMetricsUseCase().execute(small_system, seed=5)
        second = ComputeMetricsUseCase().execute(small_system, seed=5)
        assert first.model_dump() == second.model_dump()


# ============================================================================
# OPTIMALITY SWEEP
# ============================================================================

class TestOptimalitySweepUseCase:

    def test_pg3_planes(self):
        rows = OptimalitySweepUseCase().execute(3, 2, QS)

        assert rows[0].ratio == "45/49"
        assert rows[-1].ratio_decimal > 0.996
        assert all(row.ratio == row.achieved_over_bound for row in rows)
        ratios = [Fraction(row.ratio) for row in rows]
        assert all(a < b < 1 for a, b in zip(ratios, ratios[1:]))

    def test_rejects_non_prime_power(self):
        with pytest.raises(NotPrimePowerException):
            OptimalitySweepUseCase().execute(3, 2, [2, 6])
