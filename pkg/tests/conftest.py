import pytest
from fractions import Fraction
from unittest.mock import MagicMock

from hypothesis import settings as hypothesis_settings

from app.modules.geometry.domain.entities.field_entity import field_new
from app.modules.geometry.domain.services.projective_space import ProjectiveSpace
from app.modules.multilevel.domain.services.construction import build
from app.modules.multilevel.domain.value_objects.multilevel_config_vo import MultilevelConfig


# First calls into galois JIT-compile, so per-example timing is not meaningful.
hypothesis_settings.register_profile("default_no_deadline", deadline=None)
hypothesis_settings.load_profile("default_no_deadline")


# ============================
# FIELDS / SPACES
# ============================

@pytest.fixture
def gf2():
    return field_new(2)


@pytest.fixture
def gf4():
    return field_new(4)


@pytest.fixture
def pg32(gf2):
    """PG(3, 2): 15 pontos, 35 retas, 15 planos"""
    return ProjectiveSpace(3, gf2)


# ============================
# MULTILEVEL SYSTEMS
# ============================

@pytest.fixture
def small_config():
    """k=3, q=2, d=2: 15 comitês de 10 processos, r = 3/5"""
    return MultilevelConfig.create(n=150, p="3/4", k=3, q=2, d=[2], r=["3/5"])


@pytest.fixture
def small_system(small_config):
    return build(small_config)


@pytest.fixture
def availability_config():
    """k=3, q=2, d=2: 15 comitês de 400 processos"""
    return MultilevelConfig.create(n=6000, p="3/4", k=3, q=2, d=[2], r=["3/5"])


@pytest.fixture
def availability_system(availability_config):
    return build(availability_config)


@pytest.fixture
def sampled_config():
    return MultilevelConfig.create(n=150, p="3/4", k=3, q=2, d=[2], r=["3/5"], delta=[3])


# ============================
# SYSTEM REPOSITORY
# ============================

@pytest.fixture
def mock_system_repository():
    repo = MagicMock()

    repo.save = MagicMock(return_value="0" * 64)
    repo.load = MagicMock()

    return repo


@pytest.fixture
def three_fifths():
    return Fraction(3, 5)
