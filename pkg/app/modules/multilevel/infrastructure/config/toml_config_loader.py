"""
Leitura do arquivo de configuração (TOML) do sistema multinível.

    n = 6000
    p = "3/4"
    k = 3
    q = 2
    d = [2]
    r = ["3/5"]
    delta = [3]   # opcional
"""
import logging

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from pathlib import Path
from typing import List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, StrictInt, StrictStr, ValidationError

from app.modules.multilevel.domain.exceptions.multilevel_exceptions import InvalidConfigException
from app.modules.multilevel.domain.value_objects.multilevel_config_vo import MultilevelConfig
from app.shared.infrastructure.exceptions.repository_exception import RepositoryException

logger = logging.getLogger(__name__)

# racionais como string ("3/5", "0.6") ou inteiro; floats são recusados
ExactNumber = Union[StrictInt, StrictStr]


class MultilevelConfigFile(BaseModel):
    """Esquema do arquivo de configuração"""
    n: StrictInt = Field(..., ge=1)
    p: ExactNumber
    k: StrictInt = Field(..., ge=1)
    q: StrictInt = Field(..., ge=2)
    d: List[StrictInt] = Field(..., min_length=1)
    r: List[ExactNumber] = Field(..., min_length=1)
    delta: Optional[List[StrictInt]] = None

    model_config = ConfigDict(extra="forbid")

    def to_config(self) -> MultilevelConfig:
        return MultilevelConfig.create(
            n=self.n, p=self.p, k=self.k, q=self.q, d=self.d, r=self.r, delta=self.delta
        )


def parse_config(text: str, delta_override: Optional[List[int]] = None) -> MultilevelConfig:
    """
    Raises:
        InvalidConfigException: TOML inválido ou campos fora do esquema
    """
    try:
        data = tomllib.loads(text)
    except tomllib.TOMLDecodeError as e:
        raise InvalidConfigException(f"TOML inválido: {e}")

    if delta_override is not None:
        data["delta"] = list(delta_override)

    try:
        model = MultilevelConfigFile.model_validate(data)
    except ValidationError as e:
        raise InvalidConfigException(f"Configuração inválida: {e.errors(include_url=False)}")

    return model.to_config()


def load_config(path: Union[str, Path], delta_override: Optional[List[int]] = None) -> MultilevelConfig:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise RepositoryException("ler configuração", str(e))

    config = parse_config(text, delta_override)
    logger.debug("Loaded config from %s: %s", path, config)
    return config
