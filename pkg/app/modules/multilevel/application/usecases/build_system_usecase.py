import logging
from typing import Optional

from app.modules.multilevel.application.dtos.multilevel_dtos import BuildResultDTO, BuildSystemDTO
from app.modules.multilevel.domain.repositories.system_repository import SystemRepository
from app.modules.multilevel.domain.services.construction import build

logger = logging.getLogger(__name__)


class BuildSystemUseCase:
    """Caso de uso para construir (e opcionalmente persistir) um sistema multinível."""

    def __init__(
        self,
        system_repository: Optional[SystemRepository] = None,
        enumeration_cap: Optional[int] = None,
    ) -> None:
        self._system_repository = system_repository
        self._enumeration_cap = enumeration_cap

    def execute(self, dto: BuildSystemDTO) -> BuildResultDTO:
        """
        Executa a construção.

        Args:
            dto: Configuração, variante, semente e destino opcional

        Returns:
            BuildResultDTO: Sistema, tamanhos por nível e checksum (quando salvo)

        Raises:
            InvalidConfigException: Variante/semente incoerentes
            SizeOverflowException: Enumeração acima do limite
            SamplingExhaustedException: Amostragem sem sucesso
        """
        system = build(
            dto.config,
            variant=dto.variant,
            seed=dto.seed,
            enumeration_cap=self._enumeration_cap,
        )

        checksum = None
        if dto.output and self._system_repository:
            checksum = self._system_repository.save(system, dto.output)

        return BuildResultDTO(
            system=system,
            level_sizes=list(system.level_sizes()),
            checksum=checksum,
        )
