import json
import logging
from pathlib import Path

from app.modules.multilevel.domain.entities.multilevel_system_entity import MultilevelSystem
from app.modules.multilevel.domain.repositories.system_repository import SystemRepository
from app.modules.multilevel.infrastructure.mappers.system_mapper import SystemMapper
from app.shared.domain.exceptions.domain_exceptions import DomainException
from app.shared.infrastructure.exceptions.repository_exception import RepositoryException
from app.shared.infrastructure.serialization.canonical_json import dumps_canonical, write_text

logger = logging.getLogger(__name__)


class JsonSystemRepository(SystemRepository):
    """Sistemas em arquivos JSON canônicos (bytes idênticos para entradas idênticas)"""

    def save(self, system: MultilevelSystem, location: str) -> str:
        try:
            checksum = write_text(location, dumps_canonical(SystemMapper.to_dict(system)))
        except OSError as e:
            raise RepositoryException("salvar sistema", str(e))

        logger.info("System saved to %s (sha256=%s)", location, checksum[:12])
        return checksum

    def load(self, location: str) -> MultilevelSystem:
        try:
            data = json.loads(Path(location).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as e:
            raise RepositoryException("carregar sistema", str(e))

        try:
            system = SystemMapper.from_dict(data)
        except (KeyError, TypeError, ValueError) as e:
            raise RepositoryException("carregar sistema", f"arquivo malformado ({e!r})")
        except DomainException as e:
            raise RepositoryException("carregar sistema", str(e))

        logger.debug("Loaded %r from %s", system, location)
        return system
