from abc import ABC, abstractmethod

from app.modules.multilevel.domain.entities.multilevel_system_entity import MultilevelSystem


class SystemRepository(ABC):
    """Interface do Repository de sistemas multinível (Port)"""

    @abstractmethod
    def save(self, system: MultilevelSystem, location: str) -> str:
        """
        Persiste o sistema.

        Args:
            system: Sistema construído
            location: Destino (caminho do arquivo)

        Returns:
            str: SHA-256 do conteúdo gravado

        Raises:
            RepositoryException: Erro ao gravar
        """
        pass

    @abstractmethod
    def load(self, location: str) -> MultilevelSystem:
        """
        Carrega um sistema previamente salvo.

        Raises:
            RepositoryException: Arquivo ausente ou malformado
        """
        pass
