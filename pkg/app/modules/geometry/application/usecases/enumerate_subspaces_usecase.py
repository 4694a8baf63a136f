import logging
from typing import Optional

from app.modules.geometry.application.dtos.pg_dtos import PgListingDTO, PgQueryDTO
from app.modules.geometry.application.mappers.subspace_mapper import SubspaceMapper
from app.modules.geometry.domain.entities.field_entity import field_new
from app.modules.geometry.domain.services.projective_space import ProjectiveSpace

logger = logging.getLogger(__name__)


class EnumerateSubspacesUseCase:
    """
    Caso de uso para listar os subespaços de dimensão d de PG(k, q).

    Raises:
        SizeOverflowException: contagem acima do limite de enumeração
    """

    def __init__(self, enumeration_cap: Optional[int] = None):
        self.enumeration_cap = enumeration_cap

    def execute(self, query: PgQueryDTO) -> PgListingDTO:
        field = field_new(query.q)
        space = ProjectiveSpace(query.k, field, enumeration_cap=self.enumeration_cap)

        subspaces = space.subspaces(query.d)
        incidence = space.incidence(query.d)
        logger.info("Enumerated %d subspaces of PG(%d,%d), d=%d", len(subspaces), query.k, field.q, query.d)

        return PgListingDTO(
            k=query.k,
            q=field.q,
            d=query.d,
            count=len(subspaces),
            subspaces=[
                SubspaceMapper.to_dto(i, s, tuple(int(x) for x in incidence[i]))
                for i, s in enumerate(subspaces)
            ],
        )
