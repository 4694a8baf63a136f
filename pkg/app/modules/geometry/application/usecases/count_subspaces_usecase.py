from app.modules.geometry.application.dtos.pg_dtos import PgCountDTO, PgQueryDTO
from app.modules.geometry.domain.entities.field_entity import field_new
from app.modules.geometry.domain.services.counting import (
    count_subspaces,
    count_subspaces_through_point,
    points_in_subspace,
)


class CountSubspacesUseCase:
    """Caso de uso para contar pontos e subespaços de PG(k, q)"""

    def execute(self, query: PgQueryDTO) -> PgCountDTO:
        # valida q (potência de primo, limite suportado)
        field = field_new(query.q)

        return PgCountDTO(
            k=query.k,
            q=field.q,
            d=query.d,
            points=str(points_in_subspace(field.q, query.k)),
            subspaces=str(count_subspaces(query.k, query.d, field.q)),
            points_per_subspace=str(points_in_subspace(field.q, query.d)),
            subspaces_through_point=str(
                count_subspaces_through_point(query.k, query.d, field.q)
            ),
        )
