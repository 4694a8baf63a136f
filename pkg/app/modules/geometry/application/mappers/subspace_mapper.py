from app.modules.geometry.application.dtos.pg_dtos import SubspaceDTO
from app.modules.geometry.domain.entities.subspace_entity import Subspace


class SubspaceMapper:

    @staticmethod
    def to_dto(index: int, subspace: Subspace, points: tuple) -> SubspaceDTO:
        return SubspaceDTO(
            index=index,
            dimension=subspace.dimension,
            basis=[list(row) for row in subspace.basis],
            points=list(points),
        )
