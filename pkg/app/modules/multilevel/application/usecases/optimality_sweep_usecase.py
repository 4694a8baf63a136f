from fractions import Fraction
from typing import List, Sequence

from app.modules.geometry.domain.entities.field_entity import field_new
from app.modules.geometry.domain.services.counting import points_in_subspace
from app.modules.multilevel.application.dtos.multilevel_dtos import OptimalityRowDTO
from app.modules.multilevel.domain.services import slashing
from app.shared.domain.value_objects.rational_vo import render_decimal, render_rational


class OptimalitySweepUseCase:
    """
    Varre q para (k, d) fixos comparando a slashability atingida com a cota
    (2r-1)·c·msg·load. O fator (2r-1)·c se cancela, sobrando slash·m/msg².
    """

    def execute(self, k: int, d: int, qs: Sequence[int]) -> List[OptimalityRowDTO]:
        rows = []
        for q in qs:
            field_new(q)
            msg = slashing.quorum_size_formula(q, d)
            m = points_in_subspace(q, k)
            slash = slashing.slashability_formula(k, q, d)
            ratio = slashing.optimality_ratio(k, q, d)
            rows.append(
                OptimalityRowDTO(
                    k=k,
                    d=d,
                    q=q,
                    msg=msg,
                    committees=m,
                    slash=slash,
                    ratio=render_rational(ratio),
                    ratio_decimal=render_decimal(ratio),
                    achieved_over_bound=render_rational(Fraction(slash * m, msg * msg)),
                )
            )
        return rows
