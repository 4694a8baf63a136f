from typing import Any, Dict

from app.modules.multilevel.domain.entities.committee_assignment_entity import CommitteeAssignment
from app.modules.multilevel.domain.entities.multilevel_system_entity import MultilevelSystem
from app.modules.multilevel.domain.exceptions.multilevel_exceptions import InvalidConfigException
from app.modules.multilevel.domain.value_objects.multilevel_config_vo import MultilevelConfig
from app.modules.quorum.domain.entities.intersection_system_entity import IntersectionSystem
from app.shared.domain.value_objects.rational_vo import render_rational


class SystemMapper:
    """Converte entre MultilevelSystem e a forma JSON persistida"""

    @staticmethod
    def config_to_dict(config: MultilevelConfig) -> Dict[str, Any]:
        return {
            "n": config.n,
            "p": render_rational(config.p),
            "k": config.k,
            "q": config.q,
            "d": [level.d for level in config.levels],
            "r": [render_rational(level.r) for level in config.levels],
            "delta": list(config.deltas) if config.deltas is not None else None,
        }

    @classmethod
    def to_dict(cls, system: MultilevelSystem) -> Dict[str, Any]:
        return {
            "config": cls.config_to_dict(system.config),
            "committee_sizes": list(system.assignment.sizes),
            "variant": system.variant,
            "seed": system.seed,
            "levels": [
                {
                    "level": j,
                    "d": spec.d,
                    "r": render_rational(spec.r),
                    "quorums": [list(q) for q in committees.quorums],
                }
                for j, (spec, committees) in enumerate(
                    zip(system.config.levels, system.committee_systems), start=1
                )
            ],
        }

    @staticmethod
    def config_from_dict(data: Dict[str, Any]) -> MultilevelConfig:
        return MultilevelConfig.create(
            n=data["n"],
            p=data["p"],
            k=data["k"],
            q=data["q"],
            d=data["d"],
            r=data["r"],
            delta=data.get("delta"),
        )

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> MultilevelSystem:
        """
        Raises:
            InvalidConfigException: tamanhos de comitê ou de quórum incoerentes com a configuração
        """
        config = cls.config_from_dict(data["config"])
        assignment = CommitteeAssignment(tuple(data["committee_sizes"]))
        if assignment.n != config.n:
            raise InvalidConfigException(
                f"Comitês somam {assignment.n} processos, configuração declara n={config.n}"
            )

        ground = range(config.num_committees)
        system = MultilevelSystem(
            config=config,
            assignment=assignment,
            committee_systems=tuple(
                IntersectionSystem.create(ground, level["quorums"]) for level in data["levels"]
            ),
            variant=data["variant"],
            seed=data.get("seed"),
        )
        if not system.verify_quorum_sizes():
            raise InvalidConfigException("Quóruns com número de comitês diferente de (q^{d_j+1}-1)/(q-1)")
        return system
