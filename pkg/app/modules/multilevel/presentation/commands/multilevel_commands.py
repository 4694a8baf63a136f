import csv
import io

from app.modules.multilevel.application.dtos.multilevel_dtos import BuildSystemDTO, OptimalityRowDTO
from app.modules.multilevel.application.usecases.build_system_usecase import BuildSystemUseCase
from app.modules.multilevel.application.usecases.compute_metrics_usecase import (
    ComputeMetricsUseCase,
)
from app.modules.multilevel.application.usecases.optimality_sweep_usecase import (
    OptimalitySweepUseCase,
)
from app.modules.multilevel.infrastructure.config.toml_config_loader import load_config
from app.modules.multilevel.infrastructure.mappers.system_mapper import SystemMapper
from app.modules.multilevel.infrastructure.repositories.json_system_repository import (
    JsonSystemRepository,
)
from app.shared.infrastructure.serialization.canonical_json import dumps_canonical
from app.shared.presentation.cli.arguments import (
    add_format_argument,
    add_output_argument,
    int_list,
)
from app.shared.presentation.cli.output import emit, record_output

DEFAULT_QS = "2,3,4,5,7,8,9,11,13,16"


def register(subparsers) -> None:
    build = subparsers.add_parser("build", help="Constrói o sistema multinível a partir da configuração")
    build.add_argument("config", help="Arquivo TOML (n, p, k, q, d, r, delta)")
    build.add_argument("--variant", choices=("full", "sampled"), default="full")
    build.add_argument("--seed", type=int, help="Semente (obrigatória na variante amostrada)")
    build.add_argument("--delta", type=int_list, help="δ_j por nível, ex.: 8,8,8")
    add_output_argument(build)
    build.set_defaults(handler=cmd_build)

    metrics = subparsers.add_parser("metrics", help="Métricas por nível de um sistema salvo")
    metrics.add_argument("system", help="Arquivo JSON gerado por build")
    metrics.add_argument("--seed", type=int, default=0, help="Semente do modo amostrado de pares")
    metrics.add_argument("--pair-budget", type=int, help="Orçamento da força bruta")
    metrics.add_argument("--pairs", type=int, help="Pares sorteados acima do orçamento")
    add_output_argument(metrics)
    metrics.set_defaults(handler=cmd_metrics)

    optimality = subparsers.add_parser("optimality", help="Razão de otimalidade ao longo de q")
    optimality.add_argument("-k", type=int, required=True)
    optimality.add_argument("-d", type=int, required=True)
    optimality.add_argument("--q", dest="qs", type=int_list, default=int_list(DEFAULT_QS))
    add_format_argument(optimality)
    add_output_argument(optimality)
    optimality.set_defaults(handler=cmd_optimality)


def cmd_build(args) -> int:
    config = load_config(args.config, delta_override=args.delta)
    repository = JsonSystemRepository()
    result = BuildSystemUseCase(repository).execute(
        BuildSystemDTO(config=config, variant=args.variant, seed=args.seed, output=args.output)
    )

    if args.output:
        record_output(args, result.checksum, seed=args.seed)
    else:
        emit(args, dumps_canonical(SystemMapper.to_dict(result.system)))
    return 0


def cmd_metrics(args) -> int:
    system = JsonSystemRepository().load(args.system)
    result = ComputeMetricsUseCase(pair_budget=args.pair_budget, sampled_pairs=args.pairs).execute(
        system, seed=args.seed
    )
    emit(args, dumps_canonical(result.model_dump()), seed=args.seed)
    return 0


def _optimality_csv(rows) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    fields = list(OptimalityRowDTO.model_fields)
    writer.writerow(fields)
    for row in rows:
        writer.writerow([getattr(row, name) for name in fields])
    return buffer.getvalue()


def cmd_optimality(args) -> int:
    rows = OptimalitySweepUseCase().execute(args.k, args.d, args.qs)
    if args.format == "csv":
        text = _optimality_csv(rows)
    else:
        text = dumps_canonical([row.model_dump() for row in rows])
    emit(args, text)
    return 0
