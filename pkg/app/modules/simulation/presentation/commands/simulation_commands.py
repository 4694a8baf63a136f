from app.modules.multilevel.infrastructure.repositories.json_system_repository import (
    JsonSystemRepository,
)
from app.modules.simulation.application.dtos.simulation_dtos import SimulationQueryDTO
from app.modules.simulation.application.usecases.run_equivocation_usecase import (
    RunEquivocationUseCase,
)
from app.modules.simulation.infrastructure.writers.csv_report_writer import render_slashing_csv
from app.shared.infrastructure.serialization.canonical_json import dumps_canonical
from app.shared.presentation.cli.arguments import (
    add_format_argument,
    add_output_argument,
    str_list,
)
from app.shared.presentation.cli.output import emit


def register(subparsers) -> None:
    parser = subparsers.add_parser("simulate", help="Simulação de equivocação sobre dois quóruns")
    parser.add_argument("system", help="Arquivo JSON gerado por build")
    parser.add_argument(
        "--strategy", dest="strategies", type=str_list, default=["minimal-pair"],
        help="minimal-pair, random-pair e/ou honest (separados por vírgula)",
    )
    parser.add_argument("--seed", type=int, required=True)
    parser.add_argument("--level", type=int, help="Todos os níveis quando ausente")
    parser.add_argument("--repeats", type=int, default=1)
    add_format_argument(parser)
    add_output_argument(parser)
    parser.set_defaults(handler=cmd_simulate)


def cmd_simulate(args) -> int:
    system = JsonSystemRepository().load(args.system)
    query = SimulationQueryDTO(
        strategies=args.strategies, seed=args.seed, level=args.level, repeats=args.repeats
    )
    reports = RunEquivocationUseCase().execute(system, query)

    if args.format == "csv":
        text = render_slashing_csv(reports)
    else:
        text = dumps_canonical([report.model_dump() for report in reports])
    emit(args, text, seed=args.seed)
    return 0
