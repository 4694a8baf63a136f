from app.modules.availability.application.dtos.availability_dtos import AvailabilityQueryDTO
from app.modules.availability.application.usecases.availability_monte_carlo_usecase import (
    AvailabilityMonteCarloUseCase,
)
from app.modules.multilevel.infrastructure.repositories.json_system_repository import (
    JsonSystemRepository,
)
from app.shared.infrastructure.serialization.canonical_json import dumps_canonical
from app.shared.presentation.cli.arguments import add_output_argument, str_list
from app.shared.presentation.cli.output import emit


def register(subparsers) -> None:
    parser = subparsers.add_parser("availability", help="Cota analítica e Monte Carlo de disponibilidade")
    parser.add_argument("system", help="Arquivo JSON gerado por build")
    parser.add_argument("--trials", type=int, required=True)
    parser.add_argument("--seed", type=int, required=True)
    parser.add_argument("--level", type=int, default=1)
    parser.add_argument("--mode", choices=("order_statistic", "bernoulli"), default="order_statistic")
    parser.add_argument("--p", dest="ps", type=str_list, default=[], help="Varredura em p, ex.: 0.7,0.75,0.8")
    add_output_argument(parser)
    parser.set_defaults(handler=cmd_availability)


def cmd_availability(args) -> int:
    system = JsonSystemRepository().load(args.system)
    query = AvailabilityQueryDTO(
        level=args.level, trials=args.trials, seed=args.seed, mode=args.mode, ps=args.ps
    )
    reports = AvailabilityMonteCarloUseCase().execute(system, query)

    payload = [report.model_dump() for report in reports]
    emit(args, dumps_canonical(payload[0] if len(payload) == 1 else payload), seed=args.seed)
    return 0
