import csv
import io

from app.modules.geometry.application.dtos.pg_dtos import PgCountDTO, PgListingDTO, PgQueryDTO
from app.modules.geometry.application.usecases.count_subspaces_usecase import (
    CountSubspacesUseCase,
)
from app.modules.geometry.application.usecases.enumerate_subspaces_usecase import (
    EnumerateSubspacesUseCase,
)
from app.shared.infrastructure.serialization.canonical_json import dumps_canonical
from app.shared.presentation.cli.arguments import add_format_argument, add_output_argument
from app.shared.presentation.cli.output import emit


def register(subparsers) -> None:
    parser = subparsers.add_parser("pg", help="Contagem e enumeração de subespaços de PG(k, q)")
    parser.add_argument("action", choices=("count", "enum"))
    parser.add_argument("-k", type=int, required=True, help="Dimensão projetiva do espaço")
    parser.add_argument("-q", type=int, required=True, help="Ordem do corpo")
    parser.add_argument("-d", type=int, required=True, help="Dimensão dos subespaços")
    add_format_argument(parser)
    add_output_argument(parser)
    parser.set_defaults(handler=cmd_pg)


def _count_csv(result: PgCountDTO) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    fields = list(PgCountDTO.model_fields)
    writer.writerow(fields)
    writer.writerow([getattr(result, name) for name in fields])
    return buffer.getvalue()


def _listing_csv(result: PgListingDTO) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(("index", "dimension", "basis", "points"))
    for item in result.subspaces:
        writer.writerow(
            (
                item.index,
                item.dimension,
                ";".join(",".join(str(x) for x in row) for row in item.basis),
                " ".join(str(p) for p in item.points),
            )
        )
    return buffer.getvalue()


def cmd_pg(args) -> int:
    query = PgQueryDTO(k=args.k, q=args.q, d=args.d, format=args.format)

    if args.action == "count":
        result = CountSubspacesUseCase().execute(query)
        text = _count_csv(result) if query.format == "csv" else dumps_canonical(result.model_dump())
    else:
        result = EnumerateSubspacesUseCase().execute(query)
        text = _listing_csv(result) if query.format == "csv" else dumps_canonical(result.model_dump())

    emit(args, text)
    return 0
