import argparse
from typing import List


def int_list(value: str) -> List[int]:
    """'8,8,8' -> [8, 8, 8]"""
    try:
        return [int(item) for item in value.split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"lista de inteiros inválida: '{value}'")


def str_list(value: str) -> List[str]:
    """'3/5,0.7' -> ['3/5', '0.7']"""
    return [item.strip() for item in value.split(",") if item.strip()]


def add_output_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "-o", "--output",
        help="Arquivo de saída (grava também <saída>.manifest.json); stdout quando ausente",
    )


def add_format_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=("json", "csv"), default="json")
