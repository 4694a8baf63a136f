import sys
from argparse import Namespace
from typing import Any, Dict, Optional

from app.shared.infrastructure.serialization.canonical_json import write_text
from app.shared.infrastructure.serialization.run_manifest import (
    OutputChecksum,
    RunManifest,
    write_manifest,
)

# chaves internas do argparse que não entram no manifesto
_INTERNAL = {"handler"}


def manifest_arguments(args: Namespace) -> Dict[str, Any]:
    return {key: value for key, value in sorted(vars(args).items()) if key not in _INTERNAL}


def record_output(args: Namespace, checksum: str, seed: Optional[int] = None) -> None:
    """Manifesto de uma saída já gravada em args.output"""
    manifest = RunManifest(
        command=args.command,
        arguments=manifest_arguments(args),
        seed=seed,
        outputs=[OutputChecksum(path=args.output, sha256=checksum)],
    )
    write_manifest(manifest, args.output)


def emit(args: Namespace, text: str, seed: Optional[int] = None) -> None:
    """Grava em args.output (com manifesto) ou escreve em stdout"""
    if getattr(args, "output", None):
        record_output(args, write_text(args.output, text), seed)
    else:
        sys.stdout.write(text)
