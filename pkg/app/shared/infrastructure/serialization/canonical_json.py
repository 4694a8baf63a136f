import hashlib
import json
from pathlib import Path
from typing import Any, Union

import logging

logger = logging.getLogger(__name__)


def dumps_canonical(payload: Any) -> str:
    """
    Serializa em JSON canônico: chaves ordenadas, separadores compactos,
    newline final. Entradas iguais produzem bytes idênticos.
    """
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False) + "\n"


def sha256_hex(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def write_text(path: Union[str, Path], text: str) -> str:
    """Grava o texto (UTF-8) e retorna o SHA-256 dos bytes gravados."""
    path = Path(path)
    data = text.encode("utf-8")
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(data)
    logger.debug("Wrote %d bytes to %s", len(data), path)
    return sha256_hex(data)
