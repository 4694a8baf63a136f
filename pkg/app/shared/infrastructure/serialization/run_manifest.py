import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from app.core.config import settings
from app.shared.infrastructure.serialization.canonical_json import dumps_canonical, write_text

logger = logging.getLogger(__name__)

MANIFEST_SUFFIX = ".manifest.json"


class OutputChecksum(BaseModel):
    path: str
    sha256: str


class RunManifest(BaseModel):
    """
    Tudo o que é preciso para reproduzir uma saída byte a byte.
    Sem carimbo de tempo: execuções idênticas geram manifestos idênticos.
    """
    command: str
    arguments: Dict[str, Any]
    seed: Optional[int] = None
    tool: str = Field(default_factory=lambda: settings.APP_NAME)
    version: str = Field(default_factory=lambda: settings.VERSION)
    outputs: List[OutputChecksum] = Field(default_factory=list)


def manifest_path(output: str) -> str:
    return str(Path(output)) + MANIFEST_SUFFIX


def write_manifest(manifest: RunManifest, output: str) -> str:
    """Grava `<output>.manifest.json` e retorna o caminho"""
    path = manifest_path(output)
    write_text(path, dumps_canonical(manifest.model_dump(mode="json")))
    logger.debug("Manifest written to %s", path)
    return path
