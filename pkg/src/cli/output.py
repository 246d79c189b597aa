"""CSV and JSON writers for command outputs.

Every CSV starts with a ``# chebq <version> config=<hash>`` comment line and
a header row. JSON files use sorted keys and two-space indentation and carry
no timestamps, so reruns are byte-identical.
"""

import csv
import io
import json
import logging
from pathlib import Path
from typing import Any, Iterable, Mapping, Optional, Sequence, Union

from utils.config import __version__, config
from utils.exceptions import ConfigurationError, OutputError

logger = logging.getLogger(__name__)


def provenance_line(config_hash: str) -> str:
    return f"# chebq {__version__} config={config_hash}"


def format_csv(header: Sequence[str], rows: Iterable[Sequence[Any]], config_hash: str) -> str:
    buffer = io.StringIO()
    buffer.write(provenance_line(config_hash) + "\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([repr(float(v)) if isinstance(v, float) else v for v in row])
    return buffer.getvalue()


def _write_text(path: Union[str, Path], text: str) -> Path:
    target = config.resolve_output(path)
    try:
        target.write_text(text, encoding="utf-8")
    except OSError as e:
        raise OutputError(f"Cannot write {target}: {e}") from e
    logger.info("Wrote %s", target)
    return target


def write_csv(path: Optional[Union[str, Path]], header: Sequence[str], rows: Iterable[Sequence[Any]],
              config_hash: str) -> Optional[Path]:
    """Write a CSV file, or print it to stdout when ``path`` is None."""
    text = format_csv(header, rows, config_hash)
    if path is None:
        print(text, end="")
        return None
    return _write_text(path, text)


def write_json(path: Union[str, Path], payload: Mapping[str, Any]) -> Path:
    return _write_text(path, json.dumps(payload, sort_keys=True, indent=2) + "\n")


def read_json(path: Union[str, Path]) -> Any:
    source = config.resolve_output(path)
    try:
        text = source.read_text(encoding="utf-8")
    except OSError as e:
        raise OutputError(f"Cannot read {source}: {e}") from e
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigurationError(f"{source} is not valid JSON: {e}") from e
