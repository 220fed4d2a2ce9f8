import json
from typing import Any, Mapping, Optional

import click

from sasgames.errors import GameFormatError


def dumps(document: Any) -> str:
    """Canonical JSON text: sorted keys and a fixed indent so equal documents are byte-identical."""
    return json.dumps(document, indent=2, sort_keys=True) + "\n"


def emit(document: Any, output: Optional[str] = None):
    """Write `document` as JSON to `output`, or to stdout."""
    write_text(dumps(document), output)


def write_text(text: str, output: Optional[str] = None):
    if output is None or output == "-":
        click.echo(text, nl=False)
        return
    with open(output, "w", encoding="utf-8") as f:
        f.write(text)


def read_json(path: str) -> Mapping[str, Any]:
    """
    Raises:
        GameFormatError: If the file is not a JSON object.
    """
    with open(path, "r", encoding="utf-8") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise GameFormatError(f"{path}: {e.msg}", line=e.lineno) from e
    if not isinstance(data, dict):
        raise GameFormatError(f"{path}: expected a JSON object")
    return data
