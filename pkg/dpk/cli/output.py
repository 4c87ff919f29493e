# dpk/cli/output.py
import io
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Union

import yaml
from pydantic import BaseModel, Field

from .. import __version__
from ..config import get_settings
from ..errors import ArgumentError
from ..mcsim import atomic_write
from .svg import render_svg

Cell = Union[float, int, str]


class RunConfig(BaseModel):
    command: str
    parameters: Dict[str, Any] = Field(default_factory=dict)
    output: Literal["csv", "json", "svg"] = "csv"
    output_path: Optional[str] = None
    seed: Optional[int] = None
    tolerance: Optional[float] = Field(default=None, gt=0)


def load_run_config(path: str) -> RunConfig:
    """A JSON document emitted by --output json, or a YAML/JSON RunConfig."""
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = yaml.safe_load(text) if path.endswith((".yaml", ".yml")) else json.loads(text)
    except (ValueError, yaml.YAMLError) as e:
        raise ArgumentError(f"cannot parse config {path}: {e}") from None
    if not isinstance(data, dict):
        raise ArgumentError(f"config {path} must be a mapping")
    if "config" in data and isinstance(data["config"], dict):
        data = data["config"]
    return RunConfig.model_validate(data)


@dataclass
class Table:
    columns: List[str]
    rows: List[List[Cell]] = field(default_factory=list)
    title: str = ""
    notes: List[str] = field(default_factory=list)

    def add(self, *cells: Cell) -> None:
        self.rows.append(list(cells))


def _fmt(cell: Cell) -> str:
    if isinstance(cell, bool):
        return "1" if cell else "0"
    if isinstance(cell, int):
        return str(cell)
    if isinstance(cell, float):
        return "%.17g" % cell
    return str(cell)


def _header(run: RunConfig) -> List[str]:
    return [
        f"# command={run.command}",
        f"# version={__version__}",
        f"# seed={'' if run.seed is None else run.seed}",
        f"# parameters={json.dumps(run.parameters, sort_keys=True)}",
        f"# tolerances={json.dumps(get_settings().tolerances(), sort_keys=True)}",
    ]


def render_csv(table: Table, run: RunConfig) -> str:
    buf = io.StringIO()
    for line in _header(run):
        buf.write(line + "\n")
    for note in table.notes:
        buf.write(f"# note={note}\n")
    buf.write(",".join(table.columns) + "\n")
    for row in table.rows:
        buf.write(",".join(_fmt(c) for c in row) + "\n")
    return buf.getvalue()


def render_json(table: Table, run: RunConfig) -> str:
    doc = {
        "config": run.model_dump(),
        "version": __version__,
        "tolerances": get_settings().tolerances(),
        "title": table.title,
        "columns": table.columns,
        "rows": table.rows,
        "notes": table.notes,
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def render(table: Table, run: RunConfig) -> str:
    if run.output == "json":
        return render_json(table, run)
    if run.output == "svg":
        return render_svg(table.columns, table.rows, title=table.title or run.command)
    return render_csv(table, run)


def emit(table: Table, run: RunConfig) -> None:
    text = render(table, run)
    if run.output_path:
        atomic_write(run.output_path, text)
        print(f"✅ wrote {len(table.rows)} rows to {run.output_path}", file=sys.stderr)
    else:
        sys.stdout.write(text)
