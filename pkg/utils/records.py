#      Minorforge builds dense minors of graphs with no independent set of size three.
#      Copyright (C) 2025 mldchan
#
#      This program is free software: you can redistribute it and/or modify
#      it under the terms of the GNU Affero General Public License as
#      published by the Free Software Foundation, either version 3 of the
#      License, or (at your option) any later version.
#
#      This program is distributed in the hope that it will be useful,
#      but WITHOUT ANY WARRANTY; without even the implied warranty of
#      MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#      GNU Affero General Public License for more details.
#
#      You should have received a copy of the GNU Affero General Public License
#      along with this program.  If not, see <https://www.gnu.org/licenses/>.
#

import hashlib
import json
import logging
import sys
from dataclasses import dataclass, field
from typing import TextIO

from utils.config import get_flag

FORMATS = ("text", "records")


def hash_bytes(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


@dataclass
class RunRecord:
    command: str
    seed: int | None
    config: dict = field(default_factory=dict)
    inputs: dict = field(default_factory=dict)
    outputs: dict = field(default_factory=dict)
    wall_time: float | None = None

    def as_dict(self) -> dict:
        out = {"command": self.command, "seed": self.seed, "config": self.config,
               "inputs": self.inputs, "outputs": self.outputs}
        if self.wall_time is not None:
            out["wall_time"] = round(self.wall_time, 6)
        return out

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, default=str)

    def to_text(self) -> str:
        lines = []

        def walk(prefix: str, value):
            if isinstance(value, dict):
                for key in value:
                    walk(f"{prefix}.{key}" if prefix else str(key), value[key])
            else:
                lines.append(f"{prefix}: {value}")

        walk("", self.as_dict())
        return "\n".join(lines) + "\n"


def emit(record: RunRecord, fmt: str = "text", out: TextIO | None = None) -> None:
    """Write a record to stdout and, when Records_MongoDB is on, to the RunRecords collection."""
    out = out or sys.stdout
    out.write(record.to_json() + "\n" if fmt == "records" else record.to_text())

    if get_flag("Records_MongoDB", "false"):
        from database import run_records

        run_records.insert_one(json.loads(record.to_json()))
        logging.debug("Stored run record for %s", record.command)
