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

import os
import re

KEY_PATTERN = re.compile(r"get_(?:key|flag|int)\(['\"]([a-zA-Z_]+)['\"](?:, ['\"]?([^'\")]*)['\"]?)?\)")


def get_files(path: str) -> list[str]:
    # .py files, recursively, skipping the virtualenv

    files = []
    for root, dirs, filenames in os.walk(path):
        dirs[:] = [d for d in dirs if d not in ('.venv', 'venv', '.git')]
        for filename in filenames:
            if filename.endswith('.py'):
                files.append(os.path.join(root, filename))

    return files


def scan(path: str) -> dict[str, str]:
    """Every configuration key the code reads, with its default (empty when required)."""
    keys = {}
    for i in get_files(path):
        with open(i) as f:
            script = f.read()

        for key, default in KEY_PATTERN.findall(script):
            keys.setdefault(key.upper(), default)
    return keys


if __name__ == '__main__':
    for key, default in sorted(scan(os.path.join(os.path.dirname(__file__), "..")).items()):
        print(f"{key}={default}")
