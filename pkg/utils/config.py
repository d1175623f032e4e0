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

import logging
import os

_warned: set[str] = set()


def get_key(key: str, default: str = "") -> str:
    key = key.upper()
    value = os.getenv(key)
    if not value:
        if key not in _warned:
            _warned.add(key)
            logging.debug("Using default %s for %s", default, key)

        if len(default.strip()) == 0:
            raise ValueError("The default for the value %s is by default None. This value is required" % key)

        return default

    return value


def get_flag(key: str, default: str = "false") -> bool:
    return get_key(key, default).strip().lower() == "true"


def get_int(key: str, default: int) -> int:
    value = get_key(key, str(default))
    try:
        return int(value)
    except ValueError:
        logging.warning("Config key %s is not an integer (%s), using %d", key.upper(), value, default)
        return default


def default_seed() -> int:
    """Seed used when no --seed is given, read from MINORFORGE_SEED."""
    return get_int("Minorforge_Seed", 0)
