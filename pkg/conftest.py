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

import pytest

from utils.config import get_flag


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: acceptance-scale test, runs when MINORFORGE_SLOW_TESTS=true")


def pytest_collection_modifyitems(config, items):
    if get_flag("Minorforge_Slow_Tests", "false"):
        return
    skip = pytest.mark.skip(reason="set MINORFORGE_SLOW_TESTS=true to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)
