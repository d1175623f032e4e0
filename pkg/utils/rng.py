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

import numpy as np

SEED_MASK = (1 << 64) - 1


def stream(seed: int, index: int = 0) -> np.random.Generator:
    """Independent random stream for (master seed, stream index).

    Philox is counter based, so streams for different indices never overlap and
    a trial can be replayed on its own without running the ones before it.
    """
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed & SEED_MASK, index])))
