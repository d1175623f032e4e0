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


class MinorforgeError(Exception):
    """Base class for every error raised on purpose by Minorforge.

    `exit_code` is what the command line exits with when the error reaches it.
    """
    exit_code = 1


# Input (exit code 2)

class ParseError(MinorforgeError):
    exit_code = 2


class UnknownName(MinorforgeError):
    exit_code = 2


class UnknownSuite(MinorforgeError):
    exit_code = 2


class WrongOrder(MinorforgeError):
    exit_code = 2


class TooLarge(MinorforgeError):
    exit_code = 2


class OddGroundSet(MinorforgeError):
    exit_code = 2


class DomainError(MinorforgeError):
    exit_code = 2


# Structure

class InvalidDecomposition(MinorforgeError):
    exit_code = 2


class NotAClique(MinorforgeError):
    exit_code = 2


class NotFound(MinorforgeError):
    """Exhaustive search finished without a seagull partition."""
    exit_code = 3


# Ineligible input or failed precondition (exit code 3)

class AlphaTooLarge(MinorforgeError):
    exit_code = 3


class Ineligible(MinorforgeError):
    exit_code = 3


class NotCertifiable(MinorforgeError):
    exit_code = 3


class NonpositiveDenominator(MinorforgeError):
    exit_code = 3


class InvalidHypotheses(MinorforgeError):
    exit_code = 3

    def __init__(self, flag: str, message: str = ""):
        super().__init__(message or f"hypothesis failed: {flag}")
        self.flag = flag


# Sampler (exit code 4)

class RejectionExhausted(MinorforgeError):
    exit_code = 4


class NotEnoughEdges(MinorforgeError):
    exit_code = 4


# Search budgets (exit code 5)

class BudgetExhausted(MinorforgeError):
    """A search ran out of nodes. `best` and `upper` bound the answer when the search knows them."""
    exit_code = 5

    def __init__(self, message: str = "", best: int | None = None, upper: int | None = None):
        super().__init__(message)
        self.best = best
        self.upper = upper


# Defects, these never happen on valid input

class SeagullFailure(MinorforgeError):
    exit_code = 1


class AccountingMismatch(MinorforgeError):
    exit_code = 1
