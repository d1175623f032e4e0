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
import pytest

from features.monte_carlo import chebyshev, expectation_bound, pairing_joint, pairing_marginals, pairing_uniform, \
    partner_table, run_suite
from utils.errors import ParseError, UnknownSuite
from utils.rng import stream


def test_partner_table_rows_are_pairings():
    partner = partner_table(10, 500, stream(1))
    rows = np.arange(500)[:, None]
    assert np.all(partner[rows, partner] == np.arange(10))
    assert np.all(partner != np.arange(10))


def test_pairing_marginals():
    records = pairing_marginals(100_000, seed=1)
    assert all(r.passed for r in records)
    assert records[0].bound == pytest.approx(1 / 9)


def test_pairing_joint():
    (record,) = pairing_joint(100_000, seed=1)
    assert record.bound == pytest.approx(1 / 63)
    assert record.passed


def test_pairing_uniform():
    (record,) = pairing_uniform(200_000, seed=1)
    assert record.passed


@pytest.mark.slow
def test_pairing_uniform_full():
    (record,) = pairing_uniform(1_000_000, seed=2)
    assert record.passed


def test_chebyshev_cells():
    records = chebyshev(5_000, seed=1, densities=(0.1, 0.25))
    assert len(records) == 2 * 2 * 3
    assert all(r.passed for r in records)


def test_expectation_bound_reports_missing_instances():
    records = expectation_bound(trials=3, sizes=(40,), sweep=2, clique_budget=1)
    notes = [r.note for r in records]
    assert notes.count("undetermined") == 2
    assert all(r.estimate is not None and r.bound >= r.estimate for r in records if r.note == "undetermined")
    assert any(r.quantity == "no strict-eligible instance" and r.passed is False for r in records)
    assert records[-1].quantity == "higman_sims_complement mean missing edges"
    assert records[-1].passed


@pytest.mark.slow
def test_expectation_bound_full():
    records = expectation_bound(trials=200)
    assert records[-1].passed
    assert all(r.passed is not False for r in records if "mean missing edges" in r.quantity)
    generated = [r for r in records if r.quantity.startswith("tfp")
                 and ("mean missing edges" in r.quantity or "structural checks" in r.quantity)]
    assert any(r.passed for r in generated)


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("pairing-everything")


def test_run_suite_rejects_zero_trials():
    with pytest.raises(ParseError):
        run_suite("pairing-joint", trials=0)


def test_run_suite_dispatch():
    records = run_suite("pairing-joint", trials=20_000, seed=3)
    assert records[0].as_dict()["pass"] in (True, False)
