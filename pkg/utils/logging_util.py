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
import sys

import sentry_sdk
from sentry_sdk.integrations.logging import LoggingIntegration

from utils.config import get_key, get_flag


def setup_logging(level_name: str | None = None) -> None:
    log_level = (level_name or get_key("Log_Level", "info")).lower()
    if log_level == "debug":
        log_level = logging.DEBUG
    elif log_level == "info":
        log_level = logging.INFO
    elif log_level == "warning":
        log_level = logging.WARNING
    elif log_level == "error":
        log_level = logging.ERROR
    else:
        log_level = logging.INFO
        print('Invalid log mode, defaulting to info', file=sys.stderr)

    logging.basicConfig(
        level=log_level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr
    )


def setup_sentry() -> bool:
    if not get_flag("Sentry_Enabled", "false"):
        return False

    sentry_sdk.init(get_key("Sentry_DSN"),
                    integrations=[LoggingIntegration(level=logging.INFO, event_level=logging.ERROR)],
                    traces_sample_rate=1.0)
    logging.info("Sentry error reporting enabled")
    return True


def report_defect(error: BaseException) -> None:
    """Log a defect and hand it to Sentry. Callers re-raise afterwards."""
    logging.error("Defect: %s", error)
    sentry_sdk.capture_exception(error)
