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

# Only imported when Records_MongoDB is enabled.

from pymongo import ASCENDING, MongoClient

from utils.config import get_key

name = get_key("DB_Username", "")
password = get_key("DB_Password", "")
host = get_key("DB_Host", "localhost")
port = get_key("DB_Port", "27017")
db = get_key("DB_Database", "minorforge")

client = MongoClient(f"mongodb://{name}:{password}@{host}:{port}/")[db]

run_records = client["RunRecords"]
run_records.create_index([("command", ASCENDING), ("seed", ASCENDING)])
