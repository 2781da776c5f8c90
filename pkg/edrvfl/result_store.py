#!/usr/bin/env python
#
# Copyright 2026 The edrvfl Developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#

import collections.abc
import hashlib
import json
import sqlite3

from edrvfl.evaluation import RunResult


class ResultStoreError(Exception):
    pass


def result_key(dataset, variant, base_seed, protocol):
    """
    Key of a benchmark result: dataset, variant, first seed and a digest of
    the protocol (grid, folds, repetitions...) it was obtained with.

    :param protocol: JSON-serializable description of the protocol.
    """
    digest = hashlib.sha1(
        json.dumps(protocol, sort_keys=True).encode('utf-8')).hexdigest()
    return '%s|%s|%d|%s' % (dataset, variant, base_seed, digest[:16])


def marshall(key, result):
    """
    Adapter for serializing a result into a row for db storage.

    :param key: store key.
    :param result: RunResult to be serialized.
    """
    return (key, result.dataset, result.variant, result.to_json(),
            result.seconds)


def unmarshall(db_row):
    """
    Creates a RunResult from the result of a db query.

    :param db_row: row from the database.
    """
    (_, _, _, document, seconds) = db_row
    return RunResult.from_dict(json.loads(document), seconds)


class ResultStore(collections.abc.MutableMapping):
    """Keeps finished benchmark results in an sqlite file, so an
    interrupted benchmark can resume. Provides dict API to it."""

    class DBCursor(object):
        def __init__(self, connection):
            self.cursor = connection.cursor()

        def __enter__(self):
            return self.cursor

        def __exit__(self, exc_type, exc_val, exc_tb):
            self.cursor.close()

    def __cursor(self):
        return self.DBCursor(self.connection)

    def __init__(self, location):
        self.location = location
        try:
            self.connection = sqlite3.connect(self.location, timeout=60)
            with self.__cursor() as cursor:
                cursor.execute(
                    'create table if not exists results(' +
                    'key PRIMARY KEY, dataset, variant, document, seconds)')
        except sqlite3.Error as e:
            raise ResultStoreError('Cannot open result store %s: %s' % (
                location, e))

    def __getitem__(self, key):
        with self.__cursor() as cursor:
            cursor.execute('SELECT * FROM results WHERE key=?', (key,))
            result = cursor.fetchone()
            if not result:
                raise KeyError(key)
            return unmarshall(result)

    def __setitem__(self, key, value):
        with self.__cursor() as cursor:
            cursor.execute('REPLACE INTO results VALUES (?, ?, ?, ?, ?)',
                           marshall(key, value))
            self.connection.commit()

    def __delitem__(self, key):
        if key not in self:
            raise KeyError(key)
        with self.__cursor() as cursor:
            cursor.execute('DELETE FROM results WHERE key=?', (key,))
            self.connection.commit()

    def __iter__(self):
        with self.__cursor() as cursor:
            cursor.execute('SELECT key FROM results ORDER BY key')
            keys = [row[0] for row in cursor.fetchall()]
        return iter(keys)

    def __len__(self):
        with self.__cursor() as cursor:
            return cursor.execute(
                'SELECT COUNT(*) FROM results').fetchone()[0]

    def lookup(self, key):
        return self.get(key)

    def record(self, key, result):
        self[key] = result

    def close(self):
        self.connection.close()
