# Copyright 2026 The evgrid Authors.
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
"""Word-word relation grid codec, scorer and corpus statistics.

Corpora are JSONL strings (one document per line) or lists of dicts; the
results of score/stats/errors/validate come back as dicts.
"""

import json

from evgrid._evgrid import (
    AlignmentError,
    Error,
    FormatError,
    InputError,
    IoError,
    SchemaError,
    UnknownLabelError,
)
from evgrid import _evgrid

__all__ = [
    "AlignmentError", "Error", "FormatError", "InputError", "IoError",
    "SchemaError", "UnknownLabelError", "decode", "encode", "errors",
    "schema", "score", "split", "stats", "validate",
]


def _jsonl(corpus):
    if isinstance(corpus, str):
        return corpus
    return "".join(json.dumps(d) + "\n" for d in corpus)


def _schema(schema):
    if schema is None or isinstance(schema, str):
        return schema
    return json.dumps(schema)


def _docs(jsonl):
    return [json.loads(line) for line in jsonl.splitlines() if line.strip()]


def schema(schema=None):
    """Active schema as a dict (the built-in ontology by default)."""
    return json.loads(_evgrid.schema_json(_schema(schema)))


def validate(corpus, schema=None, lenient=False):
    return json.loads(_evgrid.validate(_jsonl(corpus), _schema(schema),
                                       lenient))


def encode(corpus, schema=None, lenient=False):
    """List of grid records {"doc_id", "length", "cells"}."""
    return _docs(_evgrid.encode(_jsonl(corpus), _schema(schema), lenient))


def decode(grids, tokens_from=None, schema=None, max_nugget_length=30,
           max_paths_per_head=64):
    """Returns (documents, diagnostics)."""
    tokens = None if tokens_from is None else _jsonl(tokens_from)
    docs, diag = _evgrid.decode(_jsonl(grids), tokens, _schema(schema),
                                max_nugget_length, max_paths_per_head)
    return _docs(docs), json.loads(diag)


def score(pred, gold, schema=None, percent=False):
    return json.loads(_evgrid.score(_jsonl(pred), _jsonl(gold),
                                    _schema(schema), percent))


def stats(corpus, schema=None, coverage="distinct", population="dedup"):
    return json.loads(_evgrid.stats(_jsonl(corpus), _schema(schema),
                                    coverage, population))


def errors(pred, gold, ai_context="matched"):
    return json.loads(_evgrid.errors(_jsonl(pred), _jsonl(gold), ai_context))


def split(corpus, seed=0):
    """Returns (train, dev, test) lists of documents."""
    return tuple(_docs(part) for part in _evgrid.split(_jsonl(corpus), seed))
