# Copyright (C) 2026 The agenthellm Authors
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

"""Attack-path planning for agentic LLM ecosystems.

Graphs are passed as dicts, JSON text or file paths in the graph format.
Results are plain Python data decoded from the engine's JSON.
"""

import json
import os

from . import _core
from ._core import (
    GraphError,
    GraphFormatError,
    OracleLimitError,
    RequestError,
    TriggerRequestError,
)

__all__ = [
    "GraphError",
    "GraphFormatError",
    "OracleLimitError",
    "RequestError",
    "TriggerRequestError",
    "analyze",
    "canonical",
    "catalog",
    "oracle",
    "render_dot",
    "render_text",
    "resolve_activation",
    "resolve_consumption",
    "validate",
]

__version__ = "0.1.0"


def _text(graph):
    if isinstance(graph, dict):
        return json.dumps(graph)
    if isinstance(graph, os.PathLike):
        with open(graph, encoding="utf-8") as f:
            return f.read()
    if isinstance(graph, str) and not graph.lstrip().startswith("{"):
        with open(graph, encoding="utf-8") as f:
            return f.read()
    return graph


def validate(graph):
    """Validation report: {"valid": bool, "violations": [...]}."""
    return json.loads(_core.validate(_text(graph)))


def canonical(graph):
    """Canonical document text of a valid graph."""
    return _core.canonical(_text(graph))


def analyze(graph, attacker, target, **options):
    """Ranked attack plans as a report dict.

    Options: asset, k, max_cost, max_steps, trigger_depth, accept_unsolicited.
    """
    return json.loads(_core.analyze(_text(graph), attacker, target, **options))


def oracle(graph, attacker, target, **options):
    """Every plan within the bounds, by exhaustive enumeration (small graphs)."""
    return json.loads(_core.oracle(_text(graph), attacker, target, **options))


def render_text(graph, attacker, target, **options):
    return _core.render_text(_text(graph), attacker, target, **options)


def render_dot(graph, attacker=None, target=None, plan=1):
    return _core.render_dot(_text(graph), attacker, target, plan)


def resolve_consumption(graph, attacker, consumer, datasource, depth=4):
    """Shortest trigger chain making `consumer` read `datasource`, or None."""
    return json.loads(_core.resolve_consumption(_text(graph), attacker, consumer, datasource, depth))


def resolve_activation(graph, attacker, respond_edge, channels=(), depth=4):
    """Shortest chain opening the channel a respond edge needs, or None."""
    return json.loads(
        _core.resolve_activation(_text(graph), attacker, respond_edge, list(channels), depth))


def catalog():
    """The asset catalog (builtin unless AGENTHELLM_CATALOG names a file)."""
    return json.loads(_core.catalog())
