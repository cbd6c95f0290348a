"""Python front end for the schurforge C++ core.

``run`` mirrors the command-line tool: it takes a command name and a JSON
document (a dict or a string) and returns the parsed report.
"""

import json

from . import _core
from ._core import (
    SCHEMA,
    commands,
    hilbert_symbol,
    is_split,
    quadratic_origin_demo,
    ramified_places,
    reduced_norm,
    version,
)

__all__ = [
    "SCHEMA",
    "SchurForgeError",
    "commands",
    "hilbert_symbol",
    "is_split",
    "quadratic_origin_demo",
    "ramified_places",
    "reduced_norm",
    "run",
    "version",
]

__version__ = version()

DEFAULT_NORM_SEARCH = 200
DEFAULT_FACTOR = 1_000_000


class SchurForgeError(Exception):
    """A job failed. ``exit_code`` matches the command-line tool."""

    def __init__(self, exit_code, document):
        self.exit_code = exit_code
        self.document = document
        self.name = document.get("error", "Error")
        self.pointer = document.get("pointer")
        super().__init__(f"{self.name}: {document.get('message', '')}")


def run(command, doc, *, seed=0, norm_search=DEFAULT_NORM_SEARCH, factor=DEFAULT_FACTOR, quiver=False):
    text = doc if isinstance(doc, str) else json.dumps(doc)
    code, out, err = _core.run_job(command, text, seed, norm_search, factor, quiver)
    if code != 0:
        raise SchurForgeError(code, json.loads(err))
    return json.loads(out)
