"""Exact computations with filtered isocrystals at the GL_n level.

Instances are plain dicts with the same shape as the CLI's JSON files:
{"p": ..., "phi": [[...]], "eigvals": [...], "eigbasis": [[...]],
 "hodge": {...}, "lattice": [[...]]}.  Rationals travel as "a/b" strings.
"""

try:
    from ._filiso import *  # noqa: F401,F403
    from ._filiso import __version__  # noqa: F401
except ImportError:  # running against a build tree
    from _filiso import *  # noqa: F401,F403
    from _filiso import __version__  # noqa: F401

import json as _json


def load_instance(path):
    """Read an instance JSON file into a dict."""
    with open(path) as fh:
        return _json.load(fh)
