"""Exact combinatorics of T-singularities, Markov-type equations and
rank-1 toric degenerations.

The heavy lifting lives in the compiled extension ``tsing._core``; this
package re-exports it and wires up the bundled table data file.
"""

import os

from tsing._core import *  # noqa: F401,F403
from tsing._core import __version__, load_tables as _load_tables  # noqa: F401

_BUNDLED_TABLES = os.path.join(os.path.dirname(__file__), "tables.json")


def tables_path():
    """Path of the table data file (bundled copy when present)."""
    if os.path.exists(_BUNDLED_TABLES):
        return _BUNDLED_TABLES
    from tsing._core import default_tables_path

    return default_tables_path()


def load_tables(path=None):
    """Load the classification tables (families, AN rows, sporadic list)."""
    return _load_tables(path or tables_path())
