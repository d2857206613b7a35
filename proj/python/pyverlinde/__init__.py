"""Exact Verlinde numbers, refined Verlinde formulas, and modulo-d spin
structure counting, backed by the certified C++ core."""

try:
    from ._core import *  # noqa: F401,F403
    from ._core import __doc__  # noqa: F401
except ImportError:  # running against a bare build tree
    from _core import *  # noqa: F401,F403

__version__ = "1.0.0"
