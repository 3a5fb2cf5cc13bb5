"""Finite lattice structure toolkit.

Thin package wrapper around the compiled extension: everything public
lives in ``hasse._hasse``.  The fallback import covers running straight
from a build tree where the extension sits on ``PYTHONPATH`` unpackaged.
"""

try:
    from hasse._hasse import *  # noqa: F401,F403
    from hasse._hasse import __doc__, __version__  # noqa: F401
except ImportError:  # pragma: no cover - build-tree layout
    from _hasse import *  # noqa: F401,F403
    from _hasse import __doc__, __version__  # noqa: F401
