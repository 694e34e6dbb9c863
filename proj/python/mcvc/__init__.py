"""Maximum vertex cover under matroid constraints.

Exact rational arithmetic throughout; see the project README for the file
formats and the command-line front end.
"""

try:
    from ._mcvc import *  # noqa: F401,F403  (installed package layout)
    from ._mcvc import __doc__ as _core_doc
except ImportError:  # in-tree build: extension sits on sys.path directly
    from _mcvc import *  # noqa: F401,F403
    from _mcvc import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
