"""Optimal (r, delta) locally repairable codes over finite fields and the
optimal quantum codes they induce.

Everything lives in the compiled extension; this package re-exports it.
"""

from ._lrcq import *  # noqa: F401,F403
from ._lrcq import __doc__ as _doc

__doc__ = _doc
__version__ = "1.0.0"
