"""R-hulloids, R-bodies, R-cones and reach certification.

Masks are 2-D numpy arrays indexed ``[y, x]``; nonzero entries are foreground.
Radii for mask functions are in pixels.
"""

from ._rbody import *  # noqa: F401,F403
from ._rbody import InputError, fixtures  # noqa: F401

__all__ = [name for name in dir() if not name.startswith("_")]
