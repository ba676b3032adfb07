"""Deck groups of the octahedral spherical 3-manifolds N4, N5, N6 and their
invariant harmonic bases."""

from ._octaharm import *  # noqa: F401,F403
from ._octaharm import __version__  # noqa: F401
