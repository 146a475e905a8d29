"""Cocycle edge-labeling samplers and percolation analysis."""

from ._cocy import *  # noqa: F401,F403
from ._cocy import __version__  # noqa: F401
