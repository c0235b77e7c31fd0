"""Dressed-atom susceptibility and slow-light propagation for an alkali D1
hyperfine doublet dressed by a strong control field."""

from ._atsim import *  # noqa: F401,F403
from ._atsim import __version__  # noqa: F401
