"""Unipotent classes, u-symbols and Springer combinatorics for types B/C/D."""

from _springerlab import *  # noqa: F401,F403
