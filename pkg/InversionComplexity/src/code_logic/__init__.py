"""Code logic package.

This package contains the application's core logic modules (program
globals, the Boolean function, basis, circuit, synthesis and exact search
packages, and the program ``Main`` entrypoint).
"""

from . import program_globals
from . import boolean
from . import basis
from . import circuit
from . import synth
from . import exact
from .main import Main, run, start_wrapper

__all__ = [
    "program_globals",
    "boolean",
    "basis",
    "circuit",
    "synth",
    "exact",
    "Main",
    "run",
    "start_wrapper"
]
