"""InversionComplexity package.

Exposes the ``src`` package so the toolkit can be imported as
``InversionComplexity.src`` or started with ``python -m InversionComplexity``.
"""

from . import src

__all__ = ["src"]
