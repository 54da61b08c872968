"""
polyhopf: normed division algebras, modified Hopf maps and random closed polygons
"""

__version__ = "0.1.0"

from polyhopf.config import Settings, get_settings
from polyhopf.utils.errors import PolyHopfError

__all__ = ["PolyHopfError", "Settings", "__version__", "get_settings"]
