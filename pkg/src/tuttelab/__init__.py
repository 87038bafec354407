"""tuttelab: exact enumeration of rooted planar maps and their Potts/Tutte weights."""

from tuttelab.poly import MultiPoly
from tuttelab.maps import RootedMap

__all__ = ["MultiPoly", "RootedMap"]
