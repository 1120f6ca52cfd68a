"""
Pure computational core: permutations and roots, Laurent scalars, orthocells,
module actions, the e-basis, R-maps and sampled geometry.

Nothing in this package performs I/O.
"""

from qflag.core.errors import QFlagError
from qflag.core.orthocell import Orthocell, make_cell
from qflag.core.outcome import CheckReport
from qflag.core.scalars import LaurentScalar
from qflag.core.uqrep import TensorVector
from qflag.core.weyl import PositiveRoot

__all__ = [
    "CheckReport",
    "LaurentScalar",
    "Orthocell",
    "PositiveRoot",
    "QFlagError",
    "TensorVector",
    "make_cell",
]
