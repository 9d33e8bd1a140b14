"""Exterior algebras, Clifford algebras and Schubert derivations over semirings with negation."""

from .semiring import MAXPLUS, NAT, QPLUS, Pair, get_semiring
from .partitions import Partition, exponent_tuple, pieri
from .exterior import WedgeElement, contract, wedge
from .schubert import BiSeries, apply_derivation, compare_series

__version__ = "0.1.0"
