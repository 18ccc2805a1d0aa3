"""Element-order spectra and order canonical E-lattices of finite abelian groups."""

from orderlattice.group.model import AbelianGroup, OrderSpectrum, PrimaryComponent
from orderlattice.group.notation import parse_group_spec

__version__ = "0.1.0"

__all__ = ["AbelianGroup", "OrderSpectrum", "PrimaryComponent", "parse_group_spec"]
