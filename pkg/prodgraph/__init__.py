"""prodgraph - graph products, spectra and product isomorphism certificates."""

from .__version__ import __version__

__all__ = ["__version__"]
