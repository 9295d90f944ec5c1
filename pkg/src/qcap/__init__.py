"""Exact verification of q-series identities for level 3 gap partitions."""

__version__ = "0.1.0"

from .partitions import ALL_CONFIGS, GapConfig, Partition  # noqa: E402
from .series import Monomial, QSeries, TLaurent, ZPoly  # noqa: E402

__all__ = ["ALL_CONFIGS", "GapConfig", "Monomial", "Partition", "QSeries", "TLaurent", "ZPoly",
           "__version__"]
