"""Memory-budgeted triangle estimation over hypergraph streams."""

__version__ = "1.0.0"
