"""fatgraph - Exact algorithms for intersection graphs of fat objects."""

__version__ = "0.1.0"
