"""Domain types and errors for fatgraph."""
