"""Entry point for running fatgraph as a module."""

from fatgraph.cli import main

if __name__ == "__main__":
    main()
