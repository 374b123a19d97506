"""Tests for fatgraph."""
