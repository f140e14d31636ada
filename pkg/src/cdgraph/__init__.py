"""Character degree graph toolkit for finite solvable groups."""

__version__ = "0.1.0"
