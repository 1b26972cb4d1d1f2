"""Class-level arithmetic for noncommutative quadratic transforms over finite elliptic-curve groups."""

__version__ = "0.1.0"
