"""strapnav CLI Module."""

from .interface import main

__all__ = ["main"]
