"""Symbolic oracles for countable counterexample spaces."""

from .base import (BOT, EXT_TOP, TOP, TOP1, TOP2, TOP_N, ChainScheme, Closed, N, Pt, SpaceOracle,
                   UpperSet)
from .spaces import GALLERY_NAMES, build


def make_gallery_space(name: str, **options) -> SpaceOracle:
    """Build a gallery oracle by name; options are mutation switches used in testing."""
    return build(name, **options)


__all__ = ["BOT", "EXT_TOP", "TOP", "TOP1", "TOP2", "TOP_N", "ChainScheme", "Closed", "N", "Pt",
           "SpaceOracle", "UpperSet", "GALLERY_NAMES", "make_gallery_space"]
