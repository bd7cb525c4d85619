"""Sobriety-class checks for finite and symbolic topological spaces."""

from .errors import InputError, PreconditionError, SizeError
from .finite import ClassificationReport, FiniteSpace, SpaceMap, classify, find_homeomorphism
from .gallery import GALLERY_NAMES, make_gallery_space
from .gallery.classify import classify_symbolic
from .gallery.sampling import consistency_sample
from .order import FinitePoset, cut_closure, dedekind_macneille
from .powerspace import (closure_identity_check, coincidence_check, hoare_space, smyth_space,
                         sobrification)
from .reflection import (flat_top, is_K_neg, natural_top, refute_extension, revalidate,
                         sobrification_iso_check)
from .verify import verify_all, verify_nonreflective

__version__ = "0.1.0"

__all__ = [
    "ClassificationReport", "FinitePoset", "FiniteSpace", "GALLERY_NAMES", "InputError",
    "PreconditionError", "SizeError", "SpaceMap", "classify", "classify_symbolic",
    "closure_identity_check", "coincidence_check", "consistency_sample", "cut_closure",
    "dedekind_macneille", "find_homeomorphism", "flat_top", "hoare_space", "is_K_neg",
    "make_gallery_space", "natural_top", "refute_extension", "revalidate", "smyth_space",
    "sobrification", "sobrification_iso_check", "verify_all", "verify_nonreflective",
]
