"""
Shared vocabulary for the symbolic gallery: point codes, closed-set
descriptors, upper-bound sets with infinite pieces, and the oracle base
class that implements the generic parts of the descriptor algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from ..errors import InputError

INF_LABEL = "inf"


class Pt(NamedTuple):
    """A point code. `tag` picks the variant; `i`, `j` are its indices (naturals start at 1)."""

    tag: str
    i: int = 0
    j: int = 0

    def __str__(self):
        if self.tag == "n":
            return str(self.i)
        if self.tag in ("x", "a"):
            return f"{self.tag}{self.i}"
        if self.tag == "p":
            return f"({self.i},{self.j})"
        if self.tag == "w":
            return f"({self.i},{INF_LABEL})"
        return self.tag

    def index(self) -> int:
        """Size parameter used by truncations; tops and bottoms have index 0."""
        if self.tag == "p":
            return max(self.i, self.j)
        if self.tag in ("n", "x", "a", "w"):
            return self.i
        return 0


def N(i):
    return Pt("n", i)


TOP_N = Pt("topN")
TOP1 = Pt("top1")
TOP2 = Pt("top2")
BOT = Pt("bot")
TOP = Pt("top")
EXT_TOP = Pt("ext_top")


@dataclass(frozen=True)
class Closed:
    """Canonical descriptor of a closed set in a named gallery space.

    `kind` is "empty", "all" or a space-specific variant; `finite` carries
    finitely many generating points, `param` an integer parameter (None
    stands for infinity where a space uses it), `scheme` a named countable
    index scheme and `inner` a wrapped descriptor for extension spaces.
    """

    space: str
    kind: str
    finite: frozenset = frozenset()
    param: Optional[int] = None
    scheme: Optional[str] = None
    inner: Optional["Closed"] = None


@dataclass(frozen=True)
class UpperSet:
    """An upper-bound set: finitely many points plus named infinite pieces.

    `everything` marks the whole carrier (the upper bounds of the empty set).
    """

    points: frozenset = frozenset()
    pieces: frozenset = frozenset()
    everything: bool = False

    def is_empty(self) -> bool:
        return not self.everything and not self.points and not self.pieces


EVERYTHING = UpperSet(everything=True)
NOTHING = UpperSet()


@dataclass(frozen=True)
class ChainScheme:
    """A representative infinite directed family, optionally indexed by a parameter."""

    name: str
    parametrized: bool = False
    description: str = ""


class SpaceOracle:
    """Base class: generic descriptor algebra on top of a few per-space primitives.

    Subclasses implement points_upto, is_point, contains, leq, closure_point,
    canonical union/intersect, up, upper_bounds, the piece primitives, and the
    inventories (irr_extras, chains, sample_descriptors).
    """

    name = "abstract"
    cardinality = "countably_infinite"
    grammar = ""
    order_discrete = False

    # -- descriptors ---------------------------------------------------------
    @property
    def empty(self) -> Closed:
        return Closed(self.name, "empty")

    @property
    def all(self) -> Closed:
        return Closed(self.name, "all")

    def check(self, d: Closed) -> Closed:
        if not isinstance(d, Closed) or d.space != self.name:
            raise InputError(f"descriptor {d!r} does not belong to {self.name}")
        if not self.in_grammar(d):
            raise InputError(f"descriptor {self.label(d)} is outside the closed grammar of {self.name}")
        return d

    def in_grammar(self, d: Closed) -> bool:
        return d.kind in ("empty", "all")

    def label(self, d: Closed) -> str:
        if d.kind in ("empty", "all"):
            return d.kind
        parts = [d.kind]
        if d.param is not None:
            parts.append(str(d.param))
        if d.scheme:
            parts.append(d.scheme)
        if d.finite:
            parts.append("{" + ",".join(sorted(map(str, d.finite))) + "}")
        if d.inner is not None:
            parts.append("<" + d.inner.space + ":" + self._inner_label(d.inner) + ">")
        return ":".join(parts)

    def _inner_label(self, d):
        return d.kind if d.kind in ("empty", "all") else SpaceOracle.label(self, d)

    def is_subset(self, a: Closed, b: Closed) -> bool:
        return self.union(a, b) == self.check(b)

    def check_point(self, p: Pt) -> Pt:
        if not self.is_point(p):
            raise InputError(f"{p!r} is not a point of {self.name}")
        return p

    # -- upper and lower bounds ---------------------------------------------
    def upper_contains(self, U: UpperSet, p: Pt) -> bool:
        if U.everything or p in U.points:
            return True
        return any(self.piece_contains(piece, p) for piece in U.pieces)

    def meet_upper(self, U: UpperSet, V: UpperSet) -> UpperSet:
        if U.everything:
            return V
        if V.everything:
            return U
        points = {p for p in U.points if self.upper_contains(V, p)}
        points |= {p for p in V.points if self.upper_contains(U, p)}
        pieces = set()
        for a in U.pieces:
            for b in V.pieces:
                m = self.piece_meet(a, b)
                points |= m.points
                pieces |= m.pieces
        return UpperSet(frozenset(points), frozenset(pieces))

    def restrict_upper(self, U: UpperSet, below: Pt) -> frozenset:
        """Members of a finite upper set that lie below a given point."""
        if U.everything or U.pieces:
            raise InputError("only finite upper sets can be filtered pointwise")
        return frozenset(p for p in U.points if self.leq(p, below))

    def lower_bounds(self, U: UpperSet) -> Closed:
        if U.everything:
            return self.global_lower()
        out = self.all
        for p in sorted(U.points):
            out = self.intersect(out, self.closure_point(p))
        for piece in sorted(U.pieces):
            out = self.intersect(out, self.piece_lower(piece))
        return out

    def cut_closure(self, d: Closed) -> Closed:
        return self.lower_bounds(self.upper_bounds(self.check(d)))

    def greatest_in(self, d: Closed) -> Optional[Pt]:
        """Greatest element of a closed set, found among its upper bounds, or None."""
        d = self.check(d)
        if d.kind == "empty":
            return None
        U = self.upper_bounds(d)
        candidates = set(U.points) | set(self.generators(d))
        for piece in U.pieces:
            least = self.piece_least(piece)
            if least is not None:
                candidates.add(least)
        for c in sorted(candidates):
            if self.contains(d, c) and self.upper_contains(U, c):
                return c
        return None

    def generators(self, d: Closed) -> frozenset:
        """Finitely many points among which the maximal points of d are found."""
        return d.finite

    def least_of(self, U: UpperSet) -> Optional[Pt]:
        if U.everything or U.pieces:
            raise InputError("least element is only computed for finite upper sets")
        for c in sorted(U.points):
            if all(self.leq(c, q) for q in U.points):
                return c
        return None

    def piece_contains(self, piece, p) -> bool:
        return False

    def piece_meet(self, a, b) -> UpperSet:
        return NOTHING

    def piece_lower(self, piece) -> Closed:
        raise InputError(f"{self.name} has no infinite upper-bound pieces")

    def piece_least(self, piece):
        return None

    # -- inventories ---------------------------------------------------------
    def irr_extras(self) -> list:
        return []

    def chains(self) -> list:
        return []

    def chain_params(self, chain: ChainScheme, cutoff: int) -> list:
        return list(range(1, cutoff + 1)) if chain.parametrized else [None]

    def complement_of_top(self) -> Optional[Closed]:
        """Descriptor of the carrier minus its greatest element, when both exist."""
        return None

    def metadata(self) -> dict:
        return {
            "name": self.name,
            "cardinality": self.cardinality,
            "closed_grammar": self.grammar,
            "irr_extras": [self.label(d) for d in self.irr_extras()],
            "directed_representatives": ["singletons"] + [c.name for c in self.chains()],
        }


def sorted_points(points) -> list:
    return sorted(points)


@dataclass
class Truncation:
    """Finite restriction data: points up to a cutoff and restricted descriptor masks."""

    points: list
    index: dict = field(default_factory=dict)

    def __post_init__(self):
        self.index = {p: k for k, p in enumerate(self.points)}

    def mask(self, oracle: SpaceOracle, d: Closed) -> int:
        m = 0
        for p, k in self.index.items():
            if oracle.contains(d, p):
                m |= 1 << k
        return m
