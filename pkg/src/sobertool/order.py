"""
Finite posets and the order-theoretic operators built on them: upper and
lower bounds, cut closure, the Dedekind-MacNeille completion, directed
subsets and the ascending chain condition.

Element identifiers are opaque strings. The order relation is stored
transitively closed so every query is a set lookup.
"""

from __future__ import annotations

import itertools
import json
import os
import random
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InputError, SizeError

DEFAULT_SIZE_CAP = 16


def size_cap() -> int:
    """Largest carrier accepted by exhaustive enumerators."""
    raw = os.environ.get("SOBERTOOL_SIZE_CAP")
    if raw is None:
        return DEFAULT_SIZE_CAP
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"SOBERTOOL_SIZE_CAP must be an integer, got {raw!r}")


def check_size(n: int, what: str = "carrier") -> None:
    cap = size_cap()
    if n > cap:
        raise SizeError(
            f"{what} has {n} elements; exhaustive enumeration is capped at {cap} "
            "(set SOBERTOOL_SIZE_CAP to raise it)"
        )


def set_label(s: Iterable[str]) -> str:
    """Canonical string encoding of a finite set of identifiers, e.g. '{a,b}'."""
    return "{" + ",".join(sorted(s)) + "}"


class FinitePoset:
    """Explicit partial order on a finite carrier; immutable after construction."""

    def __init__(self, elements: Iterable[str], leq: Iterable[tuple] = ()):
        elements = tuple(elements)
        if len(set(elements)) != len(elements):
            raise InputError("duplicate element identifiers")
        known = set(elements)
        rel = set()
        for pair in leq:
            a, b = pair
            if a not in known or b not in known:
                raise InputError(f"relation {pair!r} mentions an unknown element")
            rel.add((a, b))
        rel.update((x, x) for x in elements)
        rel = _transitive_closure(elements, rel)
        for a, b in rel:
            if a != b and (b, a) in rel:
                raise InputError(f"relation is not antisymmetric: {a} and {b} are mutually below")
        down = {x: set() for x in elements}
        up = {x: set() for x in elements}
        for a, b in rel:
            down[b].add(a)
            up[a].add(b)
        self.elements = elements
        self.leq = frozenset(rel)
        self._down = {x: frozenset(s) for x, s in down.items()}
        self._up = {x: frozenset(s) for x, s in up.items()}

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        if not isinstance(other, FinitePoset):
            return NotImplemented
        return set(self.elements) == set(other.elements) and self.leq == other.leq

    def __hash__(self):
        return hash((frozenset(self.elements), self.leq))

    def __repr__(self):
        return f"FinitePoset({list(self.elements)!r}, {self.covers()!r})"

    def le(self, a: str, b: str) -> bool:
        return (a, b) in self.leq

    def down(self, x: str) -> frozenset:
        return self._down[x]

    def up(self, x: str) -> frozenset:
        return self._up[x]

    def down_set(self, A: Iterable[str]) -> frozenset:
        out = set()
        for a in A:
            out |= self._down[a]
        return frozenset(out)

    def up_set(self, A: Iterable[str]) -> frozenset:
        out = set()
        for a in A:
            out |= self._up[a]
        return frozenset(out)

    def maximal(self, A: Iterable[str]) -> frozenset:
        A = frozenset(A)
        return frozenset(a for a in A if not any(b != a and self.le(a, b) for b in A))

    def greatest(self, A: Iterable[str]):
        """Greatest element of A, or None."""
        A = frozenset(A)
        for a in A:
            if all(self.le(b, a) for b in A):
                return a
        return None

    def join(self, A: Iterable[str]):
        """Least upper bound of A in the whole poset, or None."""
        ub = bounds(self, A).upper
        return least(self, ub)

    def covers(self) -> list:
        """Hasse diagram edges (a, b) with a < b and nothing in between."""
        out = []
        for a, b in self.leq:
            if a == b:
                continue
            if not any(c not in (a, b) and self.le(a, c) and self.le(c, b) for c in self.elements):
                out.append((a, b))
        return sorted(out)

    def to_json(self) -> dict:
        return {"elements": list(self.elements), "leq": [list(p) for p in self.covers()]}

    @classmethod
    def from_json(cls, data) -> "FinitePoset":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return cls(data["elements"], [tuple(p) for p in data.get("leq", [])])
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed poset JSON: {exc}") from exc


def _transitive_closure(elements, rel):
    rel = set(rel)
    succ = {x: {b for a, b in rel if a == x} for x in elements}
    for k in elements:
        for i in elements:
            if k in succ[i]:
                succ[i] |= succ[k]
    return {(a, b) for a in elements for b in succ[a]}


def least(P: FinitePoset, A: Iterable[str]):
    A = frozenset(A)
    for a in A:
        if all(P.le(a, b) for b in A):
            return a
    return None


def chain(n: int, prefix: str = "") -> FinitePoset:
    names = [f"{prefix}{i}" for i in range(n)]
    return FinitePoset(names, zip(names, names[1:]))


def antichain(names: Iterable[str]) -> FinitePoset:
    return FinitePoset(names)


@dataclass(frozen=True)
class CutPair:
    upper: frozenset
    lower: frozenset


def _validate_subset(P: FinitePoset, A) -> frozenset:
    A = frozenset(A)
    unknown = A - set(P.elements)
    if unknown:
        raise InputError(f"unknown element identifiers: {sorted(unknown)}")
    return A


def upper_bounds(P: FinitePoset, A) -> frozenset:
    A = _validate_subset(P, A)
    return frozenset(x for x in P.elements if all(P.le(a, x) for a in A))


def lower_bounds(P: FinitePoset, A) -> frozenset:
    A = _validate_subset(P, A)
    return frozenset(x for x in P.elements if all(P.le(x, a) for a in A))


def bounds(P: FinitePoset, A) -> CutPair:
    """Upper bounds of A together with the lower bounds of those upper bounds.

    Bounds are taken in the whole poset. An empty set is bounded by every
    element, so the cut closure of the empty set is the set of global lower
    bounds, and a set without upper bounds closes to the whole poset.
    """
    up = upper_bounds(P, A)
    return CutPair(upper=up, lower=lower_bounds(P, up))


def cut_closure(P: FinitePoset, A) -> frozenset:
    return bounds(P, A).lower


def is_cut(P: FinitePoset, A) -> bool:
    return cut_closure(P, A) == frozenset(A)


def subsets(items, min_size=0) -> Iterator[frozenset]:
    items = list(items)
    for r in range(min_size, len(items) + 1):
        for combo in itertools.combinations(items, r):
            yield frozenset(combo)


@dataclass(frozen=True)
class Completion:
    """Dedekind-MacNeille completion: the lattice of cuts and the point embedding."""

    lattice: FinitePoset
    cuts: dict        # lattice element name -> cut (frozenset of original elements)
    embedding: dict   # original element -> lattice element name (the cut of its principal ideal)

    def meet(self, a: str, b: str) -> str:
        return self.name_of(self.cuts[a] & self.cuts[b])

    def join(self, a: str, b: str):
        return self.lattice.join([a, b])

    def name_of(self, cut: frozenset) -> str:
        for name, c in self.cuts.items():
            if c == cut:
                return name
        raise KeyError(set_label(cut))


def dedekind_macneille(P: FinitePoset) -> Completion:
    check_size(len(P))
    cuts = {cut_closure(P, A) for A in subsets(P.elements)}
    names = {c: set_label(c) for c in cuts}
    rel = [(names[a], names[b]) for a in cuts for b in cuts if a <= b]
    lattice = FinitePoset(sorted(names.values()), rel)
    embedding = {x: names[P.down(x)] for x in P.elements}
    return Completion(lattice=lattice, cuts={n: c for c, n in names.items()}, embedding=embedding)


def is_lattice(P: FinitePoset) -> bool:
    for a, b in itertools.combinations(P.elements, 2):
        if P.join([a, b]) is None:
            return False
        if least_dual(P, [a, b]) is None:
            return False
    return True


def least_dual(P: FinitePoset, A):
    """Greatest lower bound of A, or None."""
    lb = lower_bounds(P, A)
    return P.greatest(lb)


def is_directed(P: FinitePoset, A) -> bool:
    A = _validate_subset(P, A)
    if not A:
        return False
    for a, b in itertools.combinations(A, 2):
        if not any(P.le(a, c) and P.le(b, c) for c in A):
            return False
    return True


def directed_family(P: FinitePoset) -> list:
    """Every directed subset of P, smallest first."""
    check_size(len(P))
    return [A for A in subsets(P.elements, 1) if is_directed(P, A)]


def is_noetherian(P: FinitePoset) -> bool:
    """Every directed subset has a greatest element (computed, not assumed)."""
    return all(P.greatest(D) is not None for D in directed_family(P))


def order_isomorphism(P: FinitePoset, Q: FinitePoset):
    """A bijection P -> Q preserving and reflecting order, or None."""
    if len(P) != len(Q):
        return None
    check_size(len(P))

    def sig(R, x):
        return (len(R.down(x)), len(R.up(x)))

    ps = sorted(P.elements, key=lambda x: sig(P, x))
    candidates = {x: [y for y in Q.elements if sig(Q, y) == sig(P, x)] for x in ps}
    assign = {}
    used = set()

    def extend(i):
        if i == len(ps):
            return True
        x = ps[i]
        for y in candidates[x]:
            if y in used:
                continue
            if all(P.le(x, z) == Q.le(y, assign[z]) and P.le(z, x) == Q.le(assign[z], y) for z in assign):
                assign[x] = y
                used.add(y)
                if extend(i + 1):
                    return True
                del assign[x]
                used.discard(y)
        return False

    return dict(assign) if extend(0) else None


def random_poset(n: int, rng: random.Random, density: float = 0.35, prefix: str = "p") -> FinitePoset:
    """Random poset on n elements: a random DAG over a shuffled linear extension."""
    names = [f"{prefix}{i}" for i in range(n)]
    perm = names[:]
    rng.shuffle(perm)
    rel = [(perm[i], perm[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < density]
    return FinitePoset(names, rel)


def all_posets(n: int, prefix: str = "p") -> Iterator[FinitePoset]:
    """Every partial order on n labelled elements (219 of them for n = 4)."""
    names = [f"{prefix}{i}" for i in range(n)]
    pairs = [(a, b) for a in names for b in names if a != b]
    for bits in range(1 << len(pairs)):
        rel = {pairs[k] for k in range(len(pairs)) if bits >> k & 1}
        if any((b, a) in rel for a, b in rel):
            continue
        if any((a, c) not in rel for a, b in rel for b2, c in rel if b == b2 and a != c):
            continue
        yield FinitePoset(names, rel)
