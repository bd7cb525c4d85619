"""
The nine gallery spaces as descriptor oracles.

Each oracle answers membership, order, closure, union/intersection and
bound queries exactly on its closed grammar. Infinite parts of closed sets
are carried by integer parameters (None for "unbounded") or by named index
schemes; infinite parts of upper-bound sets are carried by pieces such as
("ray", i) for {i, i+1, ...}.
"""

from __future__ import annotations

import itertools
from typing import Optional

from ..errors import InputError
from .base import (BOT, EVERYTHING, NOTHING, TOP, TOP1, TOP2, TOP_N, ChainScheme, Closed,
                   N, Pt, SpaceOracle, UpperSet)

NAT_CHAIN = ChainScheme("nat_chain", description="the chain 1 < 2 < 3 < ...")
COLUMN_CHAIN = ChainScheme("column", parametrized=True,
                           description="the column (n,1) < (n,2) < ... for each n")


def _max_inf(a, b):
    return None if a is None or b is None else max(a, b)


def _min_inf(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


class ChainWithTops(SpaceOracle):
    """The naturals in their usual order with finitely many pairwise incomparable tops above.

    Closed sets are (r, S): the initial segment {1..r} (r = None for all
    naturals) together with a set S of tops, which requires r = None. The
    admissible top sets are fixed per space.
    """

    def __init__(self, name, tops, closed_top_sets, grammar, nat_closed=True):
        self.name = name
        self.tops = tuple(tops)
        self.closed_top_sets = {frozenset(s) for s in closed_top_sets}
        self.grammar = grammar
        self.nat_closed = nat_closed

    def _mk(self, r, S=frozenset()) -> Closed:
        S = frozenset(S)
        if r == 0 and not S:
            return self.empty
        if r is None and S == frozenset(self.tops):
            return self.all
        return Closed(self.name, "chain", finite=S, param=r)

    def _parts(self, d):
        if d.kind == "empty":
            return 0, frozenset()
        if d.kind == "all":
            return None, frozenset(self.tops)
        return d.param, d.finite

    def in_grammar(self, d):
        if d.kind in ("empty", "all"):
            return True
        if d.kind != "chain":
            return False
        r, S = d.param, d.finite
        if not S <= set(self.tops) or S not in self.closed_top_sets:
            return False
        if S and r is not None:
            return False
        if r is not None and r < 1:
            return False
        if r is None and not S and not self.nat_closed:
            return False
        return self._mk(r, S) == d

    def label(self, d):
        if d.kind != "chain":
            return d.kind
        if d.param is None and not d.finite:
            return "N"
        if d.param is None:
            return "down(" + ",".join(sorted(map(str, d.finite))) + ")"
        return f"down({d.param})"

    def is_point(self, p):
        return isinstance(p, Pt) and ((p.tag == "n" and p.i >= 1) or p in self.tops)

    def points_upto(self, cutoff):
        return [N(i) for i in range(1, cutoff + 1)] + list(self.tops)

    def contains(self, d, p):
        r, S = self._parts(self.check(d))
        if p.tag == "n":
            return r is None or p.i <= r
        return p in S

    def leq(self, p, q):
        if p == q:
            return True
        if p.tag == "n" and q.tag == "n":
            return p.i <= q.i
        return p.tag == "n" and q in self.tops

    def closure_point(self, p):
        self.check_point(p)
        if p.tag == "n":
            return self._mk(p.i)
        return self._mk(None, {p})

    def union(self, a, b):
        (ra, Sa), (rb, Sb) = self._parts(self.check(a)), self._parts(self.check(b))
        return self._mk(_max_inf(ra, rb), Sa | Sb)

    def intersect(self, a, b):
        (ra, Sa), (rb, Sb) = self._parts(self.check(a)), self._parts(self.check(b))
        return self._mk(_min_inf(ra, rb), Sa & Sb)

    def up(self, p):
        if p.tag == "n":
            return UpperSet(frozenset(self.tops), frozenset({("ray", p.i)}))
        return UpperSet(frozenset({p}))

    def upper_bounds(self, d):
        r, S = self._parts(self.check(d))
        if r == 0 and not S:
            return EVERYTHING
        if S:
            return UpperSet(frozenset(S)) if len(S) == 1 else NOTHING
        if r is None:
            return UpperSet(frozenset(self.tops))
        return self.up(N(r))

    def piece_contains(self, piece, p):
        return p.tag == "n" and p.i >= piece[1]

    def piece_meet(self, a, b):
        return UpperSet(pieces=frozenset({("ray", max(a[1], b[1]))}))

    def piece_lower(self, piece):
        return self._mk(piece[1])

    def piece_least(self, piece):
        return N(piece[1])

    def global_lower(self):
        return self._mk(1)

    def nat(self) -> Closed:
        return self._mk(None)

    def irr_extras(self):
        return [self.nat()]

    def chains(self):
        return [NAT_CHAIN]

    def chain_members(self, chain, param, cutoff):
        return [N(i) for i in range(1, cutoff + 1)]

    def chain_closure(self, chain, param):
        return self.nat()

    def chain_upper_bounds(self, chain, param):
        return UpperSet(frozenset(self.tops))

    def chain_in(self, chain, param, d):
        return self._parts(self.check(d))[0] is None

    def complement_of_top(self):
        if len(self.tops) == 1 and frozenset() in self.closed_top_sets:
            return self.nat()
        return None

    def sample_descriptors(self, cutoff):
        out = [self.empty, self.all]
        out += [self._mk(r) for r in range(1, cutoff + 1)]
        for S in sorted(self.closed_top_sets, key=sorted):
            if S or self.nat_closed:
                out.append(self._mk(None, S))
        return _dedupe(out)


def _dedupe(items):
    seen, out = set(), []
    for d in items:
        if d not in seen:
            seen.add(d)
            out.append(d)
    return out


class DiscreteCountable(SpaceOracle):
    """An infinite set with the discrete specialization order.

    Closed sets are the finite sets and the whole space; with schemes enabled
    (co-countable case) also countable sets given by a named index scheme plus
    a finite part. The modelled points are x1, x2, ...; with the
    "uncountable" tag the carrier has further points that are never named.
    """

    order_discrete = True
    SCHEMES = {"indexed": lambda i: True, "even": lambda i: i % 2 == 0}

    def __init__(self, name, cardinality, schemes, grammar):
        self.name = name
        self.cardinality = cardinality
        self.schemes_enabled = schemes
        self.grammar = grammar

    def fin(self, pts) -> Closed:
        pts = frozenset(pts)
        return Closed(self.name, "fin", finite=pts) if pts else self.empty

    def countable(self, scheme, pts=()) -> Closed:
        test = self.SCHEMES[scheme]
        pts = frozenset(p for p in pts if not test(p.i))
        return Closed(self.name, "countable", finite=pts, scheme=scheme)

    def _mk(self, scheme, pts):
        return self.fin(pts) if scheme is None else self.countable(scheme, pts)

    def in_grammar(self, d):
        if d.kind in ("empty", "all"):
            return True
        if not all(self.is_point(p) for p in d.finite):
            return False
        if d.kind == "fin":
            return bool(d.finite) and d.scheme is None
        if d.kind == "countable":
            return self.schemes_enabled and d.scheme in self.SCHEMES and self.countable(d.scheme, d.finite) == d
        return False

    def label(self, d):
        if d.kind == "fin":
            return "{" + ",".join(str(p) for p in sorted(d.finite, key=lambda p: p.i)) + "}"
        if d.kind == "countable":
            extra = "+{" + ",".join(str(p) for p in sorted(d.finite, key=lambda p: p.i)) + "}" if d.finite else ""
            return d.scheme + extra
        return d.kind

    def is_point(self, p):
        return isinstance(p, Pt) and p.tag == "x" and p.i >= 1

    def points_upto(self, cutoff):
        return [Pt("x", i) for i in range(1, cutoff + 1)]

    def contains(self, d, p):
        d = self.check(d)
        if d.kind == "all":
            return True
        if d.kind == "empty":
            return False
        if p in d.finite:
            return True
        return d.kind == "countable" and self.SCHEMES[d.scheme](p.i)

    def leq(self, p, q):
        return p == q

    def closure_point(self, p):
        return self.fin({self.check_point(p)})

    def _scheme(self, d):
        return d.scheme if d.kind == "countable" else None

    def union(self, a, b):
        a, b = self.check(a), self.check(b)
        if "all" in (a.kind, b.kind):
            return self.all
        sa, sb = self._scheme(a), self._scheme(b)
        if sa and sb:
            scheme = sa if sa == sb else "indexed"
        else:
            scheme = sa or sb
        return self._mk(scheme, a.finite | b.finite)

    def intersect(self, a, b):
        a, b = self.check(a), self.check(b)
        if a.kind == "all":
            return b
        if b.kind == "all":
            return a
        sa, sb = self._scheme(a), self._scheme(b)
        if sa and sb:
            scheme = sa if sa == sb else "even"
            pts = {p for p in a.finite | b.finite if self.contains(a, p) and self.contains(b, p)}
            return self._mk(scheme, pts)
        pts = {p for p in a.finite | b.finite if self.contains(a, p) and self.contains(b, p)}
        return self.fin(pts)

    def up(self, p):
        return UpperSet(frozenset({p}))

    def upper_bounds(self, d):
        d = self.check(d)
        if d.kind == "empty":
            return EVERYTHING
        if d.kind == "fin" and len(d.finite) == 1:
            return UpperSet(d.finite)
        return NOTHING

    def global_lower(self):
        return self.empty

    def irr_extras(self):
        return [self.all]

    def sample_descriptors(self, cutoff):
        pts = self.points_upto(min(cutoff, 6))
        out = [self.empty, self.all]
        out += [self.fin({p}) for p in self.points_upto(cutoff)]
        out += [self.fin(c) for c in itertools.combinations(pts, 2)]
        out.append(self.fin(pts))
        if self.schemes_enabled:
            for s in sorted(self.SCHEMES):
                out.append(self.countable(s))
                out.append(self.countable(s, pts[:3]))
        return _dedupe(out)


class UpperY(SpaceOracle):
    """Y = X + N: X discrete, N a chain, no relations between them, upper topology.

    Closed sets are F u down(n) for finite F inside X and n >= 0, and Y itself.
    """

    def __init__(self, name, cardinality, grammar):
        self.name = name
        self.cardinality = cardinality
        self.grammar = grammar

    def _mk(self, F, n):
        F = frozenset(F)
        if not F and n == 0:
            return self.empty
        return Closed(self.name, "yset", finite=F, param=n)

    def _parts(self, d):
        return (frozenset(), 0) if d.kind == "empty" else (d.finite, d.param)

    def in_grammar(self, d):
        if d.kind in ("empty", "all"):
            return True
        return (d.kind == "yset" and isinstance(d.param, int) and d.param >= 0
                and all(p.tag == "x" and p.i >= 1 for p in d.finite) and self._mk(d.finite, d.param) == d)

    def label(self, d):
        if d.kind != "yset":
            return d.kind
        parts = [str(p) for p in sorted(d.finite, key=lambda p: p.i)]
        if d.param:
            parts.append(f"down({d.param})")
        return "{" + ",".join(parts) + "}" if d.param == 0 else "+".join(parts)

    def is_point(self, p):
        return isinstance(p, Pt) and p.tag in ("x", "n") and p.i >= 1

    def points_upto(self, cutoff):
        return [Pt("x", i) for i in range(1, cutoff + 1)] + [N(i) for i in range(1, cutoff + 1)]

    def contains(self, d, p):
        d = self.check(d)
        if d.kind in ("empty", "all"):
            return d.kind == "all"
        return p in d.finite if p.tag == "x" else p.i <= d.param

    def leq(self, p, q):
        return p == q or (p.tag == q.tag == "n" and p.i <= q.i)

    def closure_point(self, p):
        self.check_point(p)
        return self._mk({p}, 0) if p.tag == "x" else self._mk((), p.i)

    def union(self, a, b):
        a, b = self.check(a), self.check(b)
        if "all" in (a.kind, b.kind):
            return self.all
        (Fa, na), (Fb, nb) = self._parts(a), self._parts(b)
        return self._mk(Fa | Fb, max(na, nb))

    def intersect(self, a, b):
        a, b = self.check(a), self.check(b)
        if a.kind == "all":
            return b
        if b.kind == "all":
            return a
        (Fa, na), (Fb, nb) = self._parts(a), self._parts(b)
        return self._mk(Fa & Fb, min(na, nb))

    def up(self, p):
        return UpperSet(frozenset({p})) if p.tag == "x" else UpperSet(pieces=frozenset({("ray", p.i)}))

    def upper_bounds(self, d):
        d = self.check(d)
        if d.kind == "empty":
            return EVERYTHING
        if d.kind == "all":
            return NOTHING
        F, n = self._parts(d)
        if not F:
            return self.up(N(n))
        if len(F) == 1 and n == 0:
            return UpperSet(F)
        return NOTHING

    def piece_contains(self, piece, p):
        return p.tag == "n" and p.i >= piece[1]

    def piece_meet(self, a, b):
        return UpperSet(pieces=frozenset({("ray", max(a[1], b[1]))}))

    def piece_lower(self, piece):
        return self._mk((), piece[1])

    def piece_least(self, piece):
        return N(piece[1])

    def global_lower(self):
        return self.empty

    def irr_extras(self):
        return [self.all]

    def chains(self):
        return [NAT_CHAIN]

    def chain_members(self, chain, param, cutoff):
        return [N(i) for i in range(1, cutoff + 1)]

    def chain_closure(self, chain, param):
        return self.all

    def chain_upper_bounds(self, chain, param):
        return NOTHING

    def chain_in(self, chain, param, d):
        return self.check(d).kind == "all"

    def sample_descriptors(self, cutoff):
        xs = [Pt("x", i) for i in range(1, min(cutoff, 5) + 1)]
        out = [self.empty, self.all]
        out += [self.closure_point(p) for p in self.points_upto(cutoff)]
        for F in itertools.chain([()], itertools.combinations(xs, 1), itertools.combinations(xs, 2)):
            for n in (0, 1, 2, cutoff):
                out.append(self._mk(F, n))
        return _dedupe(out)


class Johnstone(SpaceOracle):
    """Scott space of N x (N + {inf}) with (j,k) <= (m,n) iff (j = m, k <= n) or (n = inf, k <= m).

    Closed grammar: band(r) u down(F) for r >= 0 and finite F, plus the whole
    space, where band(r) = {(j,k) : k <= r} is the set of finite points at
    height at most r. Descriptors keep r maximal and F an antichain outside
    the band.
    """

    def __init__(self, name="johnstone_scott"):
        self.name = name
        self.grammar = "band(r) u down(F) for finite F, and the whole space"

    # points: Pt("p", j, k) finite, Pt("w", n) for (n, inf)
    def is_point(self, p):
        if not isinstance(p, Pt):
            return False
        if p.tag == "p":
            return p.i >= 1 and p.j >= 1
        return p.tag == "w" and p.i >= 1

    def points_upto(self, cutoff):
        finite = [Pt("p", j, k) for j in range(1, cutoff + 1) for k in range(1, cutoff + 1)]
        return finite + [Pt("w", n) for n in range(1, cutoff + 1)]

    def leq(self, p, q):
        if p == q:
            return True
        if p.tag != "p":
            return False
        if q.tag == "p":
            return p.i == q.i and p.j <= q.j
        return p.i == q.i or p.j <= q.i

    @staticmethod
    def _in_band(p, r):
        return p.tag == "p" and p.j <= r

    def _mk(self, r, F) -> Closed:
        F = set(F)
        r = max([r] + [g.i for g in F if g.tag == "w"])
        F = {g for g in F if not self._in_band(g, r)}
        F = {g for g in F if not any(h != g and self.leq(g, h) for h in F)}
        if r == 0 and not F:
            return self.empty
        return Closed(self.name, "jset", finite=frozenset(F), param=r)

    def _parts(self, d):
        return (0, frozenset()) if d.kind == "empty" else (d.param, d.finite)

    def in_grammar(self, d):
        if d.kind in ("empty", "all"):
            return True
        return (d.kind == "jset" and isinstance(d.param, int) and d.param >= 0
                and all(self.is_point(g) for g in d.finite) and self._mk(d.param, d.finite) == d)

    def label(self, d):
        if d.kind != "jset":
            return d.kind
        parts = [f"band({d.param})"] if d.param else []
        parts += [f"down{g}" for g in sorted(d.finite)]
        return "+".join(parts)

    def contains(self, d, p):
        d = self.check(d)
        if d.kind in ("empty", "all"):
            return d.kind == "all"
        return self._in_band(p, d.param) or any(self.leq(p, g) for g in d.finite)

    def closure_point(self, p):
        return self._mk(0, {self.check_point(p)})

    def union(self, a, b):
        a, b = self.check(a), self.check(b)
        if "all" in (a.kind, b.kind):
            return self.all
        (ra, Fa), (rb, Fb) = self._parts(a), self._parts(b)
        return self._mk(max(ra, rb), Fa | Fb)

    def _band_meet_down(self, r, g):
        """band(r) intersected with down(g), as (band, generators)."""
        if r == 0:
            return 0, set()
        if g.tag == "p":
            k = min(g.j, r)
            return 0, {Pt("p", g.i, k)}
        return min(r, g.i), {Pt("p", g.i, r)}

    def _down_meet_down(self, g, h):
        if self.leq(g, h):
            return 0, {g}
        if self.leq(h, g):
            return 0, {h}
        if g.tag == "p" and h.tag == "p":
            return 0, set()
        if g.tag == "w" and h.tag == "w":
            lo = min(g.i, h.i)
            return lo, {Pt("p", g.i, h.i), Pt("p", h.i, g.i)}
        fin, inf = (g, h) if g.tag == "p" else (h, g)
        k = min(fin.j, inf.i)
        return 0, {Pt("p", fin.i, k)}

    def intersect(self, a, b):
        a, b = self.check(a), self.check(b)
        if a.kind == "all":
            return b
        if b.kind == "all":
            return a
        (ra, Fa), (rb, Fb) = self._parts(a), self._parts(b)
        band, gens = min(ra, rb), set()
        for g in Fb:
            r2, G = self._band_meet_down(ra, g)
            band, gens = max(band, r2), gens | G
        for g in Fa:
            r2, G = self._band_meet_down(rb, g)
            band, gens = max(band, r2), gens | G
        for g in Fa:
            for h in Fb:
                r2, G = self._down_meet_down(g, h)
                band, gens = max(band, r2), gens | G
        return self._mk(band, gens)

    def up(self, p):
        if p.tag == "w":
            return UpperSet(frozenset({p}))
        return UpperSet(frozenset({Pt("w", p.i)}), frozenset({("ray", p.i, p.j), ("tail", p.j)}))

    def upper_bounds(self, d):
        d = self.check(d)
        if d.kind == "empty":
            return EVERYTHING
        if d.kind == "all":
            return NOTHING
        r, F = self._parts(d)
        U = EVERYTHING
        if r > 0:
            U = UpperSet(pieces=frozenset({("tail", r)}))
        for g in sorted(F):
            U = self.meet_upper(U, self.up(g))
        return U

    def piece_contains(self, piece, p):
        if piece[0] == "ray":
            return p.tag == "p" and p.i == piece[1] and p.j >= piece[2]
        return p.tag == "w" and p.i >= piece[1]

    def piece_meet(self, a, b):
        if a[0] == b[0] == "tail":
            return UpperSet(pieces=frozenset({("tail", max(a[1], b[1]))}))
        if a[0] == b[0] == "ray" and a[1] == b[1]:
            return UpperSet(pieces=frozenset({("ray", a[1], max(a[2], b[2]))}))
        return NOTHING

    def piece_lower(self, piece):
        if piece[0] == "ray":
            return self.closure_point(Pt("p", piece[1], piece[2]))
        t = piece[1]
        return self._mk(t, {Pt("p", t, t + 1)})

    def piece_least(self, piece):
        return Pt("p", piece[1], piece[2]) if piece[0] == "ray" else None

    def global_lower(self):
        return self.empty

    def irr_extras(self):
        return [self.all]

    def chains(self):
        return [COLUMN_CHAIN]

    def chain_members(self, chain, param, cutoff):
        return [Pt("p", param, k) for k in range(1, cutoff + 1)]

    def chain_closure(self, chain, param):
        return self.closure_point(Pt("w", param))

    def chain_upper_bounds(self, chain, param):
        return UpperSet(frozenset({Pt("w", param)}))

    def chain_in(self, chain, param, d):
        d = self.check(d)
        return d.kind == "all" or (d.kind == "jset" and Pt("w", param) in d.finite)

    def band(self, r) -> Closed:
        return self._mk(r, ())

    def sample_descriptors(self, cutoff):
        out = [self.empty, self.all]
        out += [self.closure_point(p) for p in self.points_upto(cutoff)]
        small = min(cutoff, 5)
        for r in range(1, cutoff + 1):
            out.append(self._mk(r, ()))
            out.append(self._mk(r, {Pt("p", r, r + 1)}))
        for n in range(1, small + 1):
            for m in range(n + 1, small + 1):
                out.append(self._mk(0, {Pt("w", n), Pt("w", m)}))
                out.append(self._mk(0, {Pt("w", n), Pt("p", m, small)}))
            out.append(self._mk(2, {Pt("w", n)}))
        return _dedupe(out)


class NoetherianAntichain(SpaceOracle):
    """An infinite antichain a1, a2, ... with a bottom and a top added.

    Topology: upper topology plus the open set {top}. Closed sets are the
    empty set, {bot} u F for finite F inside the antichain, the carrier minus
    top ("base"), and the whole space.
    """

    def __init__(self, name="noetherian_antichain"):
        self.name = name
        self.grammar = "{bot} u F for finite F, the carrier minus top, and the whole space"

    def _mk(self, F):
        return Closed(self.name, "fin", finite=frozenset(F))

    @property
    def base(self):
        return Closed(self.name, "base")

    def in_grammar(self, d):
        if d.kind in ("empty", "all", "base"):
            return not d.finite
        return d.kind == "fin" and all(p.tag == "a" and p.i >= 1 for p in d.finite)

    def label(self, d):
        if d.kind == "fin":
            return "{" + ",".join(["bot"] + [str(p) for p in sorted(d.finite)]) + "}"
        return d.kind

    def is_point(self, p):
        return isinstance(p, Pt) and (p in (BOT, TOP) or (p.tag == "a" and p.i >= 1))

    def points_upto(self, cutoff):
        return [BOT] + [Pt("a", i) for i in range(1, cutoff + 1)] + [TOP]

    def _rank(self, d):
        return {"empty": 0, "fin": 1, "base": 2, "all": 3}[d.kind]

    def contains(self, d, p):
        d = self.check(d)
        if d.kind == "all":
            return True
        if d.kind == "base":
            return p != TOP
        if d.kind == "empty":
            return False
        return p == BOT or p in d.finite

    def leq(self, p, q):
        return p == q or p == BOT or q == TOP

    def closure_point(self, p):
        self.check_point(p)
        if p == TOP:
            return self.all
        return self._mk(() if p == BOT else {p})

    def union(self, a, b):
        a, b = self.check(a), self.check(b)
        if a.kind == b.kind == "fin":
            return self._mk(a.finite | b.finite)
        return max(a, b, key=self._rank)

    def intersect(self, a, b):
        a, b = self.check(a), self.check(b)
        if a.kind == b.kind == "fin":
            return self._mk(a.finite & b.finite)
        return min(a, b, key=self._rank)

    def up(self, p):
        if p == BOT:
            return EVERYTHING
        return UpperSet(frozenset({p, TOP}))

    def upper_bounds(self, d):
        d = self.check(d)
        if d.kind == "empty":
            return EVERYTHING
        if d.kind in ("all",):
            return UpperSet(frozenset({TOP}))
        if d.kind == "base" or len(d.finite) >= 2:
            return UpperSet(frozenset({TOP}))
        if not d.finite:
            return EVERYTHING
        (a,) = d.finite
        return UpperSet(frozenset({a, TOP}))

    def global_lower(self):
        return self._mk(())

    def generators(self, d):
        return d.finite | {BOT} if d.kind == "fin" else d.finite

    def irr_extras(self):
        return [self.base]

    def complement_of_top(self):
        return self.base

    def sample_descriptors(self, cutoff):
        pts = [Pt("a", i) for i in range(1, min(cutoff, 5) + 1)]
        out = [self.empty, self.all, self.base, self._mk(())]
        out += [self._mk({p}) for p in self.points_upto(cutoff) if p.tag == "a"]
        out += [self._mk(c) for c in itertools.combinations(pts, 2)]
        return _dedupe(out)


def build(name: str, **options) -> SpaceOracle:
    if name == "L_top":
        return ChainWithTops("L_top", [TOP_N], [(), (TOP_N,)],
                             "down(n), the naturals, the whole space, empty", **options)
    if name == "N_two_tops":
        return ChainWithTops("N_two_tops", [TOP1, TOP2], [(), (TOP1,), (TOP2,), (TOP1, TOP2)],
                             "down(n), the naturals, down(top1), down(top2), the whole space, empty",
                             **options)
    if name == "nat_scott":
        return ChainWithTops("nat_scott", [], [()], "down(n), the whole space, empty", **options)
    if name == "cofinite_nat":
        return DiscreteCountable("cofinite_nat", "countably_infinite", False,
                                 "finite sets and the whole space", **options)
    if name == "cocountable":
        return DiscreteCountable("cocountable", "uncountable", True,
                                 "finite sets, indexed countable schemes plus finite parts, the whole space",
                                 **options)
    if name in ("Y_upper", "Y2_upper"):
        card = "countably_infinite" if name == "Y_upper" else "uncountable"
        return UpperY(name, card, "F u down(n) for finite F in the discrete part, and the whole space",
                      **options)
    if name == "johnstone_scott":
        return Johnstone(**options)
    if name == "noetherian_antichain":
        return NoetherianAntichain(**options)
    raise InputError(f"unknown gallery space {name!r}")


GALLERY_NAMES = ("L_top", "N_two_tops", "cofinite_nat", "Y_upper", "johnstone_scott",
                 "nat_scott", "cocountable", "Y2_upper", "noetherian_antichain")
