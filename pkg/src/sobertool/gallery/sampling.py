"""
Finite truncations of gallery oracles.

A truncation keeps the points whose code index is at most the cutoff and
intersects every sampled closed descriptor with that carrier. The oracle's
answers are then compared with what the finite model says.
"""

from __future__ import annotations

import itertools
import random

from ..errors import InputError
from ..finite import ClassificationReport, FiniteSpace, classify
from .base import SpaceOracle, Truncation
from .classify import classify_symbolic

MIN_CUTOFF = 4
PAIR_SAMPLES = 400
LIMIT_MODEL_POINTS = 6
SEED = 20240601


def _descriptor_pool(O: SpaceOracle, points, cutoff) -> list:
    pool = list(O.sample_descriptors(cutoff))
    pool += [O.closure_point(p) for p in points]
    pool += list(O.irr_extras())
    for chain in O.chains():
        for param in O.chain_params(chain, cutoff):
            pool.append(O.chain_closure(chain, param))
    seen, out = set(), []
    for d in pool:
        if d not in seen:
            seen.add(d)
            out.append(d)
    return out


def _limit_model(O, pool, cutoff):
    """The largest sub-truncation with at most LIMIT_MODEL_POINTS points, as a finite space."""
    best = None
    for c in range(1, cutoff + 1):
        pts = O.points_upto(c)
        if len(pts) <= LIMIT_MODEL_POINTS:
            best = (c, pts)
    if best is None:
        return None, None
    c, pts = best
    names = [str(p) for p in pts]
    closed = [[str(p) for p in pts if O.contains(d, p)] for d in pool]
    return c, FiniteSpace(names, closed, generate=True)


def consistency_sample(O: SpaceOracle, cutoff: int, symbolic: ClassificationReport = None) -> dict:
    """Compare an oracle with its finite truncation at the given cutoff.

    Checks union and intersection on random descriptor pairs, subset against
    pointwise containment, the order against the truncated specialization
    order, upper-bound soundness, irreducible inventory restrictions and
    chain representatives. Flags on which the small finite model differs from
    the symbolic classification are listed as limit-only properties.
    """
    if not isinstance(cutoff, int) or cutoff < MIN_CUTOFF:
        raise InputError(f"cutoff must be an integer >= {MIN_CUTOFF}, got {cutoff!r}")
    points = O.points_upto(cutoff)
    trunc = Truncation(points)
    pool = _descriptor_pool(O, points, cutoff)
    masks = {d: trunc.mask(O, d) for d in pool}
    membership, order, bounds = [], [], []

    def mask_of(d):
        if d not in masks:
            masks[d] = trunc.mask(O, d)
        return masks[d]

    rng = random.Random(SEED)
    pairs = list(itertools.combinations(pool, 2))
    if len(pairs) > PAIR_SAMPLES:
        pairs = rng.sample(pairs, PAIR_SAMPLES)
    for a, b in pairs:
        ma, mb = masks[a], masks[b]
        if mask_of(O.union(a, b)) != ma | mb:
            membership.append(f"union of {O.label(a)} and {O.label(b)}")
        if mask_of(O.intersect(a, b)) != ma & mb:
            membership.append(f"intersection of {O.label(a)} and {O.label(b)}")
        sub_ab, sub_ba = O.is_subset(a, b), O.is_subset(b, a)
        if sub_ab and ma & ~mb:
            membership.append(f"{O.label(a)} is a subset of {O.label(b)} but not pointwise")
        if sub_ab and sub_ba and a != b:
            membership.append(f"{O.label(a)} and {O.label(b)} are mutual subsets but different")
    for d in pool:
        if not O.is_subset(d, d):
            membership.append(f"{O.label(d)} is not a subset of itself")

    index = trunc.index
    down = {}
    for q in points:
        m = 0
        for p in points:
            if O.leq(p, q):
                m |= 1 << index[p]
        down[q] = m
    for q in points:
        if masks[O.closure_point(q)] != down[q]:
            order.append(f"closure of {q} differs from the down-set of {q} in the truncation")
    for d in pool:
        m = masks[d]
        for q in points:
            if m >> index[q] & 1 and down[q] & ~m:
                order.append(f"{O.label(d)} is not a lower set at {q}")
                break
        U = O.upper_bounds(d)
        for q in points:
            if O.upper_contains(U, q) and m & ~down[q]:
                bounds.append(f"{q} is listed as an upper bound of {O.label(d)} but is not one")
                break

    irr_rows = []
    for E in O.irr_extras():
        m = masks[E]
        lower = all(not (m >> index[q] & 1) or not (down[q] & ~m) for q in points)
        irr_rows.append({"member": O.label(E), "restriction_size": bin(m).count("1"), "lower_set": lower})
        if not lower:
            order.append(f"irreducible member {O.label(E)} restricts to a non-lower set")

    chain_rows = []
    for chain in O.chains():
        for param in O.chain_params(chain, cutoff):
            members = O.chain_members(chain, param, cutoff)
            directed = all(O.leq(a, b) or O.leq(b, a) for a, b in itertools.combinations(members, 2))
            chain_rows.append({"chain": chain.name, "param": param, "directed": directed})
            if not directed:
                order.append(f"chain {chain.name}({param}) is not directed")

    limit_cutoff, model = _limit_model(O, pool, cutoff)
    limit_only = []
    if model is not None:
        finite_report = classify(model)
        if symbolic is None:
            symbolic = classify_symbolic(O)
        for flag in ClassificationReport.FLAGS:
            sym, fin = getattr(symbolic, flag), getattr(finite_report, flag)
            if sym is not None and sym != fin:
                limit_only.append({"flag": flag, "symbolic": sym, "finite_model": fin})

    return {
        "space": O.name,
        "cutoff": cutoff,
        "points": len(points),
        "descriptors": len(pool),
        "pairs_checked": len(pairs),
        "disagreements": {"membership": membership, "order": order, "bounds": bounds},
        "irreducible_restrictions": irr_rows,
        "chains": chain_rows,
        "limit_model_cutoff": limit_cutoff,
        "limit_only_properties": limit_only,
        "ok": not (membership or order or bounds),
    }
