"""Coefficient-free Buchberger engine for pure-difference binomial ideals.

Every generator is ``u - v`` or a monomial ``u``.  S-polynomials and
reductions of such polynomials are again of that form (or zero), so no field
arithmetic is needed and every result holds over any coefficient field.
"""

from __future__ import annotations

import heapq
import os
from dataclasses import dataclass, replace
from operator import le
from typing import Iterable, Optional, Sequence

from .algebra import (
    Binomial,
    TermOrder,
    block_eliminate,
    cheapest_variable,
    is_coprime,
    lcm,
    orient_binomial,
)


class CapExceeded(RuntimeError):
    """A resource cap stopped the computation; the instance is too large."""


@dataclass(frozen=True)
class Caps:
    max_spairs: int = 200_000
    max_basis: int = 5_000
    max_exponent: int = 100_000

    @classmethod
    def from_env(cls, var: str = "REES_ACI_CAPS") -> "Caps":
        """Defaults overridden by ``max_spairs=N,max_basis=N,...`` in the environment."""
        raw = os.environ.get(var, "").strip()
        if not raw:
            return cls()
        return cls().override(dict(item.split("=", 1) for item in raw.split(",") if item))

    def override(self, values: dict) -> "Caps":
        known = {"max_spairs", "max_basis", "max_exponent"}
        unknown = set(values) - known
        if unknown:
            raise ValueError(f"unknown caps: {sorted(unknown)}")
        return replace(self, **{k.strip(): int(v) for k, v in values.items()})


DEFAULT_CAPS = Caps()


@dataclass(frozen=True)
class GroebnerBasis:
    order: TermOrder
    members: tuple
    reduced: bool = False

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    @property
    def leads(self) -> tuple:
        return tuple(g.lead for g in self.members)


def _divides(u, v) -> bool:
    return all(map(le, u, v))


def _find_reducer(p, G):
    for g in G:
        if _divides(g.lead, p):
            return g
    return None


def _replace(p, g):
    """The term ``p`` after one reduction step by ``g`` (``None`` if it vanishes)."""
    if g.trail is None:
        return None
    return tuple(x - y + z for x, y, z in zip(p, g.lead, g.trail))


def spoly(f: Binomial, g: Binomial, order: TermOrder) -> Optional[Binomial]:
    """S-polynomial of ``f`` and ``g``; ``None`` when it vanishes."""
    m = lcm(f.lead, g.lead)
    p = None if f.trail is None else tuple(x - y + z for x, y, z in zip(m, f.lead, f.trail))
    q = None if g.trail is None else tuple(x - y + z for x, y, z in zip(m, g.lead, g.trail))
    if p is None and q is None:
        return None
    if p is None:
        return Binomial(q)
    return orient_binomial(order, p, q)


def reduce_full(f: Optional[Binomial], G: Sequence[Binomial], order: TermOrder) -> Optional[Binomial]:
    """Normal form of ``f`` modulo ``G``: no term divisible by a leading term of ``G``.

    Reducers are tried in list order and the leading term is reduced first,
    so the result is deterministic.
    """
    if f is None:
        return None
    key = order.key
    p, q = f.lead, f.trail
    while True:
        if q is not None and key(q) > key(p):
            p, q = q, p
        g = _find_reducer(p, G)
        if g is not None:
            p = _replace(p, g)
            if p is None:
                if q is None:
                    return None
                p, q = q, None
            elif p == q:
                return None
            continue
        if q is None:
            return Binomial(p)
        g = _find_reducer(q, G)
        if g is None:
            return Binomial(p, q)
        q = _replace(q, g)
        if q == p:
            return None


def _reduce_term(p, G):
    while p is not None:
        g = _find_reducer(p, G)
        if g is None:
            return p
        p = _replace(p, g)
    return None


def _pair_key(G, i, j, key):
    m = lcm(G[i].lead, G[j].lead)
    return (sum(m), key(m), i, j)


def buchberger(gens: Iterable[Binomial], order: TermOrder, caps: Caps = DEFAULT_CAPS) -> GroebnerBasis:
    """A Groebner basis containing ``gens``.

    Pairs are chosen by the normal strategy (least lcm degree, ties broken by
    ``order`` on the lcm) and pruned with the Gebauer-Moeller criteria.
    """
    key = order.key
    G: list = []
    pairs: list = []
    spairs = 0

    def add(h):
        nonlocal pairs
        if len(G) >= caps.max_basis:
            raise CapExceeded(f"basis size exceeded {caps.max_basis}")
        if max(h.lead) > caps.max_exponent:
            raise CapExceeded(f"exponent exceeded {caps.max_exponent}")
        k = len(G)
        lh = h.lead
        # old pairs whose lcm is a proper multiple through the new lead
        kept = []
        for entry in pairs:
            i, j = entry[2], entry[3]
            m = lcm(G[i].lead, G[j].lead)
            if _divides(lh, m) and m != lcm(G[i].lead, lh) and m != lcm(G[j].lead, lh):
                continue
            kept.append(entry)
        by_lcm: dict = {}
        for i, g in enumerate(G):
            by_lcm.setdefault(lcm(g.lead, lh), []).append(i)
        minimal: list = []
        for m in sorted(by_lcm, key=key):
            if all(not _divides(n, m) for n in minimal):
                minimal.append(m)
        for m in minimal:
            idx = by_lcm[m]
            if any(is_coprime(G[i].lead, lh) for i in idx):
                continue
            kept.append(_pair_key(G + [h], min(idx), k, key))
        heapq.heapify(kept)
        pairs = kept
        G.append(h)

    for f in gens:
        if f is not None:
            add(orient_binomial(order, f.lead, f.trail))
    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        spairs += 1
        if spairs > caps.max_spairs:
            raise CapExceeded(f"S-pair budget {caps.max_spairs} exhausted")
        r = reduce_full(spoly(G[i], G[j], order), G, order)
        if r is not None:
            add(r)
    return GroebnerBasis(order, tuple(G), reduced=False)


def reduced_basis(G: GroebnerBasis) -> GroebnerBasis:
    """The unique reduced Groebner basis, sorted by increasing leading term."""
    key = G.order.key
    members = sorted((g for g in G.members if g is not None), key=lambda g: key(g.lead))
    minimal: list = []
    for g in members:
        if all(not _divides(h.lead, g.lead) for h in minimal):
            minimal.append(g)
    out = []
    for g in minimal:
        t = None if g.trail is None else _reduce_term(g.trail, minimal)
        out.append(Binomial(g.lead, t))
    return GroebnerBasis(G.order, tuple(out), reduced=True)


def groebner(gens: Iterable[Binomial], order: TermOrder, caps: Caps = DEFAULT_CAPS) -> GroebnerBasis:
    return reduced_basis(buchberger(gens, order, caps))


def find_bad_spair(G: Sequence[Binomial], order: TermOrder, start: int = 0,
                   coprime_criterion: bool = False):
    """First S-pair ``(i, j, remainder)`` that does not reduce to zero, else ``None``.

    Only pairs with ``j >= start`` are examined: if ``G[:start]`` is already
    known to be a basis its own pairs reduce to zero modulo the larger set.
    With ``coprime_criterion`` pairs with coprime leading terms are skipped.
    """
    G = [orient_binomial(order, g.lead, g.trail) for g in G]
    for j in range(start, len(G)):
        for i in range(j):
            if coprime_criterion and is_coprime(G[i].lead, G[j].lead):
                continue
            r = reduce_full(spoly(G[i], G[j], order), G, order)
            if r is not None:
                return i, j, r
    return None


def is_groebner(G: Sequence[Binomial], order: TermOrder) -> bool:
    return find_bad_spair(G, order) is None


def membership(f: Binomial, G: GroebnerBasis) -> bool:
    return reduce_full(orient_binomial(G.order, f.lead, f.trail), G.members, G.order) is None


def ideal_equal(G1: GroebnerBasis, G2: GroebnerBasis, caps: Caps = DEFAULT_CAPS) -> bool:
    """Equal ideals iff equal reduced bases under a common order."""
    R1 = G1 if G1.reduced else reduced_basis(G1)
    if G2.order == G1.order:
        R2 = G2 if G2.reduced else reduced_basis(G2)
    else:
        R2 = groebner(G2.members, G1.order, caps)
    return R1.members == R2.members


def drop_coordinates(u, indices: Sequence[int]):
    drop = set(indices)
    return tuple(x for k, x in enumerate(u) if k not in drop)


def eliminate(gens: Iterable[Binomial], elim: Sequence[int], rest: TermOrder,
              caps: Caps = DEFAULT_CAPS) -> list:
    """Generators of the ideal intersected with the subring free of ``elim``.

    Returned binomials have the eliminated coordinates removed; they are the
    reduced basis under the restriction of ``rest``.
    """
    elim = tuple(elim)
    if not elim:
        return list(groebner(gens, rest, caps).members)
    G = groebner(gens, block_eliminate(elim, rest), caps)
    out = []
    for g in G.members:
        if any(g.lead[k] for k in elim):
            continue
        lead = drop_coordinates(g.lead, elim)
        trail = None if g.trail is None else drop_coordinates(g.trail, elim)
        out.append(Binomial(lead, trail))
    return out


def is_homogeneous(gens: Iterable[Binomial], weights: Sequence[int]) -> bool:
    for g in gens:
        if g.trail is not None:
            if sum(w * x for w, x in zip(weights, g.lead)) != sum(w * x for w, x in zip(weights, g.trail)):
                return False
    return True


def _divide_out(g: Binomial, v: int) -> Binomial:
    k = g.lead[v] if g.trail is None else min(g.lead[v], g.trail[v])
    if k == 0:
        return g
    lead = g.lead[:v] + (g.lead[v] - k,) + g.lead[v + 1:]
    if g.trail is None:
        return Binomial(lead)
    return Binomial(lead, g.trail[:v] + (g.trail[v] - k,) + g.trail[v + 1:])


def saturate(gens: Iterable[Binomial], variables: Sequence[int], order: TermOrder,
             grading: Optional[Sequence[int]] = None, caps: Caps = DEFAULT_CAPS) -> GroebnerBasis:
    """Reduced basis (under ``order``) of ``J : (prod variables)^inf``.

    One variable at a time: compute a basis under reverse lex with that
    variable cheapest, strip its largest common power from every member and
    repeat until nothing changes.  The generators must be homogeneous for the
    positive ``grading`` (default: standard grading).
    """
    current = [g for g in gens if g is not None]
    if not current:
        return GroebnerBasis(order, (), reduced=True)
    n = len(current[0].lead)
    weights = tuple(grading) if grading is not None else (1,) * n
    if min(weights) <= 0:
        raise ValueError("grading must be positive")
    if not is_homogeneous(current, weights):
        raise ValueError("generators are not homogeneous for the grading")
    for v in variables:
        o = cheapest_variable(v, n, weights)
        while True:
            G = groebner(current, o, caps).members
            stripped = [_divide_out(g, v) for g in G]
            if stripped == list(G):
                break
            current = stripped
        current = list(G)
    return groebner(current, order, caps)


def colon_by_monomial(gens: Iterable[Binomial], mono, order: TermOrder,
                      caps: Caps = DEFAULT_CAPS) -> GroebnerBasis:
    """Reduced basis of ``J : mono`` via ``J ∩ <mono>`` with a tag variable.

    The tag ``t`` is appended as a new heaviest coordinate, ``{t g} ∪ {mono - t mono}``
    is eliminated with respect to ``t`` and the survivors are divided by ``mono``.
    """
    gens = [g for g in gens if g is not None]
    mono = tuple(mono)
    if not any(mono) or not gens:
        return groebner(gens, order, caps)
    n = len(mono)
    tagged = [Binomial(g.lead + (1,), None if g.trail is None else g.trail + (1,)) for g in gens]
    tagged.append(Binomial(mono + (1,), mono + (0,)))
    inter = eliminate(tagged, (n,), order, caps)
    quotients = []
    for g in inter:
        lead = tuple(x - y for x, y in zip(g.lead, mono))
        trail = None if g.trail is None else tuple(x - y for x, y in zip(g.trail, mono))
        assert min(lead) >= 0 and (trail is None or min(trail) >= 0)
        quotients.append(Binomial(lead, trail))
    return groebner(quotients, order, caps)


def defining_ideal_oracle(spec, caps: Caps = DEFAULT_CAPS) -> GroebnerBasis:
    """Reduced tau-basis of the Rees ideal, by eliminating ``Z`` from the graph ideal."""
    from .instance import graph_order, oracle_graph_generators

    z = 2 * spec.m + 1
    G = groebner(oracle_graph_generators(spec), graph_order(spec), caps)
    members = [Binomial(g.lead[:z], None if g.trail is None else g.trail[:z])
               for g in G.members if g.lead[z] == 0]
    return reduced_basis(GroebnerBasis(spec.order, tuple(members)))
