"""Multigraded Betti numbers of ``S/M`` for monomial ideals ``M``.

``betti_table`` reads ``beta_{i,a}(S/M)`` off the reduced homology of the
upper Koszul simplicial complex ``K^a = {F squarefree : x^(a - F) in M}``:
``beta_{i,a}(S/M) = dim H~_{i-2}(K^a)`` for ``i >= 1`` and ``beta_{0,0} = 1``.
``taylor_betti_oracle`` gets the same numbers from the Taylor complex.
All ranks are exact (fraction-free integer elimination).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

from .monomial import MonomialIdeal, hilbert, is_extended_from_base, minimalize, monomial_colon

LATTICE_CAP = 24
TAYLOR_CAP = 12


class LatticeCapExceeded(RuntimeError):
    pass


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q of an integer matrix by Bareiss fraction-free elimination."""
    A = [list(r) for r in rows if any(r)]
    if not A:
        return 0
    nrows, ncols = len(A), len(A[0])
    rank, prev = 0, 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if A[r][col]), None)
        if pivot is None:
            continue
        A[rank], A[pivot] = A[pivot], A[rank]
        p = A[rank][col]
        for r in range(rank + 1, nrows):
            f = A[r][col]
            row, prow = A[r], A[rank]
            for c in range(col, ncols):
                row[c] = (p * row[c] - f * prow[c]) // prev
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def lcm_lattice(M: MonomialIdeal, cap: int = LATTICE_CAP) -> set:
    """All lcms of nonempty subsets of the minimal generators."""
    if len(M.gens) > cap:
        raise LatticeCapExceeded(f"{len(M.gens)} generators exceed the lattice cap {cap}")
    lattice: set = set()
    for g in M.gens:
        new = {g}
        for u in lattice:
            new.add(tuple(x if x > y else y for x, y in zip(u, g)))
        lattice |= new
    return lattice


def _boundary_rank(faces_hi: list, index_lo: dict) -> int:
    """Rank of the simplicial boundary from faces of size k to faces of size k - 1."""
    rows = []
    for F in faces_hi:
        row = [0] * len(index_lo)
        for pos in range(len(F)):
            G = F[:pos] + F[pos + 1:]
            row[index_lo[G]] = -1 if pos % 2 else 1
        rows.append(row)
    return integer_rank(rows)


def reduced_homology(faces: Sequence[tuple]) -> dict:
    """``{k: dim H~_k}`` (nonzero entries only) of a simplicial complex given by all its faces.

    Faces are sorted tuples of vertices; the empty face must be listed if present.
    """
    by_size: dict = defaultdict(list)
    for F in faces:
        by_size[len(F)].append(F)
    if not by_size:
        return {}
    top = max(by_size)
    ranks = {}
    for k in range(1, top + 1):
        lo = {F: n for n, F in enumerate(by_size[k - 1])}
        ranks[k] = _boundary_rank(by_size[k], lo) if by_size[k] and lo else 0
    out = {}
    for k in range(0, top + 1):
        h = len(by_size[k]) - ranks.get(k, 0) - ranks.get(k + 1, 0)
        if h:
            out[k - 1] = h
    return out


def upper_koszul_facets(M: MonomialIdeal, alpha: tuple) -> list:
    """Facets of ``K^alpha``: for each generator ``g | x^alpha`` the set ``{k : g_k < alpha_k}``."""
    sets = set()
    for g in M.gens:
        if all(x <= y for x, y in zip(g, alpha)):
            sets.add(frozenset(k for k, (x, y) in enumerate(zip(g, alpha)) if x < y))
    return [S for S in sets if not any(S < T for T in sets)]


def upper_koszul_faces(M: MonomialIdeal, alpha: tuple) -> list:
    faces = set()
    for S in upper_koszul_facets(M, alpha):
        verts = sorted(S)
        for size in range(len(verts) + 1):
            faces.update(combinations(verts, size))
    return sorted(faces, key=lambda F: (len(F), F))


def _koszul_homology(M: MonomialIdeal, alpha: tuple) -> dict:
    facets = upper_koszul_facets(M, alpha)
    if not facets:
        return {}
    # a cone over a common vertex (or a full simplex) has no reduced homology
    if frozenset.intersection(*facets):
        return {}
    faces = set()
    for S in facets:
        verts = sorted(S)
        for size in range(len(verts) + 1):
            faces.update(combinations(verts, size))
    return reduced_homology(faces)


@dataclass
class BettiTable:
    """Multigraded Betti numbers of ``S/M``: ``entries[(i, multidegree)] = rank``."""

    nvars: int
    entries: dict
    dim: Optional[int] = None
    totals: dict = field(init=False)

    def __post_init__(self):
        totals: dict = defaultdict(int)
        for (i, _), n in self.entries.items():
            totals[i] += n
        self.totals = dict(sorted(totals.items()))

    @property
    def pd(self) -> int:
        return max(self.totals, default=0)

    @property
    def depth(self) -> int:
        return self.nvars - self.pd

    @property
    def is_cm(self) -> bool:
        return self.dim is not None and self.depth == self.dim

    @property
    def acm_margin(self) -> Optional[int]:
        return None if self.dim is None else self.depth - (self.dim - 1)

    def graded(self) -> dict:
        """Betti numbers collapsed to the standard grading: ``{(i, degree): rank}``."""
        out: dict = defaultdict(int)
        for (i, a), n in self.entries.items():
            out[(i, sum(a))] += n
        return dict(sorted(out.items()))


def betti_table(M: MonomialIdeal, cap: int = LATTICE_CAP, with_dim: bool = True) -> BettiTable:
    n = M.nvars
    entries = {(0, (0,) * n): 1}
    if M.is_unit:
        entries = {}
    elif M.gens:
        for alpha in sorted(lcm_lattice(M, cap)):
            for k, h in _koszul_homology(M, alpha).items():
                entries[(k + 2, alpha)] = h
    dim = hilbert(M).dimension if with_dim else None
    return BettiTable(n, entries, dim)


def taylor_betti_oracle(M: MonomialIdeal, cap: int = TAYLOR_CAP) -> BettiTable:
    """Betti numbers from the Taylor resolution tensored with the field, degree by degree."""
    gens = M.gens
    if len(gens) > cap:
        raise LatticeCapExceeded(f"{len(gens)} generators exceed the Taylor cap {cap}")
    n = M.nvars
    groups: dict = defaultdict(list)
    for size in range(len(gens) + 1):
        for S in combinations(range(len(gens)), size):
            a = (0,) * n
            for s in S:
                a = tuple(x if x > y else y for x, y in zip(a, gens[s]))
            groups[a].append(S)
    entries = {}
    for a, subsets in groups.items():
        by_size: dict = defaultdict(list)
        for S in subsets:
            by_size[len(S)].append(S)
        top = max(by_size)
        ranks = {}
        for k in range(1, top + 1):
            lo = {S: idx for idx, S in enumerate(by_size[k - 1])}
            if not by_size[k] or not lo:
                continue
            rows = []
            for S in by_size[k]:
                row = [0] * len(lo)
                for pos in range(len(S)):
                    T = S[:pos] + S[pos + 1:]
                    if T in lo:
                        row[lo[T]] = -1 if pos % 2 else 1
                rows.append(row)
            ranks[k] = integer_rank(rows)
        for k in range(top + 1):
            h = len(by_size[k]) - ranks.get(k, 0) - ranks.get(k + 1, 0)
            if h:
                entries[(k, a)] = h
    return BettiTable(n, entries, hilbert(M).dimension)


def depth(M: MonomialIdeal) -> int:
    return betti_table(M, with_dim=False).depth


@dataclass(frozen=True)
class DepthStep:
    j: int
    c: Optional[tuple]
    colon_extended: Optional[bool]
    depth: int


def depth_chain_report(spec, chain) -> list:
    """For each filtration step: is the colon of the previous initial ideal extended, and the depth."""
    n = spec.nvars
    out = []
    prev = None
    for step in chain:
        ini = minimalize((g.lead for g in step.theta), n)
        extended = None
        if prev is not None:
            new_lead = step.theta[-1].lead
            extended = is_extended_from_base(monomial_colon(prev, new_lead), spec.t_block)
        out.append(DepthStep(step.j, step.c, extended, depth(ini)))
        prev = ini
    return out
