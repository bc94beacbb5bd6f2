"""Monomial ideals: minimal generators, colons, powers, reduction numbers, Hilbert series."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .algebra import Binomial, gcd, lex, mul
from .groebner import DEFAULT_CAPS, Caps, groebner, reduce_full


@dataclass(frozen=True)
class MonomialIdeal:
    nvars: int
    gens: tuple

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __contains__(self, u) -> bool:
        return any(all(x <= y for x, y in zip(g, u)) for g in self.gens)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return any(not any(g) for g in self.gens)


def minimalize(monos: Iterable, nvars: Optional[int] = None) -> MonomialIdeal:
    """Divisibility-minimal generators, sorted by degree then lexicographically."""
    monos = sorted({tuple(u) for u in monos}, key=lambda u: (sum(u), u))
    if nvars is None:
        if not monos:
            raise ValueError("nvars is required for the zero ideal")
        nvars = len(monos[0])
    kept: list = []
    for u in monos:
        if len(u) != nvars:
            raise ValueError("monomials of different lengths")
        if not any(all(x <= y for x, y in zip(g, u)) for g in kept):
            kept.append(u)
    return MonomialIdeal(nvars, tuple(sorted(kept)))


def unit_ideal(nvars: int) -> MonomialIdeal:
    return MonomialIdeal(nvars, ((0,) * nvars,))


def monomial_colon(M: MonomialIdeal, mono) -> MonomialIdeal:
    """``M : mono`` generated by ``g / gcd(g, mono)``."""
    mono = tuple(mono)
    return minimalize((tuple(x - y for x, y in zip(g, gcd(g, mono))) for g in M.gens), M.nvars)


def ideal_sum(M: MonomialIdeal, N: MonomialIdeal) -> MonomialIdeal:
    return minimalize(M.gens + N.gens, M.nvars)


def product(M: MonomialIdeal, N: MonomialIdeal) -> MonomialIdeal:
    return minimalize((mul(u, v) for u in M.gens for v in N.gens), M.nvars)


def ideal_power(M: MonomialIdeal, n: int) -> MonomialIdeal:
    if n < 0:
        raise ValueError("negative power")
    P = unit_ideal(M.nvars)
    for _ in range(n):
        P = product(P, M)
    return P


def is_subideal(M: MonomialIdeal, N: MonomialIdeal) -> bool:
    return all(u in N for u in M.gens)


def is_extended_from_base(M: MonomialIdeal, base: Sequence[int]) -> bool:
    """Every minimal generator involves only the ``base`` coordinates."""
    base = set(base)
    return all(all(x == 0 or k in base for k, x in enumerate(g)) for g in M.gens)


def initial_ideal(basis: Iterable[Binomial], nvars: int) -> MonomialIdeal:
    return minimalize((g.lead for g in basis), nvars)


class ReductionError(ValueError):
    """The candidate is not contained in the ideal or the cap was reached."""


def reduction_number(I: MonomialIdeal, J, cap: int, caps: Caps = DEFAULT_CAPS) -> int:
    """Least ``n >= 0`` with ``J I^n = I^(n+1)``.

    ``J`` is a :class:`MonomialIdeal` (exact monomial test) or a list of
    binomials in the same variables (Groebner membership test).
    """
    n = I.nvars
    if isinstance(J, MonomialIdeal):
        if not is_subideal(J, I):
            raise ReductionError("J is not contained in I")
        power = unit_ideal(n)
        for k in range(cap + 1):
            nxt = product(power, I)
            if is_subideal(nxt, product(J, power)):
                return k
            power = nxt
        raise ReductionError(f"no reduction number up to cap {cap}")
    J = list(J)
    if not all(t in I for g in J for t in g.terms()):
        raise ReductionError("J is not contained in I")
    order = lex(range(n))
    power = unit_ideal(n)
    for k in range(cap + 1):
        nxt = product(power, I)
        gens = [Binomial(mul(g.lead, u), None if g.trail is None else mul(g.trail, u))
                for g in J for u in power.gens]
        G = groebner(gens, order, caps)
        if all(reduce_full(Binomial(u), G.members, order) is None for u in nxt.gens):
            return k
        power = nxt
    raise ReductionError(f"no reduction number up to cap {cap}")


# Hilbert series ---------------------------------------------------------------

def _poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                out[i + j] += x * y
    return out


def _poly_add(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, y in enumerate(q):
        out[i] += y
    return out


def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def hilbert_numerator(M: MonomialIdeal) -> list:
    """Coefficients ``K(t)`` with ``HS(S/M) = K(t) / (1 - t)^nvars`` (all variables of degree 1)."""
    return _trim(_numerator(M.gens))


def _numerator(gens):
    if not gens:
        return [1]
    if any(not any(g) for g in gens):
        return [0]
    # pairwise coprime generators: K = prod (1 - t^deg g)
    support = [0] * len(gens[0])
    coprime = True
    for g in gens:
        for k, x in enumerate(g):
            if x:
                if support[k]:
                    coprime = False
                    break
                support[k] = 1
        if not coprime:
            break
    if coprime:
        out = [1]
        for g in gens:
            d = sum(g)
            out = _poly_mul(out, [1] + [0] * (d - 1) + [-1])
        return out
    # pivot on the variable shared by most generators
    counts = [0] * len(gens[0])
    for g in gens:
        for k, x in enumerate(g):
            if x:
                counts[k] += 1
    v = max(range(len(counts)), key=lambda k: counts[k])
    p = tuple(1 if k == v else 0 for k in range(len(counts)))
    with_p = minimalize([g for g in gens if not g[v]] + [p]).gens
    colon = minimalize(tuple(x - y for x, y in zip(g, gcd(g, p))) for g in gens).gens
    # HS(S/M) = HS(S/(M + p)) + t * HS(S/(M : p))
    return _poly_add(_numerator(with_p), [0] + _numerator(colon))


@dataclass(frozen=True)
class HilbertData:
    numerator: tuple
    reduced_numerator: tuple
    nvars: int
    dimension: int
    multiplicity: int

    @property
    def hilbert_polynomial_degree(self) -> int:
        return self.dimension - 1


def hilbert(M: MonomialIdeal) -> HilbertData:
    """Hilbert series data of ``S/M`` under the standard grading."""
    num = hilbert_numerator(M)
    if num == [0]:
        return HilbertData((0,), (0,), M.nvars, -1, 0)
    q = list(num)
    k = 0
    while sum(q) == 0:
        # divide by (1 - t)
        out, acc = [], 0
        for c in q[:-1]:
            acc += c
            out.append(acc)
        q = out
        k += 1
    return HilbertData(tuple(num), tuple(q), M.nvars, M.nvars - k, sum(q))


def hilbert_function(M: MonomialIdeal, d: int) -> int:
    """Value of the Hilbert function of ``S/M`` in degree ``d`` from the series."""
    from math import comb

    num = hilbert_numerator(M)
    n = M.nvars
    return sum(c * comb(d - i + n - 1, n - 1) for i, c in enumerate(num) if i <= d)


@dataclass(frozen=True)
class SocleData:
    socle_degree: int
    secondary_elimination_degree: int
    colon_jb: MonomialIdeal


def socle_and_degrees(spec) -> SocleData:
    """``J : T^b`` for ``J = <T_i^|b|>``, the socle degree of its quotient and ``(m-1)(|b|-1)``."""
    if not spec.equi_generated:
        raise ValueError("socle computation needs an equi-generated instance")
    m, s = spec.m, spec.bsum
    J = MonomialIdeal(m, tuple(tuple(s if k == i else 0 for k in range(m)) for i in range(m)))
    colon = monomial_colon(J, spec.b)
    socle = sum(max(g) - 1 for g in colon.gens)
    return SocleData(socle, (m - 1) * (s - 1), colon)


def t_power_ideal(m: int, exponents: Sequence[int]) -> MonomialIdeal:
    return minimalize([tuple(e if k == i else 0 for k in range(m)) for i, e in enumerate(exponents)], m)


def base_ideal(spec) -> MonomialIdeal:
    """The ideal ``I`` itself in ``R``."""
    gens = [tuple(a if k == i else 0 for k in range(spec.m)) for i, a in enumerate(spec.a)]
    return minimalize(gens + [tuple(spec.b)], spec.m)

