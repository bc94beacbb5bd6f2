"""Instances ``I = <T1^a1, ..., Tm^am, T^b>`` and the generator families of their Rees ideal.

Layout of the ambient ring ``S``: ``T1..Tm, X1..Xm, W`` (``X_{m+1} = W``).
X̃-monomials are length ``m + 1`` vectors ``(X1..Xm, W)``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .algebra import (
    Binomial,
    Layout,
    TermOrder,
    block_eliminate,
    gcd,
    leq_componentwise,
    orient_binomial,
    tau,
    tau_prime_key,
)

MAX_EXPONENT = 64


class InstanceError(ValueError):
    """The data (m, a, b) does not define a valid instance."""


@dataclass(frozen=True)
class InstanceSpec:
    m: int
    a: tuple
    b: tuple
    permissive: bool = False

    @property
    def bsum(self) -> int:
        return sum(self.b)

    @property
    def amin(self) -> int:
        return min(self.a)

    @property
    def equi_generated(self) -> bool:
        return all(x == self.bsum for x in self.a)

    @property
    def b_gcd(self) -> int:
        return math.gcd(*self.b)

    @property
    def sort_permutation(self) -> tuple:
        """Indices that sort ``b`` ascending (stable)."""
        return tuple(sorted(range(self.m), key=lambda i: self.b[i]))

    @property
    def layout(self) -> Layout:
        return Layout.rees(self.m)

    @property
    def order(self) -> TermOrder:
        return tau(self.m)

    @property
    def nvars(self) -> int:
        return 2 * self.m + 1

    def t(self, i: int) -> int:
        """Coordinate of ``T_i`` (1-based)."""
        return i - 1

    def x(self, i: int) -> int:
        """Coordinate of ``X_i`` (1-based; ``i = m + 1`` is ``W``)."""
        return self.m + i - 1

    @property
    def w(self) -> int:
        return 2 * self.m

    @property
    def t_block(self) -> tuple:
        return tuple(range(self.m))

    @property
    def xtilde_block(self) -> tuple:
        return tuple(range(self.m, 2 * self.m + 1))

    def as_dict(self) -> dict:
        return {"m": self.m, "a": list(self.a), "b": list(self.b)}


def validate_instance(m: int, a: Sequence[int], b: Sequence[int], permissive: bool = False) -> InstanceSpec:
    a, b = tuple(int(x) for x in a), tuple(int(x) for x in b)
    if len(a) != m or len(b) != m:
        raise InstanceError(f"a and b must have length m={m}")
    if m < 2 or (m < 3 and not permissive):
        raise InstanceError(f"m={m} is not allowed (need m >= 3)")
    for i, (ai, bi) in enumerate(zip(a, b), 1):
        if ai < 1:
            raise InstanceError(f"a_{i}={ai} must be positive")
        if ai > MAX_EXPONENT:
            raise InstanceError(f"a_{i}={ai} exceeds the cap {MAX_EXPONENT}")
        if not 0 <= bi < ai:
            raise InstanceError(f"need 0 <= b_{i} < a_{i}, got b_{i}={bi}, a_{i}={ai}")
    if sum(1 for x in b if x) < 2:
        raise InstanceError("at least two entries of b must be nonzero")
    return InstanceSpec(m, a, b, permissive)


def psi(spec: InstanceSpec, u: Sequence[int]) -> tuple:
    """Image of the X̃-monomial ``u`` under ``X_i -> T_i^{a_i}``, ``W -> T^b``."""
    if len(u) != spec.m + 1:
        raise ValueError(f"expected an X̃-monomial of length {spec.m + 1}")
    w = u[spec.m]
    return tuple(ai * ui + bi * w for ai, bi, ui in zip(spec.a, spec.b, u))


def embed(spec: InstanceSpec, t_part: Sequence[int], xt_part: Sequence[int]) -> tuple:
    return tuple(t_part) + tuple(xt_part)


def pair_binomial(spec: InstanceSpec, u: Sequence[int], v: Sequence[int]) -> Binomial:
    """The binomial ``T^alpha u - T^gamma v`` of the kernel determined by ``(u, v)``."""
    u, v = tuple(u), tuple(v)
    if sum(u) != sum(v):
        raise ValueError("X̃-degrees differ")
    if any(x and y for x, y in zip(u, v)):
        raise ValueError("the X̃-monomials share a variable")
    pu, pv = psi(spec, u), psi(spec, v)
    g = gcd(pu, pv)
    alpha = tuple(x - y for x, y in zip(pv, g))
    gamma = tuple(x - y for x, y in zip(pu, g))
    return orient_binomial(spec.order, alpha + u, gamma + v)


def unit(n: int, i: int) -> tuple:
    e = [0] * n
    e[i] = 1
    return tuple(e)


def w_power_pair(spec: InstanceSpec, c: Sequence[int]) -> Binomial:
    """``P(W^{|c|}, X^c)``."""
    c = tuple(c)
    return pair_binomial(spec, (0,) * spec.m + (sum(c),), c + (0,))


@dataclass(frozen=True)
class GeneratorFamily:
    label: str
    members: tuple
    sources: tuple

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def gamma0(spec: InstanceSpec) -> GeneratorFamily:
    """Linear relations ``P(X_i, X_j)``, ``1 <= j < i <= m + 1``; sources are ``(i, j, tag)``."""
    n = spec.m + 1
    members, sources = [], []
    for i in range(2, n + 1):
        for j in range(1, i):
            members.append(pair_binomial(spec, unit(n, i - 1), unit(n, j - 1)))
            sources.append((i, j, "reduced" if i == n else "koszul"))
    return GeneratorFamily("Gamma0", tuple(members), tuple(sources))


def vectors_up_to_degree(m: int, D: int) -> list:
    """All nonzero ``c`` in N^m with ``|c| <= D`` in increasing tau' order."""
    out = [c for c in itertools.product(range(D + 1), repeat=m) if 0 < sum(c) <= D]
    return sorted(out, key=tau_prime_key)


def gamma1(spec: InstanceSpec, D: int) -> GeneratorFamily:
    if D < 1:
        raise ValueError("truncation degree must be at least 1")
    cs = vectors_up_to_degree(spec.m, D)
    return GeneratorFamily(f"Gamma1({D})", tuple(w_power_pair(spec, c) for c in cs), tuple(cs))


def gamma3(spec: InstanceSpec) -> GeneratorFamily:
    if spec.bsum > spec.amin:
        raise ValueError(f"|b|={spec.bsum} exceeds min(a)={spec.amin}")
    cs = [c for c in itertools.product(*(range(x + 1) for x in spec.b)) if any(c)]
    cs.sort(key=tau_prime_key)
    return GeneratorFamily("Gamma3", tuple(w_power_pair(spec, c) for c in cs), tuple(cs))


def elimination_equation(spec: InstanceSpec) -> Binomial:
    return w_power_pair(spec, spec.b)


def rees_grading(spec: InstanceSpec) -> tuple:
    """Positive grading ``deg T_i = 1, deg X_i = a_i, deg W = |b|`` making the kernel homogeneous."""
    return (1,) * spec.m + spec.a + (spec.bsum,)


def evaluate(spec: InstanceSpec, u: Sequence[int]) -> tuple:
    """Image of an S-monomial in ``R[Z]`` as ``(T-exponents..., Z-exponent)``."""
    m = spec.m
    t = psi(spec, u[m:2 * m + 1])
    return tuple(x + y for x, y in zip(u[:m], t)) + (sum(u[m:2 * m + 1]),)


def in_kernel(spec: InstanceSpec, f: Binomial) -> bool:
    """Both terms of the binomial map to the same monomial of the Rees algebra."""
    if f.trail is None:
        return False
    return evaluate(spec, f.lead) == evaluate(spec, f.trail)


def predicted_minimal(spec: InstanceSpec) -> bool:
    """Reduced basis minimally generates iff the third-largest b entry is positive."""
    return sorted(spec.b)[spec.m - 3] > 0 if spec.m >= 3 else True


def is_gamma0_member(spec: InstanceSpec, f: Binomial, family: Optional[GeneratorFamily] = None) -> bool:
    family = family or gamma0(spec)
    return f in family.members


def pair_form(spec: InstanceSpec, f: Binomial) -> Optional[tuple]:
    """``c`` if ``f == P(W^{|c|}, X^c)`` for some nonzero ``c``, else ``None``."""
    if f.trail is None:
        return None
    m = spec.m
    for p, q in ((f.lead, f.trail), (f.trail, f.lead)):
        xp, xq = p[m:], q[m:]
        k = xp[m]
        if k and not any(xp[:m]) and xq[m] == 0 and sum(xq) == k:
            c = tuple(xq[:m])
            if w_power_pair(spec, c) == f:
                return c
    return None


def graph_layout(spec: InstanceSpec) -> Layout:
    return Layout.rees(spec.m, extra=("Z",))


def graph_order(spec: InstanceSpec) -> TermOrder:
    """Elimination order for ``Z`` on ``S[Z]`` whose restriction to ``S`` is tau."""
    return block_eliminate((2 * spec.m + 1,), tau(spec.m))


def oracle_graph_generators(spec: InstanceSpec) -> list:
    """``X_i - T_i^{a_i} Z`` and ``W - T^b Z`` in the layout ``S[Z]``."""
    m, n = spec.m, 2 * spec.m + 2
    order = graph_order(spec)
    out = []
    for i in range(m):
        x = unit(n, m + i)
        t = list(unit(n, n - 1))
        t[i] = spec.a[i]
        out.append(orient_binomial(order, x, tuple(t)))
    t = list(spec.b) + [0] * (m + 1) + [1]
    out.append(orient_binomial(order, unit(n, 2 * m), tuple(t)))
    return out


def closure(cs: Sequence[Sequence[int]], m: int) -> list:
    """Smallest tau'-closed set (among ``|c| >= 2``) containing ``cs``, in tau' order."""
    cs = [tuple(c) for c in cs if sum(c) >= 2]
    if not cs:
        return []
    top = max(cs, key=tau_prime_key)
    cands = [c for c in vectors_up_to_degree(m, sum(top)) if sum(c) >= 2]
    return [c for c in cands if tau_prime_key(c) <= tau_prime_key(top)]


@dataclass(frozen=True)
class FiltrationStep:
    j: int
    c: Optional[tuple]
    theta: tuple


def filtration(spec: InstanceSpec, basis: Sequence[Binomial]) -> list:
    """The chain ``Theta_0 = Gamma0 ⊂ Theta_1 ⊂ ... ⊂ Theta_N`` over the closure of ``basis``.

    ``basis`` must be a tau-basis of the kernel made of Gamma0 members and
    ``P(W^{|c|}, X^c)`` members.
    """
    g0 = gamma0(spec)
    cs = []
    for f in basis:
        if f in g0.members:
            continue
        c = pair_form(spec, f)
        if c is None:
            raise ValueError(f"unexpected basis member {f.format(spec.layout)}")
        cs.append(c)
    chain = [FiltrationStep(0, None, g0.members)]
    theta = list(g0.members)
    for j, c in enumerate(closure(cs, spec.m), 1):
        theta.append(w_power_pair(spec, c))
        chain.append(FiltrationStep(j, c, tuple(theta)))
    return chain


def leq_b(spec: InstanceSpec, c: Sequence[int]) -> bool:
    return leq_componentwise(tuple(c), spec.b)
