"""Exponent vectors, term orders and coefficient-free binomials.

Monomials are plain tuples of non-negative ints.  A :class:`Layout` names the
coordinates; the Rees layout is ``T1..Tm, X1..Xm, W`` with optional extra
slots appended (``Z`` for the graph ideal, ``t`` for tag variables).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from operator import itemgetter
from typing import Callable, NamedTuple, Optional, Sequence

Monomial = tuple


class LayoutError(ValueError):
    """Exponent vectors of different lengths were combined."""


@dataclass(frozen=True)
class Layout:
    names: tuple

    @classmethod
    def rees(cls, m: int, extra: Sequence[str] = ()) -> "Layout":
        names = [f"T{i}" for i in range(1, m + 1)]
        names += [f"X{i}" for i in range(1, m + 1)]
        names.append("W")
        names += list(extra)
        return cls(tuple(names))

    @classmethod
    def generic(cls, n: int, prefix: str = "x") -> "Layout":
        return cls(tuple(f"{prefix}{i}" for i in range(1, n + 1)))

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def indices(self, names: Sequence[str]) -> tuple:
        return tuple(self.names.index(x) for x in names)

    def monomial(self, **exponents: int) -> Monomial:
        """Build a monomial from keyword exponents, e.g. ``layout.monomial(T1=3, X2=1)``."""
        u = [0] * len(self.names)
        for name, e in exponents.items():
            u[self.names.index(name)] = e
        return tuple(u)

    def format(self, u: Monomial) -> str:
        _check(u, self.names)
        parts = []
        for name, e in zip(self.names, u):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"


def _check(u, v) -> None:
    if len(u) != len(v):
        raise LayoutError(f"layout mismatch: {len(u)} vs {len(v)} coordinates")


def one(n: int) -> Monomial:
    return (0,) * n


def mul(u: Monomial, v: Monomial) -> Monomial:
    _check(u, v)
    return tuple(x + y for x, y in zip(u, v))


def divides(u: Monomial, v: Monomial) -> bool:
    """True iff ``u`` divides ``v``."""
    _check(u, v)
    return all(x <= y for x, y in zip(u, v))


def div(v: Monomial, u: Monomial) -> Monomial:
    """Return ``v / u``; raises ``ValueError`` unless ``u`` divides ``v``."""
    _check(u, v)
    q = tuple(y - x for x, y in zip(u, v))
    if min(q, default=0) < 0:
        raise ValueError(f"{u} does not divide {v}")
    return q


def lcm(u: Monomial, v: Monomial) -> Monomial:
    _check(u, v)
    return tuple(x if x > y else y for x, y in zip(u, v))


def gcd(u: Monomial, v: Monomial) -> Monomial:
    _check(u, v)
    return tuple(x if x < y else y for x, y in zip(u, v))


def degree(u: Monomial, indices: Optional[Sequence[int]] = None) -> int:
    """Total degree, or the degree restricted to ``indices`` (a block slice)."""
    if indices is None:
        return sum(u)
    return sum(u[i] for i in indices)


def is_coprime(u: Monomial, v: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(u, v))


@dataclass(frozen=True)
class TermOrder:
    """A monomial order given by a sort key; larger key means larger monomial.

    ``kind`` is one of ``lex`` (priority list, highest first), ``grevlex``
    (weighted degree, then reverse lex over ``priority`` so the last entry is
    the cheapest variable) or ``block`` (lex over ``priority`` first, then
    ``rest`` breaks ties).
    """

    kind: str
    priority: tuple
    weights: Optional[tuple] = None
    rest: Optional["TermOrder"] = None
    key: Callable = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "key", self._build_key())

    def _build_key(self) -> Callable:
        prio = self.priority
        if self.kind == "lex":
            if len(prio) == 1:
                i = prio[0]
                return lambda u: (u[i],)
            return itemgetter(*prio)
        if self.kind == "grevlex":
            rev = tuple(reversed(prio))
            w = self.weights
            if w is None:
                return lambda u: (sum(u),) + tuple(-u[i] for i in rev)
            return lambda u: (sum(a * x for a, x in zip(w, u)),) + tuple(-u[i] for i in rev)
        if self.kind == "block":
            if self.rest is None:
                raise ValueError("block order needs a tie-breaking order")
            head = TermOrder("lex", prio).key
            tail = self.rest.key
            return lambda u: tuple(head(u)) + tuple(tail(u))
        raise ValueError(f"unknown order kind {self.kind!r}")

    def compare(self, u: Monomial, v: Monomial) -> int:
        """-1, 0 or 1 as ``u`` is less than, equal to or greater than ``v``."""
        _check(u, v)
        ku, kv = self.key(u), self.key(v)
        return (ku > kv) - (ku < kv)

    def max(self, u: Monomial, v: Monomial) -> Monomial:
        return u if self.key(u) >= self.key(v) else v


def lex(priority: Sequence[int]) -> TermOrder:
    return TermOrder("lex", tuple(priority))


def tau(m: int) -> TermOrder:
    """Lex with W > X_m > ... > X_1 > T_1 > ... > T_m on the Rees layout."""
    prio = [2 * m] + [m + i for i in reversed(range(m))] + list(range(m))
    return TermOrder("lex", tuple(prio))


def block_eliminate(elim: Sequence[int], rest: TermOrder) -> TermOrder:
    """Elimination order: the ``elim`` block is strictly heaviest (lex inside)."""
    return TermOrder("block", tuple(elim), rest=rest)


def cheapest_variable(v: int, n: int, weights: Optional[Sequence[int]] = None) -> TermOrder:
    """Degree-compatible reverse lex in which variable ``v`` is the unique smallest."""
    prio = tuple(i for i in range(n) if i != v) + (v,)
    return TermOrder("grevlex", prio, tuple(weights) if weights is not None else None)


def tau_prime_key(c: Monomial) -> tuple:
    """Sort key for the total order on N^m: degree, then larger late entries first."""
    return (sum(c),) + tuple(-x for x in reversed(c))


def compare_tau_prime(c: Monomial, d: Monomial) -> int:
    _check(c, d)
    kc, kd = tau_prime_key(c), tau_prime_key(d)
    return (kc > kd) - (kc < kd)


def leq_componentwise(c: Monomial, d: Monomial) -> bool:
    _check(c, d)
    return all(x <= y for x, y in zip(c, d))


class Binomial(NamedTuple):
    """``lead - trail`` with unit coefficients; ``trail is None`` means a monomial."""

    lead: Monomial
    trail: Optional[Monomial] = None

    def terms(self) -> tuple:
        return (self.lead,) if self.trail is None else (self.lead, self.trail)

    def format(self, layout: Layout) -> str:
        if self.trail is None:
            return layout.format(self.lead)
        return f"{layout.format(self.lead)} - {layout.format(self.trail)}"


def orient_binomial(order: TermOrder, t1: Monomial, t2: Optional[Monomial]) -> Optional[Binomial]:
    """Orient ``t1 - t2`` so the larger term leads; ``None`` is the zero polynomial."""
    if t2 is None:
        return Binomial(t1)
    _check(t1, t2)
    if t1 == t2:
        return None
    if order.key(t1) > order.key(t2):
        return Binomial(t1, t2)
    return Binomial(t2, t1)
