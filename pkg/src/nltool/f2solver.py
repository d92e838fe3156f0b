"""Simonetti's ideals over F_2 and an incremental quotient-algebra solver.

The ideal ``J_t(f)`` in ``F_2[a_0..a_n]`` is generated by the field
equations and by every product of t distinct entries of the vector
``(g(a, x) + f(x))_x`` where ``g = a_0 + sum a_i x_i``. Its variety is the
set of affine functions at distance at most t - 1 from f.

``LinearRep`` adjoins generators one at a time without computing a Groebner
basis. The quotient ``F_2[A]/E[A]`` starts with the basis of all 2^m
square-free monomials. Each new relation eliminates one basis monomial
(its pivot) by a substitution row. Its products with every variable are
queued so that the eliminated span stays an ideal. The number of surviving
monomials is the dimension of the quotient, which equals the number of
points of the (radical) variety.

Polynomials are int bitsets: bit ``mask`` set <=> monomial ``mask`` present.
Multiplication by a variable maps ``mask -> mask | (1 << h)``. That is the
multiplication matrix of the basis, so the matrix is never stored.
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Iterator

from .boolean import BooleanFunction, DomainError, MultilinearPolyF2, is_affine
from .transforms import _LOW_MASKS, mobius_bits

log = logging.getLogger(__name__)


class SolverStateError(RuntimeError):
    pass


@dataclass(frozen=True)
class SquareFreeMonomial:
    s: int
    support: tuple[int, ...]  # sorted, 1-based

    def __post_init__(self):
        if len(set(self.support)) != len(self.support):
            raise DomainError("repeated variable in square-free monomial")
        if any(not 1 <= i <= self.s for i in self.support):
            raise DomainError(f"variable index outside 1..{self.s}")

    @property
    def degree(self) -> int:
        return len(self.support)


def monomial_stream(s: int, t: int) -> Iterator[SquareFreeMonomial]:
    """All degree-t square-free monomials in s variables, lexicographically."""
    if not 1 <= t <= s:
        raise DomainError(f"need 1 <= t <= s, got t={t}, s={s}")
    for combo in itertools.combinations(range(1, s + 1), t):
        yield SquareFreeMonomial(s, combo)


def _point_evaluations(f: BooleanFunction) -> list[int]:
    """For each point x, the bitset over a in {0,1}^(n+1) of g(a, x) + f(x)."""
    n = f.n
    m = n + 1
    out = []
    for x in range(1 << n):
        fx = int(f.truth_table[x])
        bits = 0
        for a in range(1 << m):
            if ((a & 1) ^ ((a >> 1) & x).bit_count() ^ fx) & 1:
                bits |= 1 << a
        out.append(bits)
    return out


def _generator_bits(evals: list[int], support: Iterable[int], m: int) -> int:
    prod = (1 << (1 << m)) - 1
    for h in support:
        prod &= evals[h - 1]
        if not prod:
            return 0
    return mobius_bits(prod, m)


def simonetti_generator(f: BooleanFunction, mono: SquareFreeMonomial) -> MultilinearPolyF2:
    """The product of the entries of ``g + f`` selected by ``mono``, as a multilinear polynomial."""
    if mono.s != 1 << f.n:
        raise DomainError(f"monomial must live in {1 << f.n} variables")
    m = f.n + 1
    return MultilinearPolyF2.from_bits(m, _generator_bits(_point_evaluations(f), mono.support, m))


@dataclass
class LinearRep:
    m: int
    escalier: set[int] = field(default_factory=set)
    eliminated: dict[int, int] = field(default_factory=dict)
    pending: dict[int, None] = field(default_factory=dict)
    trivial: bool = False
    generators_checked: int = 0
    generators_sufficient: int = 0
    products_processed: int = 0

    def __post_init__(self):
        m = self.m
        self._elim_bits = 0
        # masks grouped by degree, highest degree first
        self._deg_bits = [0] * (m + 1)
        for mask in range(1 << m):
            self._deg_bits[mask.bit_count()] |= 1 << mask
        self._deg_bits.reverse()
        self._has_var = [((1 << (1 << m)) - 1) ^ low for low in _LOW_MASKS[m]]
        self._lacks_var = _LOW_MASKS[m]

    def reduce(self, p: int) -> int:
        """Substitute every eliminated monomial of ``p`` by its row."""
        q = p & self._elim_bits
        while q:
            low = q & -q
            p ^= self.eliminated[low.bit_length() - 1]
            q ^= low
        return p

    def times_var(self, p: int, h: int) -> int:
        return ((p & self._lacks_var[h]) << (1 << h)) ^ (p & self._has_var[h])

    def pivot(self, p: int) -> int:
        """Deglex-largest monomial of ``p``: highest degree, then largest mask."""
        for bits in self._deg_bits:
            q = p & bits
            if q:
                return q.bit_length() - 1
        raise ValueError("zero polynomial has no pivot")

    def _eliminate(self, p: int) -> None:
        piv = self.pivot(p)
        pbit = 1 << piv
        for e, row in self.eliminated.items():
            if row & pbit:
                self.eliminated[e] = row ^ p
        self.eliminated[piv] = p  # stored with its own pivot bit set
        self._elim_bits |= pbit
        self.escalier.discard(piv)
        if self.pending:
            updated = {}
            for q in self.pending:
                if q & pbit:
                    q ^= p
                if q:
                    updated[q] = None
            self.pending = updated
        for h in range(self.m):
            q = self.reduce(self.times_var(p, h))
            if q:
                self.pending[q] = None

    def _absorb(self, p: int) -> bool:
        """Add a reduced polynomial; returns True if it changed the ideal."""
        if not p:
            return False
        if p == 1:
            self._set_trivial()
            return True
        self._eliminate(p)
        return True

    def _set_trivial(self) -> None:
        self.trivial = True
        self.pending.clear()

    def _drain(self) -> None:
        while self.pending and not self.trivial:
            q = next(iter(self.pending))
            del self.pending[q]
            self.products_processed += 1
            self._absorb(self.reduce(q))

    def add_bits(self, g: int) -> bool:
        """Adjoin the bitset polynomial ``g``; True if it was sufficient."""
        self.generators_checked += 1
        if self.trivial:
            return False
        changed = self._absorb(self.reduce(g))
        if changed:
            self.generators_sufficient += 1
            self._drain()
        return changed

    def solution_count(self) -> int:
        if self.pending:
            raise SolverStateError("pending products not yet processed")
        return 0 if self.trivial else len(self.escalier)

    def is_order_ideal(self) -> bool:
        if self.trivial:
            return True
        for b in self.escalier:
            sub = b
            while sub:
                sub = (sub - 1) & b
                if sub not in self.escalier:
                    return False
        return True

    def is_closed(self) -> bool:
        """Every product of a relation with a variable reduces to zero."""
        if self.trivial:
            return True
        return all(
            self.reduce(self.times_var(row, h)) == 0
            for row in self.eliminated.values()
            for h in range(self.m)
        )

    def normal_form(self, g: MultilinearPolyF2) -> MultilinearPolyF2:
        return MultilinearPolyF2.from_bits(self.m, self.reduce(g.to_bits()))


def lr_init(m: int) -> LinearRep:
    if m < 1:
        raise DomainError("need at least one variable")
    if m >= len(_LOW_MASKS):
        raise DomainError(f"at most {len(_LOW_MASKS) - 1} variables supported")
    return LinearRep(m, escalier=set(range(1 << m)))


def lr_add_generator(state: LinearRep, g: MultilinearPolyF2) -> LinearRep:
    if g.m != state.m:
        raise DomainError(f"generator has {g.m} variables, state has {state.m}")
    state.add_bits(g.to_bits())
    return state


def lr_solution_count(state: LinearRep) -> int:
    return state.solution_count()


@dataclass
class F2Run:
    """Outcome of loading one ideal J_t(f) into a fresh solver."""

    t: int
    empty: bool
    solutions: int
    generators_checked: int
    generators_sufficient: int


def load_ideal(f: BooleanFunction, t: int, order: Iterable[tuple[int, ...]] | None = None,
               early_exit: bool = True) -> LinearRep:
    """Stream the generators of J_t(f) into a fresh solver.

    ``order`` overrides the generator stream (supports as 1-based tuples).
    """
    s = 1 << f.n
    if not 1 <= t <= s:
        raise DomainError(f"need 1 <= t <= {s}, got {t}")
    m = f.n + 1
    state = lr_init(m)
    evals = _point_evaluations(f)
    # same lexicographic stream as monomial_stream, without per-item objects
    supports = order if order is not None else itertools.combinations(range(1, s + 1), t)
    for support in supports:
        state.add_bits(_generator_bits(evals, support, m))
        if early_exit and state.trivial:
            break
    if log.isEnabledFor(logging.DEBUG) and not state.is_order_ideal():
        log.debug("escalier is not an order ideal (n=%d, t=%d)", f.n, t)
    return state


def variety_empty_f2(f: BooleanFunction, t: int, runs: list[F2Run] | None = None) -> bool:
    state = load_ideal(f, t)
    count = state.solution_count()
    if runs is not None:
        runs.append(F2Run(t, count == 0, count, state.generators_checked, state.generators_sufficient))
    return count == 0


def simonetti_nonlinearity(f: BooleanFunction, skip_affine: bool = False,
                           runs: list[F2Run] | None = None) -> int:
    """First j with a nonempty variety of J_j(f), minus one.

    With ``skip_affine`` the loop starts at j = 2 for non-affine f.
    """
    j = 2 if skip_affine and not is_affine(f) else 1
    while variety_empty_f2(f, j, runs):
        j += 1
    return j - 1


def weight_ideal_normal_form(p: MultilinearPolyF2, w: int) -> MultilinearPolyF2:
    """Normal form modulo the vanishing ideal of the points of weight <= w.

    That ideal is generated by the field equations and all square-free
    monomials of degree w + 1, so the normal form keeps the monomials of
    degree <= w.
    """
    if not 0 <= w <= p.m:
        raise DomainError(f"need 0 <= w <= {p.m}, got {w}")
    return MultilinearPolyF2.from_masks(p.m, [u for u in p.support() if u.bit_count() <= w])


def weight_points(s: int, w: int) -> int:
    return sum(comb(s, j) for j in range(w + 1))


def escalier_profile(state: LinearRep) -> Counter:
    """Surviving basis monomials counted by degree."""
    return Counter(b.bit_count() for b in state.escalier)
