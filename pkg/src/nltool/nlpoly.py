"""The integer nonlinearity polynomial and the methods built on it.

For a Boolean function f on n variables, ``n_f(a_0, ..., a_n)`` is the
multilinear integer polynomial whose value at a binary coefficient vector
is the Hamming distance from f to ``a_0 + a_1 x_1 + ... + a_n x_n``.

Construction. Write ``n_f = D(a_1..a_n) + a_0 * W(a_1..a_n)`` where D is the
distance to the linear function ``v.x`` and W its Walsh value. The NNF of W
comes out of a single butterfly over the sign vector, with the per-stage
step ``(u, w) -> (u + w, -2w)`` (the Walsh step followed by the signed
Moebius step). D's NNF is then ``2^(n-1) - W/2`` coefficientwise. The
total is n*2^(n-1) sums, n*2^(n-1) doublings and 2^n halvings.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .boolean import BooleanFunction, DomainError, is_affine
from .transforms import (
    IntegerMultilinearPoly,
    OpCounter,
    _stages,
    evaluations_from_nnf,
)


@dataclass(frozen=True)
class NlPolynomial:
    n: int
    poly: IntegerMultilinearPoly

    @property
    def constant(self) -> int:
        return int(self.poly.coeffs[0])


def build_nl_poly(f: BooleanFunction, counter: OpCounter | None = None) -> NlPolynomial:
    if f.n < 1:
        raise DomainError("nonlinearity polynomial needs n >= 1")
    n = f.n
    size = 1 << n
    # NNF of the Walsh spectrum, in place on the sign vector
    w = 1 - 2 * f.truth_table.astype(np.int64)
    for lo, hi in _stages(w):
        lo += hi
        hi *= -2
        if counter is not None:
            counter.add(size)
    d = w // -2
    d[0] += size >> 1
    if counter is not None:
        counter.add(size + 1)
    coeffs = np.empty(2 * size, dtype=np.int64)
    coeffs[0::2] = d  # monomials without a_0
    coeffs[1::2] = w  # monomials with a_0
    return NlPolynomial(n, IntegerMultilinearPoly(n + 1, coeffs))


def nl_evaluations(p: NlPolynomial) -> np.ndarray:
    """Distances to every affine function, indexed by coefficient mask (bit i = a_i)."""
    return evaluations_from_nnf(p.poly)


def nonlinearity_nnf(f: BooleanFunction) -> int:
    if is_affine(f):
        return 0
    return int(nl_evaluations(build_nl_poly(f)).min())


def variety_nonempty_q(f: BooleanFunction, t: int) -> bool:
    """True iff some affine function lies at distance exactly ``t`` from f."""
    if t < 0:
        raise DomainError("t must be nonnegative")
    return bool(np.any(nl_evaluations(build_nl_poly(f)) == t))


def nonlinearity_q_loop(f: BooleanFunction, trace: list[int] | None = None) -> int:
    """Smallest j >= 0 for which ``n_f - j`` has a binary zero.

    ``trace`` (if given) receives every j that was tested.
    """
    present = np.zeros((1 << f.n) + 1, dtype=bool)
    present[nl_evaluations(build_nl_poly(f))] = True
    j = 0
    while True:
        if trace is not None:
            trace.append(j)
        if present[j]:
            return j
        j += 1


def distance_spectrum(f: BooleanFunction) -> list[int]:
    """Sorted distinct distances from f to the affine functions."""
    return np.unique(nl_evaluations(build_nl_poly(f))).tolist()
