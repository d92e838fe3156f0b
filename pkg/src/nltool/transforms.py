"""Butterfly transforms: Moebius over F_2, Walsh and the NNF pair over Z.

Every transform runs one stage per variable in ascending bit order. Inputs
may carry leading batch axes; the transform acts on the last axis, whose
length must be a power of two.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .boolean import BooleanFunction, DomainError, log2_exact


@dataclass
class OpCounter:
    """Counts elementwise integer operations (a doubling counts as a sum)."""

    additions: int = 0

    def add(self, k: int) -> None:
        self.additions += int(k)


def _stages(arr: np.ndarray):
    """Yield (lo, hi) views of ``arr`` for each butterfly stage."""
    m = log2_exact(arr.shape[-1])
    lead = arr.shape[:-1]
    for j in range(m):
        view = arr.reshape(*lead, -1, 2, 1 << j)
        yield view[..., 0, :], view[..., 1, :]


def mobius(bits: Iterable[int] | np.ndarray) -> np.ndarray:
    """Truth table <-> ANF coefficients over F_2 (an involution)."""
    out = np.array(bits, dtype=np.uint8)
    if out.ndim == 0:
        raise DomainError("expected a vector")
    for lo, hi in _stages(out):
        hi ^= lo
    return out


def mobius_bits(value: int, m: int) -> int:
    """Moebius transform of a 2**m-bit vector packed into an int."""
    for j in range(m):
        value ^= (value & _LOW_MASKS[m][j]) << (1 << j)
    return value


def _low_masks(m: int) -> list[int]:
    # bit i set iff bit j of i is clear
    size = 1 << m
    out = []
    for j in range(m):
        block = (1 << (1 << j)) - 1
        pattern = 0
        for start in range(0, size, 2 << j):
            pattern |= block << start
        out.append(pattern)
    return out


_LOW_MASKS = [_low_masks(m) for m in range(13)]


class WalshSpectrum:
    """Walsh values F^(v) for v in point order."""

    __slots__ = ("n", "values")

    def __init__(self, n: int, values: np.ndarray):
        self.n = n
        self.values = np.asarray(values, dtype=np.int64)
        self.values.setflags(write=False)

    def __len__(self):
        return self.values.size

    def __getitem__(self, v):
        return int(self.values[v])

    def __repr__(self):
        return f"WalshSpectrum(n={self.n}, values={self.values.tolist()})"


class IntegerMultilinearPoly:
    """Multilinear polynomial with integer coefficients ``coeffs[mask]``."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs: Iterable[int] | np.ndarray):
        arr = np.array(coeffs, dtype=np.int64).ravel()
        if arr.size != 1 << m:
            raise DomainError(f"expected {1 << m} coefficients, got {arr.size}")
        arr.setflags(write=False)
        self.m = m
        self.coeffs = arr

    @classmethod
    def from_terms(cls, m: int, terms: dict[int, int]) -> "IntegerMultilinearPoly":
        coeffs = np.zeros(1 << m, dtype=np.int64)
        for mask, c in terms.items():
            coeffs[mask] += c
        return cls(m, coeffs)

    def terms(self) -> dict[int, int]:
        return {int(u): int(self.coeffs[u]) for u in np.flatnonzero(self.coeffs)}

    def __call__(self, point_mask: int) -> int:
        """Evaluate at the binary point whose coordinates are the bits of ``point_mask``."""
        return sum(c for u, c in self.terms().items() if u & point_mask == u)

    def __eq__(self, other):
        if not isinstance(other, IntegerMultilinearPoly):
            return NotImplemented
        return self.m == other.m and np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash((self.m, self.coeffs.tobytes()))

    def __repr__(self):
        return f"IntegerMultilinearPoly(m={self.m}, terms={self.terms()})"


def sign_vector(f: BooleanFunction) -> np.ndarray:
    return 1 - 2 * f.truth_table.astype(np.int64)


def walsh_values(tt: np.ndarray) -> np.ndarray:
    """Walsh values for a (possibly batched) 0/1 truth-table array."""
    out = 1 - 2 * np.asarray(tt, dtype=np.int64)
    for lo, hi in _stages(out):
        s = lo + hi
        hi[...] = lo - hi
        lo[...] = s
    return out


def walsh_spectrum(f: BooleanFunction) -> WalshSpectrum:
    return WalshSpectrum(f.n, walsh_values(f.truth_table))


def nonlinearity_fwt(f: BooleanFunction) -> int:
    # |W| rather than W: the complemented linear functions are affine too
    w = walsh_values(f.truth_table)
    return ((1 << f.n) - int(np.abs(w).max())) // 2


def nnf_from_evaluations(values: Iterable[int] | np.ndarray) -> IntegerMultilinearPoly:
    """NNF coefficients of an integer-valued function on F_2^m."""
    out = np.array(values, dtype=np.int64)
    m = log2_exact(out.size)
    for lo, hi in _stages(out):
        hi -= lo
    return IntegerMultilinearPoly(m, out)


def evaluations_from_nnf(p: IntegerMultilinearPoly) -> np.ndarray:
    """Values of ``p`` at every binary point, in point order."""
    out = p.coeffs.copy()
    for lo, hi in _stages(out):
        hi += lo
    return out
