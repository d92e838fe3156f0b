"""Boolean functions on F_2^n: truth tables, ANF and distances.

Points of F_2^n are enumerated little-endian: point index ``i`` (0-based)
has coordinate ``x_j = (i >> (j - 1)) & 1``, so ``x_1`` varies fastest.
Monomials use the same convention: bit ``j - 1`` of a mask stands for
``x_j`` (for the affine coefficients ``a_0..a_n``, bit ``i`` is ``a_i``).
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

MAX_N = 26


class DomainError(ValueError):
    """Raised when an argument lies outside an operation's domain."""


def _frozen_bits(values: Iterable[int] | np.ndarray, length: int | None = None) -> np.ndarray:
    arr = np.array(values, dtype=np.int64).ravel()
    if length is not None and arr.size != length:
        raise DomainError(f"expected {length} entries, got {arr.size}")
    if arr.size and (arr.min() < 0 or arr.max() > 1):
        raise DomainError("entries must be 0 or 1")
    arr = arr.astype(np.uint8)
    arr.setflags(write=False)
    return arr


def log2_exact(length: int) -> int:
    """Return ``m`` with ``2**m == length`` or raise DomainError."""
    if length < 1 or length & (length - 1):
        raise DomainError(f"length {length} is not a power of two")
    return length.bit_length() - 1


def point(n: int, index: int) -> tuple[int, ...]:
    """Coordinates (x_1, ..., x_n) of the 0-based point ``index``."""
    return tuple((index >> j) & 1 for j in range(n))


def point_index(coords: Sequence[int]) -> int:
    return sum((c & 1) << j for j, c in enumerate(coords))


class BooleanFunction:
    """Immutable truth table of a function F_2^n -> F_2."""

    __slots__ = ("n", "truth_table")

    def __init__(self, n: int, truth_table: Iterable[int] | np.ndarray):
        if not 0 <= n <= MAX_N:
            raise DomainError(f"n must be in [0, {MAX_N}], got {n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "truth_table", _frozen_bits(truth_table, 1 << n))

    def __setattr__(self, name, value):
        raise AttributeError("BooleanFunction is immutable")

    @classmethod
    def zero(cls, n: int) -> "BooleanFunction":
        return cls(n, np.zeros(1 << n, dtype=np.uint8))

    @classmethod
    def from_int(cls, n: int, value: int) -> "BooleanFunction":
        """Bit ``i`` of ``value`` is f at point index ``i``."""
        size = 1 << n
        if value < 0 or value >> size:
            raise DomainError(f"value does not fit {size} bits")
        raw = value.to_bytes((size + 7) // 8, "little")
        bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:size]
        return cls(n, bits)

    @classmethod
    def random(cls, n: int, rng: np.random.Generator) -> "BooleanFunction":
        return cls(n, rng.integers(0, 2, size=1 << n, dtype=np.uint8))

    def to_int(self) -> int:
        packed = np.packbits(self.truth_table, bitorder="little")
        return int.from_bytes(packed.tobytes(), "little")

    @property
    def weight(self) -> int:
        return int(self.truth_table.sum(dtype=np.int64))

    def complement(self) -> "BooleanFunction":
        return BooleanFunction(self.n, self.truth_table ^ 1)

    def __add__(self, other: "BooleanFunction") -> "BooleanFunction":
        _same_n(self, other)
        return BooleanFunction(self.n, self.truth_table ^ other.truth_table)

    def __eq__(self, other):
        if not isinstance(other, BooleanFunction):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.truth_table, other.truth_table)

    def __hash__(self):
        return hash((self.n, self.truth_table.tobytes()))

    def __repr__(self):
        return f"BooleanFunction(n={self.n}, tt={self.truth_table.tolist()})"


class MultilinearPolyF2:
    """Square-free polynomial over F_2; ``coeffs[mask]`` is the coefficient of
    the monomial whose variables are the set bits of ``mask``."""

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs: Iterable[int] | np.ndarray):
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "coeffs", _frozen_bits(coeffs, 1 << m))

    def __setattr__(self, name, value):
        raise AttributeError("MultilinearPolyF2 is immutable")

    @classmethod
    def from_masks(cls, m: int, masks: Iterable[int]) -> "MultilinearPolyF2":
        coeffs = np.zeros(1 << m, dtype=np.uint8)
        for mask in masks:
            if not 0 <= mask < (1 << m):
                raise DomainError(f"mask {mask} out of range for {m} variables")
            coeffs[mask] ^= 1
        return cls(m, coeffs)

    @classmethod
    def from_bits(cls, m: int, bits: int) -> "MultilinearPolyF2":
        """Build from an integer bitset: bit ``mask`` set <=> monomial present."""
        return cls.from_masks(m, _iter_bits(bits))

    def to_bits(self) -> int:
        packed = np.packbits(self.coeffs, bitorder="little")
        return int.from_bytes(packed.tobytes(), "little")

    def support(self) -> list[int]:
        return np.flatnonzero(self.coeffs).tolist()

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def __eq__(self, other):
        if not isinstance(other, MultilinearPolyF2):
            return NotImplemented
        return self.m == other.m and np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash((self.m, self.coeffs.tobytes()))

    def __repr__(self):
        return f"MultilinearPolyF2(m={self.m}, support={self.support()})"


def _iter_bits(bits: int):
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def _same_n(f: BooleanFunction, g: BooleanFunction) -> None:
    if f.n != g.n:
        raise DomainError(f"functions have different n ({f.n} != {g.n})")


def evaluate(f: BooleanFunction, p: int) -> int:
    """Value of f at the 1-based point index ``p``."""
    if not 1 <= p <= (1 << f.n):
        raise DomainError(f"point index {p} outside 1..{1 << f.n}")
    return int(f.truth_table[p - 1])


def distance(f: BooleanFunction, g: BooleanFunction) -> int:
    _same_n(f, g)
    return int(np.count_nonzero(f.truth_table != g.truth_table))


def anf_of(f: BooleanFunction) -> MultilinearPolyF2:
    from .transforms import mobius

    return MultilinearPolyF2(f.n, mobius(f.truth_table))


def function_of(anf: MultilinearPolyF2) -> BooleanFunction:
    from .transforms import mobius

    return BooleanFunction(anf.m, mobius(anf.coeffs))


def algebraic_degree(anf: MultilinearPolyF2) -> int:
    """Largest monomial degree present; 0 for the zero polynomial."""
    masks = np.flatnonzero(anf.coeffs)
    if masks.size == 0:
        return 0
    return int(max(int(mask).bit_count() for mask in masks))


def is_affine(f: BooleanFunction) -> bool:
    return algebraic_degree(anf_of(f)) <= 1


def affine_function(a: Sequence[int], n: int) -> BooleanFunction:
    """Truth table of a_0 + a_1 x_1 + ... + a_n x_n."""
    a = _frozen_bits(a, n + 1)
    tt = np.full(1 << n, a[0], dtype=np.uint8)
    idx = np.arange(1 << n)
    for i in range(1, n + 1):
        if a[i]:
            tt ^= ((idx >> (i - 1)) & 1).astype(np.uint8)
    return BooleanFunction(n, tt)


def affine_from_mask(mask: int, n: int) -> BooleanFunction:
    """Affine function whose coefficient vector is encoded by ``mask`` (bit i = a_i)."""
    return affine_function([(mask >> i) & 1 for i in range(n + 1)], n)
