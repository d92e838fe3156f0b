"""Text formats: ANF expressions, little-endian hex truth tables, polynomials."""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .boolean import BooleanFunction, MultilinearPolyF2, function_of
from .transforms import IntegerMultilinearPoly


class ParseError(ValueError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


_TOKEN = re.compile(r"\s*(?:(?P<var>x(?P<idx>\d+))|(?P<one>1)|(?P<op>[+*]))")


def parse_anf(text: str, n: int) -> BooleanFunction:
    """Parse ``"x1*x2 + x3 + 1"``; repeated terms cancel over F_2."""
    terms: list[int] = []
    pos = 0
    expect_factor = True
    current: int | None = None
    stripped_end = len(text.rstrip())
    if stripped_end == 0:
        raise ParseError("empty expression", 0)
    while pos < stripped_end:
        m = _TOKEN.match(text, pos)
        if not m:
            bad = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        start = m.start(m.lastgroup if m.lastgroup != "idx" else "var")
        if m.group("op"):
            if expect_factor:
                raise ParseError(f"expected a factor before {m.group('op')!r}", start)
            if m.group("op") == "+":
                terms.append(current)
                current = None
            expect_factor = True
        else:
            if not expect_factor:
                raise ParseError("missing operator between factors", start)
            if m.group("var"):
                k = int(m.group("idx"))
                if not 1 <= k <= n:
                    raise ParseError(f"variable x{k} outside x1..x{n}", start)
                factor = 1 << (k - 1)
            else:
                factor = 0
            current = factor if current is None else current | factor
            expect_factor = False
        pos = m.end()
    if expect_factor:
        raise ParseError("expression ends with an operator", stripped_end)
    terms.append(current)
    return function_of(MultilinearPolyF2.from_masks(n, terms))


def format_anf(anf: MultilinearPolyF2) -> str:
    masks = sorted(anf.support(), key=lambda u: (-u.bit_count(), -u))
    if not masks:
        return "0"
    return " + ".join(_monomial(u, "x", 1) or "1" for u in masks)


def _monomial(mask: int, name: str, offset: int) -> str:
    return "*".join(f"{name}{j + offset}" for j in range(mask.bit_length()) if mask >> j & 1)


def hex_digits(n: int) -> int:
    return max(1, -(-(1 << n) // 4))


def parse_tt_hex(text: str, n: int) -> BooleanFunction:
    """Bit i of the hex value is f at point index i."""
    text = text.strip()
    if text.lower().startswith("0x"):
        text = text[2:]
    want = hex_digits(n)
    if len(text) != want:
        raise ParseError(f"expected {want} hex digits for n={n}, got {len(text)}")
    for i, ch in enumerate(text):
        if ch not in "0123456789abcdefABCDEF":
            raise ParseError(f"non-hex digit {ch!r}", i)
    value = int(text, 16)
    if value >> (1 << n):
        raise ParseError(f"value has bits beyond the {1 << n} table entries")
    return BooleanFunction.from_int(n, value)


def format_tt_hex(f: BooleanFunction) -> str:
    return format(f.to_int(), f"0{hex_digits(f.n)}x")


def format_int_poly(p: IntegerMultilinearPoly, name: str = "a", offset: int = 0) -> str:
    """Deglex-descending terms with explicit signs, e.g. ``4*a0*a1*a2 - 2*a1*a2 - 2*a0 + 3``."""
    terms = sorted(p.terms().items(), key=lambda kv: (-kv[0].bit_count(), -kv[0]))
    if not terms:
        return "0"
    parts = []
    for i, (u, c) in enumerate(terms):
        mono = _monomial(u, name, offset)
        mag = abs(c)
        body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
        if i == 0:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(parts)


def int_poly_terms(p: IntegerMultilinearPoly, name: str = "a", offset: int = 0) -> dict[str, int]:
    return {(_monomial(u, name, offset) or "1"): c for u, c in p.terms().items()}


@dataclass(frozen=True)
class FunctionSpec:
    """Where a function comes from: ``tt:<hex>``, ``anf:<expr>`` or ``random:<seed>``."""

    kind: str
    payload: str

    @classmethod
    def parse(cls, text: str) -> "FunctionSpec":
        kind, sep, payload = text.partition(":")
        if not sep or kind not in ("tt", "anf", "random"):
            raise ParseError(f"function spec must be tt:, anf: or random:, got {text!r}")
        return cls(kind, payload)

    def build(self, n: int) -> BooleanFunction:
        if self.kind == "tt":
            # short input is read as having leading zero digits
            digits = self.payload.strip()
            if digits.lower().startswith("0x"):
                digits = digits[2:]
            return parse_tt_hex(digits.rjust(hex_digits(n), "0"), n)
        if self.kind == "anf":
            return parse_anf(self.payload, n)
        try:
            seed = int(self.payload)
        except ValueError:
            raise ParseError(f"random seed must be an integer, got {self.payload!r}") from None
        return BooleanFunction.random(n, np.random.default_rng(seed))
