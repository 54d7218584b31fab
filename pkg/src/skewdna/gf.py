"""Table-driven arithmetic in GF(4^(2s)) = GF(2)[y]/(p(y)), deg p = 4s.

Elements are plain ints holding the discrete log with respect to the
primitive element ``a`` (the residue of y).  Zero has no logarithm and is
represented by the sentinel :data:`ZERO`.  The additive (polynomial basis)
form is an int bitmask, bit i being the coefficient of a^i.

The field carries the order-2 automorphism ``theta(b) = b^(4^s)`` whose
fixed field is GF(4^s).
"""

from __future__ import annotations

import re
from functools import lru_cache

import numpy as np

from .errors import DomainError, GuardError, InvalidModulusError, UsageError

ZERO = -1
ONE = 0

MAX_S = 4

# One fixed primitive polynomial per s so that outputs are reproducible.
DEFAULT_MODULI = {
    1: 0b1_0011,  # y^4 + y + 1
    2: 0x11D,  # y^8 + y^4 + y^3 + y^2 + 1
    3: 0x1053,  # y^12 + y^6 + y^4 + y + 1
    4: 0x1100B,  # y^16 + y^12 + y^3 + y + 1
}

_ELEMENT_RE = re.compile(r"^(?:0|1|a(?:\^(\d+))?)$")


def _gf2_mod(a: int, b: int) -> int:
    db = b.bit_length()
    while a and a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def _find_factor(poly: int) -> int | None:
    """Smallest nontrivial factor of a GF(2) polynomial, or None."""
    deg = poly.bit_length() - 1
    for d in range(1, deg // 2 + 1):
        for cand in range(1 << d, 1 << (d + 1)):
            if _gf2_mod(poly, cand) == 0:
                return cand
    return None


def format_gf2(poly: int, var: str = "y") -> str:
    if poly == 0:
        return "0"
    terms = []
    for i in range(poly.bit_length()):
        if poly >> i & 1:
            terms.append("1" if i == 0 else var if i == 1 else f"{var}^{i}")
    return " + ".join(terms)


class Field:
    """The field GF(4^(2s)) with log/antilog tables and theta.

    Instances are immutable once built; use :func:`build_field`.
    """

    def __init__(self, s: int, modulus: int | None = None):
        if not isinstance(s, int) or s < 1 or s > MAX_S:
            raise GuardError(
                f"s={s} outside 1..{MAX_S} (table size 4^(2s) capped at 2^16)",
                size=4 ** (2 * s) if isinstance(s, int) and s > 0 else 0,
            )
        m = 4 * s
        if modulus is None:
            modulus = DEFAULT_MODULI[s]
        if modulus.bit_length() - 1 != m:
            raise UsageError(
                f"modulus {format_gf2(modulus)} has degree {modulus.bit_length() - 1}, expected {m}"
            )
        factor = _find_factor(modulus)
        if factor is not None:
            raise InvalidModulusError(
                f"modulus {format_gf2(modulus)} is reducible: divisible by {format_gf2(factor)}",
                witness=factor,
            )
        q = 1 << m
        order = q - 1
        exp = [0] * order
        log = [ZERO] * q
        v = 1
        for i in range(order):
            if i and v == 1:
                raise InvalidModulusError(
                    f"modulus {format_gf2(modulus)} is not primitive: y has order {i}",
                    witness=i,
                )
            exp[i] = v
            log[v] = i
            v <<= 1
            if v & q:
                v ^= modulus
        self.s = s
        self.degree = m
        self.q = q
        self.order = order
        self.modulus = modulus
        self.theta_exponent = 4**s
        self.exp = tuple(exp)
        self.log = tuple(log)
        # numpy views in additive form, for batch work
        self._exp_np = np.array(exp + exp, dtype=np.int64)
        log_np = np.array(log, dtype=np.int64)
        log_np[0] = 0
        self._log_np = log_np
        theta_add = np.zeros(q, dtype=np.int64)
        for v in range(1, q):
            theta_add[v] = exp[(log[v] * self.theta_exponent) % order]
        self.theta_table = theta_add

    def __repr__(self) -> str:
        return f"Field(s={self.s}, q={self.q}, modulus={format_gf2(self.modulus)})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and (self.s, self.modulus) == (other.s, other.modulus)

    def __hash__(self) -> int:
        return hash((self.s, self.modulus))

    # -- scalar arithmetic on log-form elements --------------------------

    def element(self, k: int) -> int:
        """The power a^k, reduced to canonical form."""
        return k % self.order

    def elements(self) -> list[int]:
        return [ZERO, *range(self.order)]

    def add(self, a: int, b: int) -> int:
        if a == ZERO:
            return b
        if b == ZERO:
            return a
        return self.log[self.exp[a] ^ self.exp[b]]

    sub = add

    def neg(self, a: int) -> int:
        return a

    def mul(self, a: int, b: int) -> int:
        if a == ZERO or b == ZERO:
            return ZERO
        return (a + b) % self.order

    def inv(self, a: int) -> int:
        if a == ZERO:
            raise DomainError("inverse of zero")
        return -a % self.order

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == ZERO:
            if e < 0:
                raise DomainError("negative power of zero")
            return ONE if e == 0 else ZERO
        return (a * e) % self.order

    def theta(self, a: int, times: int = 1) -> int:
        """theta^times(a); theta has order 2 so only the parity matters."""
        if a == ZERO or times % 2 == 0:
            return a
        return (a * self.theta_exponent) % self.order

    def is_fixed(self, a: int) -> bool:
        return self.theta(a) == a

    def fixed_elements(self) -> list[int]:
        return [a for a in self.elements() if self.is_fixed(a)]

    def norm_one_elements(self) -> list[int]:
        """Solutions of b^(4^s + 1) = 1, i.e. the powers a^((4^s - 1) j)."""
        step = self.theta_exponent - 1
        return list(range(0, self.order, step))

    # -- representations --------------------------------------------------

    def to_additive(self, a: int) -> int:
        return 0 if a == ZERO else self.exp[a]

    def from_additive(self, v: int) -> int:
        if not 0 <= v < self.q:
            raise UsageError(f"additive value {v} out of range for q={self.q}")
        return self.log[v]

    def format(self, a: int) -> str:
        if a == ZERO:
            return "0"
        if a == ONE:
            return "1"
        return f"a^{a}"

    def format_additive(self, a: int, var: str = "a") -> str:
        return format_gf2(self.to_additive(a), var)

    def hex(self, a: int) -> str:
        return format(self.to_additive(a), f"0{self.degree // 4}x")

    def parse(self, text: str) -> int:
        t = text.strip().replace(" ", "")
        match = _ELEMENT_RE.match(t)
        if not match:
            raise UsageError(f"cannot parse field element {text!r}")
        if t == "0":
            return ZERO
        if t == "1":
            return ONE
        return self.element(int(match.group(1) or 1))

    # -- batch arithmetic on additive numpy arrays ------------------------

    def mul_additive(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Elementwise product of additive-form arrays (broadcasting)."""
        a = np.asarray(a)
        b = np.asarray(b)
        prod = self._exp_np[self._log_np[a] + self._log_np[b]]
        return np.where((a == 0) | (b == 0), 0, prod)

    def to_additive_array(self, elems) -> np.ndarray:
        return np.array([self.to_additive(e) for e in elems], dtype=np.int64)

    def from_additive_array(self, arr) -> tuple[int, ...]:
        return tuple(self.log[int(v)] for v in arr)


@lru_cache(maxsize=None)
def build_field(s: int = 1, modulus: int | None = None) -> Field:
    """Build (and cache) GF(4^(2s)), checking that the modulus is primitive."""
    return Field(s, modulus)
