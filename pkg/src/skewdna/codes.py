"""Skew cyclic codes <g> inside F_q[x; theta] / (x^n - 1).

Codeword enumeration is vectorised with numpy in the additive
representation; every exhaustive routine is bounded by an enumeration
guard (default 2^24 codewords, overridable with ``SKEWDNA_ENUM_GUARD``).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterator

import numpy as np

from .errors import DomainError, GuardError, NotDivisorError
from .gf import ZERO, Field
from .skewpoly import SkewPoly, format_poly, right_divmod, skew_reciprocal

DEFAULT_ENUM_GUARD = 1 << 24
_BLOCK = 1 << 16


def enum_guard(guard: int | None = None) -> int:
    if guard is not None:
        return guard
    return int(os.environ.get("SKEWDNA_ENUM_GUARD", DEFAULT_ENUM_GUARD))


@dataclass(frozen=True)
class SkewCyclicCode:
    """Length-n skew cyclic code with monic generator g and x^n - 1 = h*g."""

    n: int
    g: SkewPoly
    h: SkewPoly

    @property
    def field(self) -> Field:
        return self.g.field

    @property
    def k(self) -> int:
        return self.n - self.g.degree

    @property
    def size(self) -> int:
        return self.field.q**self.k

    def __str__(self) -> str:
        return f"<{format_poly(self.g)}> of length {self.n}"


def build_code(g: SkewPoly, n: int) -> SkewCyclicCode:
    if g.is_zero():
        raise DomainError("the zero polynomial generates no code")
    if n < 1:
        raise DomainError("code length must be positive")
    F = g.field
    modulus = SkewPoly.x_n_minus_one(F, n)
    g = g.monic()
    if g.degree > n:
        raise NotDivisorError(f"deg g = {g.degree} exceeds n = {n}", remainder=g)
    h, r = right_divmod(modulus, g)
    if not r.is_zero():
        raise NotDivisorError(
            f"{format_poly(g)} is not a right divisor of {format_poly(modulus)}: remainder {format_poly(r)}",
            remainder=r,
        )
    assert h * g == modulus
    return SkewCyclicCode(n, g, h)


def generator_matrix(code: SkewCyclicCode) -> tuple[tuple[int, ...], ...]:
    """Rows x^i * g for i < k; row i carries theta^i of g's coefficients."""
    F = code.field
    rows = []
    for i in range(code.k):
        row = [ZERO] * code.n
        for j, c in enumerate(code.g.coeffs):
            row[i + j] = F.theta(c, i)
        rows.append(tuple(row))
    return tuple(rows)


def _additive_rows(code: SkewCyclicCode) -> np.ndarray:
    F = code.field
    G = generator_matrix(code)
    if not G:
        return np.zeros((0, code.n), dtype=np.int64)
    return np.array([[F.to_additive(c) for c in row] for row in G], dtype=np.int64)


def _span(F: Field, rows: np.ndarray, n: int) -> np.ndarray:
    """All F-linear combinations of ``rows`` as an (q^len(rows), n) array."""
    everything = np.arange(F.q, dtype=np.int64)[:, None]
    words = np.zeros((1, n), dtype=np.int64)
    for row in rows:
        scaled = F.mul_additive(everything, row[None, :])
        words = (words[:, None, :] ^ scaled[None, :, :]).reshape(-1, n)
    return words


def _check_guard(code: SkewCyclicCode, guard: int | None) -> None:
    limit = enum_guard(guard)
    if code.size > limit:
        raise GuardError(
            f"code has q^k = {code.field.q}^{code.k} = {code.size} codewords, guard is {limit}",
            size=code.size,
        )


def codeword_blocks(code: SkewCyclicCode, guard: int | None = None) -> Iterator[np.ndarray]:
    """Yield all codewords as additive-form arrays, in blocks of rows."""
    _check_guard(code, guard)
    F = code.field
    rows = _additive_rows(code)
    k = code.k
    tail_len = 0
    while tail_len < k and F.q ** (tail_len + 1) <= _BLOCK:
        tail_len += 1
    head, tail = rows[: k - tail_len], rows[k - tail_len :]
    tail_words = _span(F, tail, code.n)
    if len(head) == 0:
        yield tail_words
        return
    scaled_head = [F.mul_additive(np.arange(F.q)[:, None], r[None, :]) for r in head]
    for betas in product(range(F.q), repeat=len(head)):
        offset = np.zeros(code.n, dtype=np.int64)
        for b, table in zip(betas, scaled_head):
            offset ^= table[b]
        yield tail_words ^ offset


def all_codewords(code: SkewCyclicCode, guard: int | None = None) -> np.ndarray:
    return np.concatenate(list(codeword_blocks(code, guard)))


def enumerate_codewords(code: SkewCyclicCode, guard: int | None = None) -> Iterator[tuple[int, ...]]:
    """Stream every codeword as a tuple of log-form field elements."""
    F = code.field
    for block in codeword_blocks(code, guard):
        for word in block:
            yield F.from_additive_array(word)


def minimum_distance(code: SkewCyclicCode, guard: int | None = None) -> int:
    if code.k < 1:
        raise DomainError("minimum distance of the zero code is undefined")
    best = code.n
    for block in codeword_blocks(code, guard):
        weights = np.count_nonzero(block, axis=1)
        weights = weights[weights > 0]
        if weights.size:
            best = min(best, int(weights.min()))
    return best


def _keys(words: np.ndarray, bits: int):
    n = words.shape[1]
    if bits * n <= 62:
        shifts = np.arange(n, dtype=np.int64) * bits
        return np.bitwise_or.reduce(words << shifts, axis=1) if n else np.zeros(len(words), np.int64)
    return [w.tobytes() for w in words]


def closed_under(
    code: SkewCyclicCode,
    transform: Callable[[np.ndarray], np.ndarray],
    guard: int | None = None,
) -> bool:
    """Whether ``transform`` (on additive word arrays) maps the code into itself."""
    words = all_codewords(code, guard)
    bits = code.field.degree
    keys = _keys(words, bits)
    images = _keys(transform(words), bits)
    if isinstance(keys, np.ndarray):
        return bool(np.isin(images, keys).all())
    members = set(keys)
    return all(img in members for img in images)


def is_reversible_classical(code: SkewCyclicCode, guard: int | None = None) -> bool:
    """Closure under plain coordinate reversal (c_{n-1}, ..., c_0)."""
    return closed_under(code, lambda w: w[:, ::-1], guard)


def is_member(code: SkewCyclicCode, word) -> bool:
    """Membership by right division: w is a codeword iff g right-divides w(x)."""
    if len(word) != code.n:
        return False
    return right_divmod(SkewPoly(code.field, word), code.g)[1].is_zero()


def dual_generator(code: SkewCyclicCode) -> SkewPoly:
    """h^R for x^n - 1 = h*g.

    For odd n the coefficients of h lie in the fixed field, so h^R is also
    the ordinary reciprocal and generates the ordinary cyclic dual.
    """
    h = code.h
    if code.n % 2:
        F = code.field
        assert all(F.is_fixed(c) for c in h.coeffs)
        return SkewPoly(F, h.coeffs[::-1])
    return skew_reciprocal(h)


def dual(code: SkewCyclicCode) -> SkewCyclicCode:
    return build_code(dual_generator(code), code.n)


def inner_product(F: Field, u, v) -> int:
    acc = ZERO
    for a, b in zip(u, v):
        acc = F.add(acc, F.mul(a, b))
    return acc


def are_orthogonal(c1: SkewCyclicCode, c2: SkewCyclicCode) -> bool:
    F = c1.field
    G1, G2 = generator_matrix(c1), generator_matrix(c2)
    return all(inner_product(F, r, s) == ZERO for r in G1 for s in G2)


def code_parameters(code: SkewCyclicCode, guard: int | None = None) -> tuple[int, int, int | None]:
    """[n, k, d]; d is None for the zero code."""
    d = minimum_distance(code, guard) if code.k else None
    return code.n, code.k, d


def format_parameters(n: int, k: int, d: int | None) -> str:
    return f"[{n},{k},{'-' if d is None else d}]"


__all__ = [
    "SkewCyclicCode",
    "all_codewords",
    "are_orthogonal",
    "build_code",
    "closed_under",
    "code_parameters",
    "codeword_blocks",
    "dual",
    "dual_generator",
    "enumerate_codewords",
    "generator_matrix",
    "inner_product",
    "is_member",
    "is_reversible_classical",
    "minimum_distance",
]
