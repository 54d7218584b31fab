"""Exhaustive search for right divisors of x^n - 1 and odd-length factorization.

Candidates are tested in numpy batches: every monic g of degree m in a batch
is divided into x^n + 1 simultaneously, in additive form.  The search space
is capped by a guard (default 2^24, ``SKEWDNA_SEARCH_GUARD``).
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import codes
from .dna import is_reversible_dna_by_generator, is_reversible_dna_code
from .errors import DomainError, GuardError, UsageError
from .gf import ONE, ZERO, Field
from .skewpoly import (
    PALINDROMIC,
    THETA_PALINDROMIC,
    SkewPoly,
    format_poly,
    is_palindromic,
    is_right_divisor,
    is_theta_palindromic,
    palindromic_normalize,
    right_divmod,
)

ANY = "any"
KINDS = (ANY, PALINDROMIC, THETA_PALINDROMIC)
DEFAULT_SEARCH_GUARD = 1 << 24
_BATCH = 1 << 16


def search_guard(guard: int | None = None) -> int:
    if guard is not None:
        return guard
    return int(os.environ.get("SKEWDNA_SEARCH_GUARD", DEFAULT_SEARCH_GUARD))


@dataclass(frozen=True)
class DivisorQuery:
    n: int
    m: int
    kind: str = ANY
    limit: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise UsageError(f"unknown kind {self.kind!r}; expected one of {', '.join(KINDS)}")
        if not 1 <= self.m < self.n:
            raise UsageError(f"need 1 <= m < n, got m={self.m}, n={self.n}")


def _digits(idx: np.ndarray, base: int, width: int) -> np.ndarray:
    out = np.empty((len(idx), width), dtype=np.int64)
    for j in range(width):
        out[:, j] = idx % base
        idx = idx // base
    return out


def _right_remainders(F: Field, g: np.ndarray, n: int) -> np.ndarray:
    """Remainders of x^n + 1 right-divided by each monic row of ``g`` (additive form)."""
    N, width = g.shape
    m = width - 1
    r = np.zeros((N, n + 1), dtype=np.int64)
    r[:, 0] = 1
    r[:, n] = 1
    g_theta = F.theta_table[g]
    for d in range(n, m - 1, -1):
        c = r[:, d]
        e = d - m
        twisted = g_theta if e % 2 else g
        # monic g: the quotient coefficient is the current leading coefficient
        r[:, e : d + 1] ^= F.mul_additive(c[:, None], twisted)
    return r[:, :m]


class _Layout:
    """Map from free-coefficient digit vectors to full coefficient arrays."""

    def __init__(self, F: Field, m: int, kind: str):
        self.F, self.m, self.kind = F, m, kind
        if kind == ANY:
            self.a0_choices = None
            self.free = m
        else:
            if kind == PALINDROMIC:
                self.a0_choices = np.array([1], dtype=np.int64)
            else:
                self.a0_choices = F.to_additive_array(F.norm_one_elements())
            # a_1 .. a_{ceil(m/2)-1} free, plus the middle coefficient for even m
            self.free = m // 2
        self.size = F.q**self.free * (1 if self.a0_choices is None else len(self.a0_choices))

    def batch(self, start: int, stop: int) -> np.ndarray:
        F, m = self.F, self.m
        idx = np.arange(start, stop, dtype=np.int64)
        g = np.zeros((len(idx), m + 1), dtype=np.int64)
        g[:, m] = 1
        if self.kind == ANY:
            g[:, :m] = _digits(idx, F.q, m)
            return g
        a0 = self.a0_choices[idx % len(self.a0_choices)]
        free = _digits(idx // len(self.a0_choices), F.q, self.free)
        g[:, 0] = a0
        for i in range(1, (m + 1) // 2):
            a = free[:, i - 1]
            g[:, i] = a
            if self.kind == PALINDROMIC:
                g[:, m - i] = a
            else:
                g[:, m - i] = F.mul_additive(a0, F.theta_table[a])
        if m % 2 == 0 and m > 0:
            mid = free[:, self.free - 1]
            if self.kind == THETA_PALINDROMIC:
                ok = F.mul_additive(a0, F.theta_table[mid]) == mid
                g = g[ok]
                mid = mid[ok]
            g[:, m // 2] = mid
        return g


def find_right_divisors(F: Field, query: DivisorQuery, guard: int | None = None) -> list[SkewPoly]:
    """All monic right divisors of x^n - 1 of degree m, of the requested kind.

    ``palindromic`` returns palindromic g; ``theta_palindromic`` returns the
    monic g that have a theta-palindromic scalar multiple.  Results are
    sorted by their log-index coefficient tuples.
    """
    layout = _Layout(F, query.m, query.kind)
    limit = search_guard(guard)
    if layout.size > limit:
        raise GuardError(f"search space has {layout.size} candidates, guard is {limit}", size=layout.size)
    found = []
    for start in range(0, layout.size, _BATCH):
        cand = layout.batch(start, min(start + _BATCH, layout.size))
        if not len(cand):
            continue
        rem = _right_remainders(F, cand, query.n)
        hits = cand[~rem.any(axis=1)]
        for row in hits:
            g = SkewPoly(F, F.from_additive_array(row))
            if is_right_divisor(g, query.n):
                found.append(g)
    found.sort(key=lambda p: p.coeffs)
    if query.limit is not None:
        found = found[: query.limit]
    return found


def all_right_divisors(F: Field, n: int, guard: int | None = None) -> dict[int, list[SkewPoly]]:
    return {m: find_right_divisors(F, DivisorQuery(n, m), guard) for m in range(1, n)}


# -- commutative factorization over the fixed field ----------------------


def _comm_mul(F: Field, a: tuple, b: tuple) -> tuple:
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return tuple(out)


def _comm_divmod(F: Field, f: tuple, g: tuple) -> tuple[tuple, tuple]:
    """Ordinary polynomial division for monic g."""
    r = list(f)
    m = len(g) - 1
    q = [ZERO] * max(len(r) - m, 0)
    for d in range(len(r) - 1, m - 1, -1):
        c = r[d]
        if c == ZERO:
            continue
        q[d - m] = c
        for j, b in enumerate(g):
            r[d - m + j] = F.sub(r[d - m + j], F.mul(c, b))
    rem = r[:m]
    while rem and rem[-1] == ZERO:
        rem.pop()
    return tuple(q), tuple(rem)


def commutative_product(factors: list[SkewPoly]) -> SkewPoly:
    F = factors[0].field
    acc = (ONE,)
    for f in factors:
        acc = _comm_mul(F, acc, f.coeffs)
    return SkewPoly(F, acc)


def factor_odd_length(F: Field, n: int, guard: int | None = None) -> list[SkewPoly]:
    """Irreducible factors of x^n - 1 over the fixed field GF(4^s), by trial division."""
    if n < 1 or n % 2 == 0:
        raise UsageError(f"factor_odd_length needs odd n, got {n}")
    if n > 63:
        raise GuardError(f"n={n} exceeds the trial-division limit 63", size=n)
    fixed = sorted(F.fixed_elements())
    limit = search_guard(guard)
    rest = SkewPoly.x_n_minus_one(F, n).coeffs
    factors: list[SkewPoly] = []
    d = 1
    while len(rest) - 1 >= 2 * d:
        count = len(fixed) ** d
        if count > limit:
            raise GuardError(f"trial division at degree {d} needs {count} candidates, guard is {limit}", size=count)
        for low in np.ndindex(*([len(fixed)] * d)):
            cand = tuple(fixed[i] for i in reversed(low)) + (ONE,)
            if cand[0] == ZERO:
                continue
            while True:
                quot, rem = _comm_divmod(F, rest, cand)
                if rem:
                    break
                factors.append(SkewPoly(F, cand))
                rest = quot
            if len(rest) - 1 < 2 * d:
                break
        d += 1
    if len(rest) > 1:
        factors.append(SkewPoly(F, rest))
    factors.sort(key=lambda p: (p.degree, p.coeffs))
    return factors


# -- sweep ---------------------------------------------------------------


@dataclass
class SweepRow:
    degree: int
    g: str
    palindromic: bool
    theta_palindromic: bool
    theta_palindromic_scalar: str | None
    n: int
    k: int
    d: int | None
    cofactor: str
    cofactor_palindromic: bool
    reversible_classical: bool | None
    reversible_dna_structural: bool
    reversible_dna_exhaustive: bool | None
    dual: str
    dual_reversible_dna: bool | None

    def as_dict(self) -> dict:
        return dict(self.__dict__)


@dataclass
class SweepReport:
    s: int
    n: int
    rows: list[SweepRow] = dc_field(default_factory=list)

    def as_dict(self) -> dict:
        return {"s": self.s, "n": self.n, "rows": [r.as_dict() for r in self.rows]}


def guarded(fn, *args):
    try:
        return fn(*args)
    except GuardError:
        return None


def classify(code: codes.SkewCyclicCode, enum_guard: int | None = None) -> SweepRow:
    """One report row for a code: kind flags, [n,k,d], reversibility, dual."""
    F = code.field
    g = code.g
    theta_norm = palindromic_normalize(g, THETA_PALINDROMIC)
    # cofactor of the theta-palindromic representative when there is one
    rep = theta_norm.poly if (g.degree % 2 and theta_norm) else g
    cofactor = right_divmod(SkewPoly.x_n_minus_one(F, code.n), rep)[0]
    dual_code = codes.dual(code)
    return SweepRow(
        degree=g.degree,
        g=format_poly(g),
        palindromic=is_palindromic(g),
        theta_palindromic=is_theta_palindromic(g),
        theta_palindromic_scalar=None if theta_norm is None else F.format(theta_norm.scalar),
        n=code.n,
        k=code.k,
        d=guarded(codes.minimum_distance, code, enum_guard) if code.k else None,
        cofactor=format_poly(cofactor),
        cofactor_palindromic=is_palindromic(cofactor),
        reversible_classical=guarded(codes.is_reversible_classical, code, enum_guard),
        reversible_dna_structural=is_reversible_dna_by_generator(code),
        reversible_dna_exhaustive=guarded(is_reversible_dna_code, code, None, enum_guard),
        dual=format_poly(dual_code.g),
        dual_reversible_dna=guarded(is_reversible_dna_code, dual_code, None, enum_guard),
    )


def sweep_and_classify(
    F: Field, n: int, enum_guard: int | None = None, guard: int | None = None
) -> SweepReport:
    if n < 2:
        raise DomainError("sweep needs n >= 2")
    report = SweepReport(F.s, n)
    for m, divisors in all_right_divisors(F, n, guard).items():
        for g in divisors:
            report.rows.append(classify(codes.build_code(g, n), enum_guard))
    return report


_COLUMNS = [
    ("deg", "degree"),
    ("generator", "g"),
    ("pal", "palindromic"),
    ("tpal", "theta_palindromic"),
    ("tpal*", "theta_palindromic_scalar"),
    ("[n,k,d]", None),
    ("rev", "reversible_classical"),
    ("dna(struct)", "reversible_dna_structural"),
    ("dna(exh)", "reversible_dna_exhaustive"),
    ("dual", "dual"),
    ("dual dna", "dual_reversible_dna"),
]


def _cell(value) -> str:
    if value is None:
        return "skipped:guard"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def format_report(report: SweepReport) -> str:
    table = []
    for row in report.rows:
        cells = []
        for _, attr in _COLUMNS:
            if attr is None:
                cells.append(codes.format_parameters(row.n, row.k, row.d))
            elif attr == "theta_palindromic_scalar":
                cells.append(row.theta_palindromic_scalar or "-")
            else:
                cells.append(_cell(getattr(row, attr)))
        table.append(cells)
    header = [h for h, _ in _COLUMNS]
    widths = [max(len(r[i]) for r in [header, *table]) for i in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in [header, *table]]
    return "\n".join(lines) + "\n"


__all__ = [
    "ANY",
    "DivisorQuery",
    "SweepReport",
    "SweepRow",
    "all_right_divisors",
    "classify",
    "commutative_product",
    "factor_odd_length",
    "find_right_divisors",
    "format_report",
    "sweep_and_classify",
]
