"""The skew polynomial ring F_q[x; theta], multiplication twisted by x*c = theta(c)*x.

Coefficients are stored low-to-high as log-form field elements.  Because the
field has characteristic 2, x^n - 1 and x^n + 1 are the same polynomial.
"""

from __future__ import annotations

import re
from typing import NamedTuple

from .errors import DomainError, UsageError
from .gf import ONE, ZERO, Field

PALINDROMIC = "palindromic"
THETA_PALINDROMIC = "theta_palindromic"

_TERM_RE = re.compile(r"^(?:(?P<c>0|1|a(?:\^\d+)?)(?:\*(?P<x1>x(?:\^\d+)?))?|(?P<x2>x(?:\^\d+)?))$")


class SkewPoly:
    """Immutable element of F_q[x; theta]."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1] == ZERO:
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, field: Field) -> SkewPoly:
        return cls(field)

    @classmethod
    def constant(cls, field: Field, c: int) -> SkewPoly:
        return cls(field, [c])

    @classmethod
    def monomial(cls, field: Field, k: int, c: int = ONE) -> SkewPoly:
        return cls(field, [ZERO] * k + [c])

    @classmethod
    def x_n_minus_one(cls, field: Field, n: int) -> SkewPoly:
        return cls(field, [ONE] + [ZERO] * (n - 1) + [ONE])

    @classmethod
    def parse(cls, field: Field, text: str) -> SkewPoly:
        """Parse e.g. ``"1 + a^7*x + x^3"``; terms may come in any order.

        A '-' is read as '+' (characteristic 2).
        """
        t = text.replace(" ", "").replace("-", "+")
        if not t:
            raise UsageError("empty polynomial")
        acc: dict[int, int] = {}
        for term in t.split("+"):
            match = _TERM_RE.match(term)
            if not match:
                raise UsageError(f"cannot parse term {term!r} in {text!r}")
            xpart = match.group("x1") or match.group("x2")
            c = field.parse(match.group("c")) if match.group("c") else ONE
            if xpart is None:
                k = 0
            elif "^" in xpart:
                k = int(xpart.split("^")[1])
            else:
                k = 1
            acc[k] = field.add(acc.get(k, ZERO), c)
        deg = max(acc)
        return cls(field, [acc.get(i, ZERO) for i in range(deg + 1)])

    # -- basic protocol ---------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 stands for the zero polynomial's -infinity."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else ZERO

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else ZERO

    def monic(self) -> SkewPoly:
        if self.is_zero():
            raise DomainError("zero polynomial has no monic form")
        return scale(self.field.inv(self.lead), self)

    def is_monic(self) -> bool:
        return self.lead == ONE

    def __eq__(self, other) -> bool:
        return isinstance(other, SkewPoly) and self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: SkewPoly) -> SkewPoly:
        _check_same_field(self, other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return SkewPoly(F, [F.add(self.coeff(i), other.coeff(i)) for i in range(n)])

    __sub__ = __add__

    def __mul__(self, other: SkewPoly) -> SkewPoly:
        return skew_mul(self, other)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"SkewPoly({format_poly(self)!r})"


def _check_same_field(f: SkewPoly, g: SkewPoly) -> None:
    if f.field != g.field:
        raise UsageError(f"polynomials over different fields: {f.field!r} vs {g.field!r}")


def format_poly(f: SkewPoly) -> str:
    if f.is_zero():
        return "0"
    F = f.field
    terms = []
    for i, c in enumerate(f.coeffs):
        if c == ZERO:
            continue
        xs = "" if i == 0 else "x" if i == 1 else f"x^{i}"
        if not xs:
            terms.append(F.format(c))
        elif c == ONE:
            terms.append(xs)
        else:
            terms.append(f"{F.format(c)}*{xs}")
    return " + ".join(terms)


def scale(c: int, f: SkewPoly) -> SkewPoly:
    """Left scalar multiple c*f."""
    F = f.field
    return SkewPoly(F, [F.mul(c, a) for a in f.coeffs])


def skew_mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """Product f*g; coefficient t is sum_j f_j * theta^j(g_{t-j})."""
    _check_same_field(f, g)
    F = f.field
    if f.is_zero() or g.is_zero():
        return SkewPoly(F)
    out = [ZERO] * (len(f.coeffs) + len(g.coeffs) - 1)
    twisted = [g.coeffs, tuple(F.theta(b) for b in g.coeffs)]
    for j, a in enumerate(f.coeffs):
        if a == ZERO:
            continue
        for i, b in enumerate(twisted[j % 2]):
            if b != ZERO:
                out[i + j] = F.add(out[i + j], F.mul(a, b))
    return SkewPoly(F, out)


def right_divmod(f: SkewPoly, g: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """(quot, rem) with f = quot*g + rem and deg rem < deg g."""
    _check_same_field(f, g)
    if g.is_zero():
        raise DomainError("division by the zero polynomial")
    F = f.field
    m = g.degree
    rem = list(f.coeffs)
    quot = [ZERO] * max(len(rem) - m, 0)
    for d in range(len(rem) - 1, m - 1, -1):
        lead = rem[d]
        if lead == ZERO:
            continue
        e = d - m
        # (c x^e) g has leading coefficient c * theta^e(g_m)
        c = F.div(lead, F.theta(g.lead, e))
        quot[e] = c
        for j, b in enumerate(g.coeffs):
            if b != ZERO:
                rem[e + j] = F.sub(rem[e + j], F.mul(c, F.theta(b, e)))
    return SkewPoly(F, quot), SkewPoly(F, rem[:m])


def left_divmod(f: SkewPoly, g: SkewPoly) -> tuple[SkewPoly, SkewPoly]:
    """(quot, rem) with f = g*quot + rem and deg rem < deg g."""
    _check_same_field(f, g)
    if g.is_zero():
        raise DomainError("division by the zero polynomial")
    F = f.field
    m = g.degree
    rem = list(f.coeffs)
    quot = [ZERO] * max(len(rem) - m, 0)
    for d in range(len(rem) - 1, m - 1, -1):
        lead = rem[d]
        if lead == ZERO:
            continue
        e = d - m
        # g (c x^e) = sum_j g_j theta^j(c) x^(j+e); match g_m theta^m(c) = lead
        c = F.theta(F.div(lead, g.lead), m)
        quot[e] = c
        for j, b in enumerate(g.coeffs):
            if b != ZERO:
                rem[e + j] = F.sub(rem[e + j], F.mul(b, F.theta(c, j)))
    return SkewPoly(F, quot), SkewPoly(F, rem[:m])


def is_right_divisor(g: SkewPoly, n: int) -> bool:
    if g.is_zero():
        raise DomainError("zero polynomial divides nothing")
    if g.degree > n:
        return False
    return right_divmod(SkewPoly.x_n_minus_one(g.field, n), g)[1].is_zero()


def is_left_divisor(g: SkewPoly, n: int) -> bool:
    if g.is_zero():
        raise DomainError("zero polynomial divides nothing")
    if g.degree > n:
        return False
    return left_divmod(SkewPoly.x_n_minus_one(g.field, n), g)[1].is_zero()


def skew_reciprocal(f: SkewPoly) -> SkewPoly:
    """f^R = sum_i theta^i(a_{t-i}) x^i for t = deg f."""
    if f.is_zero():
        raise DomainError("skew reciprocal of the zero polynomial")
    F = f.field
    t = f.degree
    return SkewPoly(F, [F.theta(f.coeffs[t - i], i) for i in range(t + 1)])


def is_palindromic(f: SkewPoly) -> bool:
    c = f.coeffs
    return c == c[::-1]


def is_theta_palindromic(f: SkewPoly) -> bool:
    F = f.field
    c = f.coeffs
    return all(a == F.theta(b) for a, b in zip(c, reversed(c)))


class Normalized(NamedTuple):
    scalar: int
    poly: SkewPoly
    kind: str


def palindromic_normalize(f: SkewPoly, kind: str | None = None) -> Normalized | None:
    """Least scalar (in log order) whose left multiple of f has the given kind.

    With ``kind=None`` palindromic is tried before theta-palindromic.  All
    q - 1 nonzero scalars are scanned.
    """
    if f.is_zero():
        raise DomainError("cannot normalize the zero polynomial")
    kinds = [PALINDROMIC, THETA_PALINDROMIC] if kind is None else [kind]
    for k in kinds:
        test = _KIND_TESTS[k]
        for lam in range(f.field.order):
            g = scale(lam, f)
            if test(g):
                return Normalized(lam, g, k)
    return None


_KIND_TESTS = {PALINDROMIC: is_palindromic, THETA_PALINDROMIC: is_theta_palindromic}


def is_central_modulus(n: int) -> bool:
    """Whether x^n - 1 is central: x^n c = theta^n(c) x^n, so iff 2 | n."""
    if n < 1:
        raise UsageError("n must be positive")
    return n % 2 == 0
