from itertools import combinations

import pytest

import oracle
from skewdna.codes import all_codewords, build_code
from skewdna.errors import GuardError, UsageError
from skewdna.gf import ZERO
from skewdna.search import (
    DivisorQuery,
    all_right_divisors,
    commutative_product,
    factor_odd_length,
    find_right_divisors,
    format_report,
    sweep_and_classify,
)
from skewdna.skewpoly import SkewPoly, is_right_divisor, left_divmod, palindromic_normalize


def _cofactor_oracle(F, n, m):
    """All monic degree-m right divisors g, found by enumerating monic cofactors h
    of degree n - m and left-dividing x^n + 1 by them."""
    B = oracle.BitField(F.s, F.modulus)
    modulus = SkewPoly.x_n_minus_one(F, n)
    found = set()
    for hb in oracle.monic_polys(B, n - m):
        if hb[0] == 0:
            continue
        h = SkewPoly(F, [F.from_additive(v) for v in hb])
        g, r = left_divmod(modulus, h)
        if r.is_zero():
            assert oracle.skew_mul(B, hb, oracle.to_bits(F, g.coeffs)) == oracle.xn1(n)
            found.add(g)
    return found


def _brute_oracle(F, n, m):
    found = set()
    for low in oracle.monic_polys(oracle.BitField(F.s, F.modulus), m):
        g = SkewPoly(F, [F.from_additive(v) for v in low])
        if is_right_divisor(g, n):
            found.add(g)
    return found


def test_theta_cubic_n6_in_theta_search(F1, P):
    found = find_right_divisors(F1, DivisorQuery(6, 3, "theta_palindromic"))
    assert P("1 + a^7*x + a^13*x^2 + x^3") in found
    assert found == sorted(found, key=lambda p: p.coeffs)


def test_palindromic_sextic_n10_in_palindromic_search(F1, P):
    found = find_right_divisors(F1, DivisorQuery(10, 6, "palindromic"))
    assert P("1 + a*x + a^11*x^2 + a^11*x^4 + a*x^5 + x^6") in found


def test_trivial_n2(F1, P):
    assert P("x + 1") in find_right_divisors(F1, DivisorQuery(2, 1))


def test_query_validation():
    with pytest.raises(UsageError):
        DivisorQuery(4, 4)
    with pytest.raises(UsageError):
        DivisorQuery(4, 2, "bogus")


def test_search_guard(F1):
    with pytest.raises(GuardError) as exc:
        find_right_divisors(F1, DivisorQuery(6, 5), guard=1000)
    assert exc.value.size == 16**5


def test_limit(F1):
    assert len(find_right_divisors(F1, DivisorQuery(6, 2, limit=3))) == 3


@pytest.mark.parametrize("n", [2, 4, 6])
def test_unrestricted_search_is_complete(F1, n):
    divisors = all_right_divisors(F1, n)
    for m, found in divisors.items():
        found = set(found)
        assert found == _cofactor_oracle(F1, n, m)
        if 16**m <= 1 << 16:
            assert found == _brute_oracle(F1, n, m)


@pytest.mark.parametrize("n", [2, 4, 6])
@pytest.mark.parametrize("kind", ["palindromic", "theta_palindromic"])
def test_pruned_search_matches_filtered_unrestricted(F1, n, kind):
    for m, found in all_right_divisors(F1, n).items():
        expected = [g for g in found if palindromic_normalize(g, kind) is not None]
        assert find_right_divisors(F1, DivisorQuery(n, m, kind)) == expected


def test_pruned_palindromic_search_n10_matches_filter(F1):
    # x^10 + 1, degree 4: compare with a filtered brute-force sweep over palindromes
    found = find_right_divisors(F1, DivisorQuery(10, 4, "palindromic"))
    brute = []
    for a1 in F1.elements():
        for a2 in F1.elements():
            g = SkewPoly(F1, [0, a1, a2, a1, 0])
            if is_right_divisor(g, 10):
                brute.append(g)
    assert found == sorted(brute, key=lambda p: p.coeffs)
    assert SkewPoly.parse(F1, "1 + a*x + a^3*x^2 + a*x^3 + x^4") in found


def test_factor_odd_length_n5(F1, P):
    assert factor_odd_length(F1, 5) == [P("x + 1"), P("x^2 + a^5*x + 1"), P("x^2 + a^10*x + 1")]


def test_factor_n1(F1, P):
    assert factor_odd_length(F1, 1) == [P("x + 1")]


@pytest.mark.parametrize("n", [3, 7, 9, 15, 21])
def test_factorization_multiplies_back(F1, n):
    B = oracle.BitField(1, F1.modulus)
    factors = factor_odd_length(F1, n)
    acc = [1]
    for f in factors:
        assert all(F1.is_fixed(c) for c in f.coeffs)
        assert f.is_monic()
        acc = oracle.comm_mul(B, acc, oracle.to_bits(F1, f.coeffs))
    assert acc == oracle.xn1(n)
    assert commutative_product(factors) == SkewPoly.x_n_minus_one(F1, n)


def test_factor_s2_n5(F2):
    factors = factor_odd_length(F2, 5)
    assert commutative_product(factors) == SkewPoly.x_n_minus_one(F2, 5)
    assert all(F2.is_fixed(c) for f in factors for c in f.coeffs)


def test_factor_errors(F1):
    with pytest.raises(UsageError):
        factor_odd_length(F1, 4)
    with pytest.raises(GuardError):
        factor_odd_length(F1, 65)


@pytest.mark.parametrize("n", [3, 5, 7])
def test_odd_length_divisors_are_subproducts(F1, n):
    factors = factor_odd_length(F1, n)
    subproducts = {
        commutative_product(list(c)) for r in range(1, len(factors)) for c in combinations(factors, r)
    }
    found = {g for gs in all_right_divisors(F1, n).values() for g in gs}
    assert found == subproducts
    assert all(F1.is_fixed(c) for g in found for c in g.coeffs)


@pytest.mark.parametrize("n", [3, 5])
def test_odd_skew_code_equals_ordinary_cyclic_code(F1, n):
    B = oracle.BitField(1, F1.modulus)
    for gs in all_right_divisors(F1, n).values():
        for g in gs:
            code = build_code(g, n)
            if F1.q**code.k > 1 << 16:
                continue
            skew = {tuple(int(v) for v in w) for w in all_codewords(code)}
            gb = oracle.to_bits(F1, g.coeffs)
            ordinary = set()
            for a in oracle.monic_polys(B, code.k - 1):
                for top in range(B.q):
                    prod = oracle.comm_mul(B, oracle.strip(a[:-1] + [top]), gb)
                    ordinary.add(tuple(prod + [0] * (n - len(prod))))
            assert skew == ordinary


def test_sweep_n2(F1):
    report = sweep_and_classify(F1, 2)
    row = next(r for r in report.rows if r.g == "1 + x")
    assert (row.n, row.k, row.d) == (2, 1, 2)
    assert row.reversible_dna_exhaustive and row.reversible_classical


def test_sweep_n5_rows_fixed(F1):
    report = sweep_and_classify(F1, 5)
    for row in report.rows:
        g = SkewPoly.parse(F1, row.g)
        assert all(F1.is_fixed(c) for c in g.coeffs)
        assert row.reversible_dna_structural == row.reversible_dna_exhaustive


def test_sweep_guard_marks_skipped(F1):
    report = sweep_and_classify(F1, 4, enum_guard=16)
    text = format_report(report)
    assert "skipped:guard" in text
    assert all(r.reversible_dna_exhaustive is None for r in report.rows if r.k > 1)


def test_search_s2(F2):
    # degree-1 right divisors x + b of x^2 + 1 need b * theta(b) = 1
    found = find_right_divisors(F2, DivisorQuery(2, 1))
    expected = [SkewPoly(F2, [b, 0]) for b in range(F2.order) if F2.mul(b, F2.theta(b)) == 0]
    assert found == expected
    assert len(found) == 17
    assert ZERO not in [g.coeffs[0] for g in found]
