#!/usr/bin/env python3
"""Reference-value generator.

Independent Python implementation of the ladder-sign census, the integer-weight
L table, and high-precision numeric constants. Output is frozen into
tests/data/*.json; the C++ engine must reproduce it. Sign decisions use exact
Fraction arithmetic only; numerics use mpmath at 80 digits, printed at 64.
"""

import json
from fractions import Fraction
from math import gcd
from pathlib import Path

from mpmath import mp, cos, exp, mpf, pi, sin, sqrt

mp.dps = 80
OUT = Path(__file__).resolve().parents[2] / "tests" / "data"
DIGITS = 64


def sin_sign(r: Fraction) -> int:
    """Exact sign of sin(pi*r)."""
    t = r - 2 * (r / 2).__floor__()
    if t == 0 or t == 1:
        return 0
    return 1 if t < 1 else -1


def cos_sign(r: Fraction) -> int:
    return sin_sign(r + Fraction(1, 2))


def lowering_factors(m: int, k: int, p: Fraction, n: int):
    """The two factors of the lowering coefficient c(n), as (kind, sign, zero)."""
    th = Fraction(m, 2 * k)  # theta / pi
    if n % 2 == 0:
        args = [("bracket", Fraction(n)), ("brace", p + n - 1)]
    else:
        args = [("bracket", p + n - 1), ("brace", Fraction(n))]
    out = []
    for kind, x in args:
        if kind == "bracket":
            s = sin_sign(th * x) * sin_sign(th)
            z = sin_sign(th * x) == 0
        else:
            s = cos_sign(th * x) * cos_sign(th)
            z = cos_sign(th * x) == 0
        out.append((kind, s, z))
    return out


def c_sign(m, k, p, n):
    """Sign of c(n) in {-1, 0, +1}, decided exactly."""
    fs = lowering_factors(m, k, p, n)
    if any(z for _, _, z in fs):
        return 0
    return fs[0][1] * fs[1][1]


def c_zero(m, k, p, n):
    return c_sign(m, k, p, n) == 0


def first_interior_singular(m, k, p):
    for n in range(1, 4 * k + 3):
        if c_zero(m, k, p, n):
            return n
    raise AssertionError(f"no singular index for m={m} k={k} p={p}")


def case_tag(m, k):
    if k % 2 == 0:
        return "even_k_odd_m"
    return "odd_k_odd_m" if m % 2 == 1 else "odd_k_even_m"


def generic_top(m, k):
    """Generic first interior singular index: k when both odd, else 2k."""
    return k if (k % 2 == 1 and m % 2 == 1) else 2 * k


def window_max(m, k):
    if m % 2 == 1:
        return 4 * k
    return 2 * k if m % 4 == 2 else k


def verdict(m, k, p, L):
    signs = [c_sign(m, k, p, n) for n in range(1, L + 1)]
    if any(s < 0 for s in signs):
        return "not_unitarizable"
    if any(s == 0 for s in signs):
        return "boundary"
    return "unitarizable"


def census(m, k):
    """Strict and boundary rows on the default half-integer grid."""
    strict, boundary = [], []
    seen = set()

    def emit(p, L):
        if L < 1 or (p, L) in seen:
            return
        seen.add((p, L))
        v = verdict(m, k, p, L)
        row = {"p": str(p), "L": L}
        if v == "unitarizable":
            strict.append(row)
        elif v == "boundary":
            boundary.append(row)

    wmax = window_max(m, k)
    grid = [Fraction(j, 2) for j in range(1, 2 * wmax + 1)]
    for p in grid:
        if p.denominator == 1:
            emit(p, first_interior_singular(m, k, p) - 1)
        emit(p, generic_top(m, k) - 1)

    key = lambda row: (Fraction(row["p"]), row["L"])
    return sorted(strict, key=key), sorted(boundary, key=key)


def admissible_pairs(kmax):
    return [(m, k) for k in range(2, kmax + 1) for m in range(1, k) if gcd(m, k) == 1]


def num_c(q, p, n):
    """Numeric lowering coefficient, q and p arbitrary complex."""
    br = lambda x: (q**x - q**-x) / (q - q**-1)
    brc = lambda x: (q**x + q**-x) / (q + q**-1)
    return br(n) * brc(n + p - 1) if n % 2 == 0 else br(n + p - 1) * brc(n)


def fmt(x):
    return mp.nstr(mpf(x), DIGITS, strip_zeros=False)


def main():
    OUT.mkdir(parents=True, exist_ok=True)

    # --- census over the default grid, k <= 12 ---
    census_doc = []
    for m, k in admissible_pairs(12):
        strict, bdry = census(m, k)
        census_doc.append(
            {"m": m, "k": k, "case": case_tag(m, k), "strict": strict, "boundary": bdry}
        )
    (OUT / "census_expected.json").write_text(json.dumps(census_doc, indent=1))

    # sanity: every even-m algebra strict-empty; m>=5 odd exactly one; m=3 k>=10 two
    for row in census_doc:
        m, k, strict = row["m"], row["k"], row["strict"]
        if m % 2 == 0:
            assert strict == [], (m, k, strict)
        if m >= 5 and m % 2 == 1:
            assert len(strict) == 1 and strict[0]["L"] == 1, (m, k, strict)
        if m == 3 and k >= 10:
            assert len(strict) == 2, (m, k, strict)

    # --- integer-p L table (brute scan), k <= 9 ---
    ltable = []
    for m, k in admissible_pairs(9):
        rows = [
            {"p": p, "L": first_interior_singular(m, k, Fraction(p)) - 1}
            for p in range(1, window_max(m, k) + 1)
        ]
        ltable.append({"m": m, "k": k, "rows": rows})
    (OUT / "ltable_expected.json").write_text(json.dumps(ltable, indent=1))

    # --- numeric reference constants ---
    ref = {}

    # orthonormal 2-dim family: offdiag sqrt(cos th / sin th), K = diag(i e^{-i th}, i e^{i th})
    dim2 = []
    for m, k in admissible_pairs(9):
        if m % 2 == 0:
            continue
        p = k - 1 if m % 4 == 1 else 3 * k - 1
        assert verdict(m, k, Fraction(p), 1) == "unitarizable", (m, k, p)
        th = pi * m / (2 * k)
        off = sqrt(cos(th) / sin(th))
        kdiag = [1j * exp(-1j * th), 1j * exp(1j * th)]
        dim2.append(
            {
                "m": m, "k": k, "p": p,
                "offdiag": fmt(off),
                "K": [{"re": fmt(z.real), "im": fmt(z.imag)} for z in kdiag],
            }
        )
    ref["dim2_family"] = dim2

    # orthonormal 4-dim family at p = 3k-3 (accepts the non-reduced fraction (3,12))
    dim4 = []
    for k in (10, 12, 14):
        m, p = 3, 3 * k - 3
        th = pi * m / (2 * k)
        e1 = sqrt(cos(9 * pi / (2 * k)) / sin(3 * pi / (2 * k)))
        e2 = sqrt(2 * sin(3 * pi / k))
        kdiag = [1j * exp(1j * pi * c / (2 * k)) for c in (-9, -3, 3, 9)]
        q = exp(1j * th)
        for n, want in ((1, e1 * e1), (2, e2 * e2), (3, e1 * e1)):
            got = num_c(q, p, n)
            assert abs(got - want) < mpf(10) ** -70, (k, n)
        dim4.append(
            {
                "m": m, "k": k, "p": p,
                "entries": [fmt(e1), fmt(e2), fmt(e1)],
                "K": [{"re": fmt(z.real), "im": fmt(z.imag)} for z in kdiag],
            }
        )
    ref["dim4_family"] = dim4

    # deformed-integer samples
    q = exp(1j * pi / 4)
    ref["qbracket_m1_k2_n2"] = fmt(((q**2 - q**-2) / (q - q**-1)).real)
    ref["two_plus_sqrt2"] = fmt(2 + sqrt(2))

    # Casimir eigenvalues (q^{2p-2} + q^{-2p+2})/2 + 2
    cas = []
    for m, k, p in ((1, 2, 3), (1, 3, 2), (2, 3, 1), (1, 4, 2), (3, 10, 27)):
        q = exp(1j * pi * m / (2 * k))
        z = (q ** (2 * p - 2) + q ** (-2 * p + 2)) / 2 + 2
        cas.append({"m": m, "k": k, "p": p, "re": fmt(z.real), "im": fmt(z.imag)})
    ref["casimir"] = cas

    # irrational-angle scan: q = e^{0.7i}, p = 0.37; only n = 0 annihilates
    q = exp(0.7j)
    mags = [abs(num_c(q, mpf("0.37"), n)) for n in range(1, 201)]
    ref["irrational_scan_min_abs"] = fmt(min(mags))
    assert min(mags) > mpf(10) ** -30

    (OUT / "reference_values.json").write_text(json.dumps(ref, indent=1))

    n_strict = sum(len(r["strict"]) for r in census_doc)
    n_bdry = sum(len(r["boundary"]) for r in census_doc)
    print(f"census: {len(census_doc)} algebras, {n_strict} strict rows, {n_bdry} boundary rows")
    print(f"ltable: {sum(len(r['rows']) for r in ltable)} integer weights")
    print(f"irrational scan min |c(n)| = {ref['irrational_scan_min_abs'][:12]}")


if __name__ == "__main__":
    main()
