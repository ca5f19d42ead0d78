#!/usr/bin/env python3
"""Regenerate tests/data/derived.json.

Every value in that file is computed here by a route independent of the
package under test: sympy polynomial arithmetic for field operations,
exhaustive span/kernel enumeration for the linear algebra, pointwise map
composition for skew products, and the integer product formula for
q-binomials.  Nothing imports rankcrypt.

The output is frozen (committed); the test suite only reads it.  Rerun
manually if an oracle is extended:

    python3 tests/gen_oracles.py
"""

import itertools
import json
from pathlib import Path

from sympy import GF, Poly, symbols

X = symbols("x")


# -- field arithmetic via sympy polynomials ----------------------------------


def canonical_modulus(q: int, m: int) -> list[int]:
    """Lexicographically least monic irreducible of degree m over F_q,
    coefficients ascending (constant term first).  Candidates are ordered
    by the integer sum(c_i q^i), the highest power most significant."""
    for rest in range(q**m):
        cs = [(rest // q**i) % q for i in range(m)] + [1]
        if Poly(list(reversed(cs)), X, domain=GF(q)).is_irreducible:
            return cs
    raise RuntimeError("no irreducible found")


class FF:
    """F_{q^m} as polynomials mod the canonical modulus; elements are the
    integers sum(c_i q^i)."""

    def __init__(self, q: int, m: int):
        self.q, self.m = q, m
        self.mod_coeffs = canonical_modulus(q, m)
        self.modpoly = Poly(list(reversed(self.mod_coeffs)), X, domain=GF(q))
        self.order = q**m

    def to_poly(self, a: int) -> Poly:
        cs = [(a // self.q**i) % self.q for i in range(self.m)]
        return Poly(list(reversed(cs)), X, domain=GF(self.q))

    def to_int(self, p: Poly) -> int:
        cs = list(reversed(p.rem(self.modpoly).all_coeffs()))
        return sum(int(c) % self.q * self.q**i for i, c in enumerate(cs))

    def mul(self, a: int, b: int) -> int:
        return self.to_int(self.to_poly(a) * self.to_poly(b))

    def add(self, a: int, b: int) -> int:
        return self.to_int(self.to_poly(a) + self.to_poly(b))

    def power(self, a: int, e: int) -> int:
        out, base = 1, a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def inv(self, a: int) -> int:
        return self.power(a, self.order - 2)

    def frob(self, a: int, i: int = 1) -> int:
        return self.power(a, self.q ** (i % self.m))


# -- exhaustive linear algebra ------------------------------------------------


def span_size_f2(rows: list[tuple[int, ...]]) -> int:
    """Number of distinct F_2-combinations of integer-tuple rows (xor)."""
    seen = {tuple(0 for _ in rows[0])}
    for take in itertools.product((0, 1), repeat=len(rows)):
        v = tuple(0 for _ in rows[0])
        for t, r in zip(take, rows):
            if t:
                v = tuple(a ^ b for a, b in zip(v, r))
        seen.add(v)
    return len(seen)


def span_set_ff(K: FF, rows: list[tuple[int, ...]]) -> set:
    """All F_{q^m}-combinations of rows of integers-encoded elements."""
    out = set()
    n = len(rows[0])
    for coefs in itertools.product(range(K.order), repeat=len(rows)):
        v = [0] * n
        for c, r in zip(coefs, rows):
            if c:
                v = [K.add(a, K.mul(c, b)) for a, b in zip(v, r)]
        out.add(tuple(v))
    return out


def rank_ff(K: FF, rows: list[tuple[int, ...]]) -> int:
    size = len(span_set_ff(K, rows))
    r = 0
    while K.order**r < size:
        r += 1
    assert K.order**r == size
    return r


def gaussian_binomial(m: int, r: int, q: int) -> int:
    num = den = 1
    for i in range(r):
        num *= q**m - q**i
        den *= q**r - q**i
    assert num % den == 0
    return num // den


# -- the oracle table ----------------------------------------------------------


def build() -> dict:
    out = {}

    out["canonical_moduli"] = {
        f"{q},{m}": canonical_modulus(q, m)
        for q, m in [(2, 3), (2, 4), (2, 8), (2, 12), (3, 2), (3, 3), (5, 2)]
    }

    # F_8 = F_2[x]/(x^3+x+1): x * x^2 = x + 1
    f8 = FF(2, 3)
    assert f8.mod_coeffs == [1, 1, 0, 1]
    out["f8_mul_x_x2"] = f8.mul(0b010, 0b100)
    assert out["f8_mul_x_x2"] == 0b011

    # full multiplication / inverse / Frobenius tables for F_16 and F_9
    f16 = FF(2, 4)
    out["f16_mul_table"] = [[f16.mul(a, b) for b in range(16)] for a in range(16)]
    out["f16_inv_table"] = [None] + [f16.inv(a) for a in range(1, 16)]
    out["f16_frob_table"] = [f16.frob(a) for a in range(16)]
    f9 = FF(3, 2)
    out["f9_mul_table"] = [[f9.mul(a, b) for b in range(9)] for a in range(9)]
    out["f9_inv_table"] = [None] + [f9.inv(a) for a in range(1, 9)]
    out["f9_frob_table"] = [f9.frob(a) for a in range(9)]

    # rank over F_2 of rows (110),(011),(101): span has 4 vectors
    size = span_size_f2([(1, 1, 0), (0, 1, 1), (1, 0, 1)])
    out["rank_f2_rows_110_011_101"] = size.bit_length() - 1
    assert out["rank_f2_rows_110_011_101"] == 2

    # kernel of the 1x2 matrix (1 1) over F_2 by trying all 4 vectors
    out["kernel_11_f2"] = [
        list(v)
        for v in itertools.product((0, 1), repeat=2)
        if any(v) and (v[0] ^ v[1]) == 0
    ]

    # support dimension of (1, w, w^2) in F_8: all 8 F_2-combinations distinct
    size = span_size_f2([(0b001,), (0b010,), (0b100,)])
    out["rank_fq_basis_f8"] = size.bit_length() - 1

    # u1*1 + u2*w = 0 over F_4 with u_i in F_2: only the zero assignment
    f4 = FF(2, 2)
    sols = [
        (u1, u2)
        for u1 in (0, 1)
        for u2 in (0, 1)
        if f4.add(f4.mul(u1, 1), f4.mul(u2, 0b10)) == 0
    ]
    out["expand_f4_solution_count"] = len(sols)
    assert sols == [(0, 0)]

    # intersection of two explicit 2-dim subspaces of F_8^3 by enumeration
    A = [(1, 2, 0), (0, 1, 2)]
    B = [(2, 1, 1), (1, 1, 0)]
    inter = span_set_ff(f8, A) & span_set_ff(f8, B)
    d = 0
    while 8**d < len(inter):
        d += 1
    assert 8**d == len(inter)
    out["intersect_f8"] = {"A": [list(r) for r in A], "B": [list(r) for r in B], "dim": d}

    # skew product = map composition: with F(x) = sum f_i x^{q^i},
    # the product (FG) must evaluate as F(G(x)) pointwise
    Fc, Gc = [3, 0, 5], [6, 9]  # q-degrees 2 and 1 over F_16
    table = []
    for a in range(16):
        ga = 0
        for j, gj in enumerate(Gc):
            ga = f16.add(ga, f16.mul(gj, f16.frob(a, j)))
        fa = 0
        for i, fi in enumerate(Fc):
            fa = f16.add(fa, f16.mul(fi, f16.frob(ga, i)))
        table.append(fa)
    out["skew_comp_f16"] = {"F": Fc, "G": Gc, "table": table}

    # noncommutativity witness: F = X^[1], G = w X, w not in F_2
    w = 0b0010
    fg = [f16.frob(f16.mul(w, a), 1) for a in range(16)]  # F(G(x)) = (w x)^2
    gf = [f16.mul(w, f16.frob(a, 1)) for a in range(16)]  # G(F(x)) = w x^2
    assert fg != gf
    out["skew_noncommute_f16"] = {"w": w, "FG_table": fg, "GF_table": gf}

    # Moore matrix of a basis of F_8 is nonsingular (rank 3 of 3x3)
    g = (0b001, 0b010, 0b100)
    rows = [tuple(f8.frob(gi, j) for gi in g) for j in range(3)]
    out["moore_rank_f8"] = {"g": list(g), "rank": rank_ff(f8, rows)}
    assert out["moore_rank_f8"]["rank"] == 3

    # tiny Gabidulin minimum distance: [n=4, k=2] over F_16, d = n-k+1 = 3;
    # enumerate all 16^2 message pairs, min rank weight of nonzero codewords
    g4 = (0b0001, 0b0010, 0b0100, 0b1000)
    moore = [tuple(f16.frob(gi, j) for gi in g4) for j in range(2)]
    min_wt = 4
    for m0 in range(16):
        for m1 in range(16):
            if m0 == m1 == 0:
                continue
            cw = [f16.add(f16.mul(m0, a), f16.mul(m1, b)) for a, b in zip(*moore)]
            wt = span_size_f2([(c,) for c in cw]).bit_length() - 1
            min_wt = min(min_wt, wt)
    out["gabidulin_4_2_f16_min_distance"] = min_wt
    assert min_wt == 3

    out["gaussian_binomials"] = [
        [m, r, q, gaussian_binomial(m, r, q)]
        for (m, r, q) in [
            (4, 2, 2), (5, 2, 2), (6, 3, 2), (8, 3, 2), (8, 4, 2),
            (10, 5, 2), (6, 2, 3), (6, 3, 3), (4, 2, 5),
        ]
    ]

    return out


def main() -> None:
    data = build()
    path = Path(__file__).parent / "data" / "derived.json"
    path.parent.mkdir(exist_ok=True)
    path.write_text(json.dumps(data, indent=1, sort_keys=True) + "\n")
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
