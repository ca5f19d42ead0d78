"""Rank decoder that never sees the evaluation sequence, plus a support
enumeration oracle for tiny instances.

decode() works from generator matrices alone.  Step 1 finds a nonzero
linearized polynomial P of q-degree <= t with H_t P(y)^T = 0, H_t a parity
check of Lambda_t(C); any such P annihilates the error when the radius
condition dim Lambda_t(C) + t <= n holds.  Step 2 writes the error with
coordinates confined to ker(P) and solves the resulting F_q system against
the parity check of C.  What the pair of steps actually decodes is the
t-closure of C; for Gabidulin codes and radii below (n-k)/2 that closure
is C itself.

brute_force_decode() enumerates every candidate support (an r-dimensional
F_q-subspace of F_{q^m}, r <= t) in a fixed order and solves for an error
vector confined to it, returning the first hit, i.e. the minimal-rank
solution with lexicographically least support basis.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from . import linalg as la
from .codes import Code, qsum
from .fields import FieldCtx
from .linalg import MatFqm
from .qpoly import LinPoly

_WORK_CAP = 1 << 22  # brute-force budget: sum over supports of r*n


@dataclass
class DecodeResult:
    status: str  # decoded | no_annihilator | no_error_solution
    codeword: list[int] | None = None
    error: list[int] | None = None

    @property
    def ok(self) -> bool:
        return self.status == "decoded"


def max_radius(C: Code) -> int:
    """Largest t with dim Lambda_t(C) + t <= n, measured directly.

    For an [n, k] Gabidulin code this is floor((n-k)/2)."""
    ctx, n = C.ctx, C.n
    ech = la._FqmEchelon(ctx, n)
    rows = [list(r) for r in C.gen.data]
    for r in rows:
        ech.add(r)
    best = 0
    for t in range(1, n + 1):
        rows = [ctx.frob_row(r) for r in rows]
        for r in rows:
            ech.add(r)
        if ech.rank + t > n:
            break
        best = t
        if ech.rank == n:
            break
    return best


def decode(C: Code, y: list[int], t: int, retry_all: bool = False) -> DecodeResult:
    """Decode y against C at rank radius t.

    Returns no_annihilator when step 1 admits only P = 0 and
    no_error_solution when no error over ker(P) matches the syndrome;
    retry_all retries step 2 over the whole step-1 kernel basis instead of
    just its first vector.
    """
    ctx, n = C.ctx, C.n
    if len(y) != n:
        raise ValueError("length mismatch")
    if t < 1:
        raise ValueError("radius must be >= 1")
    Ht = la.right_kernel(qsum(C, t).gen)
    H = la.right_kernel(C.gen)
    syndrome = la.mat_vec(ctx, H, y)

    # step 1: H_t P(y)^T = 0 is F_{q^m}-linear in the coefficients of P
    shifts = [list(y)]
    for _ in range(t):
        shifts.append(ctx.frob_row(shifts[-1]))
    A = MatFqm(
        ctx,
        [[la.dot(ctx, hrow, shifts[i]) for i in range(t + 1)] for hrow in Ht.data],
        t + 1,
    )
    pkernel = la.right_kernel(A)
    if pkernel.rows == 0:
        return DecodeResult("no_annihilator")

    for pcoeffs in pkernel.data if retry_all else pkernel.data[:1]:
        hit = _error_over_kernel(ctx, H, y, syndrome, LinPoly(ctx, pcoeffs))
        if hit is not None:
            return DecodeResult("decoded", *hit)
    return DecodeResult("no_error_solution")


def _error_over_kernel(ctx, H, y, syndrome, P):
    """Step 2: solve H(y-e)^T = 0 with every e_i confined to ker(P)."""
    kappa = P.kernel()
    r = len(kappa)
    n = len(y)
    if r == 0:
        if any(syndrome):
            return None
        return list(y), [0] * n
    rows = []
    for hrow in H.data:
        row = []
        for a in hrow:
            row.extend(ctx.mul(a, kp) if a else 0 for kp in kappa)
        rows.append(row)
    A, b = la.expand_fq_system(MatFqm(ctx, rows, n * r), syndrome)
    x = la.solve_fq(A, b)
    if x is None:
        return None
    e = []
    for c in range(n):
        acc = 0
        for rho in range(r):
            s = x[c * r + rho]
            if s:
                acc = ctx.add(acc, ctx.mul(s, kappa[rho]))
        e.append(acc)
    codeword = [ctx.sub(yc, ec) for yc, ec in zip(y, e)]
    return codeword, e


# -- support-enumeration oracle -------------------------------------------


def gaussian_binomial(m: int, r: int, q: int) -> int:
    """Number of r-dimensional F_q-subspaces of F_q^m."""
    if not 0 <= r <= m:
        return 0
    num = den = 1
    for i in range(r):
        num *= q**m - q**i
        den *= q**r - q**i
    return num // den


@functools.lru_cache(maxsize=8)
def _subspace_bases(q: int, m: int, r: int) -> tuple:
    """All r-dimensional subspaces of F_q^m as canonical RREF bases (rows
    base-q packed to ints, pivot order), sorted lexicographically."""
    if r == 0:
        return ((),)
    out = []
    for pivots in itertools.combinations(range(m), r):
        pivset = set(pivots)
        slots = [
            (i, j) for i in range(r) for j in range(pivots[i] + 1, m) if j not in pivset
        ]
        for counter in range(q ** len(slots)):
            rows = [q ** pivots[i] for i in range(r)]
            v = counter
            for i, j in slots:
                v, d = divmod(v, q)
                rows[i] += d * q**j
            out.append(tuple(rows))
    out.sort()
    return tuple(out)


def brute_force_decode(C: Code, y: list[int], t: int) -> DecodeResult:
    """Minimal-rank decoding by exhausting supports of dimension <= t."""
    ctx, n, q, m = C.ctx, C.n, C.ctx.q, C.ctx.m
    if len(y) != n:
        raise ValueError("length mismatch")
    work = sum(gaussian_binomial(m, r, q) * max(1, r * n) for r in range(t + 1))
    if work > _WORK_CAP:
        raise ValueError(f"support enumeration needs {work} > {_WORK_CAP} work units")
    H = la.right_kernel(C.gen)
    syndrome = la.mat_vec(ctx, H, y)
    if not any(syndrome):
        return DecodeResult("decoded", list(y), [0] * n)
    solver = _BitSupportSolver(ctx, H, syndrome) if q == 2 else None
    for r in range(1, t + 1):
        for basis in _subspace_bases(q, m, r):
            if solver is not None:
                e = solver.solve(basis)
            else:
                e = _error_over_support(ctx, H, syndrome, list(basis), n)
            if e is not None:
                codeword = [ctx.sub(yc, ec) for yc, ec in zip(y, e)]
                return DecodeResult("decoded", codeword, e)
    return DecodeResult("no_error_solution")


def _error_over_support(ctx, H, syndrome, kappa, n):
    rows = []
    for hrow in H.data:
        row = []
        for a in hrow:
            row.extend(ctx.mul(a, kp) if a else 0 for kp in kappa)
        rows.append(row)
    A, b = la.expand_fq_system(MatFqm(ctx, rows, n * len(kappa)), syndrome)
    x = la.solve_fq(A, b)
    if x is None:
        return None
    r = len(kappa)
    e = []
    for c in range(n):
        acc = 0
        for rho in range(r):
            s = x[c * r + rho]
            if s:
                acc = ctx.add(acc, ctx.mul(s, kappa[rho]))
        e.append(acc)
    return e


class _BitSupportSolver:
    """q=2 fast path for the per-support solve.

    The map e -> H e^T is F_2-linear, so it is determined by its value on
    the nm unit errors (basis element x^beta at coordinate c).  Those
    values are packed into bit columns once; the system for a given
    support is then assembled by XOR and solved by a tagged echelon whose
    tag bits carry the solution combination.
    """

    def __init__(self, ctx: FieldCtx, H, syndrome):
        self.n = H.cols
        self.m = ctx.m
        self.width = H.rows * ctx.m  # constraint bits per column
        # phi[c][beta]: H's reaction to error x^beta at coordinate c
        self.phi = []
        for c in range(self.n):
            cols = []
            for beta in range(ctx.m):
                v = 0
                for j, hrow in enumerate(H.data):
                    img = ctx.mul(hrow[c], 1 << beta)
                    v |= img << (j * ctx.m)  # q=2: encoding bits = coefficients
                cols.append(v)
            self.phi.append(cols)
        b = 0
        for j, s in enumerate(syndrome):
            b |= s << (j * ctx.m)
        self.rhs = b

    def solve(self, basis: tuple) -> list[int] | None:
        """Error vector with coordinates in span(basis), or None."""
        n, W = self.n, self.width
        r = len(basis)
        wmask = (1 << W) - 1
        pivots: dict[int, int] = {}
        # tagged columns: tag bit W + c*r + rho marks the unknown a_{c,rho}
        tag = 1 << W
        for c in range(n):
            phic = self.phi[c]
            for v in basis:
                col = 0
                vv = v
                while vv:
                    beta = (vv & -vv).bit_length() - 1
                    col ^= phic[beta]
                    vv &= vv - 1
                col |= tag
                tag <<= 1
                low = col & wmask
                while low:
                    j = (low & -low).bit_length() - 1
                    p = pivots.get(j)
                    if p is None:
                        pivots[j] = col
                        break
                    col ^= p
                    low = col & wmask
        res = self.rhs
        low = res & wmask
        while low:
            j = (low & -low).bit_length() - 1
            p = pivots.get(j)
            if p is None:
                return None
            res ^= p
            low = res & wmask
        x = res >> W
        e = []
        for c in range(n):
            acc = 0
            for rho in range(r):
                if (x >> (c * r + rho)) & 1:
                    acc ^= basis[rho]
            e.append(acc)
        return e
