"""Rank-metric codes as canonical generator matrices.

A Code is an F_{q^m}-subspace of F_{q^m}^n held as the trimmed reduced row
echelon form of a generator matrix, so code equality is matrix equality.

Constructors cover Gabidulin codes Gab_k(g) (Moore matrix on a rank-n
evaluation vector g) and their twisted variants, where hook rows h_j of the
Moore matrix get an extra term eta_j g^[k-1+t_j].  The q-sum
Lambda_i(C) = C + C^[1] + ... + C^[i] is the distinguishing invariant: its
dimension grows by 1 per step for Gabidulin codes, by 1 + ell for twisted
ones, and by k for random codes until saturation.
"""

from __future__ import annotations

from . import linalg as la
from .fields import FieldCtx
from .linalg import MatFqm


class Code:
    """F_{q^m}-linear code, generator kept in canonical (trimmed RREF) form."""

    __slots__ = ("gen",)

    def __init__(self, gen: MatFqm, canonical: bool = False):
        self.gen = gen if canonical else la.canonical(gen)

    @property
    def ctx(self) -> FieldCtx:
        return self.gen.ctx

    @property
    def n(self) -> int:
        return self.gen.cols

    @property
    def k(self) -> int:
        return self.gen.rows

    def contains(self, v: list[int]) -> bool:
        ech = la._FqmEchelon(self.ctx, self.n)
        for r in self.gen.data:
            ech.add(r)
        return ech.contains(v)

    def __eq__(self, other) -> bool:
        return isinstance(other, Code) and self.gen == other.gen

    def __repr__(self) -> str:
        return f"Code[n={self.n}, k={self.k}, q^m={self.ctx.q}^{self.ctx.m}]"


class TwistParams:
    """Twist data (h, t, eta): hooks, twist exponents, and coefficients.

    Hooks index the generator rows that receive a twist; twist exponent t_j
    lifts the extra monomial to q-degree k-1+t_j.  Basic validity (checked
    against a target (n, k)): h in {0..k-1} strictly increasing, t in
    {1..n-k} pairwise distinct, eta nonzero.
    """

    __slots__ = ("h", "t", "eta")

    def __init__(self, h: list[int], t: list[int], eta: list[int]):
        if not len(h) == len(t) == len(eta):
            raise ValueError("h, t, eta must have equal length")
        self.h = tuple(h)
        self.t = tuple(t)
        self.eta = tuple(eta)

    @property
    def ell(self) -> int:
        return len(self.h)

    def validate(self, n: int, k: int) -> None:
        if any(not 0 <= hj <= k - 1 for hj in self.h):
            raise ValueError("hook outside 0..k-1")
        if any(a >= b for a, b in zip(self.h, self.h[1:])):
            raise ValueError("hooks must be strictly increasing")
        if any(not 1 <= tj <= n - k for tj in self.t):
            raise ValueError("twist exponent outside 1..n-k")
        if len(set(self.t)) != len(self.t):
            raise ValueError("twist exponents must be distinct")
        if any(e == 0 for e in self.eta):
            raise ValueError("twist coefficient zero")

    def __repr__(self) -> str:
        return f"TwistParams(h={list(self.h)}, t={list(self.t)}, eta={list(self.eta)})"


def moore_matrix(ctx: FieldCtx, g: list[int], k: int) -> MatFqm:
    """k x n matrix with rows g, g^[1], ..., g^[k-1]."""
    n = len(g)
    if la.rank_fq(ctx, g) != n:
        raise ValueError("evaluation vector must have F_q-independent coordinates")
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    rows = [list(g)]
    for _ in range(k - 1):
        rows.append(ctx.frob_row(rows[-1]))
    return MatFqm(ctx, rows, n)


def gabidulin(ctx: FieldCtx, g: list[int], k: int) -> Code:
    n = len(g)
    if not k < n <= ctx.m:
        raise ValueError("need k < n <= m")
    return Code(moore_matrix(ctx, g, k))


def twisted_moore_matrix(ctx: FieldCtx, g: list[int], k: int, tw: TwistParams) -> MatFqm:
    """Moore matrix with row h_j carrying the extra term eta_j g^[k-1+t_j]."""
    n = len(g)
    tw.validate(n, k)
    rows = moore_matrix(ctx, g, k).data
    chain = {}
    top = rows[k - 1]
    for e in range(k, k + max(tw.t, default=0)):
        top = ctx.frob_row(top)
        chain[e] = top
    for hj, tj, ej in zip(tw.h, tw.t, tw.eta):
        ctx.mac_row(rows[hj], ej, chain[k - 1 + tj])
    return MatFqm(ctx, rows, n)


def twisted_gabidulin(ctx: FieldCtx, g: list[int], k: int, tw: TwistParams) -> Code:
    n = len(g)
    if not k < n <= ctx.m:
        raise ValueError("need k < n <= m")
    C = Code(twisted_moore_matrix(ctx, g, k, tw))
    if C.k != k:
        raise ValueError("twist parameters degenerate: dimension dropped")
    return C


def sample_hooks(k: int, ell: int, rng) -> list[int]:
    """Strictly increasing hooks 0 < h_1 < ... < h_ell < k-1 with gaps > 1,
    uniform among valid sequences by rejection."""
    if ell == 0:
        return []
    if k <= 2 * ell + 2:
        raise ValueError("k too small for gap-respecting hooks")
    for _ in range(10000):
        hs = sorted(int(v) for v in rng.integers(1, k - 1, size=ell))
        if len(set(hs)) == ell and all(b - a > 1 for a, b in zip(hs, hs[1:])):
            return hs
    raise RuntimeError("hook sampling failed")


def prw_parameters(ctx: FieldCtx, n: int, k: int, ell: int, rng) -> TwistParams:
    """Twist parameters in the regime where the decoder still works:
    t_j = j(delta+1) with delta = (n-k-ell)/(ell+1), gap-respecting hooks,
    nonzero eta.

    Requires (ell+1) | (n-k-ell); non-integral delta is rejected rather
    than rounded.
    """
    if ell == 0:
        return TwistParams([], [], [])
    if ell < 0 or k <= 2 * ell + 2:
        raise ValueError("infeasible (k, ell)")
    if (n - k - ell) % (ell + 1) != 0 or n - k - ell < 0:
        raise ValueError("delta = (n-k-ell)/(ell+1) is not a nonnegative integer")
    delta = (n - k - ell) // (ell + 1)
    t = [j * (delta + 1) for j in range(1, ell + 1)]
    h = sample_hooks(k, ell, rng)
    eta = [ctx.random_nonzero(rng) for _ in range(ell)]
    return TwistParams(h, t, eta)


def qsum(C: Code, i: int) -> Code:
    """Lambda_i(C) = C + C^[1] + ... + C^[i]."""
    if i < 0:
        raise ValueError("i must be >= 0")
    ctx, n = C.ctx, C.n
    ech = la._FqmEchelon(ctx, n)
    rows = [list(r) for r in C.gen.data]
    for r in rows:
        ech.add(r)
    for _ in range(i):
        if ech.rank == n:
            break
        rows = [ctx.frob_row(r) for r in rows]
        for r in rows:
            ech.add(r)
    gen = MatFqm(ctx, [ech.pivots[j] for j in sorted(ech.pivots)], n)
    return Code(gen)


def dim_profile(C: Code, i_max: int) -> list[int]:
    """[dim Lambda_i(C) for i = 0..i_max]; constant n once saturated."""
    ctx, n = C.ctx, C.n
    ech = la._FqmEchelon(ctx, n)
    rows = [list(r) for r in C.gen.data]
    for r in rows:
        ech.add(r)
    dims = [ech.rank]
    for _ in range(i_max):
        if ech.rank == n:
            dims.append(n)
            continue
        rows = [ctx.frob_row(r) for r in rows]
        for r in rows:
            ech.add(r)
        dims.append(ech.rank)
    return dims


def classify(C: Code, profile: list[int] | None = None):
    """Heuristic label from the first q-sum increment d = dim Lambda_1 - k:
    d <= 1 looks Gabidulin, d >= k looks random, anything between looks
    twisted with ell ~ (d-1)/2 twists.  Returns (label, ell_estimate)."""
    if profile is None:
        profile = dim_profile(C, 1)
    d1 = profile[1] - profile[0]
    if d1 <= 1:
        return "gabidulin_like", 0
    if d1 >= C.k:
        return "random_like", None
    return "twisted_like", (d1 - 1) // 2


def dual(C: Code) -> Code:
    """Dual under the canonical inner product; dimension n - k."""
    return Code(la.right_kernel(C.gen))


def frobenius_shift(C: Code, j: int) -> Code:
    """C^[j]: entrywise Frobenius.  Field automorphisms preserve RREF."""
    return Code(C.gen.frob(j), canonical=True)


def closure(C: Code, s: int) -> Code:
    """Largest code C' with Lambda_s(C') = Lambda_s(C): the intersection of
    the shifts Lambda_s(C)^[-j] for j = 0..s."""
    if s < 1:
        raise ValueError("s must be >= 1")
    L = qsum(C, s)
    acc = L.gen
    for j in range(1, s + 1):
        acc = la.space_intersect(acc, L.gen.frob(-j))
    return Code(acc, canonical=True)


def random_code(ctx: FieldCtx, n: int, k: int, rng) -> Code:
    """Uniform [n, k] code: a random full-rank generator, canonicalized."""
    if not 0 < k <= n:
        raise ValueError("need 0 < k <= n")
    for _ in range(la._RESAMPLE_CAP):
        G = MatFqm.random(ctx, k, n, rng)
        if la.rank(G) == k:
            return Code(G)
    raise RuntimeError("failed to sample a full-rank generator")
