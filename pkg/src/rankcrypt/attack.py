"""Key-recovery attacks on GPT from public data only.

Three layers:

  * the q-sum distinguisher (dim_profile in the codes module) separates
    Gabidulin, twisted and random public codes;
  * the classic column-scrambler recovery: when the distortion fills all
    lambda extra coordinates after one q-sum, the F_q-kernel of the dual
    of Lambda_i(C_pub) exposes a valid scrambler T and the tail of c T^-1
    is decodable;
  * the stabilizer-algebra attack for the low-rank-distortion case where
    the classic dual-dimension test fails: Lambda_i(C_pub) splits, its
    right stabilizer {M over F_q : Lambda_i(C_pub) M <= Lambda_i(C_pub)}
    has dimension 2, and the rank-n idempotent F it contains projects the
    public code onto a decodable image with the distortion wiped out.

The stabilizer is the kernel of G M H^T = 0 over F_q: k(N-k)m equations in
N^2 unknowns after coordinate expansion.  Rows are streamed into an
incremental echelon; once the kernel dimension stops shrinking the basis
candidates are verified exactly against the full F_{q^m} system, which
makes the early stop sound rather than heuristic.

Nothing here reads secret keys.  Success is verified publicly: the
recovered message must re-encode to within rank t of the ciphertext.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

import numpy as np

from . import linalg as la
from .codes import Code, qsum
from .decoder import decode
from .gpt import GptPublicKey
from .linalg import MatFq, MatFqm


class AttackError(RuntimeError):
    pass


@dataclass
class StabilizerAlgebra:
    n_total: int
    basis: list[MatFq]

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass
class AttackReport:
    mode: str  # extension | overbeck_classic
    success: bool
    recovered: list[int] | None = None
    failure: str | None = None
    i_used: int | None = None
    stab_dim: int | None = None
    F: MatFq | None = None
    timings_ms: dict = field(default_factory=dict)


# -- stabilizer computation -------------------------------------------------


def _pack_columns(prods: list[int], m: int) -> list[int]:
    """Transpose N^2 field elements (m coefficient bits each) into m
    bit-rows of width N^2: row tau holds coefficient tau of every product."""
    nbytes = (m + 7) // 8
    buf = b"".join(p.to_bytes(nbytes, "little") for p in prods)
    arr = np.frombuffer(buf, dtype=np.uint8).reshape(len(prods), nbytes)
    bits = np.unpackbits(arr, axis=1, bitorder="little")[:, :m]
    packed = np.packbits(bits.T, axis=1, bitorder="little")
    return [int.from_bytes(r.tobytes(), "little") for r in packed]


def _bits_to_matfq(v: int, N: int) -> MatFq:
    return MatFq(2, [[(v >> (u * N + j)) & 1 for j in range(N)] for u in range(N)], N)


def _stab_check(G: MatFqm, H: MatFqm, M: MatFq) -> bool:
    return ((G @ M) @ H.transpose()).is_zero()


def _stab_kernel_q2(ctx, G: MatFqm, H: MatFqm, N: int) -> list[int]:
    """F_2 kernel of the stabilizer system, streamed with a verified early
    stop.  Every returned bitmask satisfies the full system exactly."""
    ech = la._BitEchelon(N * N)
    mul = ctx.mul
    total = G.rows * H.rows
    done = 0
    stable = 0
    prev_kdim = None
    for ga in G.data:
        for hb in H.data:
            prods = []
            for gu in ga:
                if gu:
                    prods.extend(mul(gu, hv) if hv else 0 for hv in hb)
                else:
                    prods.extend(0 for _ in hb)
            for row in _pack_columns(prods, ctx.m):
                ech.add(row)
            done += 1
            kdim = N * N - ech.rank
            stable = stable + 1 if kdim == prev_kdim else 0
            prev_kdim = kdim
            if stable >= 2 and kdim <= 16 and done < total:
                kern = ech.kernel_basis()
                if all(_stab_check(G, H, _bits_to_matfq(v, N)) for v in kern):
                    return kern
                stable = 0  # a candidate failed: the plateau was premature
    return ech.kernel_basis()


def stabilizer(C: Code) -> StabilizerAlgebra:
    """Right stabilizer Stab_r(C) = {M over F_q : C M <= C} as a kernel
    basis of G M H^T = 0."""
    ctx, N = C.ctx, C.n
    G = C.gen
    H = la.right_kernel(G)
    if H.rows == 0 or G.rows == 0:
        # no constraints: the full matrix algebra
        basis = []
        for u in range(N):
            for v in range(N):
                M = MatFq.zeros(ctx.q, N, N)
                M.data[u][v] = 1
                basis.append(M)
        return StabilizerAlgebra(N, basis)
    if ctx.q == 2:
        kern = _stab_kernel_q2(ctx, G, H, N)
        return StabilizerAlgebra(N, [_bits_to_matfq(v, N) for v in kern])
    rows = []
    for ga in G.data:
        for hb in H.data:
            rows.append([ctx.mul(gu, hv) if gu and hv else 0 for gu in ga for hv in hb])
    A = la.expand_fq_system(MatFqm(ctx, rows, N * N))
    basis = [
        MatFq(ctx.q, [vec[u * N : (u + 1) * N] for u in range(N)], N)
        for vec in la.right_kernel(A).data
    ]
    return StabilizerAlgebra(N, basis)


# -- idempotent extraction --------------------------------------------------


def _directions(q: int, U: MatFq, V: MatFq):
    """The q+1 projective directions of the pencil spanned by U and V."""
    yield V
    for x in range(q):
        yield U + V.scale(x)


def _idempotent_from(R: MatFq) -> MatFq | None:
    """nu R when R^2 = c R for some c in F_q*, else None."""
    q = R.q
    S = R @ R
    if S.is_zero():
        return None
    c = None
    for ru, su in zip(R.data, S.data):
        for a, b in zip(ru, su):
            if a:
                c = (b * pow(a, -1, q)) % q
                break
        if c is not None:
            break
    if not c:
        return None
    if S != R.scale(c):
        return None
    return R.scale(pow(c, -1, q))


# All basis pairs are examined up to this many basis elements; past this
# (only the full matrix algebra in practice) the search stays quadratic in
# the cap rather than in N^2.
_PAIR_SEARCH_CAP = 128


def find_rank_n_idempotent(alg: StabilizerAlgebra, n: int) -> MatFq:
    """The projection of rank n inside a split stabilizer.

    For the expected dimension-2 algebra span{U, V}, some direction
    U + xV (or V itself) is singular; rescaled it is idempotent of rank n
    or N-n, and in the latter case the complement I - F is returned.
    """
    if alg.dim < 2:
        raise AttackError("stabilizer_trivial")
    N = alg.n_total
    q = alg.basis[0].q
    saw_singular = saw_idem = False
    for U, V in itertools.combinations(alg.basis[:_PAIR_SEARCH_CAP], 2):
        for R in _directions(q, U, V):
            if la.rank(R) == N:
                continue
            saw_singular = True
            F = _idempotent_from(R)
            if F is None:
                continue
            saw_idem = True
            r = la.rank(F)
            if r == n:
                return F
            if r == N - n:
                return MatFq.identity(q, N) - F
    if alg.dim > 2:
        raise AttackError(
            "general_decomposition_required: stabilizer dimension "
            f"{alg.dim} > 2 needs the Friedl-Ronyai algebra decomposition, "
            "which is not implemented"
        )
    if not saw_singular:
        raise AttackError("no_singular_element")
    if not saw_idem:
        raise AttackError("no_idempotent_direction")
    raise AttackError("idempotent_rank_mismatch")


def split_probe(C: Code) -> tuple[str, int]:
    """('split', stab_dim) when a nontrivial idempotent exists in the
    stabilizer, else ('not_split', stab_dim)."""
    alg = stabilizer(C)
    N = alg.n_total
    if alg.dim <= 1:
        return "not_split", alg.dim
    q = alg.basis[0].q
    for U, V in itertools.combinations(alg.basis[:_PAIR_SEARCH_CAP], 2):
        for R in _directions(q, U, V):
            F = _idempotent_from(R)
            if F is not None and 0 < la.rank(F) < N:
                return "split", alg.dim
    return "not_split", alg.dim


# -- end-to-end attacks ------------------------------------------------------


def attack_extension(
    pk: GptPublicKey, c: list[int], i_max: int | None = None, retry_all: bool = True
) -> AttackReport:
    """Stabilizer attack: split Lambda_i(C_pub), project by the rank-n
    idempotent, decode the projected ciphertext, verify by re-encoding."""
    params = pk.params
    ctx, n, k, t = params.ctx, params.n, params.k, params.t
    N = n + params.lam
    if len(c) != N:
        raise ValueError("ciphertext length mismatch")
    if i_max is None:
        i_max = max(1, n - k - 1)
    tm = {"qsum": 0.0, "stabilizer": 0.0, "idempotent": 0.0, "decode": 0.0, "recover": 0.0}
    C_pub = Code(pk.G_pub)
    failure = "no_split_found"
    stab_dim = None
    for i in range(1, i_max + 1):
        t0 = time.perf_counter()
        L = qsum(C_pub, i)
        tm["qsum"] += (time.perf_counter() - t0) * 1e3
        if L.k == N:
            failure = "qsum_saturated"
            break
        t0 = time.perf_counter()
        alg = stabilizer(L)
        tm["stabilizer"] += (time.perf_counter() - t0) * 1e3
        stab_dim = alg.dim
        if alg.dim < 2:
            failure = "stabilizer_trivial"
            continue
        t0 = time.perf_counter()
        try:
            F = find_rank_n_idempotent(alg, n)
        except AttackError as ex:
            failure = str(ex)
            continue
        finally:
            tm["idempotent"] += (time.perf_counter() - t0) * 1e3
        t0 = time.perf_counter()
        CF = Code(C_pub.gen @ F)
        res = decode(CF, la.vec_mat(ctx, c, F), t, retry_all=retry_all)
        tm["decode"] += (time.perf_counter() - t0) * 1e3
        if not res.ok:
            failure = "decode_" + res.status
            continue
        t0 = time.perf_counter()
        GF = pk.G_pub @ F
        if la.rank(GF) < k:
            failure = "projected_generator_rank_deficient"
            tm["recover"] += (time.perf_counter() - t0) * 1e3
            continue
        sol = la.solve_left(GF, MatFqm(ctx, [res.codeword]))
        if sol is None:
            failure = "message_solve_failed"
            tm["recover"] += (time.perf_counter() - t0) * 1e3
            continue
        msg = sol.data[0]
        resid = [ctx.sub(a, b) for a, b in zip(c, la.vec_mat(ctx, msg, pk.G_pub))]
        tm["recover"] += (time.perf_counter() - t0) * 1e3
        if la.rank_fq(ctx, resid) <= t:
            return AttackReport(
                "extension", True, msg, None, i, alg.dim, F, tm
            )
        failure = "verification_failed"
    return AttackReport("extension", False, None, failure, None, stab_dim, None, tm)


def attack_overbeck(pk: GptPublicKey, c: list[int], rng, i: int = 1) -> AttackReport:
    """Classic column-scrambler recovery.

    Requires the distortion to vanish from the dual of Lambda_i(C_pub):
    the dual dimension must be n - dim Lambda_i of the secret code (for
    Gabidulin n-k-i), else the distortion is still in the way and the
    attack reports distortion_not_eliminated."""
    params = pk.params
    ctx, n, k, lam, t = params.ctx, params.n, params.k, params.lam, params.t
    ell = params.ell
    N = n + lam
    if len(c) != N:
        raise ValueError("ciphertext length mismatch")
    tm = {"qsum": 0.0, "scrambler": 0.0, "decode": 0.0, "recover": 0.0}
    t0 = time.perf_counter()
    L = qsum(Code(pk.G_pub), i)
    H_pub = la.right_kernel(L.gen)
    tm["qsum"] = (time.perf_counter() - t0) * 1e3
    expected = n - min(k + i + ell * (i + 1), n)
    if H_pub.rows != expected:
        return AttackReport(
            "overbeck_classic",
            False,
            failure=f"distortion_not_eliminated: dual dimension {H_pub.rows}, expected {expected}",
            i_used=i,
            timings_ms=tm,
        )
    t0 = time.perf_counter()
    W = la.right_kernel(la.expand_fq_system(H_pub))
    if W.rows != lam:
        return AttackReport(
            "overbeck_classic",
            False,
            failure=f"scrambler_kernel_dimension {W.rows} != lambda {lam}",
            i_used=i,
            timings_ms=tm,
        )
    T = None
    for _ in range(la._RESAMPLE_CAP):
        cand = W.vstack(MatFq.random(ctx.q, n, N, rng))
        if la.rank(cand) == N:
            T = cand
            break
    tm["scrambler"] = (time.perf_counter() - t0) * 1e3
    if T is None:
        return AttackReport(
            "overbeck_classic", False, failure="no_invertible_completion",
            i_used=i, timings_ms=tm,
        )
    Tinv = T.inverse()
    Gp = (pk.G_pub @ Tinv).take_cols(lam, N)
    if la.rank(Gp) != k:
        return AttackReport(
            "overbeck_classic", False, failure="stripped_generator_rank_deficient",
            i_used=i, timings_ms=tm,
        )
    t0 = time.perf_counter()
    y2 = la.vec_mat(ctx, c, Tinv)[lam:]
    res = decode(Code(Gp), y2, t, retry_all=True)
    tm["decode"] = (time.perf_counter() - t0) * 1e3
    if not res.ok:
        return AttackReport(
            "overbeck_classic", False, failure="decode_" + res.status,
            i_used=i, timings_ms=tm,
        )
    t0 = time.perf_counter()
    sol = la.solve_left(Gp, MatFqm(ctx, [res.codeword]))
    if sol is None:
        return AttackReport(
            "overbeck_classic", False, failure="message_solve_failed",
            i_used=i, timings_ms=tm,
        )
    msg = sol.data[0]
    resid = [ctx.sub(a, b) for a, b in zip(c, la.vec_mat(ctx, msg, pk.G_pub))]
    tm["recover"] = (time.perf_counter() - t0) * 1e3
    if la.rank_fq(ctx, resid) > t:
        return AttackReport(
            "overbeck_classic", False, failure="verification_failed",
            i_used=i, timings_ms=tm,
        )
    return AttackReport("overbeck_classic", True, msg, None, i, None, None, tm)
