"""Stabilizer algebras, idempotent extraction, and both key-recovery attacks."""

import pytest

from rankcrypt import linalg as la
from rankcrypt.attack import (
    AttackError,
    StabilizerAlgebra,
    attack_extension,
    attack_overbeck,
    find_rank_n_idempotent,
    split_probe,
    stabilizer,
)
from rankcrypt.codes import Code, gabidulin, qsum, random_code
from rankcrypt.fields import field
from rankcrypt.gpt import GptParams, encrypt, keygen
from rankcrypt.linalg import MatFq, MatFqm
from rankcrypt.rng import derive_rng, make_rng


def _low_rank_instance(seed):
    # the regime where the distortion hides from the classic attack
    ctx = field(2, 28)
    params = GptParams(ctx, n=24, k=12, lam=6, s=1)
    rng = derive_rng(500, seed)
    sk, pk = keygen(params, rng)
    msg = [ctx.random(rng) for _ in range(12)]
    c = encrypt(pk, msg, rng)
    return ctx, params, sk, pk, msg, c, rng


def test_stabilizer_invariants():
    ctx = field(2, 16)
    rng = make_rng(501)
    C = random_code(ctx, 12, 5, rng)
    alg = stabilizer(C)
    G = C.gen
    H = la.right_kernel(G)
    for M in alg.basis:
        assert ((G @ M) @ H.transpose()).is_zero()
        # CM stays inside C row by row
        img = G @ M
        for row in img.data:
            assert C.contains(row)


def test_stabilizer_of_random_code_is_trivial():
    # almost any code has only the scalars
    ctx = field(2, 16)
    hits = 0
    for seed in range(10):
        rng = derive_rng(502, seed)
        C = random_code(ctx, 12, 5, rng)
        alg = stabilizer(C)
        hits += alg.dim == 1
        if alg.dim == 1:
            # the span of the single element contains I
            B = alg.basis[0]
            assert B == MatFq.identity(2, 12) or la.rank(B) == 12
    assert hits == 10


def test_stabilizer_contains_identity_and_closed_under_product():
    ctx, params, sk, pk, msg, c, rng = _low_rank_instance(0)
    L = qsum(Code(pk.G_pub), 1)
    alg = stabilizer(L)
    N = alg.n_total
    # identity in the F_q-span of the basis
    flat = MatFq(2, [[v for row in M.data for v in row] for M in alg.basis], N * N)
    I_flat = MatFq(2, [[v for row in MatFq.identity(2, N).data for v in row]], N * N)
    span, rank, _ = la.rref(flat)
    aug, rank2, _ = la.rref(flat.vstack(I_flat))
    assert rank2 == rank
    # closed under products on basis pairs
    for A in alg.basis:
        for B in alg.basis:
            P_flat = MatFq(2, [[v for row in (A @ B).data for v in row]], N * N)
            _, r3, _ = la.rref(flat.vstack(P_flat))
            assert r3 == rank


def test_stabilizer_of_full_space():
    ctx = field(2, 8)
    full = Code(MatFqm.identity(ctx, 4))
    alg = stabilizer(full)
    assert alg.dim == 16


def test_planted_idempotents_in_stabilizer():
    ctx, params, sk, pk, msg, c, rng = _low_rank_instance(1)
    N = params.n + params.lam
    Pinv = sk.P.inverse()
    blocks = MatFq.zeros(2, N, N)
    for i in range(params.lam, N):
        blocks.data[i][i] = 1
    E2 = (Pinv @ blocks) @ sk.P
    E1 = MatFq.identity(2, N) - E2
    assert E2 @ E2 == E2 and E1 @ E1 == E1
    assert (E1 @ E2).is_zero() and (E2 @ E1).is_zero()
    assert E1 + E2 == MatFq.identity(2, N)
    L = qsum(Code(pk.G_pub), 1)
    G, H = L.gen, la.right_kernel(L.gen)
    for E in (E1, E2):
        assert ((G @ E) @ H.transpose()).is_zero()


def test_find_idempotent_trivial_algebra():
    # span{I, diag(0, I_n)}: the projector is already there
    N, n = 7, 5
    D = MatFq.zeros(2, N, N)
    for i in range(N - n, N):
        D.data[i][i] = 1
    alg = StabilizerAlgebra(N, [MatFq.identity(2, N), D])
    F = find_rank_n_idempotent(alg, n)
    assert F == D


def test_find_idempotent_rejects_small_algebra():
    alg = StabilizerAlgebra(4, [MatFq.identity(2, 4)])
    with pytest.raises(AttackError):
        find_rank_n_idempotent(alg, 2)


def test_find_idempotent_names_the_missing_algorithm():
    # dim-3 algebra of unipotents: no pencil direction works
    I = MatFq.identity(2, 4)
    E12 = MatFq.zeros(2, 4, 4)
    E12.data[0][1] = 1
    E13 = MatFq.zeros(2, 4, 4)
    E13.data[0][2] = 1
    alg = StabilizerAlgebra(4, [I, E12, E13])
    with pytest.raises(AttackError, match="Friedl"):
        find_rank_n_idempotent(alg, 2)


def test_extracted_idempotent_structure():
    for seed in range(5):
        ctx, params, sk, pk, msg, c, rng = _low_rank_instance(seed)
        L = qsum(Code(pk.G_pub), 1)
        alg = stabilizer(L)
        assert alg.dim == 2
        F = find_rank_n_idempotent(alg, params.n)
        assert F @ F == F
        assert la.rank(F) == params.n
        # with secret access: C_pub F = (0 | G_sec) P exactly
        zero = MatFqm.zeros(ctx, params.k, params.lam)
        assert Code(pk.G_pub @ F) == Code(zero.hstack(sk.G_sec) @ sk.P)


def test_extension_attack_low_rank_regime():
    for seed in range(5):
        ctx, params, sk, pk, msg, c, rng = _low_rank_instance(seed)
        rep = attack_extension(pk, c)
        assert rep.success and rep.recovered == msg
        assert rep.i_used == 1 and rep.stab_dim == 2
        assert rep.mode == "extension"
        assert set(rep.timings_ms) == {"qsum", "stabilizer", "idempotent", "decode", "recover"}
        # and the classic attack cannot see through the distortion
        ovb = attack_overbeck(pk, c, rng, i=1)
        assert not ovb.success
        assert ovb.failure.startswith("distortion_not_eliminated")
        ovb2 = attack_overbeck(pk, c, rng, i=2)
        assert not ovb2.success


def test_overbeck_classic_regime():
    ctx = field(2, 24)
    params = GptParams(ctx, n=20, k=9, lam=2, s=1)
    for seed in range(5):
        rng = derive_rng(503, seed)
        sk, pk = keygen(params, rng)
        msg = [ctx.random(rng) for _ in range(9)]
        c = encrypt(pk, msg, rng)
        rep = attack_overbeck(pk, c, rng, i=1)
        assert rep.success and rep.recovered == msg
        assert rep.mode == "overbeck_classic" and rep.i_used == 1


def test_attack_reads_only_public_data():
    ctx, params, sk, pk, msg, c, rng = _low_rank_instance(6)
    import copy

    pk_clone = copy.deepcopy(pk)
    rep = attack_extension(pk_clone, c)
    assert rep.success and rep.recovered == msg


def test_split_probe_families():
    # MRD codes never split
    ctx = field(2, 12)
    rng = make_rng(504)
    C = gabidulin(ctx, la.random_independent_vec(ctx, 8, rng), 3)
    assert split_probe(C) == ("not_split", 1)
    # block-diagonal construction splits by construction
    A = random_code(ctx, 5, 2, rng)
    B = random_code(ctx, 6, 2, rng)
    ZA = MatFqm.zeros(ctx, 2, 6)
    ZB = MatFqm.zeros(ctx, 2, 5)
    D = Code(A.gen.hstack(ZA).vstack(ZB.hstack(B.gen)))
    verdict, dim = split_probe(D)
    assert verdict == "split" and dim >= 2


def test_block_diagonal_stabilizer_blocks_are_conductors():
    # off-diagonal blocks of Stab(A + B) map A into B and B into A
    ctx = field(2, 12)
    rng = make_rng(505)
    A = random_code(ctx, 5, 2, rng)
    B = random_code(ctx, 6, 2, rng)
    D = Code(A.gen.hstack(MatFqm.zeros(ctx, 2, 6)).vstack(MatFqm.zeros(ctx, 2, 5).hstack(B.gen)))
    alg = stabilizer(D)
    for M in alg.basis:
        M12 = MatFq(2, [row[5:] for row in M.data[:5]], 6)
        M21 = MatFq(2, [row[:5] for row in M.data[5:]], 5)
        for row in (A.gen @ M12).data:
            assert B.contains(row)
        for row in (B.gen @ M21).data:
            assert A.contains(row)


def test_extension_saturation_reported():
    # a random public-looking code saturates the q-sum before splitting
    ctx = field(2, 16)
    rng = make_rng(506)
    C = random_code(ctx, 12, 5, rng)
    params = GptParams(ctx, n=10, k=5, lam=2, s=1, t=1)
    from rankcrypt.gpt import GptPublicKey

    pk = GptPublicKey(params, C.gen)
    rep = attack_extension(pk, [ctx.random(rng) for _ in range(12)], i_max=4)
    assert not rep.success
    assert rep.failure in {
        "qsum_saturated",
        "stabilizer_trivial",
        "no_split_found",
    } or rep.failure.startswith(("general_decomposition", "decode_", "no_", "idempotent"))


def test_overbeck_rejects_length_mismatch():
    ctx, params, sk, pk, msg, c, rng = _low_rank_instance(7)
    with pytest.raises(ValueError):
        attack_overbeck(pk, c[:-1], rng)
    with pytest.raises(ValueError):
        attack_extension(pk, c + [0])
