"""The GPT public-key encryption scheme over rank-metric codes.

Key generation hides a secret Gabidulin (or twisted Gabidulin) generator
G_sec inside G_pub = S (X | G_sec) P: S is an invertible matrix over
F_{q^m}, X a random k x lambda distortion matrix of rank s over F_{q^m},
and P an invertible column scrambler over the base field F_q.  Encryption
adds an error of rank exactly t to m G_pub; decryption undoes P, strips
the lambda distortion coordinates, and decodes the remaining n coordinates
in the secret code.

The error radius t defaults to the measured decoding radius of the sampled
secret code: floor((n-k)/2) for Gabidulin, and whatever the q-sum dimension
condition yields for twisted codes.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from . import linalg as la
from .codes import Code, TwistParams, moore_matrix, prw_parameters, twisted_moore_matrix
from .decoder import decode, max_radius
from .fields import FieldCtx
from .linalg import MatFq, MatFqm


class DecryptError(RuntimeError):
    def __init__(self, status: str):
        super().__init__(f"decoding failed: {status}")
        self.status = status


@dataclass(frozen=True)
class GptParams:
    ctx: FieldCtx
    n: int
    k: int
    lam: int
    s: int
    instantiation: str = "gabidulin"  # or "twisted"
    ell: int = 0
    t: int | None = None

    def validate(self) -> None:
        if not self.k < self.n <= self.ctx.m:
            raise ValueError("need k < n <= m")
        if self.lam < 1 or not 1 <= self.s <= min(self.k, self.lam):
            raise ValueError("need lambda >= 1 and 1 <= s <= min(k, lambda)")
        if self.instantiation == "gabidulin":
            if self.ell != 0:
                raise ValueError("gabidulin instantiation has no twists")
        elif self.instantiation == "twisted":
            if self.ell < 1:
                raise ValueError("twisted instantiation needs ell >= 1")
        else:
            raise ValueError(f"unknown instantiation {self.instantiation!r}")
        if self.t is not None and self.t < 1:
            raise ValueError("error rank t must be >= 1")


@dataclass
class GptSecretKey:
    params: GptParams
    g: list[int]
    tw: TwistParams | None
    S: MatFqm
    X: MatFqm
    P: MatFq

    @property
    def G_sec(self) -> MatFqm:
        ctx, k = self.params.ctx, self.params.k
        if self.tw is not None and self.tw.ell:
            return twisted_moore_matrix(ctx, self.g, k, self.tw)
        return moore_matrix(ctx, self.g, k)


@dataclass
class GptPublicKey:
    params: GptParams
    G_pub: MatFqm


def keygen(
    params: GptParams, rng, s_free: bool = False, tw: TwistParams | None = None
) -> tuple[GptSecretKey, GptPublicKey]:
    """Sample a key pair; s_free uses S = I (the public row space is the
    same either way, so S carries no security).

    An explicit tw overrides the evenly-spaced twist sampler, for twisted
    shapes where (n-k-ell)/(ell+1) is not an integer."""
    params.validate()
    ctx, n, k = params.ctx, params.n, params.k
    g = la.random_independent_vec(ctx, n, rng)
    if params.instantiation != "twisted":
        tw = None
    if params.instantiation == "twisted":
        if tw is None:
            tw = prw_parameters(ctx, n, k, params.ell, rng)
        else:
            if tw.ell != params.ell:
                raise ValueError("twist count does not match params.ell")
            tw.validate(n, k)
        G_sec = twisted_moore_matrix(ctx, g, k, tw)
    else:
        G_sec = moore_matrix(ctx, g, k)
    S = MatFqm.identity(ctx, k) if s_free else la.random_invertible_matfqm(ctx, k, rng)
    X = la.random_rank_s_matfqm(ctx, k, params.lam, params.s, rng)
    P = la.random_gl(ctx.q, n + params.lam, rng)

    radius = max_radius(Code(G_sec))
    if params.t is None:
        if radius < 1:
            raise ValueError("sampled secret code has decoding radius 0")
        params = replace(params, t=radius)
    elif params.t > radius:
        raise ValueError(f"requested t={params.t} exceeds decoding radius {radius}")

    G_pub = (S @ X.hstack(G_sec)) @ P
    return GptSecretKey(params, g, tw, S, X, P), GptPublicKey(params, G_pub)


def encrypt(pk: GptPublicKey, msg: list[int], rng) -> list[int]:
    """c = m G_pub + e with rank_fq(e) exactly t."""
    params = pk.params
    if len(msg) != params.k:
        raise ValueError("message length mismatch")
    ctx = params.ctx
    c = la.vec_mat(ctx, msg, pk.G_pub)
    e = la.random_vec_rank(ctx, params.n + params.lam, params.t, rng)
    return [ctx.add(a, b) for a, b in zip(c, e)]


def decrypt(sk: GptSecretKey, c: list[int]) -> list[int]:
    """Invert the scrambler, strip the distortion block, decode, solve for m."""
    params = sk.params
    ctx, lam = params.ctx, params.lam
    if len(c) != params.n + lam:
        raise ValueError("ciphertext length mismatch")
    y = la.vec_mat(ctx, c, sk.P.inverse())[lam:]
    G_sec = sk.G_sec
    res = decode(Code(G_sec), y, params.t, retry_all=True)
    if not res.ok:
        raise DecryptError(res.status)
    sol = la.solve_left(sk.S @ G_sec, MatFqm(ctx, [res.codeword]))
    if sol is None:
        raise DecryptError("codeword_outside_secret_code")
    return sol.data[0]
