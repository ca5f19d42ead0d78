"""JSON file formats for parameters, keys, ciphertexts and attack reports.

All F_{q^m} elements travel as lowercase hex strings of the packed integer
encoding; base-field matrices as plain integer lists.  Matrices are stored
row-major under {"rows", "cols", "entries"}.  Public key exports never
contain secret fields.
"""

from __future__ import annotations

import json
from pathlib import Path

from .attack import AttackReport
from .codes import Code, TwistParams
from .fields import FieldCtx, field_from_json
from .gpt import GptParams, GptPublicKey, GptSecretKey
from .linalg import MatFq, MatFqm

FORMAT_VERSION = 1


# -- leaf encoders -----------------------------------------------------------


def vec_to_json(ctx: FieldCtx, v: list[int]) -> list[str]:
    return [ctx.to_hex(a) for a in v]


def vec_from_json(ctx: FieldCtx, obj: list[str]) -> list[int]:
    return [ctx.from_hex(s) for s in obj]


def matfqm_to_json(M: MatFqm) -> dict:
    ctx = M.ctx
    return {
        "rows": M.rows,
        "cols": M.cols,
        "entries": [ctx.to_hex(a) for row in M.data for a in row],
    }


def matfqm_from_json(ctx: FieldCtx, obj: dict) -> MatFqm:
    r, c = int(obj["rows"]), int(obj["cols"])
    flat = [ctx.from_hex(s) for s in obj["entries"]]
    if len(flat) != r * c:
        raise ValueError("matrix entry count mismatch")
    return MatFqm(ctx, [flat[i * c : (i + 1) * c] for i in range(r)], c)


def matfq_to_json(M: MatFq) -> dict:
    return {
        "q": M.q,
        "rows": M.rows,
        "cols": M.cols,
        "entries": [a for row in M.data for a in row],
    }


def matfq_from_json(obj: dict) -> MatFq:
    q, r, c = int(obj["q"]), int(obj["rows"]), int(obj["cols"])
    flat = [int(a) for a in obj["entries"]]
    if len(flat) != r * c:
        raise ValueError("matrix entry count mismatch")
    if any(not 0 <= a < q for a in flat):
        raise ValueError("base-field entry out of range")
    return MatFq(q, [flat[i * c : (i + 1) * c] for i in range(r)], c)


def twist_to_json(ctx: FieldCtx, tw: TwistParams) -> dict:
    return {
        "h": list(tw.h),
        "t": list(tw.t),
        "eta": [ctx.to_hex(a) for a in tw.eta],
    }


def twist_from_json(ctx: FieldCtx, obj: dict) -> TwistParams:
    return TwistParams(
        [int(a) for a in obj["h"]],
        [int(a) for a in obj["t"]],
        [ctx.from_hex(s) for s in obj["eta"]],
    )


def code_to_json(C: Code) -> dict:
    ctx = C.ctx
    return {
        "field": ctx.to_json(),
        "n": C.n,
        "k": C.k,
        "gen": [ctx.to_hex(a) for row in C.gen.data for a in row],
    }


def code_from_json(obj: dict) -> Code:
    ctx = field_from_json(obj["field"])
    n, k = int(obj["n"]), int(obj["k"])
    flat = [ctx.from_hex(s) for s in obj["gen"]]
    if len(flat) != n * k:
        raise ValueError("generator entry count mismatch")
    return Code(MatFqm(ctx, [flat[i * n : (i + 1) * n] for i in range(k)], n))


# -- parameters and keys ------------------------------------------------------


def params_to_json(p: GptParams) -> dict:
    return {
        "field": p.ctx.to_json(),
        "n": p.n,
        "k": p.k,
        "lambda": p.lam,
        "s": p.s,
        "instantiation": p.instantiation,
        "ell": p.ell,
        "t": p.t,
    }


def params_from_json(obj: dict) -> GptParams:
    ctx = field_from_json(obj["field"])
    t = obj.get("t")
    return GptParams(
        ctx,
        n=int(obj["n"]),
        k=int(obj["k"]),
        lam=int(obj["lambda"]),
        s=int(obj["s"]),
        instantiation=str(obj["instantiation"]),
        ell=int(obj["ell"]),
        t=None if t is None else int(t),
    )


def secret_key_to_json(sk: GptSecretKey) -> dict:
    ctx = sk.params.ctx
    return {
        "format": FORMAT_VERSION,
        "params": params_to_json(sk.params),
        "secret": {
            "g": vec_to_json(ctx, sk.g),
            "tw": None if sk.tw is None else twist_to_json(ctx, sk.tw),
            "S": matfqm_to_json(sk.S),
            "X": matfqm_to_json(sk.X),
            "P": matfq_to_json(sk.P),
        },
    }


def secret_key_from_json(obj: dict) -> GptSecretKey:
    params = params_from_json(obj["params"])
    ctx = params.ctx
    sec = obj["secret"]
    tw = None if sec.get("tw") is None else twist_from_json(ctx, sec["tw"])
    return GptSecretKey(
        params,
        vec_from_json(ctx, sec["g"]),
        tw,
        matfqm_from_json(ctx, sec["S"]),
        matfqm_from_json(ctx, sec["X"]),
        matfq_from_json(sec["P"]),
    )


def public_key_to_json(pk: GptPublicKey) -> dict:
    return {
        "format": FORMAT_VERSION,
        "params": params_to_json(pk.params),
        "public": {"G_pub": matfqm_to_json(pk.G_pub)},
    }


def public_key_from_json(obj: dict) -> GptPublicKey:
    params = params_from_json(obj["params"])
    return GptPublicKey(params, matfqm_from_json(params.ctx, obj["public"]["G_pub"]))


def ciphertext_to_json(ctx: FieldCtx, c: list[int]) -> dict:
    return {"format": FORMAT_VERSION, "c": vec_to_json(ctx, c)}


def ciphertext_from_json(ctx: FieldCtx, obj: dict) -> list[int]:
    return vec_from_json(ctx, obj["c"])


def message_to_json(ctx: FieldCtx, msg: list[int]) -> dict:
    return {"format": FORMAT_VERSION, "msg": vec_to_json(ctx, msg)}


def message_from_json(ctx: FieldCtx, obj: dict) -> list[int]:
    return vec_from_json(ctx, obj["msg"])


def report_to_json(ctx: FieldCtx, rep: AttackReport) -> dict:
    return {
        "format": FORMAT_VERSION,
        "mode": rep.mode,
        "success": rep.success,
        "recovered": None if rep.recovered is None else vec_to_json(ctx, rep.recovered),
        "failure": rep.failure,
        "i_used": rep.i_used,
        "stab_dim": rep.stab_dim,
        "F": None if rep.F is None else matfq_to_json(rep.F),
        "timings_ms": {k: round(v, 3) for k, v in rep.timings_ms.items()},
    }


# -- file helpers --------------------------------------------------------------


def write_json(path: str | Path, obj: dict) -> None:
    Path(path).write_text(json.dumps(obj, indent=1, sort_keys=True) + "\n")


def read_json(path: str | Path) -> dict:
    return json.loads(Path(path).read_text())
