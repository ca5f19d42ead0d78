"""Linear algebra over F_{q^m} and F_q.

Two matrix types, both row-major lists of rows:

  MatFqm  entries are F_{q^m} elements in the integer encoding of a FieldCtx.
  MatFq   entries are integers in [0, q); the base field sits inside F_{q^m}
          as the constant polynomials, so a MatFq entry is already a valid
          F_{q^m} encoding and mixed products need no conversion step.

Row spaces are handled in canonical form: the trimmed reduced row echelon
form of a generator matrix.  Equality of spaces is equality of canonical
forms; intersections go through duals, (A cap B)-perp = A-perp + B-perp.

The module also provides the bridge from F_{q^m}-linear constraints on
F_q-valued unknowns to plain F_q systems (expand_fq_system), rank-metric
weights (rank_fq), and the random samplers used by key generation.
"""

from __future__ import annotations

from .fields import FieldCtx


class _FqmEchelon:
    """Incremental row echelon over F_{q^m}.

    Rows are inserted one at a time; each kept row is scaled so its leading
    entry is 1.  Only forward elimination happens here, which is all the
    rank bookkeeping needs; full reduction is done by rref() when the
    actual canonical matrix is wanted.
    """

    def __init__(self, ctx: FieldCtx, width: int):
        self.ctx = ctx
        self.width = width
        self.pivots: dict[int, list[int]] = {}  # pivot column -> row

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add(self, row: list[int]) -> bool:
        """Insert a row; True if it enlarged the span."""
        ctx = self.ctx
        row = list(row)
        for j in range(self.width):
            a = row[j]
            if not a:
                continue
            prow = self.pivots.get(j)
            if prow is None:
                if a != 1:
                    row = ctx.mul_row(ctx.inv(a), row)
                self.pivots[j] = row
                return True
            ctx.mac_row(row, ctx.neg(a), prow)  # prow[j] = 1, so row[j] cancels
        return False

    def contains(self, row: list[int]) -> bool:
        ctx = self.ctx
        row = list(row)
        for j in range(self.width):
            a = row[j]
            if not a:
                continue
            prow = self.pivots.get(j)
            if prow is None:
                return False
            ctx.mac_row(row, ctx.neg(a), prow)
        return True


class _BitEchelon:
    """Incremental row echelon over F_2 with rows packed into ints (bit j =
    column j).  The workhorse for rank_fq at q=2 and for the large F_2
    systems in the attack module."""

    def __init__(self, width: int):
        self.width = width
        self.pivots: dict[int, int] = {}  # pivot column -> row bitmask

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add(self, row: int) -> bool:
        while row:
            j = (row & -row).bit_length() - 1
            prow = self.pivots.get(j)
            if prow is None:
                self.pivots[j] = row
                return True
            row ^= prow
        return False

    def contains(self, row: int) -> bool:
        while row:
            j = (row & -row).bit_length() - 1
            prow = self.pivots.get(j)
            if prow is None:
                return False
            row ^= prow
        return True

    def kernel_basis(self) -> list[int]:
        """Basis of {x : row . x = 0 for every inserted row}, as bitmasks."""
        # full back-substitution so each pivot column appears in one row only
        cols = sorted(self.pivots)
        for idx in range(len(cols) - 1, -1, -1):
            j = cols[idx]
            row = self.pivots[j]
            for jj in cols[idx + 1 :]:
                if (row >> jj) & 1:
                    row ^= self.pivots[jj]
            self.pivots[j] = row
        pivset = set(cols)
        basis = []
        for f in range(self.width):
            if f in pivset:
                continue
            v = 1 << f
            for j in cols:
                if (self.pivots[j] >> f) & 1:
                    v |= 1 << j
            basis.append(v)
        return basis


class MatFqm:
    """Matrix over F_{q^m}; data is a list of rows of integer encodings."""

    __slots__ = ("ctx", "rows", "cols", "data")

    def __init__(self, ctx: FieldCtx, data: list[list[int]], cols: int | None = None):
        self.ctx = ctx
        self.data = [list(r) for r in data]
        self.rows = len(self.data)
        if self.rows:
            cols = len(self.data[0])
        elif cols is None:
            raise ValueError("empty matrix needs an explicit column count")
        self.cols = cols
        for r in self.data:
            if len(r) != cols:
                raise ValueError("ragged rows")

    # -- construction ---------------------------------------------------
    @classmethod
    def zeros(cls, ctx: FieldCtx, rows: int, cols: int) -> "MatFqm":
        return cls(ctx, [[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, ctx: FieldCtx, n: int) -> "MatFqm":
        data = [[0] * n for _ in range(n)]
        for i in range(n):
            data[i][i] = 1
        return cls(ctx, data)

    @classmethod
    def random(cls, ctx: FieldCtx, rows: int, cols: int, rng) -> "MatFqm":
        return cls(ctx, [[ctx.random(rng) for _ in range(cols)] for _ in range(rows)], cols)

    def copy(self) -> "MatFqm":
        return MatFqm(self.ctx, self.data, self.cols)

    # -- structure ------------------------------------------------------
    def row(self, i: int) -> list[int]:
        return list(self.data[i])

    def transpose(self) -> "MatFqm":
        data = [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)]
        return MatFqm(self.ctx, data, self.rows)

    def vstack(self, other: "MatFqm") -> "MatFqm":
        self._check(other, cols=True)
        return MatFqm(self.ctx, self.data + other.data, self.cols)

    def hstack(self, other: "MatFqm") -> "MatFqm":
        self.ctx.check_same(other.ctx)
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return MatFqm(
            self.ctx,
            [a + b for a, b in zip(self.data, other.data)],
            self.cols + other.cols,
        )

    def take_cols(self, start: int, stop: int) -> "MatFqm":
        return MatFqm(self.ctx, [r[start:stop] for r in self.data], stop - start)

    def frob(self, i: int = 1) -> "MatFqm":
        """Entrywise a -> a^(q^i)."""
        ctx = self.ctx
        return MatFqm(ctx, [ctx.frob_row(r, i) for r in self.data], self.cols)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other: "MatFqm") -> "MatFqm":
        self._check(other, cols=True)
        if self.rows != other.rows:
            raise ValueError("shape mismatch")
        add = self.ctx.add
        data = [
            [add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)
        ]
        return MatFqm(self.ctx, data, self.cols)

    def __sub__(self, other: "MatFqm") -> "MatFqm":
        self._check(other, cols=True)
        if self.rows != other.rows:
            raise ValueError("shape mismatch")
        sub = self.ctx.sub
        data = [
            [sub(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)
        ]
        return MatFqm(self.ctx, data, self.cols)

    def __matmul__(self, other) -> "MatFqm":
        # MatFq entries are constants of F_{q^m} under the integer encoding,
        # so a mixed product reads other.data directly.
        if isinstance(other, MatFq):
            if other.q != self.ctx.q:
                raise ValueError("base field mismatch")
        elif isinstance(other, MatFqm):
            self.ctx.check_same(other.ctx)
        else:
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        ctx = self.ctx
        out = []
        for arow in self.data:
            acc = [0] * other.cols
            for j, a in enumerate(arow):
                if a:
                    ctx.mac_row(acc, a, other.data[j])
            out.append(acc)
        return MatFqm(ctx, out, other.cols)

    def scale(self, a: int) -> "MatFqm":
        ctx = self.ctx
        return MatFqm(ctx, [ctx.mul_row(a, r) for r in self.data], self.cols)

    def is_zero(self) -> bool:
        return all(not e for r in self.data for e in r)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MatFqm)
            and self.ctx == other.ctx
            and self.cols == other.cols
            and self.data == other.data
        )

    def __repr__(self) -> str:
        return f"MatFqm({self.rows}x{self.cols} over q^m={self.ctx.q}^{self.ctx.m})"

    def _check(self, other: "MatFqm", cols: bool = False) -> None:
        self.ctx.check_same(other.ctx)
        if cols and self.cols != other.cols:
            raise ValueError("column count mismatch")


class MatFq:
    """Matrix over the base field F_q; entries are plain ints in [0, q)."""

    __slots__ = ("q", "rows", "cols", "data")

    def __init__(self, q: int, data: list[list[int]], cols: int | None = None):
        self.q = q
        self.data = [[e % q for e in r] for r in data]
        self.rows = len(self.data)
        if self.rows:
            cols = len(self.data[0])
        elif cols is None:
            raise ValueError("empty matrix needs an explicit column count")
        self.cols = cols
        for r in self.data:
            if len(r) != cols:
                raise ValueError("ragged rows")

    @classmethod
    def zeros(cls, q: int, rows: int, cols: int) -> "MatFq":
        return cls(q, [[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, q: int, n: int) -> "MatFq":
        data = [[0] * n for _ in range(n)]
        for i in range(n):
            data[i][i] = 1
        return cls(q, data)

    @classmethod
    def random(cls, q: int, rows: int, cols: int, rng) -> "MatFq":
        vals = rng.integers(0, q, size=rows * cols)
        it = iter(int(v) for v in vals)
        return cls(q, [[next(it) for _ in range(cols)] for _ in range(rows)], cols)

    def row(self, i: int) -> list[int]:
        return list(self.data[i])

    def transpose(self) -> "MatFq":
        data = [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)]
        return MatFq(self.q, data, self.rows)

    def vstack(self, other: "MatFq") -> "MatFq":
        if self.q != other.q or self.cols != other.cols:
            raise ValueError("shape or field mismatch")
        return MatFq(self.q, self.data + other.data, self.cols)

    def hstack(self, other: "MatFq") -> "MatFq":
        if self.q != other.q or self.rows != other.rows:
            raise ValueError("shape or field mismatch")
        return MatFq(self.q, [a + b for a, b in zip(self.data, other.data)], self.cols + other.cols)

    def __add__(self, other: "MatFq") -> "MatFq":
        if self.q != other.q or self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape or field mismatch")
        q = self.q
        return MatFq(
            q,
            [[(a + b) % q for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)],
            self.cols,
        )

    def __sub__(self, other: "MatFq") -> "MatFq":
        return self + other.scale(self.q - 1)

    def scale(self, a: int) -> "MatFq":
        q = self.q
        return MatFq(q, [[(a * e) % q for e in r] for r in self.data], self.cols)

    def __matmul__(self, other: "MatFq") -> "MatFq":
        if not isinstance(other, MatFq):
            return NotImplemented
        if self.q != other.q:
            raise ValueError("field mismatch")
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        q = self.q
        out = []
        for arow in self.data:
            acc = [0] * other.cols
            for j, a in enumerate(arow):
                if a:
                    brow = other.data[j]
                    for jj in range(other.cols):
                        acc[jj] = (acc[jj] + a * brow[jj]) % q
            out.append(acc)
        return MatFq(q, out, other.cols)

    def lift(self, ctx: FieldCtx) -> MatFqm:
        """View over F_{q^m}; entries are already valid encodings."""
        if ctx.q != self.q:
            raise ValueError("base field mismatch")
        return MatFqm(ctx, self.data, self.cols)

    def inverse(self) -> "MatFq":
        if self.rows != self.cols:
            raise ValueError("not square")
        n, q = self.rows, self.q
        aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(self.data)]
        _rref_rows_fq(aug, q, 2 * n)
        if _pivot_cols(aug, 2 * n) != list(range(n)):
            raise ValueError("matrix is singular")
        return MatFq(q, [r[n:] for r in aug], n)

    def is_zero(self) -> bool:
        return all(not e for r in self.data for e in r)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MatFq)
            and self.q == other.q
            and self.cols == other.cols
            and self.data == other.data
        )

    def __repr__(self) -> str:
        return f"MatFq({self.rows}x{self.cols} over F_{self.q})"


# -- echelon forms ------------------------------------------------------


def _rref_rows_fqm(data: list[list[int]], ctx: FieldCtx, cols: int) -> int:
    """In-place RREF of a list of F_{q^m} rows; returns the rank."""
    rank = 0
    for j in range(cols):
        src = next((i for i in range(rank, len(data)) if data[i][j]), None)
        if src is None:
            continue
        data[rank], data[src] = data[src], data[rank]
        row = data[rank]
        if row[j] != 1:
            data[rank] = row = ctx.mul_row(ctx.inv(row[j]), row)
        for i in range(len(data)):
            if i != rank and data[i][j]:
                ctx.mac_row(data[i], ctx.neg(data[i][j]), row)
        rank += 1
        if rank == len(data):
            break
    return rank


def _rref_rows_fq(data: list[list[int]], q: int, cols: int) -> int:
    """In-place RREF of a list of F_q rows; returns the rank."""
    rank = 0
    for j in range(cols):
        src = next((i for i in range(rank, len(data)) if data[i][j]), None)
        if src is None:
            continue
        data[rank], data[src] = data[src], data[rank]
        row = data[rank]
        if row[j] != 1:
            inv = pow(row[j], -1, q)
            data[rank] = row = [(inv * e) % q for e in row]
        for i in range(len(data)):
            a = data[i][j]
            if i != rank and a:
                data[i] = [(e - a * p) % q for e, p in zip(data[i], row)]
        rank += 1
        if rank == len(data):
            break
    return rank


def _pivot_cols(data: list[list[int]], cols: int) -> list[int]:
    """Pivot columns of rows already in RREF (leading entry per nonzero row)."""
    out = []
    for r in data:
        j = next((jj for jj in range(cols) if r[jj]), None)
        if j is None:
            break
        out.append(j)
    return out


def rref(M, trim: bool = False):
    """Reduced row echelon form.

    Returns (R, rank, pivot_columns).  With trim=True the zero rows are
    dropped from R.  Works on MatFqm and MatFq.
    """
    if isinstance(M, MatFqm):
        data = [list(r) for r in M.data]
        rank = _rref_rows_fqm(data, M.ctx, M.cols)
        pivs = _pivot_cols(data, M.cols)
        if trim:
            data = data[:rank]
        return MatFqm(M.ctx, data, M.cols), rank, pivs
    if isinstance(M, MatFq):
        data = [list(r) for r in M.data]
        rank = _rref_rows_fq(data, M.q, M.cols)
        pivs = _pivot_cols(data, M.cols)
        if trim:
            data = data[:rank]
        return MatFq(M.q, data, M.cols), rank, pivs
    raise TypeError(f"rref does not handle {type(M).__name__}")


def rank(M) -> int:
    if isinstance(M, MatFqm):
        ech = _FqmEchelon(M.ctx, M.cols)
        for r in M.data:
            ech.add(r)
        return ech.rank
    if isinstance(M, MatFq):
        data = [list(r) for r in M.data]
        return _rref_rows_fq(data, M.q, M.cols)
    raise TypeError(f"rank does not handle {type(M).__name__}")


def right_kernel(M):
    """Basis of {x : M x^T = 0} as rows of a matrix of the same kind.

    Deterministic: one basis vector per free column of the RREF, in
    column order, with a 1 in the free position.
    """
    R, rk, pivs = rref(M, trim=True)
    ncols = M.cols
    free = [j for j in range(ncols) if j not in set(pivs)]
    if isinstance(M, MatFqm):
        ctx = M.ctx
        basis = []
        for f in free:
            v = [0] * ncols
            v[f] = 1
            for i, p in enumerate(pivs):
                v[p] = ctx.neg(R.data[i][f])
            basis.append(v)
        return MatFqm(ctx, basis, ncols)
    q = M.q
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for i, p in enumerate(pivs):
            v[p] = (-R.data[i][f]) % q
        basis.append(v)
    return MatFq(q, basis, ncols)


# -- vectors ------------------------------------------------------------


def vec_mat(ctx: FieldCtx, v: list[int], M) -> list[int]:
    """Row vector times matrix over F_{q^m} (M may be MatFq)."""
    if len(v) != M.rows:
        raise ValueError("shape mismatch")
    acc = [0] * M.cols
    for i, a in enumerate(v):
        if a:
            ctx.mac_row(acc, a, M.data[i])
    return acc


def mat_vec(ctx: FieldCtx, M, v: list[int]) -> list[int]:
    """Matrix times column vector, returned as a list (M may be MatFq)."""
    if len(v) != M.cols:
        raise ValueError("shape mismatch")
    mul, add = ctx.mul, ctx.add
    out = []
    for row in M.data:
        s = 0
        for a, b in zip(row, v):
            if a and b:
                s = add(s, mul(a, b))
        out.append(s)
    return out


def dot(ctx: FieldCtx, u: list[int], v: list[int]) -> int:
    if len(u) != len(v):
        raise ValueError("length mismatch")
    s = 0
    for a, b in zip(u, v):
        if a and b:
            s = ctx.add(s, ctx.mul(a, b))
    return s


def rank_fq(ctx: FieldCtx, v: list[int]) -> int:
    """Rank weight: dimension over F_q of the span of the coordinates."""
    if ctx.q == 2:
        ech = _BitEchelon(ctx.m)
        for a in v:
            if a:
                ech.add(a)
        return ech.rank
    data = [ctx.coeffs(a) for a in v if a]
    if not data:
        return 0
    return _rref_rows_fq(data, ctx.q, ctx.m)


# -- the F_{q^m} -> F_q bridge -------------------------------------------


def expand_fq_system(M: MatFqm, rhs: list[int] | None = None):
    """Split F_{q^m}-linear constraints on F_q unknowns into F_q equations.

    Row r of M is the coefficient vector of one constraint sum_j c_j u_j
    with the u_j ranging over F_q.  Each constraint becomes m rows, one per
    polynomial-basis coordinate.  Returns the expanded MatFq, or a pair
    (MatFq, expanded rhs) when an F_{q^m} right-hand side is supplied.
    """
    ctx, m = M.ctx, M.ctx.m
    out = []
    for row in M.data:
        cs = [ctx.coeffs(c) for c in row]
        for t in range(m):
            out.append([c[t] for c in cs])
    A = MatFq(ctx.q, out, M.cols)
    if rhs is None:
        return A
    if len(rhs) != M.rows:
        raise ValueError("rhs length mismatch")
    b: list[int] = []
    for s in rhs:
        b.extend(ctx.coeffs(s))
    return A, b


def solve_fq(A: MatFq, b: list[int]) -> list[int] | None:
    """One solution of A x = b over F_q, or None if inconsistent.

    Deterministic: free variables are set to zero.
    """
    if len(b) != A.rows:
        raise ValueError("shape mismatch")
    q = A.q
    if q == 2:
        return _solve_bits(
            (_pack_bits(r) | (bb & 1) << A.cols for r, bb in zip(A.data, b)), A.cols
        )
    aug = [list(r) + [bb % q] for r, bb in zip(A.data, b)]
    _rref_rows_fq(aug, q, A.cols + 1)
    pivs = _pivot_cols(aug, A.cols + 1)
    if A.cols in pivs:
        return None
    x = [0] * A.cols
    for i, p in enumerate(pivs):
        x[p] = aug[i][A.cols]
    return x


def _pack_bits(row: list[int]) -> int:
    v = 0
    for j, e in enumerate(row):
        if e & 1:
            v |= 1 << j
    return v


def _solve_bits(rows, cols: int) -> list[int] | None:
    """F_2 solve of rows packed as ints with the right-hand side at bit
    position `cols`; None if inconsistent, free variables zero."""
    ech = _BitEchelon(cols + 1)
    for r in rows:
        ech.add(r)
    if cols in ech.pivots:
        return None  # a row reduced to 0 = 1
    pcols = sorted(ech.pivots)
    for idx in range(len(pcols) - 1, -1, -1):
        j = pcols[idx]
        row = ech.pivots[j]
        for jj in pcols[idx + 1 :]:
            if (row >> jj) & 1:
                row ^= ech.pivots[jj]
        ech.pivots[j] = row
    x = [0] * cols
    for j in pcols:
        x[j] = (ech.pivots[j] >> cols) & 1
    return x


def solve_left(A: MatFqm, B: MatFqm) -> MatFqm | None:
    """Solve X A = B over F_{q^m}; None if inconsistent.

    Free variables are set to zero, so the answer is the unique solution
    whenever A has full row rank.
    """
    A._check(B, cols=True)
    At = A.transpose()
    Bt = B.transpose()
    ctx = A.ctx
    aug = [list(r) + list(br) for r, br in zip(At.data, Bt.data)]
    _rref_rows_fqm(aug, ctx, A.rows + B.rows)
    pivs = _pivot_cols(aug, A.rows + B.rows)
    if any(p >= A.rows for p in pivs):
        return None
    Xt = [[0] * B.rows for _ in range(A.rows)]
    for i, p in enumerate(pivs):
        Xt[p] = aug[i][A.rows :]
    return MatFqm(ctx, Xt, B.rows).transpose()


# -- row spaces ----------------------------------------------------------


def canonical(M: MatFqm) -> MatFqm:
    """Canonical form of the row space: trimmed RREF."""
    R, _, _ = rref(M, trim=True)
    return R


def space_sum(A: MatFqm, B: MatFqm) -> MatFqm:
    A._check(B, cols=True)
    return canonical(A.vstack(B))


def space_intersect(A: MatFqm, B: MatFqm) -> MatFqm:
    A._check(B, cols=True)
    dual = right_kernel(A).vstack(right_kernel(B))
    return canonical(right_kernel(dual))


def space_eq(A: MatFqm, B: MatFqm) -> bool:
    return canonical(A) == canonical(B)


def space_contains(A: MatFqm, B: MatFqm) -> bool:
    """Is the row space of B inside the row space of A?"""
    A._check(B, cols=True)
    ech = _FqmEchelon(A.ctx, A.cols)
    for r in A.data:
        ech.add(r)
    return all(ech.contains(r) for r in B.data)


# -- random samplers -------------------------------------------------------

_RESAMPLE_CAP = 64  # nonsingularity rejection bound; failure odds ~ q^-64


def random_gl(q: int, n: int, rng) -> MatFq:
    """Uniform-ish invertible n x n matrix over F_q by rejection."""
    for _ in range(_RESAMPLE_CAP):
        M = MatFq.random(q, n, n, rng)
        if rank(M) == n:
            return M
    raise RuntimeError("failed to sample an invertible matrix")


def random_invertible_matfqm(ctx: FieldCtx, n: int, rng) -> MatFqm:
    for _ in range(_RESAMPLE_CAP):
        M = MatFqm.random(ctx, n, n, rng)
        if rank(M) == n:
            return M
    raise RuntimeError("failed to sample an invertible matrix")


def random_rank_s_matfqm(ctx: FieldCtx, k: int, lam: int, s: int, rng) -> MatFqm:
    """k x lam matrix over F_{q^m} of rank exactly s, as a product A B of
    full-rank k x s and s x lam factors."""
    if not 1 <= s <= min(k, lam):
        raise ValueError(f"rank {s} impossible for a {k}x{lam} matrix")

    def full_rank(rows: int, cols: int) -> MatFqm:
        for _ in range(_RESAMPLE_CAP):
            M = MatFqm.random(ctx, rows, cols, rng)
            if rank(M) == min(rows, cols):
                return M
        raise RuntimeError("failed to sample a full-rank factor")

    return full_rank(k, s) @ full_rank(s, lam)


def random_independent_vec(ctx: FieldCtx, n: int, rng) -> list[int]:
    """Vector in F_{q^m}^n with F_q-linearly independent coordinates."""
    if n > ctx.m:
        raise ValueError("cannot fit more than m independent coordinates")
    for _ in range(_RESAMPLE_CAP):
        v = [ctx.random(rng) for _ in range(n)]
        if rank_fq(ctx, v) == n:
            return v
    raise RuntimeError("failed to sample an independent vector")


def random_vec_rank(ctx: FieldCtx, n: int, t: int, rng) -> list[int]:
    """Length-n vector of rank weight exactly t: a rank-t support basis
    combined through a full-rank t x n matrix over F_q."""
    if not 0 <= t <= min(n, ctx.m):
        raise ValueError(f"rank {t} impossible for length {n}")
    if t == 0:
        return [0] * n
    support = random_independent_vec(ctx, t, rng)
    for _ in range(_RESAMPLE_CAP):
        B = MatFq.random(ctx.q, t, n, rng)
        if rank(B) == t:
            return vec_mat(ctx, support, B)
    raise RuntimeError("failed to sample a full-rank combination matrix")
