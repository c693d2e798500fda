"""Exact linear algebra over the rationals.

Everything downstream (weight-space quotients, BGG complexes, ideal
slices) reduces to rank and kernel computations on sparse matrices with
Fraction entries, so this module keeps those primitives in one place.
No floating point anywhere.
"""

from fractions import Fraction


class NotAComplex(Exception):
    """Raised when consecutive maps of an alleged complex fail d.d == 0."""


class SparseMatrix:
    """Immutable-by-convention sparse matrix over Q.

    Entries live in a dict keyed by (row, col); zeros are never stored.
    """

    def __init__(self, nrows, ncols, entries=None):
        self.nrows = nrows
        self.ncols = ncols
        self.entries = {}
        if entries:
            for (r, c), v in entries.items():
                if v:
                    if not (0 <= r < nrows and 0 <= c < ncols):
                        raise IndexError("entry (%d,%d) outside %dx%d" % (r, c, nrows, ncols))
                    self.entries[(r, c)] = Fraction(v)

    @classmethod
    def from_rows(cls, rows, ncols=None):
        """Build from a list of dense rows (lists) or sparse rows (dicts)."""
        nrows = len(rows)
        entries = {}
        width = ncols or 0
        for r, row in enumerate(rows):
            if isinstance(row, dict):
                for c, v in row.items():
                    if v:
                        entries[(r, c)] = Fraction(v)
                        width = max(width, c + 1)
            else:
                width = max(width, len(row))
                for c, v in enumerate(row):
                    if v:
                        entries[(r, c)] = Fraction(v)
        return cls(nrows, width, entries)

    def row(self, r):
        return {c: v for (rr, c), v in self.entries.items() if rr == r}

    def rows(self):
        out = [dict() for _ in range(self.nrows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def transpose(self):
        return SparseMatrix(self.ncols, self.nrows,
                            {(c, r): v for (r, c), v in self.entries.items()})

    def matmul(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch %dx%d @ %dx%d"
                             % (self.nrows, self.ncols, other.nrows, other.ncols))
        cols_of_other = [dict() for _ in range(other.nrows)]
        for (r, c), v in other.entries.items():
            cols_of_other[r][c] = v
        out = {}
        for (r, k), v in self.entries.items():
            for c, w in cols_of_other[k].items():
                key = (r, c)
                out[key] = out.get(key, 0) + v * w
        return SparseMatrix(self.nrows, other.ncols, out)

    def apply(self, vec):
        """Apply to a sparse vector (dict col -> value); returns a dict."""
        out = {}
        for (r, c), v in self.entries.items():
            if c in vec:
                out[r] = out.get(r, 0) + v * vec[c]
        return {r: v for r, v in out.items() if v}

    def is_zero(self):
        return not self.entries

    def __eq__(self, other):
        return (isinstance(other, SparseMatrix)
                and (self.nrows, self.ncols) == (other.nrows, other.ncols)
                and self.entries == other.entries)

    def __repr__(self):
        return "SparseMatrix(%dx%d, nnz=%d)" % (self.nrows, self.ncols, len(self.entries))


def _reduce_against(vec, echelon):
    """Reduce a sparse vector against echelon rows (pivot col -> unit-pivot row).

    The echelon rows are kept fully reduced against each other, so the
    residual is supported away from all pivot columns.
    """
    vec = dict(vec)
    while True:
        hit = None
        for c in vec:
            if c in echelon:
                hit = c
                break
        if hit is None:
            return vec
        coef = vec[hit]
        for c, v in echelon[hit].items():
            nv = vec.get(c, 0) - coef * v
            if nv:
                vec[c] = nv
            else:
                vec.pop(c, None)


class RowReducer:
    """Incremental reduced row echelon form over Q.

    Used both for plain rank counting and for building quotient-space
    coordinates: once a spanning set of the subspace is absorbed, the
    non-pivot columns index a basis of the quotient and reduce() gives
    the projection of any ambient vector in those coordinates.
    """

    def __init__(self):
        self.echelon = {}  # pivot column -> sparse row with that pivot == 1

    @property
    def rank(self):
        return len(self.echelon)

    def reduce(self, vec):
        return _reduce_against(vec, self.echelon)

    def add(self, vec):
        """Absorb a vector; returns True if it enlarged the span."""
        res = self.reduce(vec)
        if not res:
            return False
        piv = min(res)
        inv = Fraction(1) / res[piv]
        row = {c: v * inv for c, v in res.items()}
        # keep full reduction: clear the new pivot from existing rows
        for p, old in self.echelon.items():
            if piv in old:
                coef = old[piv]
                for c, v in row.items():
                    nv = old.get(c, 0) - coef * v
                    if nv:
                        old[c] = nv
                    else:
                        old.pop(c, None)
        self.echelon[piv] = row
        return True

    def pivot_columns(self):
        return sorted(self.echelon)


def rank(mat):
    red = RowReducer()
    for row in mat.rows():
        red.add(row)
    return red.rank


def kernel_dim(mat):
    return mat.ncols - rank(mat)


def kernel_basis(mat):
    """Basis of the right kernel, one sparse dict per free column."""
    red = RowReducer()
    for row in mat.rows():
        red.add(row)
    pivots = red.pivot_columns()
    pivot_set = set(pivots)
    out = []
    for c in range(mat.ncols):
        if c in pivot_set:
            continue
        vec = {c: Fraction(1)}
        for p in pivots:
            v = red.echelon[p].get(c, 0)
            if v:
                vec[p] = -v
        out.append(vec)
    return out


class CochainComplex:
    """A finite cochain complex of Q-vector spaces.

    dims[t] is the dimension of the degree-t term; maps[t] is the
    differential from term t to term t+1 (so maps has one fewer entry,
    and maps[t] is a dims[t+1] x dims[t] matrix acting on column vectors).
    """

    def __init__(self, dims, maps):
        if len(maps) != max(len(dims) - 1, 0):
            raise ValueError("need exactly len(dims)-1 maps")
        for t, mp in enumerate(maps):
            if mp.ncols != dims[t] or mp.nrows != dims[t + 1]:
                raise ValueError("map %d has shape %dx%d, expected %dx%d"
                                 % (t, mp.nrows, mp.ncols, dims[t + 1], dims[t]))
        self.dims = list(dims)
        self.maps = list(maps)

    def check_complex(self):
        for t in range(len(self.maps) - 1):
            if not self.maps[t + 1].matmul(self.maps[t]).is_zero():
                raise NotAComplex("composite of maps %d and %d is nonzero" % (t, t + 1))

    def cohomology_dims(self):
        self.check_complex()
        ranks = [rank(mp) for mp in self.maps]
        out = []
        for t, d in enumerate(self.dims):
            rin = ranks[t - 1] if t > 0 else 0
            rout = ranks[t] if t < len(self.maps) else 0
            out.append(d - rout - rin)
        # Euler characteristic is rank-independent, so this cross-checks
        # the elimination against plain dimension counting.
        lhs = sum((-1) ** t * d for t, d in enumerate(self.dims))
        rhs = sum((-1) ** t * h for t, h in enumerate(out))
        assert lhs == rhs, "Euler characteristic mismatch"
        return out
