"""Small dense matrices and sparse multivariate polynomials.

Matrix is entry-type agnostic: anything with +, * and unary minus works,
including exact scalars, polynomials, truncated series and algebra elements.
graded_kron builds the joint action of operators on a tensor product of
graded spaces, inserting the parity sign for each operator moved past the
vectors to its left.
"""

from __future__ import annotations

from itertools import product as iproduct

from .scalars import QScalar, QZERO, coerce_scalar


class Matrix:
    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(r) for r in rows)
        if self.rows:
            w = len(self.rows[0])
            if any(len(r) != w for r in self.rows):
                raise ValueError("ragged rows")

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __add__(self, other):
        if self.nrows != other.nrows or self.ncols != other.ncols:
            raise ValueError("shape mismatch")
        return Matrix(tuple(a + b for a, b in zip(ra, rb))
                      for ra, rb in zip(self.rows, other.rows))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Matrix(tuple(-e for e in r) for r in self.rows)

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = None
                for k in range(self.ncols):
                    p = self.rows[i][k] * other.rows[k][j]
                    acc = p if acc is None else acc + p
                row.append(acc)
            out.append(row)
        return Matrix(out)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def map(self, fn):
        return Matrix(tuple(fn(e) for e in r) for r in self.rows)

    def transpose(self):
        return Matrix(zip(*self.rows))

    def __repr__(self):
        body = "\n".join("  [" + ", ".join(str(e) for e in r) + "]"
                         for r in self.rows)
        return f"Matrix(\n{body}\n)"

    @staticmethod
    def identity(n, one, zero):
        return Matrix(tuple(one if i == j else zero for j in range(n))
                      for i in range(n))

    @staticmethod
    def zero(nr, nc, zero):
        return Matrix(tuple(zero for _ in range(nc)) for _ in range(nr))


def graded_kron(mats, op_parities, space_parities):
    """Joint matrix of mats[0] x ... x mats[r-1] on the graded tensor product.

    The entry at row (i_0..i_{r-1}), column (k_0..k_{r-1}) is the product of
    the factor entries times (-1)^e with e = sum_t |op_t| * sum_{s<t} |v_{k_s}|.
    """
    r = len(mats)
    dims = [m.nrows for m in mats]
    total = 1
    for d in dims:
        total *= d
    out = [[None] * total for _ in range(total)]
    for cols in iproduct(*[range(d) for d in dims]):
        sign = 0
        below = 0
        for t in range(r):
            sign += op_parities[t] * below
            below += space_parities[t][cols[t]]
        col_flat = 0
        for t in range(r):
            col_flat = col_flat * dims[t] + cols[t]
        for rows_idx in iproduct(*[range(d) for d in dims]):
            acc = None
            for t in range(r):
                e = mats[t].rows[rows_idx[t]][cols[t]]
                acc = e if acc is None else acc * e
            if sign & 1:
                acc = -acc
            row_flat = 0
            for t in range(r):
                row_flat = row_flat * dims[t] + rows_idx[t]
            out[row_flat][col_flat] = acc
    return Matrix(out)


class MPoly:
    """Sparse polynomial in n commuting variables with exact coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        clean = {}
        for exps, c in (terms or {}).items():
            if len(exps) != n:
                raise ValueError("exponent arity mismatch")
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent")
            c = coerce_scalar(c)
            if c:
                clean[tuple(exps)] = c
        self.terms = clean

    @staticmethod
    def const(n, c):
        return MPoly(n, {(0,) * n: coerce_scalar(c)})

    @staticmethod
    def var(n, i, exp=1):
        e = [0] * n
        e[i] = exp
        return MPoly(n, {tuple(e): coerce_scalar(1)})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, MPoly) and self.n == other.n \
            and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, QZERO) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MPoly(self.n, out)

    def __neg__(self):
        return MPoly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, QZERO) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return MPoly(self.n, out)

    __rmul__ = __mul__

    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.n != self.n:
                raise ValueError("variable count mismatch")
            return other
        if isinstance(other, (int, QScalar)):
            return MPoly.const(self.n, other)
        return NotImplemented

    def scale(self, c):
        c = coerce_scalar(c)
        return MPoly(self.n, {e: v * c for e, v in self.terms.items()})

    def embed(self, n_new, var_map):
        """Rename variable i to var_map[i] inside a larger variable set."""
        out = {}
        for exps, c in self.terms.items():
            e = [0] * n_new
            for i, p in enumerate(exps):
                e[var_map[i]] += p
            key = tuple(e)
            s = out.get(key, QZERO) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return MPoly(n_new, out)

    def subs_one(self, i):
        """Set variable i to 1, dropping it from the exponent tuple."""
        out = {}
        for exps, c in self.terms.items():
            key = exps[:i] + exps[i + 1:]
            s = out.get(key, QZERO) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return MPoly(self.n - 1, out)

    def coeff_list(self):
        """Dense coefficient list for a univariate polynomial."""
        if self.n != 1:
            raise ValueError("coeff_list needs a univariate polynomial")
        if not self.terms:
            return [QZERO]
        top = max(e[0] for e in self.terms)
        return [self.terms.get((d,), QZERO) for d in range(top + 1)]

    def evaluate(self, point):
        acc = QZERO
        for exps, c in self.terms.items():
            v = c
            for x, e in zip(point, exps):
                for _ in range(e):
                    v = v * x
            acc = acc + v
        return acc

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for exps in sorted(self.terms):
            mono = "*".join(f"x{i}^{e}" for i, e in enumerate(exps) if e)
            c = self.terms[exps]
            bits.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(bits)
