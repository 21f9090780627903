"""Two-dimensional evaluation modules, tensor chains and transfer operators.

Each representation carries weight data (u_i, m_i) per basis vector: the
group-like k_i acts there as u_i * q^{m_i}, with u_i a rational prefactor.
Only q stays symbolic; module parameters are specialized to rationals at
construction so that equality of matrix entries is decidable.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import QMQI, QONE, QZERO, coerce_scalar, qbracket, qpow
from .superalg import Element, Monomial, phi_mode
from .hopf import _coproduct_mono, gauss_current
from .matrices import Matrix, graded_kron
from .series import LaurentSeries, expand_rational, series_exp, series_invert


def _m2(a, b, c, d):
    return Matrix(((coerce_scalar(a), coerce_scalar(b)),
                   (coerce_scalar(c), coerce_scalar(d))))


class Representation:
    """Matrix model of the algebra with cached letter actions."""

    def __init__(self, name, dim, parities, weights, letter_fn, full,
                 current_targets=None):
        self.name = name
        self.dim = dim
        self.parities = tuple(parities)
        self.weights = tuple(tuple((coerce_scalar(u), m) for (u, m) in w)
                             for w in weights)
        self._letter_fn = letter_fn
        self.full = full
        self.current_targets = current_targets or {}
        self._letter_cache = {}
        self._mono_cache = {}

    def __repr__(self):
        return f"<rep {self.name}, dim {self.dim}>"

    def identity(self):
        return Matrix.identity(self.dim, QONE, QZERO)

    def zero_matrix(self):
        return Matrix.zero(self.dim, self.dim, QZERO)

    def act(self, kind, arg):
        """Matrix of one generator letter; k1/k2 take the full exponent."""
        key = (kind, arg)
        got = self._letter_cache.get(key)
        if got is not None:
            return got
        if kind in ("k1", "k2"):
            i = 0 if kind == "k1" else 1
            rows = []
            for v in range(self.dim):
                u, m = self.weights[v][i]
                rows.append([(u ** arg) * qpow(m * arg) if w == v else QZERO
                             for w in range(self.dim)])
            out = Matrix(rows)
        else:
            if not self.full:
                low = 0 if kind == "E" else 1
                if arg < low:
                    raise ValueError(
                        f"{self.name} is a module over the raising half only;"
                        f" {kind}[{arg}] does not act")
            out = self._letter_fn(kind, arg)
        self._letter_cache[key] = out
        return out

    def mat(self, mono):
        got = self._mono_cache.get(mono)
        if got is not None:
            return got
        out = self.identity()
        for kind, arg in mono.letters():
            if kind == "C":
                s, mult = arg
                base = self.act("C", s)
                for _ in range(mult):
                    out = out * base
            else:
                out = out * self.act(kind, arg)
        self._mono_cache[mono] = out
        return out

    def mat_element(self, x):
        acc = None
        for m, c in x.terms.items():
            term = self.mat(m).map(lambda e, c=c: e * c)
            acc = term if acc is None else acc + term
        return self.zero_matrix() if acc is None else acc

    def series(self, s):
        """Apply the representation to a LaurentSeries of Elements."""
        return s.map(self.mat_element, self.zero_matrix())


def rep_rho():
    """The vector representation acting on all generator modes."""
    def letter(kind, arg):
        if kind == "E":
            return _m2(0, qpow(-2 * arg - 1) * QMQI, 0, 0)
        if kind == "F":
            return _m2(0, 0, qpow(-2 * arg + 1) * (-QMQI), 0)
        if kind == "C":
            s = arg
            v = -(qpow(-s) * qbracket(s) / s)
            return _m2(v, 0, 0, v)
        if kind == "h":
            s = arg
            den = (s * QMQI).inverse()
            return _m2(-qpow(-2 * s) * den, 0, 0, -den)
        raise ValueError(kind)
    targets = {
        "s11": ((((qpow(1), -qpow(-1)), (QONE,)), ((QZERO,), (QONE,))),
                (((QZERO,), (QONE,)), ((QONE, -QONE), (QONE,)))),
        "s12": ((((QZERO,), (QONE,)), ((QMQI,), (QONE,))),
                (((QZERO,), (QONE,)), ((QZERO,), (QONE,)))),
        "s21": ((((QZERO,), (QONE,)), ((QZERO,), (QONE,))),
                (((QZERO, QMQI), (QONE,)), ((QZERO,), (QONE,)))),
        "s22": ((((QONE, -QONE), (QONE,)), ((QZERO,), (QONE,))),
                (((QZERO,), (QONE,)), ((qpow(-1), -qpow(1)), (QONE,)))),
    }
    weights = (((1, 1), (1, 0)), ((1, 0), (1, -1)))
    return Representation("rho", 2, (0, 1), weights, letter, True, targets)


def rep_pi_a(a):
    """Raising-half module with one-step E and F actions."""
    a = Fraction(a)
    if a == 0:
        raise ValueError("parameter a must be nonzero")
    def letter(kind, arg):
        if kind == "E":
            return _m2(0, -QMQI, 0, 0) if arg == 0 else _m2(0, 0, 0, 0)
        if kind == "F":
            return _m2(0, 0, a, 0) if arg == 1 else _m2(0, 0, 0, 0)
        if kind == "h":
            v = coerce_scalar(a ** arg) / (arg * QMQI)
            return _m2(v, 0, 0, v)
        if kind == "C":
            v = -(coerce_scalar(a ** arg) / (arg * QMQI))
            return _m2(v, 0, 0, v)
        raise ValueError(kind)
    den = ((QONE, coerce_scalar(-a)),)[0]
    one_den = (QONE,)
    targets = {
        "s11": ((((QONE,), den), ((QZERO,), one_den)),
                (((QZERO,), one_den), ((qpow(-1),), den))),
        "s12": ((((QZERO,), one_den), ((-QMQI,), den)),
                (((QZERO,), one_den), ((QZERO,), one_den))),
        "s21": ((((QZERO,), one_den), ((QZERO,), one_den)),
                (((QZERO, coerce_scalar(-a)), den), ((QZERO,), one_den))),
        "s22": ((((QONE,), one_den), ((QZERO,), one_den)),
                (((QZERO,), one_den), ((qpow(-1), coerce_scalar(-a) * qpow(1)), den))),
    }
    weights = (((1, 0), (1, 0)), ((1, -1), (1, -1)))
    return Representation(f"pi_a({a})", 2, (0, 1), weights, letter, False, targets)


def rep_pi_cd(c, d):
    """Evaluation module with parameters (c, d); irreducible when c^2 != 1."""
    c = Fraction(c)
    d = Fraction(d)
    if c in (0, 1, -1) or d == 0:
        raise ValueError("need c not in {0, 1, -1} and d nonzero")
    def letter(kind, arg):
        if kind == "E":
            return _m2(0, -QMQI * coerce_scalar((d * c * c - d) * d ** arg), 0, 0)
        if kind == "F":
            return _m2(0, 0, coerce_scalar(d ** arg / (d * c)), 0)
        if kind == "h":
            s = arg
            pre = coerce_scalar(Fraction(d ** s, s))
            a11 = pre * (coerce_scalar(c ** (2 * s)) - QONE) / QMQI
            a22 = pre * (coerce_scalar(c ** (2 * s)) - qpow(2 * s)) / QMQI
            return _m2(a11, 0, 0, a22)
        if kind == "C":
            s = arg
            v = -(coerce_scalar(Fraction(d ** s, s))
                  * (coerce_scalar(c ** (2 * s)) - QONE) / QMQI)
            return _m2(v, 0, 0, v)
        raise ValueError(kind)
    cs = coerce_scalar(c)
    den = (QONE, coerce_scalar(-d * c * c))
    one_den = (QONE,)
    targets = {
        "s11": ((((cs, cs * coerce_scalar(-d)), den), ((QZERO,), one_den)),
                (((QZERO,), one_den),
                 ((cs * qpow(-1), cs * coerce_scalar(-d) * qpow(1)), den))),
        "s12": ((((QZERO,), one_den),
                 ((cs * (-QMQI) * coerce_scalar(d * c * c - d),), den)),
                (((QZERO,), one_den), ((QZERO,), one_den))),
        "s21": ((((QZERO,), one_den), ((QZERO,), one_den)),
                (((QZERO, -QONE), den), ((QZERO,), one_den))),
        "s22": ((((QONE,), one_den), ((QZERO,), one_den)),
                (((QZERO,), one_den),
                 ((qpow(-1), coerce_scalar(-d * c * c) * qpow(1)), den))),
    }
    weights = (((c, 0), (1, 0)), ((c, -1), (1, -1)))
    return Representation(f"pi_cd({c},{d})", 2, (0, 1), weights, letter, True, targets)


def tensor_rep(r1, r2):
    """Tensor product module via the coproduct, with Koszul signs."""
    dim = r1.dim * r2.dim
    parities = tuple((p1 + p2) & 1 for p1 in r1.parities for p2 in r2.parities)
    weights = tuple(((w1[0][0] * w2[0][0], w1[0][1] + w2[0][1]),
                     (w1[1][0] * w2[1][0], w1[1][1] + w2[1][1]))
                    for w1 in r1.weights for w2 in r2.weights)
    spaces = (r1.parities, r2.parities)
    def letter(kind, arg):
        if kind == "E":
            mono = Monomial(e=(arg,))
        elif kind == "F":
            mono = Monomial(f=(arg,))
        elif kind == "h":
            mono = Monomial(h=((arg, 1),))
        else:
            mono = Monomial(c=((arg, 1),))
        acc = None
        for (m1, m2), co in _coproduct_mono(mono).terms.items():
            term = graded_kron((r1.mat(m1), r2.mat(m2)),
                               (m1.parity(), m2.parity()), spaces)
            term = term.map(lambda e, co=co: e * co)
            acc = term if acc is None else acc + term
        return acc
    name = f"({r1.name}) (x) ({r2.name})"
    return Representation(name, dim, parities, weights, letter,
                          r1.full and r2.full)


# -- relation checking --------------------------------------------------------

def _phi_element(sign, k):
    if sign == "+":
        return phi_mode("+", k) if k >= 0 else Element.zero()
    return phi_mode("-", -k) if k <= 0 else Element.zero()


def rep_check(rep, bound):
    """Verify the defining relations as matrix identities up to index bound.

    Returns a list of (name, ok, witness) triples; currents displayed in
    closed form are compared against gauss_current when available.
    """
    checks = []
    zero = rep.zero_matrix()
    if rep.full:
        e_idx = [n for n in range(-bound, bound + 1)]
        f_idx = e_idx
        s_idx = [s for s in range(-bound, bound + 1) if s]
    else:
        e_idx = list(range(0, bound + 1))
        f_idx = list(range(1, bound + 1))
        s_idx = list(range(1, bound + 1))

    def add(name, ok, witness=""):
        checks.append((name, bool(ok), witness if not ok else ""))

    E = {n: rep.act("E", n) for n in e_idx}
    F = {n: rep.act("F", n) for n in f_idx}
    H = {s: rep.act("h", s) for s in s_idx}
    C = {s: rep.act("C", s) for s in s_idx}
    K1 = rep.act("k1", 1)
    K2 = rep.act("k2", 1)

    ok = all(H[s] * H[t] - H[t] * H[s] == zero for s in s_idx for t in s_idx)
    add("cartan-commute", ok)
    samples = [m for m in (list(E.values())[:2] + list(F.values())[:2]
                           + [K1, K2, H[s_idx[0]]])]
    ok = all(C[s] * X - X * C[s] == zero for s in s_idx for X in samples)
    add("central-modes", ok)

    bad = ""
    for n in e_idx:
        for K in (K1, K2):
            if K * E[n] - (E[n] * K).map(lambda x: x * qpow(1)) != zero:
                bad = f"k E[{n}]"
    for n in f_idx:
        for K in (K1, K2):
            if K * F[n] - (F[n] * K).map(lambda x: x * qpow(-1)) != zero:
                bad = f"k F[{n}]"
    add("cartan-conjugation", not bad, bad)

    bad = ""
    for s in s_idx:
        co = qpow(s) * qbracket(s) / s
        for n in e_idx:
            if (not rep.full) and n + s < 0:
                continue
            target = rep.act("E", n + s).map(lambda x: x * co)
            if H[s] * E[n] - E[n] * H[s] != target:
                bad = f"[h[{s}], E[{n}]]"
        for n in f_idx:
            if (not rep.full) and n + s < 1:
                continue
            target = rep.act("F", n + s).map(lambda x: x * (-co))
            if H[s] * F[n] - F[n] * H[s] != target:
                bad = f"[h[{s}], F[{n}]]"
    add("mode-shift", not bad, bad)

    bad = ""
    for m in e_idx:
        for n in f_idx:
            rhs = (_phi_element("+", m + n) - _phi_element("-", m + n)).scale(QMQI)
            if E[m] * F[n] + F[n] * E[m] != rep.mat_element(rhs):
                bad = f"E[{m}]F[{n}] + F[{n}]E[{m}]"
    add("odd-cross-relation", not bad, bad)

    bad = ""
    for m in e_idx:
        for n in e_idx:
            if E[m] * E[n] + E[n] * E[m] != zero:
                bad = f"E[{m}]E[{n}]"
    for m in f_idx:
        for n in f_idx:
            if F[m] * F[n] + F[n] * F[m] != zero:
                bad = f"F[{m}]F[{n}]"
    add("odd-anticommute", not bad, bad)

    for name, ok, witness in current_check(rep, max(2, bound)):
        add(name, ok, witness)
    return checks


def current_check(rep, order):
    """Compare gauss_current under rep with its closed rational matrix."""
    out = []
    for name, target in sorted(rep.current_targets.items()):
        got = rep.series(gauss_current(name, order))
        ok, witness = True, ""
        for i in range(rep.dim):
            for j in range(rep.dim):
                num, den = target[i][j]
                want = expand_rational(num, den, order)
                for dg in range(0, order + 1):
                    if got.coeff(dg).rows[i][j] != want.coeff(dg):
                        ok, witness = False, f"{name}[{i}][{j}] at z^{dg}"
                        break
                if not ok:
                    break
            if not ok:
                break
        out.append((f"current-{name}", ok, witness))
    return out


# -- transfer operators ----------------------------------------------------------

def f_series(c, d, order):
    """Scalar normalization series attached to an evaluation module."""
    c = Fraction(c)
    d = Fraction(d)
    if c == 0 or d == 0:
        raise ValueError("parameters must be nonzero")
    coeffs = [QZERO]
    for s in range(1, order + 1):
        v = (qpow(s) + qpow(-s)) * coerce_scalar(Fraction(c) ** (-2 * s) - 1) \
            * coerce_scalar(Fraction(d) ** (-s)) / (s * QMQI * qbracket(s))
        coeffs.append(v)
    expo = LaurentSeries(0, coeffs, QZERO, True, False)
    return series_exp(expo, order, QONE)


def rcd_matrix(c, d):
    """Closed-form two-site matrix, entries as (numerator, denominator) pairs.

    Entries are the super-action matrix on v1 x v1, v1 x v2, v2 x v1, v2 x v2;
    the Koszul rule puts a sign into the odd-odd off-diagonal entries.
    Coefficient lists are degree-indexed in z.
    """
    c = Fraction(c)
    d = Fraction(d)
    if c in (0, 1, -1) or d == 0:
        raise ValueError("need c not in {0, 1, -1} and d nonzero")
    e11 = _m2(1, 0, 0, 0)
    e12 = _m2(0, 1, 0, 0)
    e21 = _m2(0, 0, 1, 0)
    e22 = _m2(0, 0, 0, 1)
    dinv = Fraction(1, 1) / d
    terms = [
        (e11, e11, 0, 0, (QONE, coerce_scalar(-dinv))),
        (e11, e22, 0, 0, (QONE,)),
        (e22, e11, 0, 0, (coerce_scalar(c), coerce_scalar(-dinv / c))),
        (e22, e22, 0, 0, (coerce_scalar(c),)),
        (e12, e21, 1, 1, (coerce_scalar(dinv / c),)),
        (e21, e12, 1, 1, (QZERO, coerce_scalar(1 - c * c))),
    ]
    spaces = ((0, 1), (0, 1))
    num = [[[QZERO, QZERO] for _ in range(4)] for _ in range(4)]
    for a, b, pa, pb, poly in terms:
        K = graded_kron((a, b), (pa, pb), spaces)
        for i in range(4):
            for j in range(4):
                if K.rows[i][j]:
                    for dg, co in enumerate(poly):
                        num[i][j][dg] = num[i][j][dg] + co * K.rows[i][j]
    den = (QONE, coerce_scalar(-dinv))
    return Matrix(tuple(tuple((tuple(num[i][j]), den) for j in range(4))
                        for i in range(4)))


def rational_matrix_series(mat, order):
    """Expand a matrix of (num, den) pairs into a MatrixSeries."""
    n = mat.nrows
    per_entry = [[expand_rational(mat.rows[i][j][0], mat.rows[i][j][1], order)
                  for j in range(n)] for i in range(n)]
    coeffs = [Matrix(tuple(tuple(per_entry[i][j].coeff(dg) for j in range(n))
                           for i in range(n))) for dg in range(order + 1)]
    return LaurentSeries(0, coeffs, Matrix.zero(n, n, QZERO), True, False)


def t_series(order):
    """Transfer generating series, an exponential in lowering Cartan modes."""
    zero = Element.zero()
    coeffs = [zero]
    for s in range(1, order + 1):
        x = (Element.from_mono(Monomial(c=((-s, 1),)), qpow(-s))
             - Element.from_mono(Monomial(h=((-s, 1),)), qpow(s)))
        coeffs.append(x.scale(qbracket(s).inverse()))
    expo = LaurentSeries(0, coeffs, zero, True, False)
    return series_exp(expo, order, Element.one())


def _submatrix(m, rows, cols):
    return Matrix(tuple(tuple(m.rows[i][j] for j in cols) for i in rows))


def scale_z(series, a):
    """Substitute z -> a z."""
    a = Fraction(a)
    coeffs = [series.coeffs[i].map(lambda e, k=series.lo + i:
                                   e * coerce_scalar(a ** k))
              if hasattr(series.coeffs[i], "map")
              else series.coeffs[i] * coerce_scalar(a ** (series.lo + i))
              for i in range(len(series.coeffs))]
    return LaurentSeries(series.lo, coeffs, series.zero,
                         series.exact_below, series.exact_above)


def transfer_ops(a, chain, order, crosscheck=True):
    """Blocks of the joint action on an auxiliary space tensor a chain.

    Builds the ordered product of pairwise R-matrix actions, auxiliary leg
    first, and splits the result into the four auxiliary blocks.  Returns
    (A11, A12, A21, A22, notes) where notes lists verified side conditions.
    """
    from .rmatrix import evaluate_R, r_on_legs
    if not chain:
        raise ValueError("chain must be nonempty")
    aux = rep_pi_a(a)
    sites = [rep_pi_cd(c, d) for (c, d) in chain]
    n = len(sites)
    all_reps = [aux] + sites
    big = 2 ** (n + 1)
    half = big // 2
    notes = []

    prod = None
    for j in range(n, 0, -1):
        factor = r_on_legs(all_reps, 0, j, order, strict=True)
        prod = factor if prod is None else (prod * factor).truncate(0, order)

    if crosscheck and n == 2:
        joint = tensor_rep(sites[0], sites[1])
        direct = evaluate_R(aux, joint, order, strict=True)
        ok = all(direct.coeff(dg) == prod.coeff(dg) for dg in range(order + 1))
        notes.append(("pair-product matches coproduct route", ok, ""))

    def block(rows, cols):
        return prod.map(lambda m: _submatrix(m, rows, cols),
                        Matrix.zero(half, half, QZERO))

    top = range(0, half)
    bot = range(half, big)
    A11, A12, A21, A22 = (block(top, top), block(top, bot),
                          block(bot, top), block(bot, bot))

    ok = True
    for A in (A11, A22):
        for dg in range(order + 1):
            m = A.coeff(dg)
            for w in range(half):
                for w2 in range(half):
                    sm = n - bin(w).count("1")
                    sm2 = n - bin(w2).count("1")
                    if sm != sm2 and m.rows[w][w2] != QZERO:
                        ok = False
    notes.append(("diagonal blocks preserve the v1-count strata", ok, ""))

    if n == 1:
        tz = scale_z(sites[0].series(t_series(order)), a)
        ok = all(tz.coeff(dg) == A11.coeff(dg) for dg in range(order + 1))
        notes.append(("single-site A11 equals the transfer series exactly"
                      " (relating scalar 1)", ok, ""))
    return A11, A12, A21, A22, notes


def baxter_check(a, chain, order):
    """Degree bound for the normalized diagonal blocks on each stratum.

    After dividing by the site normalizations and multiplying by the
    product of (1 - z/d_j), the block restricted to the stratum with m
    raising vectors must be polynomial of degree at most m.
    """
    A11, _, _, A22, notes = transfer_ops(a, chain, order,
                                         crosscheck=(len(chain) == 2))
    n = len(chain)
    half = 2 ** n
    poly = [QONE]
    for (_, d) in chain:
        poly = _zmul(poly, [QONE, coerce_scalar(Fraction(-1, 1) / Fraction(d))])
    fprod = None
    for (c, d) in chain:
        fs = scale_z(f_series(c, d, order), a)
        fprod = fs if fprod is None else fprod * fs
    finv = series_invert(fprod, order, QONE)
    # the computed blocks carry the substituted argument, so the
    # normalization is substituted the same way
    pz = [coerce_scalar(Fraction(a) ** i) * co for i, co in enumerate(poly)]
    norm = LaurentSeries.exact(0, pz, QZERO) * finv

    checks = list(notes)
    strata = [[w for w in range(half) if n - bin(w).count("1") == m]
              for m in range(n + 1)]
    for label, A in (("A11", A11), ("A22", A22)):
        scaled_coeffs = []
        for dg in range(order + 1):
            acc = None
            for k in range(0, dg + 1):
                co = norm.coeff(k)
                mt = A.coeff(dg - k).map(lambda e, co=co: e * co)
                acc = mt if acc is None else acc + mt
            scaled_coeffs.append(acc)
        for m, idxs in enumerate(strata):
            ok, witness = True, ""
            for dg in range(m + 1, order + 1):
                sub = _submatrix(scaled_coeffs[dg], idxs, idxs)
                if any(e != QZERO for row in sub.rows for e in row):
                    ok, witness = False, f"{label} stratum {m} degree {dg}"
                    break
            checks.append((f"baxter {label} stratum {m} degree <= {m}", ok, witness))
    return checks


def _zmul(p1, p2):
    out = [QZERO] * (len(p1) + len(p2) - 1)
    for i, x in enumerate(p1):
        for j, y in enumerate(p2):
            out[i + j] = out[i + j] + x * y
    return out
