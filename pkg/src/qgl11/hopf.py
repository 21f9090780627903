"""Coproduct, counit, z-graded coproducts, Gauss-decomposition currents and
the twisted (loop-weight diagonal) coproduct.

The coproduct acts on generators by

    Delta(E+-) = 1 x E+- + E+- x phi+-        (current level)
    Delta(F+-) = phi+- x F+- + F+- x 1
    Delta(C_s) = C_s x 1 + 1 x C_s,  k_i group-like
    Delta(h_s) = 1 x h_s + h_s x 1 + (coefficient) sum E x F cross terms

and every mode of these currents is a finite sum, so Delta lands in finite
TensorElements.  coproduct_z grades a tensor leg by z^(z-degree); the twisted
coproduct conjugates it by the z-inserted raising half of the R-matrix.
"""

from __future__ import annotations

from functools import lru_cache

from .scalars import QMQI, QONE, QZERO, qbracket, qpow
from .series import LaurentSeries, series_exp
from .superalg import (Element, Monomial, TensorElement, gen_k1, gen_k2,
                       phi_mode, tensor_multiply)


def _t(a, b, c=QONE):
    return TensorElement.of(a, b, c)


def _E(n):
    return Element({Monomial(e=(n,)): QONE})


def _F(n):
    return Element({Monomial(f=(n,)): QONE})


def _h(s):
    return Element({Monomial(h=((s, 1),)): QONE})


def _C(s):
    return Element({Monomial(c=((s, 1),)): QONE})


_ONE = Element.one()


@lru_cache(maxsize=None)
def _delta_letter(kind, idx):
    if kind == "E":
        n = idx
        out = _t(_ONE, _E(n))
        if n >= 0:
            for i in range(0, n + 1):
                out = out + _t(_E(i), phi_mode("+", n - i))
        else:
            for i in range(n, 0):
                out = out + _t(_E(i), phi_mode("-", i - n))
        return out
    if kind == "F":
        n = idx
        out = _t(_F(n), _ONE)
        if n >= 1:
            for i in range(0, n):
                out = out + _t(phi_mode("+", i), _F(n - i))
        else:
            for i in range(n, 1):
                out = out + _t(phi_mode("-", -i), _F(n - i))
        return out
    if kind == "h":
        s = idx
        out = _t(_ONE, _h(s)) + _t(_h(s), _ONE)
        if s > 0:
            coef = qpow(s) * qbracket(s) / (s * QMQI)
            for i in range(0, s):
                out = out + _t(_E(i), _F(s - i), coef)
        else:
            t = -s
            coef = qpow(-t) * qbracket(t) / (t * (-QMQI))
            for i in range(0, t):
                out = out + _t(_E(-t + i), _F(-i), coef)
        return out
    if kind == "C":
        s = idx
        return _t(_ONE, _C(s)) + _t(_C(s), _ONE)
    if kind == "k1":
        k = gen_k1(idx)
        return _t(k, k)
    if kind == "k2":
        k = gen_k2(idx)
        return _t(k, k)
    raise ValueError(f"unknown letter kind {kind!r}")


@lru_cache(maxsize=1 << 14)
def _coproduct_mono(m):
    out = TensorElement.one()
    for kind, arg in m.letters():
        if kind == "C":
            s, mult = arg
            step = _delta_letter("C", s)
            for _ in range(mult):
                out = tensor_multiply(out, step)
        else:
            out = tensor_multiply(out, _delta_letter(kind, arg))
    return out


def coproduct(x):
    """Delta of an Element (or a single Monomial), as a TensorElement."""
    if isinstance(x, Monomial):
        return _coproduct_mono(x)
    acc = TensorElement.zero()
    for m, c in x.terms.items():
        acc = acc + _coproduct_mono(m).scale(c)
    return acc


def counit(x):
    """epsilon: kills E, F, h, C; value 1 on every k-word."""
    if isinstance(x, Monomial):
        return QONE if x.is_group_like() else QZERO
    acc = QZERO
    for m, c in x.terms.items():
        if m.is_group_like():
            acc = acc + c
    return acc


def coproduct_z(x, flipped=False):
    """z-graded coproduct: scale each left tensor factor v by z^(zDeg v).

    flipped=True applies the Koszul flip tau(a x b) = (-1)^{|a||b|} b x a
    first (the opposite coproduct), then grades.  Returns an exact finite
    Laurent series of TensorElements.
    """
    dz = coproduct(x)
    if flipped:
        dz = dz.flip()
    by_degree = {}
    for (a, b), c in dz.terms.items():
        d = a.z_degree()
        by_degree.setdefault(d, {})[(a, b)] = c
    zero = TensorElement.zero()
    if not by_degree:
        return LaurentSeries.exact(0, [zero], zero)
    lo, hi = min(by_degree), max(by_degree)
    coeffs = [TensorElement(by_degree.get(d, {})) for d in range(lo, hi + 1)]
    return LaurentSeries.exact(lo, coeffs, zero)


# -- coassociativity helpers -------------------------------------------------------

def coproduct_leg(te, leg):
    """Apply Delta to one leg of a TensorElement; dict keyed by word triples."""
    acc = {}
    for (a, b), c in te.terms.items():
        inner = _coproduct_mono(a if leg == 0 else b)
        for (u, v), ci in inner.terms.items():
            key = (u, v, b) if leg == 0 else (a, u, v)
            cur = acc.get(key)
            cc = c * ci
            if cur is None:
                acc[key] = cc
            else:
                cur = cur + cc
                if cur:
                    acc[key] = cur
                else:
                    del acc[key]
    return acc


# -- Gauss currents ---------------------------------------------------------------

def _current_piece(name, order):
    zero = Element.zero()
    if name == "E+":
        return LaurentSeries(0, [_E(n) for n in range(order + 1)], zero, True, False)
    if name == "E-":
        return LaurentSeries(-order, [-_E(n) for n in range(-order, 0)], zero, False, True)
    if name == "F+":
        return LaurentSeries(0, [zero] + [-_F(n) for n in range(1, order + 1)], zero, True, False)
    if name == "F-":
        return LaurentSeries(-order, [_F(n) for n in range(-order, 1)], zero, False, True)
    if name == "K1+":
        expo = LaurentSeries(0, [zero] + [_h(s).scale(QMQI) for s in range(1, order + 1)],
                             zero, True, False)
        return series_exp(expo, order, _ONE).map(lambda e: gen_k1(1) * e, zero)
    if name == "K1-":
        expo = LaurentSeries(-order, [_h(-s).scale(-QMQI) for s in range(order, 0, -1)] + [zero],
                             zero, False, True)
        return series_exp(expo, order, _ONE).map(lambda e: gen_k1(-1) * e, zero)
    if name == "phi+":
        return LaurentSeries(0, [phi_mode("+", n) for n in range(order + 1)], zero, True, False)
    if name == "phi-":
        return LaurentSeries(-order, [phi_mode("-", -n) for n in range(-order, 1)],
                             zero, False, True)
    raise ValueError(name)


def gauss_current(name, order):
    """One entry of the Gauss-decomposed generating matrices, as an Element series.

    name is one of s11, s12, s21, s22, t11, t12, t21, t22.  The matrix
    factorization is taken in the superalgebra-valued sense, where the
    off-diagonal matrix units are odd; this puts a minus sign on the
    triple product inside the 22 entry.
    """
    if name not in {"s11", "s12", "s21", "s22", "t11", "t12", "t21", "t22"}:
        raise ValueError(f"unknown current {name!r}")
    side = "+" if name[0] == "s" else "-"
    K1 = _current_piece("K1" + side, order)
    if name in ("s11", "t11"):
        return K1
    E = _current_piece("E" + side, order)
    F = _current_piece("F" + side, order)
    if name in ("s12", "t12"):
        return K1 * E
    if name in ("s21", "t21"):
        return F * K1
    phi = _current_piece("phi" + side, order)
    K2 = K1 * phi
    return K2 - F * K1 * E


# -- twisted coproduct --------------------------------------------------------------

def _rplus_symbolic(order):
    """Raising half of the z-inserted R-matrix, and its factorwise inverse."""
    zero = TensorElement.zero()
    inv_coeff = (-QMQI).inverse()          # 1/(q^-1 - q)
    fwd = LaurentSeries.exact(0, [TensorElement.one()], zero)
    bwd = LaurentSeries.exact(0, [TensorElement.one()], zero)
    for n in range(0, order + 1):
        x = _t(_E(n), _F(-n), inv_coeff)
        factor = [zero] * (n + 1)
        factor[0] = TensorElement.one()
        factor[n] = factor[n] + x
        fwd = fwd * LaurentSeries.exact(0, factor, zero)
        factor_inv = [zero] * (n + 1)
        factor_inv[0] = TensorElement.one()
        factor_inv[n] = factor_inv[n] - x
        bwd = LaurentSeries.exact(0, factor_inv, zero) * bwd
    fwd = LaurentSeries(0, [fwd.coeff(d) for d in range(order + 1)], zero, True, False)
    bwd = LaurentSeries(0, [bwd.coeff(d) for d in range(order + 1)], zero, True, False)
    return fwd, bwd


def drinfeld_coproduct(x, order):
    """Conjugate the z-graded coproduct by the raising half of the R-matrix.

    Returns the window [-order, order] of R+(z) Delta_z(x) R+(z)^{-1}.
    """
    dz = coproduct_z(x)
    sup = dz.support()
    a = min(sup) if sup else 0
    m = order - min(0, a)
    fwd, bwd = _rplus_symbolic(m)
    prod = fwd * dz * bwd
    return prod.truncate(-order, min(order, prod.hi))


def drinfeld_coproduct_closed(kind, idx, order):
    """Independent closed form of the twisted coproduct on a generator letter.

    h/C letters become loop-graded primitives; E_n keeps only lowering-side
    dressing, F_n only raising-side dressing.
    """
    zero = TensorElement.zero()
    terms = {}

    def put(d, te):
        terms[d] = terms.get(d, TensorElement.zero()) + te

    if kind in ("h", "C"):
        s = idx
        gen = _h(s) if kind == "h" else _C(s)
        put(0, _t(_ONE, gen))
        put(s, _t(gen, _ONE))
        coeffs = [terms.get(d, zero) for d in range(-order, order + 1)]
        return LaurentSeries.exact(-order, coeffs, zero)
    if kind == "E":
        n = idx
        put(0, _t(_ONE, _E(n)))
        for k in range(0, order - n + 1):
            if n + k >= -order:
                put(n + k, _t(_E(n + k), phi_mode("-", k)))
    elif kind == "F":
        n = idx
        put(n, _t(_F(n), _ONE))
        for k in range(0, order + 1):
            put(k, _t(phi_mode("+", k), _F(n - k)))
    else:
        raise ValueError(kind)
    coeffs = [terms.get(d, zero) for d in range(-order, order + 1)]
    return LaurentSeries(-order, coeffs, zero, exact_below=True, exact_above=False)
