"""The quantum affine superalgebra of gl(1,1) in its loop-generator presentation.

Generators: odd E_n, F_n (n in Z), even h_s, C_s (s in Z, s != 0, C central),
and the invertible even group-likes k1, k2.  A Monomial is a word in normal
order

    F_{n_1} ... F_{n_r} k1^a k2^b  h_{s_1}^{e_1} ...  C_{t_1}^{f_1} ...  E_{m_1} ... E_{m_l}

with F and E indices strictly increasing.  Elements are finite linear
combinations with QScalar coefficients; multiplication rewrites any product
back into this basis using

    E_m F_n + F_n E_m = (q - q^-1)(phi+_{m+n} - phi-_{m+n})
    [h_s, E_n] = q^s ([s]/s) E_{n+s},   [h_s, F_n] = -q^s ([s]/s) F_{n+s}
    k_i E_n = q E_n k_i,                k_i F_n = q^-1 F_n k_i

where phi+-(z) = (k1^-1 k2)^{+-1} exp(+-(q - q^-1) sum_{s>0} C_{+-s} z^{+-s}).
E's (and F's) pairwise anticommute and square to zero.
"""

from __future__ import annotations

from bisect import bisect_left
from fractions import Fraction
from functools import lru_cache

from .scalars import QMQI, QONE, QZERO, QScalar, coerce_scalar, qbracket, qpow


class Monomial:
    """Normal-ordered basis word.  Immutable and hashable.

    f, e: strictly increasing index tuples of the odd letters.
    h, c: sorted tuples of (index, exponent) with nonzero index, exponent >= 1.
    k1, k2: integer exponents of the group-likes.
    """

    __slots__ = ("f", "k1", "k2", "h", "c", "e", "_hash", "_zdeg")

    def __init__(self, f=(), k1=0, k2=0, h=(), c=(), e=()):
        self.f = f
        self.k1 = k1
        self.k2 = k2
        self.h = h
        self.c = c
        self.e = e
        self._hash = None
        self._zdeg = None

    def __eq__(self, other):
        return (self.f == other.f and self.k1 == other.k1 and self.k2 == other.k2
                and self.h == other.h and self.c == other.c and self.e == other.e)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.f, self.k1, self.k2, self.h, self.c, self.e))
        return self._hash

    # -- gradings ------------------------------------------------------------

    def z_degree(self):
        if self._zdeg is None:
            d = sum(self.f) + sum(self.e)
            d += sum(s * m for s, m in self.h)
            d += sum(s * m for s, m in self.c)
            self._zdeg = d
        return self._zdeg

    def q_degree(self):
        """Coefficient of the odd root alpha (even letters contribute 0)."""
        return len(self.e) - len(self.f)

    def parity(self):
        return (len(self.e) + len(self.f)) & 1

    def is_one(self):
        return not (self.f or self.k1 or self.k2 or self.h or self.c or self.e)

    def is_cartan(self):
        """Only k/h/C letters (the two-sided coideal of even zero-weight words)."""
        return not (self.f or self.e)

    def is_group_like(self):
        return not (self.f or self.h or self.c or self.e)

    def letters(self):
        """Yield the word letter by letter in normal order."""
        for n in self.f:
            yield ("F", n)
        if self.k1:
            yield ("k1", self.k1)
        if self.k2:
            yield ("k2", self.k2)
        for s, m in self.h:
            for _ in range(m):
                yield ("h", s)
        for s, m in self.c:
            yield ("C", (s, m))
        for n in self.e:
            yield ("E", n)

    def letter_count(self):
        n = len(self.f) + len(self.e) + abs(self.k1) + abs(self.k2)
        n += sum(m for _, m in self.h) + sum(m for _, m in self.c)
        return n

    def sort_key(self):
        return (self.z_degree(), self.q_degree(), len(self.f) + len(self.e),
                self.f, self.e, self.h, self.c, self.k1, self.k2)

    def __repr__(self):
        from .dsl import format_monomial
        return format_monomial(self)


ONE_M = Monomial()


def grading_data(m):
    """(zDeg, qDeg, parity) of a basis word."""
    return (m.z_degree(), m.q_degree(), m.parity())


# ---------------------------------------------------------------------------
# exponent-map helpers for the commuting h/C blocks

def _bump(pairs, s, by=1):
    d = dict(pairs)
    d[s] = d.get(s, 0) + by
    if d[s] == 0:
        del d[s]
    return tuple(sorted(d.items()))


def _drop_one(pairs, s):
    return _bump(pairs, s, -1)


def _insert_odd(indices, n):
    """Insert n into a strictly increasing tuple; (position, sign) or None on repeat."""
    pos = bisect_left(indices, n)
    if pos < len(indices) and indices[pos] == n:
        return None
    sign = -1 if (len(indices) - pos) & 1 else 1
    return indices[:pos] + (n,) + indices[pos:], sign


# ---------------------------------------------------------------------------
# the rewrite engine: multiply a normal word by a single letter on the right

def _add_term(acc, mono, coeff):
    cur = acc.get(mono)
    if cur is None:
        acc[mono] = coeff
    else:
        cur = cur + coeff
        if cur:
            acc[mono] = cur
        else:
            del acc[mono]


@lru_cache(maxsize=1 << 18)
def _mono_letter(m, kind, arg):
    """m * letter as a dict of normal words -> QScalar."""
    if kind == "C":
        return {Monomial(m.f, m.k1, m.k2, m.h, _bump(m.c, arg), m.e): QONE}

    if kind == "k1" or kind == "k2":
        coeff = qpow(-arg * len(m.e))
        if kind == "k1":
            mono = Monomial(m.f, m.k1 + arg, m.k2, m.h, m.c, m.e)
        else:
            mono = Monomial(m.f, m.k1, m.k2 + arg, m.h, m.c, m.e)
        return {mono: coeff}

    if kind == "E":
        ins = _insert_odd(m.e, arg)
        if ins is None:
            return {}
        e2, sign = ins
        return {Monomial(m.f, m.k1, m.k2, m.h, m.c, e2): QONE if sign > 0 else -QONE}

    if kind == "h":
        if not m.e:
            return {Monomial(m.f, m.k1, m.k2, _bump(m.h, arg), m.c, m.e): QONE}
        # peel the last E:  (m' E_t) h_s = (m' h_s) E_t - q^s([s]/s) m' E_{t+s}
        t = m.e[-1]
        mp = Monomial(m.f, m.k1, m.k2, m.h, m.c, m.e[:-1])
        acc = {}
        for mono, c in _mono_letter(mp, "h", arg).items():
            for mono2, c2 in _mono_letter(mono, "E", t).items():
                _add_term(acc, mono2, c * c2)
        corr = qpow(arg) * qbracket(arg) / arg
        for mono, c in _mono_letter(mp, "E", t + arg).items():
            _add_term(acc, mono, -corr * c)
        return acc

    assert kind == "F"
    if m.e:
        # (m' E_t) F_a = -(m' F_a) E_t + (q - q^-1) m' (phi+_{t+a} - phi-_{t+a})
        t = m.e[-1]
        mp = Monomial(m.f, m.k1, m.k2, m.h, m.c, m.e[:-1])
        acc = {}
        for mono, c in _mono_letter(mp, "F", arg).items():
            for mono2, c2 in _mono_letter(mono, "E", t).items():
                _add_term(acc, mono2, -(c * c2))
        for pm, pc in _phi_difference(t + arg).items():
            for mono, c in _mono_mul(mp, pm).items():
                _add_term(acc, mono, QMQI * pc * c)
        return acc
    if m.h:
        # (m' h_s) F_a = (m' F_a) h_s - q^s([s]/s) m' F_{a+s}
        s = m.h[-1][0]
        mp = Monomial(m.f, m.k1, m.k2, _drop_one(m.h, s), m.c, m.e)
        acc = {}
        for mono, c in _mono_letter(mp, "F", arg).items():
            for mono2, c2 in _mono_letter(mono, "h", s).items():
                _add_term(acc, mono2, c * c2)
        corr = qpow(s) * qbracket(s) / s
        for mono, c in _mono_letter(mp, "F", arg + s).items():
            _add_term(acc, mono, -corr * c)
        return acc
    # only k's and central C's remain between the F-block and the new letter
    ins = _insert_odd(m.f, arg)
    if ins is None:
        return {}
    f2, sign = ins
    coeff = qpow(-(m.k1 + m.k2))
    if sign < 0:
        coeff = -coeff
    return {Monomial(f2, m.k1, m.k2, m.h, m.c, m.e): coeff}


def _terms_letter(terms, kind, arg):
    acc = {}
    for m, c in terms.items():
        for mono, c2 in _mono_letter(m, kind, arg).items():
            _add_term(acc, mono, c * c2)
    return acc


@lru_cache(maxsize=1 << 16)
def _mono_mul(m1, m2):
    """Product of two normal words as a dict of normal words -> QScalar."""
    if m1.is_one():
        return {m2: QONE}
    if m2.is_one():
        return {m1: QONE}
    if not m1.e and not m2.f:
        # concatenation stays normal: only k's crossing the (empty) E-block
        return {Monomial(m1.f, m1.k1 + m2.k1, m1.k2 + m2.k2,
                         _merge(m1.h, m2.h), _merge(m1.c, m2.c), m2.e): QONE}
    terms = {m1: QONE}
    for kind, arg in m2.letters():
        if kind == "C":
            s, mult = arg
            acc = {}
            for m, c in terms.items():
                _add_term(acc, Monomial(m.f, m.k1, m.k2, m.h, _bump(m.c, s, mult), m.e), c)
            terms = acc
        else:
            terms = _terms_letter(terms, kind, arg)
    return terms


def _merge(p1, p2):
    if not p1:
        return p2
    if not p2:
        return p1
    d = dict(p1)
    for s, m in p2:
        d[s] = d.get(s, 0) + m
        if d[s] == 0:
            del d[s]
    return tuple(sorted(d.items()))


# ---------------------------------------------------------------------------
# phi modes (Cartan-valued coefficients of the phi+-(z) currents)

@lru_cache(maxsize=None)
def _exp_c_modes(n, sign):
    """Mode n >= 0 of exp(sign (q - q^-1) sum_{s>0} C_{sign*s} z^{sign*s}) as h/C-free dict."""
    if n == 0:
        return {ONE_M: QONE}
    acc = {}
    for s in range(1, n + 1):
        xs = QMQI if sign > 0 else -QMQI
        coeff_letter = xs * Fraction(s, 1)
        for m, c in _exp_c_modes(n - s, sign).items():
            mono = Monomial(m.f, m.k1, m.k2, m.h, _bump(m.c, sign * s), m.e)
            _add_term(acc, mono, c * coeff_letter)
    inv_n = QScalar.from_fraction(Fraction(1, n))
    return {m: c * inv_n for m, c in acc.items()}


@lru_cache(maxsize=None)
def phi_mode(sign, n):
    """phi+_n for sign '+' (n >= 0), phi-_{-n} for sign '-' (n >= 0), as an Element."""
    if n < 0:
        raise ValueError("phi modes live at nonnegative distance from 0")
    if sign == "+":
        base = Monomial(k1=-1, k2=1)
        s = 1
    elif sign == "-":
        base = Monomial(k1=1, k2=-1)
        s = -1
    else:
        raise ValueError("sign must be '+' or '-'")
    acc = {}
    for m, c in _exp_c_modes(n, s).items():
        _add_term(acc, Monomial(m.f, base.k1, base.k2, m.h, m.c, m.e), c)
    return Element(acc)


@lru_cache(maxsize=None)
def _phi_difference(n):
    """(phi+_n - phi-_n) as a plain dict; zero modes cancel at distance 0 only partly."""
    acc = {}
    if n >= 0:
        for m, c in phi_mode("+", n).terms.items():
            _add_term(acc, m, c)
    if n <= 0:
        for m, c in phi_mode("-", -n).terms.items():
            _add_term(acc, m, -c)
    return acc


# ---------------------------------------------------------------------------

class Element:
    """Finite QScalar-linear combination of normal words."""

    __slots__ = ("terms", "_grading")

    def __init__(self, terms=None):
        self.terms = terms if terms is not None else {}
        self._grading = False

    def homogeneous_grading(self):
        """(zDeg, qDeg) shared by every word, or None if mixed or zero."""
        if self._grading is False:
            grading = None
            for m in self.terms:
                g = (m.z_degree(), m.q_degree())
                if grading is None:
                    grading = g
                elif g != grading:
                    grading = None
                    break
            self._grading = grading
        return self._grading

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def one():
        return Element({ONE_M: QONE})

    @staticmethod
    def zero():
        return Element({})

    @staticmethod
    def from_scalar(c):
        c = coerce_scalar(c)
        return Element({ONE_M: c}) if c else Element({})

    @staticmethod
    def from_mono(m, c=QONE):
        return Element({m: c}) if c else Element({})

    # -- linear structure -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction, QScalar)):
            other = Element.from_scalar(other)
        if not isinstance(other, Element):
            return NotImplemented
        acc = dict(self.terms)
        for m, c in other.terms.items():
            _add_term(acc, m, c)
        return Element(acc)

    __radd__ = __add__

    def __neg__(self):
        return Element({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, QScalar)):
            other = Element.from_scalar(other)
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = coerce_scalar(c)
        if not c:
            return Element({})
        return Element({m: v * c for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QScalar)):
            return self.scale(other)
        if not isinstance(other, Element):
            return NotImplemented
        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, QScalar)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n):
        if n < 0:
            inv = self.try_inverse()
            if inv is None:
                raise ValueError("negative power of a non-invertible element")
            return inv ** (-n)
        acc = Element.one()
        for _ in range(n):
            acc = acc * self
        return acc

    def try_inverse(self):
        """Inverse when the element is a scalar multiple of a group-like word."""
        if len(self.terms) != 1:
            return None
        (m, c), = self.terms.items()
        if not m.is_group_like():
            return None
        return Element({Monomial(k1=-m.k1, k2=-m.k2): c.inverse()})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, QScalar)):
            other = Element.from_scalar(other)
        if not isinstance(other, Element):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def parity(self):
        """Parity when homogeneous; None for mixed or zero elements."""
        ps = {m.parity() for m in self.terms}
        return ps.pop() if len(ps) == 1 else None

    def z_degrees(self):
        return sorted({m.z_degree() for m in self.terms})

    def __repr__(self):
        from .dsl import format_element
        return format_element(self)


def multiply(x, y):
    """Normal-ordered product of two Elements."""
    acc = {}
    for m2, c2 in y.terms.items():
        for m1, c1 in x.terms.items():
            c = c1 * c2
            for mono, cm in _mono_mul(m1, m2).items():
                _add_term(acc, mono, c * cm)
    return Element(acc)


# generator shorthands ---------------------------------------------------------

def gen_E(n):
    return Element({Monomial(e=(n,)): QONE})


def gen_F(n):
    return Element({Monomial(f=(n,)): QONE})


def gen_h(s):
    if s == 0:
        raise ValueError("h_0 is not a generator")
    return Element({Monomial(h=((s, 1),)): QONE})


def gen_C(s):
    if s == 0:
        raise ValueError("C_0 is not a generator")
    return Element({Monomial(c=((s, 1),)): QONE})


def gen_k1(e=1):
    return Element({Monomial(k1=e): QONE})


def gen_k2(e=1):
    return Element({Monomial(k2=e): QONE})


# ---------------------------------------------------------------------------

class TensorElement:
    """Finite combination of two-fold tensors of normal words.

    Products follow the Koszul rule (a x b)(c x d) = (-1)^{|b||c|} ac x bd.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = terms if terms is not None else {}

    @staticmethod
    def one():
        return TensorElement({(ONE_M, ONE_M): QONE})

    @staticmethod
    def zero():
        return TensorElement({})

    @staticmethod
    def of(a, b, c=QONE):
        """Tensor of two Elements scaled by c."""
        acc = {}
        for m1, c1 in a.terms.items():
            for m2, c2 in b.terms.items():
                _add_term(acc, (m1, m2), c1 * c2 * c)
        return TensorElement(acc)

    def __add__(self, other):
        if isinstance(other, (int, Fraction, QScalar)):
            other = TensorElement({(ONE_M, ONE_M): coerce_scalar(other)})
        if not isinstance(other, TensorElement):
            return NotImplemented
        acc = dict(self.terms)
        for k, c in other.terms.items():
            _add_term(acc, k, c)
        return TensorElement(acc)

    __radd__ = __add__

    def __neg__(self):
        return TensorElement({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, QScalar)):
            other = TensorElement({(ONE_M, ONE_M): coerce_scalar(other)})
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        c = coerce_scalar(c)
        if not c:
            return TensorElement({})
        return TensorElement({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, QScalar)):
            return self.scale(other)
        if not isinstance(other, TensorElement):
            return NotImplemented
        return tensor_multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, QScalar)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n):
        assert n >= 0
        acc = TensorElement.one()
        for _ in range(n):
            acc = acc * self
        return acc

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def flip(self):
        """Koszul flip tau(a x b) = (-1)^{|a||b|} b x a, extended linearly."""
        acc = {}
        for (m1, m2), c in self.terms.items():
            if m1.parity() and m2.parity():
                c = -c
            _add_term(acc, (m2, m1), c)
        return TensorElement(acc)

    def __repr__(self):
        from .dsl import format_tensor
        return format_tensor(self)


def tensor_multiply(x, y):
    acc = {}
    for (a, b), cx in x.terms.items():
        pb = b.parity()
        for (c, d), cy in y.terms.items():
            coeff = cx * cy
            if pb and c.parity():
                coeff = -coeff
            ac = _mono_mul(a, c)
            bd = _mono_mul(b, d)
            for m1, c1 in ac.items():
                for m2, c2 in bd.items():
                    _add_term(acc, (m1, m2), coeff * c1 * c2)
    return TensorElement(acc)
