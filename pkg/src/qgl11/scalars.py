"""Exact arithmetic over Q(q), rational functions of the quantum parameter q.

A scalar is a reduced fraction num/den of integer-coefficient polynomials in q.
Polynomials are dense coefficient tuples indexed by degree; reduction divides
out the polynomial gcd and the integer content, and fixes the sign so the
denominator has positive leading coefficient.  Equality of QScalar values is
therefore structural equality of the canonical form.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

Rational = Fraction


# ---------------------------------------------------------------------------
# dense integer polynomials: tuple of coefficients, index = degree, no
# trailing zeros; () is the zero polynomial.

def _trim(cs):
    n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    return tuple(cs[:n])


def padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def pneg(a):
    return tuple(-c for c in a)


def psub(a, b):
    return padd(a, pneg(b))


def pmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] += ca * cb
    return _trim(out)


def pcontent(a):
    g = 0
    for c in a:
        g = gcd(g, c)
    return g


def pprimitive(a):
    """Primitive part with positive leading coefficient."""
    if not a:
        return ()
    g = pcontent(a)
    if a[-1] < 0:
        g = -g
    return tuple(c // g for c in a)


def pdivmod(a, b):
    """Exact-arithmetic division a = q*b + r over the rationals."""
    assert b, "division by zero polynomial"
    r = [Fraction(c) for c in a]
    lead = Fraction(b[-1])
    nb = len(b)
    q = [Fraction(0)] * max(0, len(a) - nb + 1)
    for i in range(len(a) - nb, -1, -1):
        t = r[i + nb - 1] / lead
        if t:
            q[i] = t
            for j, c in enumerate(b):
                r[i + j] -= t * c
    return q, r


def pdiv_exact(a, b):
    """a // b when b divides a over the integers (Gauss's lemma cases)."""
    if b == (1,):
        return _trim(a)
    if b == (-1,):
        return pneg(_trim(a))
    nb = len(b)
    lb = b[-1]
    r = list(a)
    out = [0] * max(0, len(a) - nb + 1)
    for i in range(len(a) - nb, -1, -1):
        c = r[i + nb - 1]
        if c:
            assert c % lb == 0, "inexact polynomial division"
            t = c // lb
            out[i] = t
            for j, cb in enumerate(b):
                if cb:
                    r[i + j] -= t * cb
    assert not _trim(r), "inexact polynomial division"
    return _trim(out)


def _valuation(a):
    v = 0
    while v < len(a) and a[v] == 0:
        v += 1
    return v


def _int_prem(a, b):
    """Integer pseudo-remainder: cancel leading terms, scaling by lead(b)."""
    r = list(a)
    nb = len(b)
    lb = b[-1]
    nl = len(r)
    while nl >= nb:
        lr = r[nl - 1]
        if lr:
            for i in range(nl - 1):
                r[i] *= lb
            d = nl - nb
            for j in range(nb - 1):
                r[d + j] -= lr * b[j]
        nl -= 1
        while nl and r[nl - 1] == 0:
            nl -= 1
        del r[nl:]
    return tuple(r)


def pgcd(a, b):
    """Primitive gcd via the primitive pseudo-remainder sequence."""
    a, b = pprimitive(a), pprimitive(b)
    if not a:
        return b
    if not b:
        return a
    if a == (1,) or b == (1,):
        return (1,)
    if a == b:
        return a
    # primitive monomials are plain powers of q
    va, vb = _valuation(a), _valuation(b)
    if va == len(a) - 1 or vb == len(b) - 1:
        v = min(va, vb)
        return (0,) * v + (1,)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _int_prem(a, b)
        a, b = b, pprimitive(r)
    return a


def peval(a, x):
    """Evaluate at a Fraction by Horner's rule."""
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


_SUPER = "q"


def pformat(a, var="q"):
    """Human-readable polynomial, parseable by the expression DSL."""
    if not a:
        return "0"
    parts = []
    for deg in range(len(a) - 1, -1, -1):
        c = a[deg]
        if c == 0:
            continue
        if deg == 0:
            mono = str(abs(c))
        else:
            head = var if deg == 1 else f"{var}^{deg}"
            mono = head if abs(c) == 1 else f"{abs(c)}*{head}"
        if not parts:
            parts.append(mono if c > 0 else f"-{mono}")
        else:
            parts.append(f"+ {mono}" if c > 0 else f"- {mono}")
    return " ".join(parts)


# ---------------------------------------------------------------------------

class QScalar:
    """Canonical rational function of q with integer coefficients."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num=(), den=(1,), _reduced=False):
        if isinstance(num, int):
            num = (num,) if num else ()
        if isinstance(den, int):
            den = (den,) if den else ()
        if not den:
            raise ZeroDivisionError("zero denominator in QScalar")
        if not _reduced:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den
        self._hash = None

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def from_fraction(fr):
        fr = Fraction(fr)
        return QScalar((fr.numerator,) if fr.numerator else (),
                       (fr.denominator,), _reduced=fr.denominator > 0)

    @staticmethod
    def q_power(n):
        if n >= 0:
            return QScalar((0,) * n + (1,), (1,), _reduced=True)
        return QScalar((1,), (0,) * (-n) + (1,), _reduced=True)

    # -- predicates ----------------------------------------------------------

    def is_zero(self):
        return not self.num

    def is_one(self):
        return self.num == (1,) and self.den == (1,)

    def __bool__(self):
        return bool(self.num)

    # -- ring operations -----------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, QScalar):
            return x
        if isinstance(x, int):
            return QScalar((x,) if x else (), (1,), _reduced=True)
        if isinstance(x, Fraction):
            return QScalar.from_fraction(x)
        return None

    def __add__(self, other):
        other = QScalar._coerce(other)
        if other is None:
            return NotImplemented
        if not self.num:
            return other
        if not other.num:
            return self
        if self.den == other.den:
            if self.den == (1,):
                return QScalar(padd(self.num, other.num), (1,), _reduced=True)
            return QScalar(padd(self.num, other.num), self.den)
        num = padd(pmul(self.num, other.den), pmul(other.num, self.den))
        return QScalar(num, pmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return QScalar(pneg(self.num), self.den, _reduced=True)

    def __sub__(self, other):
        other = QScalar._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = QScalar._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = QScalar._coerce(other)
        if other is None:
            return NotImplemented
        if not self.num or not other.num:
            return QZERO
        if self.den == (1,) and other.den == (1,):
            return QScalar(pmul(self.num, other.num), (1,), _reduced=True)
        # cross-reduce to keep intermediate degrees small
        g1 = pgcd(self.num, other.den)
        g2 = pgcd(other.num, self.den)
        n1 = pdiv_exact(self.num, g1) if g1 != (1,) else self.num
        d2 = pdiv_exact(other.den, g1) if g1 != (1,) else other.den
        n2 = pdiv_exact(other.num, g2) if g2 != (1,) else other.num
        d1 = pdiv_exact(self.den, g2) if g2 != (1,) else self.den
        return QScalar(pmul(n1, n2), pmul(d1, d2))

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero scalar")
        return QScalar(self.den, self.num)

    def __truediv__(self, other):
        other = QScalar._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = QScalar._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n):
        if n == 0:
            return QONE
        if n < 0:
            return self.inverse() ** (-n)
        acc, base = QONE, self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base if n > 1 else base
            n >>= 1
        return acc

    # -- comparison / hashing --------------------------------------------------

    def __eq__(self, other):
        other = QScalar._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- output ----------------------------------------------------------------

    def __str__(self):
        if not self.num:
            return "0"
        ns = pformat(self.num)
        if self.den == (1,):
            return ns
        ds = pformat(self.den)
        if len(self.num) > 1 or (self.num and " " in ns):
            ns = f"({ns})"
        if len(self.den) > 1 or " " in ds:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self):
        return f"QScalar({self})"

    def specialize(self, q0):
        """Evaluate at a nonzero rational q0; error on a pole."""
        q0 = Fraction(q0)
        if q0 == 0:
            raise ValueError("cannot specialize at q = 0")
        dv = peval(self.den, q0)
        if dv == 0:
            raise ValueError(f"pole at q = {q0}: denominator {pformat(self.den)} vanishes")
        return peval(self.num, q0) / dv


def _reduce(num, den):
    num, den = _trim(num), _trim(den)
    if not num:
        return (), (1,)
    if den == (1,):
        return num, den
    if den == (-1,):
        return pneg(num), (1,)
    g = pgcd(num, den)
    if g != (1,):
        num = pdiv_exact(num, g)
        den = pdiv_exact(den, g)
    cn, cd = pcontent(num), pcontent(den)
    c = gcd(cn, cd)
    if den[-1] < 0:
        c = -c
    if c != 1:
        num = tuple(x // c for x in num)
        den = tuple(x // c for x in den)
    return num, den


QZERO = QScalar((), (1,), _reduced=True)
QONE = QScalar((1,), (1,), _reduced=True)
QVAR = QScalar((0, 1), (1,), _reduced=True)


@lru_cache(maxsize=None)
def qpow(n):
    """q**n as a QScalar, any integer n."""
    return QScalar.q_power(n)


QMQI = qpow(1) - qpow(-1)   # q - q^-1


@lru_cache(maxsize=None)
def qbracket(s):
    """[s] = (q^s - q^-s)/(q - q^-1); s must be a nonzero integer."""
    if s == 0:
        raise ValueError("qbracket(0) is undefined (the quotient degenerates)")
    if s < 0:
        return -qbracket(-s)
    # q^{-(s-1)} * sum_{k=0}^{s-1} q^{2k}, the exact Laurent-polynomial value
    cs = [0] * (2 * s - 1)
    for k in range(s):
        cs[2 * k] = 1
    return QScalar(tuple(cs), (1,), _reduced=True) * qpow(-(s - 1))


def specialize_q(a, q0):
    """Numeric value of a QScalar at rational q0 != 0."""
    return a.specialize(q0)


def coerce_scalar(x):
    """Accept QScalar, int or Fraction; raise for anything else."""
    c = QScalar._coerce(x)
    if c is None:
        raise TypeError(f"cannot interpret {x!r} as a scalar")
    return c
