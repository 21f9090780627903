"""Truncated Laurent series over an arbitrary coefficient carrier.

A series stores the coefficients of a contiguous degree window [lo, hi]
together with two flags saying whether the coefficients below lo (resp.
above hi) are known to vanish.  A one-sided power series truncated at
order N is [0, N] with exact_below=True; a finite Laurent polynomial has
both flags set.  Addition and multiplication propagate the largest window
on which the result is genuinely determined by the inputs, and raise when
that window is empty (e.g. the product of two series with unknown tails in
opposite directions).

Carriers must support +, unary -, *, == and multiplication by QScalar.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import QZERO, QScalar, coerce_scalar


class LaurentSeries:
    __slots__ = ("lo", "coeffs", "zero", "exact_below", "exact_above")

    def __init__(self, lo, coeffs, zero, exact_below=True, exact_above=False):
        self.lo = lo
        self.coeffs = list(coeffs)
        self.zero = zero
        self.exact_below = exact_below
        self.exact_above = exact_above
        if not self.coeffs:
            raise ValueError("series window is empty")

    @property
    def hi(self):
        return self.lo + len(self.coeffs) - 1

    @staticmethod
    def exact(lo, coeffs, zero):
        """A finite Laurent polynomial (all other coefficients truly zero)."""
        return LaurentSeries(lo, coeffs, zero, exact_below=True, exact_above=True)

    @staticmethod
    def constant(value, zero):
        return LaurentSeries.exact(0, [value], zero)

    # -- coefficient access ----------------------------------------------------

    def known(self, d):
        if self.lo <= d <= self.hi:
            return True
        return self.exact_below if d < self.lo else self.exact_above

    def coeff(self, d):
        if self.lo <= d <= self.hi:
            return self.coeffs[d - self.lo]
        if self.known(d):
            return self.zero
        raise ValueError(f"coefficient of degree {d} lies outside the window {self._window()}")

    def _window(self):
        left = "(-inf" if self.exact_below else f"[{self.lo}"
        right = "+inf)" if self.exact_above else f"{self.hi}]"
        return f"{left}, {right}"

    def support(self):
        """Degrees with nonzero stored coefficient."""
        return [self.lo + i for i, c in enumerate(self.coeffs) if c != self.zero]

    # -- linear structure --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        eb = self.exact_below and other.exact_below
        ea = self.exact_above and other.exact_above
        lo = min(self.lo, other.lo) if eb else max(
            x.lo for x in (self, other) if not x.exact_below)
        hi = max(self.hi, other.hi) if ea else min(
            x.hi for x in (self, other) if not x.exact_above)
        if hi < lo:
            raise ValueError("sum has an empty reliable window")
        coeffs = [self.coeff(d) + other.coeff(d) for d in range(lo, hi + 1)]
        return LaurentSeries(lo, coeffs, self.zero, eb, ea)

    def __neg__(self):
        return LaurentSeries(self.lo, [-c for c in self.coeffs], self.zero,
                             self.exact_below, self.exact_above)

    def __sub__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        return LaurentSeries(self.lo, [x * c for x in self.coeffs], self.zero,
                             self.exact_below, self.exact_above)

    def map(self, fn, zero):
        """Apply fn to every stored coefficient (e.g. a representation)."""
        return LaurentSeries(self.lo, [fn(c) for c in self.coeffs], zero,
                             self.exact_below, self.exact_above)

    def shift(self, k):
        """Multiply by z^k."""
        return LaurentSeries(self.lo + k, self.coeffs, self.zero,
                             self.exact_below, self.exact_above)

    # -- multiplication ------------------------------------------------------------

    def __mul__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        x, y = self, other
        if x.exact_above and y.exact_above:
            hi, ea = x.hi + y.hi, True
        else:
            bounds = []
            if not x.exact_above:
                if not y.exact_below:
                    raise ValueError("product of series with opposite unknown tails")
                bounds.append(x.hi + y.lo)
            if not y.exact_above:
                if not x.exact_below:
                    raise ValueError("product of series with opposite unknown tails")
                bounds.append(y.hi + x.lo)
            hi, ea = min(bounds), False
        if x.exact_below and y.exact_below:
            lo, eb = x.lo + y.lo, True
        else:
            bounds = []
            if not x.exact_below:
                if not y.exact_above:
                    raise ValueError("product of series with opposite unknown tails")
                bounds.append(x.lo + y.hi)
            if not y.exact_below:
                if not x.exact_above:
                    raise ValueError("product of series with opposite unknown tails")
                bounds.append(y.lo + x.hi)
            lo, eb = max(bounds), False
        if hi < lo:
            raise ValueError("product has an empty reliable window")
        out = []
        for d in range(lo, hi + 1):
            acc = None
            for i in range(x.lo, x.hi + 1):
                j = d - i
                if y.lo <= j <= y.hi:
                    t = x.coeffs[i - x.lo] * y.coeffs[j - y.lo]
                    acc = t if acc is None else acc + t
            out.append(self.zero if acc is None else acc)
        return LaurentSeries(lo, out, self.zero, eb, ea)

    # -- comparison ---------------------------------------------------------------

    def common_window(self, other):
        lo = max((x.lo for x in (self, other) if not x.exact_below),
                 default=min(self.lo, other.lo))
        hi = min((x.hi for x in (self, other) if not x.exact_above),
                 default=max(self.hi, other.hi))
        return lo, hi

    def agrees(self, other, lo=None, hi=None):
        """Equality on the overlap of the known windows (or a required window)."""
        clo, chi = self.common_window(other)
        lo = clo if lo is None else lo
        hi = chi if hi is None else hi
        if hi < lo:
            raise ValueError("no common window to compare on")
        return all(self.coeff(d) == other.coeff(d) for d in range(lo, hi + 1))

    def first_mismatch(self, other, lo, hi):
        for d in range(lo, hi + 1):
            if self.coeff(d) != other.coeff(d):
                return d
        return None

    def truncate(self, lo, hi):
        """Restrict to [lo, hi]; requires every degree there to be known."""
        coeffs = [self.coeff(d) for d in range(lo, hi + 1)]
        eb = self.exact_below and lo <= self.lo
        ea = self.exact_above and hi >= self.hi
        return LaurentSeries(lo, coeffs, self.zero, eb, ea)

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self.agrees(other)

    def __repr__(self):
        parts = []
        for d in range(self.lo, self.hi + 1):
            c = self.coeff(d)
            if c == self.zero:
                continue
            parts.append(f"z^{d}*({c!r})")
        body = " + ".join(parts) if parts else "0"
        return f"<series {self._window()}: {body}>"


# ---------------------------------------------------------------------------

def _frac(a, b=1):
    return QScalar.from_fraction(Fraction(a, b))


def series_exp(x, order, one):
    """exp of a series with strictly positive (or strictly negative) support.

    The result window is [0, order] (mirrored for negative orientation).
    Coefficients must commute with each other.
    """
    sup = x.support()
    if any(d == 0 for d in sup):
        raise ValueError("exp requires vanishing constant term")
    if sup and all(d < 0 for d in sup):
        flipped = LaurentSeries(-x.hi, list(reversed(x.coeffs)), x.zero,
                                x.exact_above, x.exact_below)
        res = series_exp(flipped, order, one)
        return LaurentSeries(-res.hi, list(reversed(res.coeffs)), res.zero,
                             res.exact_above, res.exact_below)
    if sup and any(d < 0 for d in sup):
        raise ValueError("exp requires single-signed support")
    a = [x.coeff(d) if x.known(d) else _raise_window(x, d) for d in range(order + 1)]
    out = [one] + [x.zero] * order
    for n in range(1, order + 1):
        acc = None
        for s in range(1, n + 1):
            t = (a[s] * _frac(s)) * out[n - s]
            acc = t if acc is None else acc + t
        out[n] = acc * _frac(1, n)
    return LaurentSeries(0, out, x.zero, exact_below=True, exact_above=False)


def _raise_window(x, d):
    raise ValueError(f"series window {x._window()} too short: degree {d} unknown")


def series_log(x, order, one):
    """Inverse of series_exp on the positive side: log of 1 + (higher order)."""
    if not x.exact_below or x.lo < 0:
        raise ValueError("log needs a power series with exact lower tail")
    if x.coeff(0) != one:
        raise ValueError("log requires constant term 1")
    a = [x.coeff(d) if x.known(d) else _raise_window(x, d) for d in range(order + 1)]
    out = [x.zero] * (order + 1)
    # n a_n = sum_{s=1}^{n} s b_s a_{n-s}, solved for b_n
    for n in range(1, order + 1):
        acc = a[n] * _frac(n)
        for s in range(1, n):
            acc = acc - (out[s] * _frac(s)) * a[n - s]
        out[n] = acc * _frac(1, n)
    return LaurentSeries(0, out, x.zero, exact_below=True, exact_above=False)


def series_invert(x, order, one):
    """Multiplicative inverse of a series whose lowest term is invertible.

    For non-scalar carriers the lowest coefficient must equal `one`.
    The leading degree may be any integer d0; the result starts at -d0.
    """
    if not x.exact_below:
        if not x.exact_above:
            raise ValueError("inversion needs a one-sided series")
        flipped = LaurentSeries(-x.hi, list(reversed(x.coeffs)), x.zero,
                                x.exact_above, x.exact_below)
        res = series_invert(flipped, order, one)
        return LaurentSeries(-res.hi, list(reversed(res.coeffs)), res.zero,
                             res.exact_above, res.exact_below)
    sup = x.support()
    if not sup:
        raise ValueError("cannot invert the zero series")
    d0 = sup[0]
    lead = x.coeff(d0)
    if isinstance(lead, QScalar):
        lead_inv = lead.inverse()
    elif lead == one:
        lead_inv = None
    else:
        raise ValueError("inversion needs leading coefficient 1 for this carrier")
    a = [x.coeff(d0 + k) if x.known(d0 + k) else _raise_window(x, d0 + k)
         for k in range(order + 1)]
    out = [x.zero] * (order + 1)
    out[0] = one if lead_inv is None else lead_inv
    for n in range(1, order + 1):
        acc = None
        for k in range(1, n + 1):
            t = a[k] * out[n - k]
            acc = t if acc is None else acc + t
        acc = -acc
        out[n] = acc if lead_inv is None else lead_inv * acc
    return LaurentSeries(-d0, out, x.zero, exact_below=True, exact_above=False)


def expand_rational(num, den, order):
    """Taylor expansion of num(z)/den(z) with QScalar coefficients.

    num, den are degree-indexed coefficient lists; den must have a nonzero
    constant term.
    """
    num = [coerce_scalar(c) for c in num]
    den = [coerce_scalar(c) for c in den]
    while den and den[-1].is_zero():
        den.pop()
    if not den or den[0].is_zero():
        raise ValueError("denominator must have nonzero constant term")
    d0 = den[0].inverse()
    out = []
    for n in range(order + 1):
        acc = num[n] if n < len(num) else QZERO
        for k in range(1, min(n, len(den) - 1) + 1):
            acc = acc - den[k] * out[n - k]
        out.append(acc * d0)
    return LaurentSeries(0, out, QZERO, exact_below=True, exact_above=False)


# helpers for explicit polynomial coefficient lists in z -------------------------

def zpoly_mul(a, b):
    if not a or not b:
        return []
    out = [QZERO] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        for j, cb in enumerate(b):
            out[i + j] = out[i + j] + ca * cb
    return out
