"""Hopf pairing between the raising and lowering Borel halves.

The pairing phi is fixed by the axioms

    phi(a, b b') = (-1)^{|b||b'|} phi(a_(1), b) phi(a_(2), b'),   phi(a, 1) = eps(a)
    phi(a a', b) = phi(a', b_(1)) phi(a, b_(2)),                  phi(1, b) = eps(b)

together with its values on generator pairs.  Two independent routes are
implemented: pair_closed evaluates the orthogonality formula on the PBW
bases, and pair_oracle unwinds the axioms recursively with grading pruning.

A-side words use letters  (phi0+)^-1 F_s (s>=1), h_s, C_s (s>=1), E_n (n>=0)
ordered with the F-letters first (descending s), then h, C, E ascending; the
B-side partner of each letter is fixed by the dualities F<->E, h<->C.
"""

from __future__ import annotations

from .scalars import QMQI, QONE, QZERO, qbracket, qpow
from .superalg import Element, Monomial, ONE_M, TensorElement
from .hopf import _coproduct_mono


# -- ordered basis letters -----------------------------------------------------

class BLetter:
    """Letter of the ordered PBW alphabet: kind in {fneg, h, c, e}."""

    __slots__ = ("kind", "index")

    _KIND_RANK = {"fneg": 0, "h": 1, "c": 2, "e": 3}

    def __init__(self, kind, index):
        if kind not in self._KIND_RANK:
            raise ValueError(f"unknown letter kind {kind!r}")
        if kind in ("fneg", "h", "c") and index < 1:
            raise ValueError(f"{kind} letters need index >= 1")
        if kind == "e" and index < 0:
            raise ValueError("e letters need index >= 0")
        self.kind = kind
        self.index = index

    def sort_index(self):
        r = self._KIND_RANK[self.kind]
        return (r, -self.index if self.kind == "fneg" else self.index)

    def parity(self):
        return 1 if self.kind in ("fneg", "e") else 0

    def __eq__(self, other):
        return self.kind == other.kind and self.index == other.index

    def __lt__(self, other):
        return self.sort_index() < other.sort_index()

    def __hash__(self):
        return hash((self.kind, self.index))

    def __repr__(self):
        return f"BLetter({self.kind!r}, {self.index})"

    def a_element(self):
        """The A-side basis letter as an Element."""
        if self.kind == "fneg":
            return Element({Monomial(f=(self.index,), k1=1, k2=-1): QONE})
        if self.kind == "h":
            return Element({Monomial(h=((self.index, 1),)): QONE})
        if self.kind == "c":
            return Element({Monomial(c=((self.index, 1),)): QONE})
        return Element({Monomial(e=(self.index,)): QONE})

    def b_element(self):
        """The dual B-side letter."""
        if self.kind == "fneg":
            return Element({Monomial(e=(-self.index,), k1=-1, k2=1): QONE})
        if self.kind == "h":
            return Element({Monomial(c=((-self.index, 1),)): QONE})
        if self.kind == "c":
            return Element({Monomial(h=((-self.index, 1),)): QONE})
        return Element({Monomial(f=(-self.index,)): QONE})


def letter_pair(b):
    """phi(b, b^-) on a basis letter."""
    s = b.index
    if b.kind == "fneg":
        return -QMQI
    if b.kind == "h":
        return qpow(s) * qbracket(s) / (s * QMQI)
    if b.kind == "c":
        return qpow(-s) * qbracket(s) / (s * QMQI)
    return QMQI


class GammaFunction:
    """Finitely supported multiplicity function on the PBW alphabet.

    Odd letters (fneg, e) carry multiplicity at most 1.
    """

    __slots__ = ("entries",)

    def __init__(self, entries):
        items = sorted(dict(entries).items(), key=lambda kv: kv[0].sort_index())
        for b, m in items:
            if m < 1:
                raise ValueError("multiplicities must be positive")
            if b.parity() and m > 1:
                raise ValueError(f"odd letter {b!r} admits multiplicity at most 1")
        self.entries = tuple(items)

    def __eq__(self, other):
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        inner = ", ".join(f"{b!r}: {m}" for b, m in self.entries)
        return f"GammaFunction({{{inner}}})"

    def length(self):
        return sum(m for _, m in self.entries)

    def z_degree(self):
        return sum(b.index * m for b, m in self.entries)

    def sign(self):
        """(-1) to the number of odd-odd pairs b < b' in the support."""
        odd = [m for b, m in self.entries if b.parity()]
        total = 0
        for i in range(len(odd)):
            for j in range(i + 1, len(odd)):
                total += odd[i] * odd[j]
        return -QONE if total & 1 else QONE


def pbw_products(f):
    """(A-side product E(f), B-side product F(g=f)) along the letter order."""
    ea = Element.one()
    fb = Element.one()
    for b, m in f.entries:
        for _ in range(m):
            ea = ea * b.a_element()
            fb = fb * b.b_element()
    return ea, fb


# -- Cartan block -------------------------------------------------------------

_CARTAN = ((0, -1), (-1, -2))


def cartan_pair(ka, kb):
    """q-power pairing of Cartan words; kb in lower-half (inverse) exponents."""
    e = 0
    for i in range(2):
        for j in range(2):
            e += _CARTAN[i][j] * ka[i] * kb[j]
    return qpow(e)


# -- closed form ----------------------------------------------------------------

def pair_closed(ka, f, kb, g):
    """Orthogonality formula for phi(k E(f), k' F(g)).

    ka are (k1, k2) exponents; kb are exponents of the B-side Cartan
    inverses (so a B-side word with stored k-exponents (e1, e2) has
    kb = (-e1, -e2)).
    """
    base = cartan_pair(ka, kb)
    if f != g:
        return QZERO
    val = base * f.sign()
    for b, m in f.entries:
        fact = 1
        for i in range(2, m + 1):
            fact *= i
        val = val * fact * letter_pair(b) ** m
    return val


# -- recursive oracle ----------------------------------------------------------

def _check_side(x, upper):
    for m in x.terms:
        if upper:
            bad = (any(n < 0 for n in m.e) or any(n < 1 for n in m.f)
                   or any(s < 1 for s, _ in m.h) or any(s < 1 for s, _ in m.c))
        else:
            bad = (any(n > -1 for n in m.e) or any(n > 0 for n in m.f)
                   or any(s > -1 for s, _ in m.h) or any(s > -1 for s, _ in m.c))
        if bad:
            side = "raising" if upper else "lowering"
            raise ValueError(f"monomial {m!r} does not lie in the {side} half")


def _first_letter_split(m):
    """(single-letter word, remainder) with m = product of the two, coefficient 1."""
    if m.f:
        n = m.f[0]
        return Monomial(f=(n,)), Monomial(m.f[1:], m.k1, m.k2, m.h, m.c, m.e)
    if m.k1:
        step = 1 if m.k1 > 0 else -1
        return Monomial(k1=step), Monomial((), m.k1 - step, m.k2, m.h, m.c, m.e)
    if m.k2:
        step = 1 if m.k2 > 0 else -1
        return Monomial(k2=step), Monomial((), 0, m.k2 - step, m.h, m.c, m.e)
    if m.h:
        s, mult = m.h[0]
        rest = m.h[1:] if mult == 1 else ((s, mult - 1),) + m.h[1:]
        return Monomial(h=((s, 1),)), Monomial((), 0, 0, rest, m.c, m.e)
    if m.c:
        s, mult = m.c[0]
        rest = m.c[1:] if mult == 1 else ((s, mult - 1),) + m.c[1:]
        return Monomial(c=((s, 1),)), Monomial((), 0, 0, (), rest, m.e)
    n = m.e[0]
    return Monomial(e=(n,)), Monomial((), 0, 0, (), (), m.e[1:])


_IN_PROGRESS = object()
_pair_memo = {}


def _single_kind(m):
    """(kind, index) when m is a one-letter non-Cartan-k word, else None."""
    if m.letter_count() != 1:
        return None
    if m.e:
        return ("E", m.e[0])
    if m.f:
        return ("F", m.f[0])
    if m.h:
        return ("h", m.h[0][0])
    if m.c:
        return ("C", m.c[0][0])
    return None


def _base_pair(la, lb):
    ka, ia = la
    kb, ib = lb
    if ka == "E" and kb == "F":
        return QMQI if ia + ib == 0 else QZERO
    if ka == "F" and kb == "E":
        return -QMQI if ia + ib == 0 else QZERO
    if ka == "h" and kb == "C":
        s = ia
        return qpow(s) * qbracket(s) / (s * QMQI) if ia + ib == 0 else QZERO
    if ka == "C" and kb == "h":
        s = ia
        return qpow(-s) * qbracket(s) / (s * QMQI) if ia + ib == 0 else QZERO
    return QZERO


def _pair_mono(ma, mb, depth=0):
    if depth > 400:
        raise RecursionError("pairing recursion too deep; likely invalid input")
    if ma.z_degree() + mb.z_degree() != 0 or ma.q_degree() + mb.q_degree() != 0:
        return QZERO
    key = (ma, mb)
    got = _pair_memo.get(key)
    if got is _IN_PROGRESS:
        raise RecursionError(f"cyclic pairing recursion on {ma!r} | {mb!r}")
    if got is not None:
        return got
    _pair_memo[key] = _IN_PROGRESS
    val = _pair_mono_raw(ma, mb, depth)
    _pair_memo[key] = val
    return val


def _pair_mono_raw(ma, mb, depth):
    if ma.is_group_like() and mb.is_group_like():
        return cartan_pair((ma.k1, ma.k2), (-mb.k1, -mb.k2))
    lb_count = mb.letter_count()
    la_count = ma.letter_count()
    if lb_count >= 2:
        b1, b2 = _first_letter_split(mb)
        sign = -1 if (b1.parity() and b2.parity()) else 1
        acc = QZERO
        for (a1, a2), c in _coproduct_mono(ma).terms.items():
            left = _pair_mono(a1, b1, depth + 1)
            if not left:
                continue
            right = _pair_mono(a2, b2, depth + 1)
            if not right:
                continue
            acc = acc + c * left * right
        return -acc if sign < 0 else acc
    if la_count >= 2:
        a1, a2 = _first_letter_split(ma)
        acc = QZERO
        for (b1, b2), c in _coproduct_mono(mb).terms.items():
            left = _pair_mono(a2, b1, depth + 1)
            if not left:
                continue
            right = _pair_mono(a1, b2, depth + 1)
            if not right:
                continue
            acc = acc + c * left * right
        return acc
    la = _single_kind(ma)
    lb = _single_kind(mb)
    if la is None or lb is None:
        # a lone Cartan k against a single letter: killed by the grading check
        return QZERO
    return _base_pair(la, lb)


def pair_oracle(x, y):
    """phi(x, y) by recursive reduction; x in the raising half, y lowering."""
    if isinstance(x, TensorElement) or isinstance(y, TensorElement):
        raise ValueError("pairing is defined on plain elements")
    _check_side(x, upper=True)
    _check_side(y, upper=False)
    # both gradings are respected, so homogeneous sides with degrees that do
    # not cancel pair to zero before any recursion
    gx = x.homogeneous_grading()
    if gx is not None:
        gy = y.homogeneous_grading()
        if gy is not None and (gx[0] + gy[0] or gx[1] + gy[1]):
            return QZERO
    acc = QZERO
    for ma, ca in x.terms.items():
        for mb, cb in y.terms.items():
            v = _pair_mono(ma, mb)
            if v:
                acc = acc + ca * cb * v
    return acc


def clear_pair_cache():
    _pair_memo.clear()


# -- PBW recognition (for the command line closed route) -------------------------

def gamma_from_element(x, side):
    """Match an Element against k*E(f) (side='a') or k'*F(g) (side='b').

    Returns (cartan exponents, GammaFunction); the Cartan exponents follow
    the conventions of pair_closed.  Raises if x is not such a product.
    """
    if len(x.terms) != 1:
        raise ValueError("not a PBW basis element (must be a single word)")
    (m, c), = x.terms.items()
    entries = {}
    if side == "a":
        for n in m.f:
            entries[BLetter("fneg", n)] = 1
        for s, mult in m.h:
            entries[BLetter("h", s)] = mult
        for s, mult in m.c:
            entries[BLetter("c", s)] = mult
        for n in m.e:
            entries[BLetter("e", n)] = 1
    else:
        for n in m.e:
            entries[BLetter("fneg", -n)] = 1
        for s, mult in m.c:
            entries[BLetter("h", -s)] = mult
        for s, mult in m.h:
            entries[BLetter("c", -s)] = mult
        for n in m.f:
            entries[BLetter("e", -n)] = 1
    try:
        f = GammaFunction(entries)
    except ValueError as exc:
        raise ValueError(f"not a PBW basis element: {exc}") from None
    ea, fb = pbw_products(f)
    ref = ea if side == "a" else fb
    (mref, cref), = ref.terms.items()
    k1 = m.k1 - mref.k1
    k2 = m.k2 - mref.k2
    rebuilt = Element({Monomial(k1=k1, k2=k2): QONE}) * ref
    if rebuilt != x:
        raise ValueError("not a PBW basis element (word is not in basis form)")
    kexp = (k1, k2) if side == "a" else (-k1, -k2)
    return kexp, f
