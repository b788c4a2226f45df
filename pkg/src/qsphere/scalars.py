"""Exact arithmetic in the coefficient field of the engine.

All computations happen over

    K = Frac( Z[i][ v^{+-1}, L_1^{+-1}, ..., L_n^{+-1} ] ),

where v is a formal square root of the deformation parameter q and L_j is
the Cartan eigenvalue symbol attached to the j-th orthogonal weight
coordinate.  Adjoining the imaginary unit makes the distinguished weight
(L_j^2 = -q^{-1}) exactly representable: under the specialization map the
symbols become L_j = sigma*i*v^{-1} with a branch sign sigma = +-1.

Scalars are stored as reduced fractions of Laurent polynomials in a fixed
canonical form, so equality of field elements is literal equality of the
stored data.  Monomials are exponent tuples with index 0 the power of v and
index j >= 1 the power of L_j; trailing zeros are stripped, which lets
scalars built for different ranks interoperate.  Coefficients are Gaussian
integers stored as (real, imag) pairs of Python ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


# ---------------------------------------------------------------------------
# Gaussian integers as (re, im) pairs of ints
# ---------------------------------------------------------------------------

G0 = (0, 0)
G1 = (1, 0)
GI = (0, 1)

_UNITS = ((1, 0), (0, 1), (-1, 0), (0, -1))


def _gadd(a, b):
    return (a[0] + b[0], a[1] + b[1])


def _gsub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def _gneg(a):
    return (-a[0], -a[1])


def _gmul(a, b):
    ar, ai = a
    br, bi = b
    return (ar * br - ai * bi, ar * bi + ai * br)


def _gnorm(a):
    return a[0] * a[0] + a[1] * a[1]


def _rnd_div(x, n):
    # nearest integer to x / n for n > 0, ties rounded up
    return (2 * x + n) // (2 * n)


def _gdivmod(a, b):
    """Euclidean division by nearest-lattice-point rounding; |r| < |b|."""
    n = _gnorm(b)
    t = _gmul(a, (b[0], -b[1]))
    q = (_rnd_div(t[0], n), _rnd_div(t[1], n))
    return q, _gsub(a, _gmul(q, b))


def _ggcd(a, b):
    while b != G0:
        a, b = b, _gdivmod(a, b)[1]
    return _gcanon(a)


def _gcanon(a):
    """Scale by a unit into the unique quadrant re > 0, im >= 0."""
    if a == G0:
        return a
    for u in _UNITS:
        c = _gmul(a, u)
        if c[0] > 0 and c[1] >= 0:
            return c
    raise AssertionError(a)


def _gunit_for(a):
    """The unit u with u * a in the canonical quadrant."""
    for u in _UNITS:
        c = _gmul(a, u)
        if c[0] > 0 and c[1] >= 0:
            return u
    raise ZeroDivisionError("unit of zero")


def _gdiv_exact(a, b):
    n = _gnorm(b)
    t = _gmul(a, (b[0], -b[1]))
    if t[0] % n or t[1] % n:
        raise ArithmeticError("inexact Gaussian division")
    return (t[0] // n, t[1] // n)


# ---------------------------------------------------------------------------
# Laurent polynomials: dict {exponent tuple: Gaussian coefficient}
# ---------------------------------------------------------------------------

PZERO: dict = {}
PONE = {(): G1}


def _strip(k):
    while k and k[-1] == 0:
        k = k[:-1]
    return k


def _mono_mul(k1, k2):
    if not k1:
        return k2
    if not k2:
        return k1
    if len(k1) < len(k2):
        k1, k2 = k2, k1
    out = list(k1)
    for idx, e in enumerate(k2):
        out[idx] += e
    return _strip(tuple(out))


def _mono_neg(k):
    return tuple(-e for e in k)


def padd(p, r):
    if not p:
        return dict(r)
    if not r:
        return dict(p)
    out = dict(p)
    for k, c in r.items():
        s = _gadd(out.get(k, G0), c)
        if s == G0:
            out.pop(k, None)
        else:
            out[k] = s
    return out


def psub(p, r):
    out = dict(p)
    for k, c in r.items():
        s = _gsub(out.get(k, G0), c)
        if s == G0:
            out.pop(k, None)
        else:
            out[k] = s
    return out


def pneg(p):
    return {k: _gneg(c) for k, c in p.items()}


def pmul(p, r):
    if not p or not r:
        return {}
    if len(p) > len(r):
        p, r = r, p
    if len(p) == 1:
        (k1, c1), = p.items()
        if k1 == ():
            if c1 == G1:
                return dict(r)
            return {k: _gmul(c1, c) for k, c in r.items()}
        return {_mono_mul(k1, k): _gmul(c1, c) for k, c in r.items()}
    out: dict = {}
    for k1, c1 in p.items():
        for k2, c2 in r.items():
            k = _mono_mul(k1, k2)
            s = _gadd(out.get(k, G0), _gmul(c1, c2))
            if s == G0:
                out.pop(k, None)
            else:
                out[k] = s
    return out


def pscale(p, g):
    if g == G0:
        return {}
    if g == G1:
        return dict(p)
    return {k: _gmul(g, c) for k, c in p.items()}


def _nvars(*polys):
    nv = 0
    for p in polys:
        for k in p:
            if len(k) > nv:
                nv = len(k)
    return nv


def _okey(k, nv):
    return k + (0,) * (nv - len(k))


def _lead(p, nv):
    k = max(p, key=lambda t: _okey(t, nv))
    return k, p[k]


def _min_exps(p):
    nv = _nvars(p)
    if nv == 0:
        return ()
    mins = [None] * nv
    for k in p:
        kk = _okey(k, nv)
        for idx in range(nv):
            e = kk[idx]
            if mins[idx] is None or e < mins[idx]:
                mins[idx] = e
    return _strip(tuple(x if x is not None else 0 for x in mins))


def _mshift(p, delta):
    if not delta:
        return dict(p)
    return {_mono_mul(k, delta): c for k, c in p.items()}


def _gcontent(p):
    g = G0
    for c in p.values():
        g = _ggcd(g, c)
        if g == G1:
            return g
    return g


def _pdiv_exact(p, d):
    """Exact multivariate division; raises ArithmeticError if not exact."""
    if not d:
        raise ZeroDivisionError("polynomial division by zero")
    if len(d) == 1:
        (k, c), = d.items()
        out = {}
        for km, cm in p.items():
            q = _mono_mul(km, _mono_neg(k)) if k else km
            if any(e < 0 for e in q):
                raise ArithmeticError("inexact monomial division")
            out[q] = _gdiv_exact(cm, c)
        return out
    nv = _nvars(p, d)
    dk, dc = _lead(d, nv)
    dk = _okey(dk, nv)
    rem = dict(p)
    quo: dict = {}
    while rem:
        lk, lc = _lead(rem, nv)
        lko = _okey(lk, nv)
        diff = tuple(a - b for a, b in zip(lko, dk))
        if any(e < 0 for e in diff):
            raise ArithmeticError("inexact polynomial division")
        qc = _gdiv_exact(lc, dc)
        qk = _strip(diff)
        quo[qk] = qc
        rem = psub(rem, pmul({qk: qc}, d))
    return quo


# ---- gcd machinery (on polynomials with non-negative exponents) ----------

def _gprim(p):
    """Divide by Gaussian content, normalize sign of the content."""
    if not p:
        return p, G0
    c = _gcontent(p)
    if c == G1:
        return dict(p), G1
    return {k: _gdiv_exact(v, c) for k, v in p.items()}, c


def _uni(p):
    return {(k[0] if k else 0): c for k, c in p.items()}


def _ununi(p):
    return {((k,) if k else ()): c for k, c in p.items()}


def _prem_uni(a, b):
    db = max(b)
    lb = b[db]
    while a and max(a) >= db:
        da = max(a)
        la = a[da]
        na = {e: _gmul(lb, c) for e, c in a.items()}
        del na[da]
        for e, c in b.items():
            if e == db:
                continue
            k = e + da - db
            s = _gsub(na.get(k, G0), _gmul(la, c))
            if s == G0:
                na.pop(k, None)
            else:
                na[k] = s
        a = na
    return a


def _pgcd_uni(p, r):
    a, ca = _gprim(_uni(p))
    b, cb = _gprim(_uni(r))
    c = _ggcd(ca, cb)
    if max(a) < max(b):
        a, b = b, a
    while b:
        rem = _prem_uni(a, b)
        a, b = b, _gprim(rem)[0]
    g = _ununi(a)
    if c != G1:
        g = pscale(g, c)
    return g


def _split_main(p, nv):
    out: dict = {}
    for k, c in p.items():
        kk = _okey(k, nv)
        e = kk[nv - 1]
        sub = _strip(kk[: nv - 1])
        out.setdefault(e, {})[sub] = c
    return out


def _join_main(parts, nv):
    out = {}
    for e, sub in parts.items():
        for k, c in sub.items():
            kk = list(_okey(k, nv - 1)) + [e]
            out[_strip(tuple(kk))] = c
    return out


def _poly_list_gcd(polys):
    g: dict = {}
    for p in polys:
        g = _pgcd(g, p)
        if g == PONE:
            return dict(PONE)
    return g


def _prem_main(a, b):
    """Pseudo-remainder of main-variable poly dicts with poly coefficients."""
    db = max(b)
    lb = b[db]
    while a and max(a) >= db:
        da = max(a)
        la = a[da]
        na = {}
        for e, c in a.items():
            if e == da:
                continue
            na[e] = pmul(lb, c)
        for e, c in b.items():
            if e == db:
                continue
            k = e + da - db
            t = psub(na.get(k, {}), pmul(la, c))
            if t:
                na[k] = t
            else:
                na.pop(k, None)
        a = na
    return a


def _pgcd(p, r):
    """GCD of polynomials with non-negative exponents, up to units."""
    if not p:
        return dict(r)
    if not r:
        return dict(p)
    if p == r:
        return dict(p)
    if len(p) == 1 or len(r) == 1:
        # monomial case: common monomial part times coefficient gcd
        mp = _min_exps(p)
        mr = _min_exps(r)
        nv = max(len(mp), len(mr))
        common = _strip(tuple(min(a, b) for a, b in zip(_okey(mp, nv), _okey(mr, nv))))
        g = _ggcd(_gcontent(p), _gcontent(r))
        return {common: g}
    nv = _nvars(p, r)
    if nv <= 1:
        return _pgcd_uni(p, r)
    ps = _split_main(p, nv)
    rs = _split_main(r, nv)
    cont_p = _poly_list_gcd(list(ps.values()))
    cont_r = _poly_list_gcd(list(rs.values()))
    cont = _pgcd(cont_p, cont_r)
    a = {e: _pdiv_exact(c, cont_p) for e, c in ps.items()} if cont_p != PONE else ps
    b = {e: _pdiv_exact(c, cont_r) for e, c in rs.items()} if cont_r != PONE else rs
    if max(a) < max(b):
        a, b = b, a
    while b:
        rem = _prem_main(a, b)
        if rem:
            cc = _poly_list_gcd(list(rem.values()))
            rem = {e: _pdiv_exact(c, cc) for e, c in rem.items()}
        a, b = b, rem
    g = _join_main(a, nv)
    if cont != PONE:
        g = pmul(g, cont)
    return g


# ---------------------------------------------------------------------------
# Scalars: reduced fractions of Laurent polynomials
# ---------------------------------------------------------------------------

def _canonical_pair(num, den):
    if not den:
        raise ZeroDivisionError("zero denominator")
    if not num:
        return {}, dict(PONE)
    mn = _min_exps(num)
    md = _min_exps(den)
    npoly = _mshift(num, _mono_neg(mn)) if mn else dict(num)
    dpoly = _mshift(den, _mono_neg(md)) if md else dict(den)
    g = _pgcd(npoly, dpoly)
    if g and g != PONE and (len(g) > 1 or next(iter(g.items())) != ((), G1)):
        npoly = _pdiv_exact(npoly, g)
        dpoly = _pdiv_exact(dpoly, g)
    gc = _ggcd(_gcontent(npoly), _gcontent(dpoly))
    if gc not in (G1, G0):
        npoly = {k: _gdiv_exact(c, gc) for k, c in npoly.items()}
        dpoly = {k: _gdiv_exact(c, gc) for k, c in dpoly.items()}
    lk, lc = _lead(dpoly, _nvars(dpoly))
    u = _gunit_for(lc)
    if u != G1:
        npoly = pscale(npoly, u)
        dpoly = pscale(dpoly, u)
    shift = _mono_mul(mn, _mono_neg(md)) if (mn or md) else ()
    if shift:
        npoly = _mshift(npoly, shift)
    return npoly, dpoly


class Scalar:
    """An element of the exact coefficient field, in reduced canonical form."""

    __slots__ = ("num", "den", "_key")

    def __init__(self, num, den=None, _canonical=False):
        if den is None:
            den = dict(PONE)
        if not _canonical:
            num, den = _canonical_pair(num, den)
        self.num = num
        self.den = den
        self._key = None

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def integer(k: int) -> "Scalar":
        if k == 0:
            return Scalar({}, dict(PONE), _canonical=True)
        return Scalar({(): (k, 0)}, dict(PONE), _canonical=True)

    @staticmethod
    def gauss(re: int, im: int) -> "Scalar":
        if re == 0 and im == 0:
            return Scalar({}, dict(PONE), _canonical=True)
        return Scalar({(): (re, im)}, dict(PONE), _canonical=True)

    @staticmethod
    def rational(value) -> "Scalar":
        f = Fraction(value)
        return Scalar({(): (f.numerator, 0)}, {(): (f.denominator, 0)})

    @staticmethod
    def v_power(k: int) -> "Scalar":
        if k >= 0:
            return Scalar({(k,) if k else (): G1}, dict(PONE), _canonical=True)
        return Scalar({(k,): G1}, dict(PONE), _canonical=True)

    @staticmethod
    def q_power(z) -> "Scalar":
        """q**z for a half-integer z (so v**(2z) with integer exponent)."""
        t = Fraction(z) * 2
        if t.denominator != 1:
            raise ValueError("q-exponent must be a half-integer")
        return Scalar.v_power(int(t))

    @staticmethod
    def L_power(j: int, k: int) -> "Scalar":
        if j < 1:
            raise ValueError("L-symbol index starts at 1")
        if k == 0:
            return ONE
        mono = (0,) * j + (k,)
        return Scalar({mono: G1}, dict(PONE), _canonical=True)

    # -- structure -----------------------------------------------------------

    def key(self):
        if self._key is None:
            self._key = (
                tuple(sorted(self.num.items())),
                tuple(sorted(self.den.items())),
            )
        return self._key

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Scalar._promote(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    # -- field operations ------------------------------------------------------

    @staticmethod
    def _promote(x):
        if isinstance(x, Scalar):
            return x
        if isinstance(x, int):
            return Scalar.integer(x)
        if isinstance(x, Fraction):
            return Scalar.rational(x)
        return NotImplemented

    def __add__(self, other):
        other = Scalar._promote(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return Scalar(padd(self.num, other.num), dict(self.den))
        num = padd(pmul(self.num, other.den), pmul(other.num, self.den))
        return Scalar(num, pmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(pneg(self.num), dict(self.den), _canonical=True)

    def __sub__(self, other):
        other = Scalar._promote(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Scalar._promote(other) - self

    def __mul__(self, other):
        other = Scalar._promote(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(pmul(self.num, other.num), pmul(self.den, other.den))

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self.num:
            raise ZeroDivisionError("inverse of zero scalar")
        return Scalar(dict(self.den), dict(self.num))

    def __truediv__(self, other):
        other = Scalar._promote(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Scalar._promote(other) * self.inverse()

    def __pow__(self, k: int):
        if k == 0:
            return ONE
        base = self if k > 0 else self.inverse()
        out = base
        for _ in range(abs(k) - 1):
            out = out * base
        return out

    # -- serialization ---------------------------------------------------------

    def __str__(self):
        if not self.num:
            return "0"
        s_num = _poly_str(self.num)
        if self.den == PONE:
            return s_num
        return "( %s ) / ( %s )" % (_poly_str(self.num, bare=True), _poly_str(self.den, bare=True))

    __repr__ = __str__


def _gauss_str(c):
    re, im = c
    if im == 0:
        return str(re)
    if re == 0:
        if im == 1:
            return "i"
        if im == -1:
            return "-i"
        return "%di" % im
    sign = "+" if im > 0 else "-"
    istr = "i" if abs(im) == 1 else "%di" % abs(im)
    return "(%d%s%s)" % (re, sign, istr)


def _poly_str(p, bare=False):
    nv = _nvars(p)
    keys = sorted(p, key=lambda t: _okey(t, nv), reverse=True)
    parts = []
    for k in keys:
        c = p[k]
        factors = []
        kk = _okey(k, nv)
        if nv >= 1 and kk[0]:
            factors.append("v^%d" % kk[0])
        for j in range(1, nv):
            if kk[j]:
                factors.append("L%d^%d" % (j, kk[j]))
        cs = _gauss_str(c)
        if factors:
            if cs == "1":
                term = " ".join(factors)
            elif cs == "-1":
                term = "-" + " ".join(factors)
            else:
                term = cs + " " + " ".join(factors)
        else:
            term = cs
        parts.append(term)
    out = parts[0]
    for t in parts[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    if bare:
        return out
    return "( %s )" % out if len(parts) > 1 else out


ZERO = Scalar.integer(0)
ONE = Scalar.integer(1)
I_UNIT = Scalar.gauss(0, 1)
V = Scalar.v_power(1)


def theta() -> Scalar:
    """q^{1/2} - q^{-1/2}, the basic deformation gap."""
    return Scalar.v_power(1) - Scalar.v_power(-1)


# ---------------------------------------------------------------------------
# Specialization modes
# ---------------------------------------------------------------------------

_QQi = tuple  # (Fraction, Fraction)


def qqi(re=0, im=0):
    return (Fraction(re), Fraction(im))


def qqi_add(a, b):
    return (a[0] + b[0], a[1] + b[1])


def qqi_sub(a, b):
    return (a[0] - b[0], a[1] - b[1])


def qqi_mul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def qqi_inv(a):
    n = a[0] * a[0] + a[1] * a[1]
    if n == 0:
        raise ZeroDivisionError("inverse of zero")
    return (a[0] / n, -a[1] / n)


def qqi_pow(a, k: int):
    if k < 0:
        a = qqi_inv(a)
        k = -k
    out = qqi(1)
    while k:
        if k & 1:
            out = qqi_mul(out, a)
        a = qqi_mul(a, a)
        k >>= 1
    return out


QQI_ZERO = qqi(0)
QQI_ONE = qqi(1)


@dataclass(frozen=True)
class SpecMode:
    """Which specialization is applied to the symbols L_j (and optionally v).

    kind is one of "generic", "specialized", "numeric".  In specialized and
    numeric modes all L_j are sent to sigma*i*v^{-1}; numeric mode further
    evaluates v at a fixed Gaussian rational v0.
    """

    kind: str
    sigma: int = 1
    v0: tuple = None

    @staticmethod
    def generic() -> "SpecMode":
        return SpecMode("generic")

    @staticmethod
    def specialized(sigma: int = 1) -> "SpecMode":
        if sigma not in (1, -1):
            raise ValueError("branch sign must be +1 or -1")
        return SpecMode("specialized", sigma)

    @staticmethod
    def numeric(v0, sigma: int = 1, order_bound: int = 24) -> "SpecMode":
        if sigma not in (1, -1):
            raise ValueError("branch sign must be +1 or -1")
        if not isinstance(v0, tuple):
            v0 = qqi(Fraction(v0), 0)
        else:
            v0 = (Fraction(v0[0]), Fraction(v0[1]))
        if v0 == QQI_ZERO:
            raise ValueError("v0 must be nonzero")
        w = v0
        for _ in range(order_bound):
            if w == QQI_ONE:
                raise ValueError("v0 must not be a root of unity")
            w = qqi_mul(w, v0)
        return SpecMode("numeric", sigma, v0)

    @property
    def is_symbolic(self):
        return self.kind != "numeric"

    def label(self) -> str:
        if self.kind == "generic":
            return "generic"
        if self.kind == "specialized":
            return "specialized(sigma=%+d)" % self.sigma
        re, im = self.v0
        vs = str(re) if im == 0 else "%s%+si" % (re, im)
        return "numeric(v0=%s, sigma=%+d)" % (vs, self.sigma)


def _spec_mono_sigma(k, sigma):
    """Image of a monomial under L_j -> sigma*i*v^{-1}: (new v-exp, unit)."""
    lsum = sum(k[1:]) if len(k) > 1 else 0
    vexp = (k[0] if k else 0) - lsum
    r = lsum % 4
    unit = _UNITS[r]  # i^r
    if sigma < 0 and lsum % 2:
        unit = _gneg(unit)
    return vexp, unit


def _spec_poly_sigma(p, sigma):
    out: dict = {}
    for k, c in p.items():
        vexp, unit = _spec_mono_sigma(k, sigma)
        key = (vexp,) if vexp else ()
        s = _gadd(out.get(key, G0), _gmul(c, unit))
        if s == G0:
            out.pop(key, None)
        else:
            out[key] = s
    return out


def peval_qqi(p, v0, lvals=None):
    """Evaluate a Laurent polynomial at v = v0 (and L_j = lvals[j-1])."""
    acc = QQI_ZERO
    for k, c in p.items():
        term = qqi_pow(v0, k[0] if k else 0)
        if len(k) > 1:
            if lvals is None:
                raise ValueError("polynomial has L-symbols but no L-values given")
            for j in range(1, len(k)):
                if k[j]:
                    term = qqi_mul(term, qqi_pow(lvals[j - 1], k[j]))
        acc = qqi_add(acc, qqi_mul(term, (Fraction(c[0]), Fraction(c[1]))))
    return acc


def scalar_from_qqi(x) -> Scalar:
    re, im = x
    d = re.denominator * im.denominator // _int_gcd(re.denominator, im.denominator)
    num = {(): (int(re * d), int(im * d))}
    if num[()] == G0:
        return ZERO
    return Scalar(num, {(): (d, 0)})


def _int_gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def specialize(s: Scalar, mode: SpecMode) -> Scalar:
    """Apply the mode's ring homomorphism and re-canonicalize."""
    if mode.kind == "generic":
        return s
    num = _spec_poly_sigma(s.num, mode.sigma)
    den = _spec_poly_sigma(s.den, mode.sigma)
    if not den:
        raise ZeroDivisionError("denominator vanishes under specialization")
    if mode.kind == "specialized":
        return Scalar(num, den)
    nv = peval_qqi(num, mode.v0)
    dv = peval_qqi(den, mode.v0)
    if dv == QQI_ZERO:
        raise ZeroDivisionError("denominator vanishes at the numeric point")
    return scalar_from_qqi(qqi_mul(nv, qqi_inv(dv)))


def scalar_to_qqi(s: Scalar, mode: SpecMode):
    """Numeric value of a scalar under a numeric mode."""
    if mode.kind != "numeric":
        raise ValueError("numeric mode required")
    num = _spec_poly_sigma(s.num, mode.sigma)
    den = _spec_poly_sigma(s.den, mode.sigma)
    dv = peval_qqi(den, mode.v0)
    if dv == QQI_ZERO:
        raise ZeroDivisionError("denominator vanishes at the numeric point")
    return qqi_mul(peval_qqi(num, mode.v0), qqi_inv(dv))


# ---------------------------------------------------------------------------
# q-numbers
# ---------------------------------------------------------------------------

def qnum(z, shift: Scalar = None) -> Scalar:
    """[z]_q = (q^z - q^{-z}) / (q - q^{-1}), optionally with a Cartan shift.

    With a shift eigenvalue s the value is (s*v^{2z} - s^{-1}*v^{-2z}) over
    the same denominator, which is how Cartan-shifted q-numbers evaluate on
    a weight vector.
    """
    t = Fraction(z) * 2
    if t.denominator != 1:
        raise ValueError("q-number argument must be a half-integer")
    t = int(t)
    den = Scalar.v_power(2) - Scalar.v_power(-2)
    if shift is None:
        if t == 0:
            return ZERO
        num = Scalar.v_power(t) - Scalar.v_power(-t)
        return num / den
    num = shift * Scalar.v_power(t) - shift.inverse() * Scalar.v_power(-t)
    return num / den


def qfact(m: int) -> Scalar:
    """The q-factorial [m]_q! = [1]_q [2]_q ... [m]_q."""
    if m < 0:
        raise ValueError("q-factorial of a negative integer")
    out = ONE
    for l in range(1, m + 1):
        out = out * qnum(l)
    return out
