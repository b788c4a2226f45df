"""Free associative algebra on the quantum-group generators.

Words are tuples of generator tokens ('e', i), ('f', i) and ('K', mu) with
mu an integer vector in the orthogonal weight basis.  No relations are
imposed here: equality statements about the enveloping algebra are decided
downstream by pairing oracles, never by rewriting.  This module supplies
q-commutators, the composite root vectors attached to the short weight
coordinates, the Chevalley anti-involution and the antipode.
"""

from __future__ import annotations

from . import scalars
from .scalars import ONE, Scalar


def gen_e(i: int):
    return ("e", i)


def gen_f(i: int):
    return ("f", i)


def gen_k(mu) -> tuple:
    return ("K", tuple(mu))


def alpha_vec(i: int, n: int) -> tuple:
    """Coordinates of the i-th simple root in the orthogonal basis."""
    if not 1 <= i <= n:
        raise ValueError("simple-root index out of range")
    if i == 1:
        return (1,) + (0,) * (n - 1)
    out = [0] * n
    out[i - 1] = 1
    out[i - 2] = -1
    return tuple(out)


def cartan_pairing(i: int, j: int) -> int:
    """(alpha_i, alpha_j) with short roots of square length 1."""
    if i == j:
        return 1 if i == 1 else 2
    if abs(i - j) == 1:
        return -1
    return 0


class Weight:
    """An integer weight in the orthogonal basis, optionally relative to the
    highest weight of the module under study."""

    __slots__ = ("coords", "relative")

    def __init__(self, coords, relative=True):
        self.coords = tuple(coords)
        self.relative = relative

    def __eq__(self, other):
        return (
            isinstance(other, Weight)
            and self.coords == other.coords
            and self.relative == other.relative
        )

    def __hash__(self):
        return hash((self.coords, self.relative))

    def __add__(self, other):
        if self.relative != other.relative and self.relative and other.relative:
            raise ValueError("cannot add two lambda-relative weights")
        return Weight(
            tuple(a + b for a, b in zip(self.coords, other.coords)),
            self.relative or other.relative,
        )

    def height(self) -> int:
        return sum(abs(c) for c in self.coords)

    def __repr__(self):
        tag = "lambda+" if self.relative else ""
        return "Weight(%s%s)" % (tag, list(self.coords))


def weight_of(word, n: int) -> Weight:
    """Sum of generator weights; K-letters are weightless."""
    coords = [0] * n
    for g in word:
        kind = g[0]
        if kind == "K":
            continue
        av = alpha_vec(g[1], n)
        s = 1 if kind == "e" else -1
        for idx in range(n):
            coords[idx] += s * av[idx]
    return Weight(coords, relative=False)


class AlgElt:
    """Finite linear combination of free words with scalar coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for w, c in terms.items():
                if not isinstance(c, Scalar):
                    c = Scalar._promote(c)
                if c:
                    self.terms[tuple(w)] = c

    @staticmethod
    def unit() -> "AlgElt":
        return AlgElt({(): ONE})

    @staticmethod
    def generator(g) -> "AlgElt":
        return AlgElt({(g,): ONE})

    @staticmethod
    def e(i: int) -> "AlgElt":
        return AlgElt.generator(gen_e(i))

    @staticmethod
    def f(i: int) -> "AlgElt":
        return AlgElt.generator(gen_f(i))

    @staticmethod
    def K(mu) -> "AlgElt":
        return AlgElt.generator(gen_k(mu))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, AlgElt):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted((w, c.key()) for w, c in self.terms.items())))

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w)
            s = c if s is None else s + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        e = AlgElt()
        e.terms = out
        return e

    def __neg__(self):
        e = AlgElt()
        e.terms = {w: -c for w, c in self.terms.items()}
        return e

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self.scaled(other)
        out: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                s = out.get(w)
                s = c if s is None else s + c
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
        e = AlgElt()
        e.terms = out
        return e

    def __rmul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self.scaled(other)
        return NotImplemented

    def scaled(self, c) -> "AlgElt":
        if not isinstance(c, Scalar):
            c = Scalar._promote(c)
        if not c:
            return AlgElt()
        e = AlgElt()
        e.terms = {w: c * cc for w, cc in self.terms.items()}
        return e

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative word-algebra powers are undefined")
        out = AlgElt.unit()
        for _ in range(k):
            out = out * self
        return out

    # -- structure ------------------------------------------------------------

    def weight(self, n: int) -> Weight:
        """Common weight of all words; raises if the element is mixed."""
        wt = None
        for w in self.terms:
            cur = weight_of(w, n)
            if wt is None:
                wt = cur
            elif cur != wt:
                raise ValueError("element is not weight-homogeneous")
        if wt is None:
            raise ValueError("weight of the zero element is undefined")
        return wt

    def words_are(self, kind: str) -> bool:
        return all(all(g[0] == kind for g in w) for w in self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            ws = " ".join(_gen_str(g) for g in w) if w else "1"
            parts.append("%s * %s" % (c, ws))
        return "  +  ".join(parts)

    __repr__ = __str__


def _gen_str(g):
    if g[0] == "K":
        return "K[%s]" % ",".join(str(c) for c in g[1])
    return "%s%d" % (g[0], g[1])


def qbracket(a: AlgElt, b: AlgElt, c: Scalar) -> AlgElt:
    """[a, b]_c = ab - c*ba."""
    return a * b - (b * a).scaled(c)


_Q = scalars.Scalar.v_power(2)
_QBAR = scalars.Scalar.v_power(-2)

_ROOT_CACHE: dict = {}


def root_vector(kind: str, i: int, n: int) -> AlgElt:
    """Composite root vectors as fully expanded word combinations.

    kind is one of "f_eps", "e_eps", "et_eps" (the twisted raising family),
    "e_delta", "f_delta".  The eps-families nest i simple generators; the
    delta vectors live at the doubled short coordinate sum and need n >= 2.
    """
    key = (kind, i, n)
    cached = _ROOT_CACHE.get(key)
    if cached is not None:
        return cached
    if kind in ("e_delta", "f_delta"):
        if n < 2:
            raise ValueError("delta root vectors need rank >= 2")
        mk = AlgElt.e if kind == "e_delta" else AlgElt.f
        inner = qbracket(mk(1), mk(2), _Q)
        out = qbracket(mk(1), inner, _QBAR)
    else:
        if not 1 <= i <= n:
            raise ValueError("root-vector index out of range")
        if kind == "f_eps":
            out = AlgElt.f(1)
            for j in range(2, i + 1):
                out = qbracket(out, AlgElt.f(j), _QBAR)
        elif kind == "e_eps":
            out = AlgElt.e(i)
            for j in range(i - 1, 0, -1):
                out = qbracket(out, AlgElt.e(j), _Q)
        elif kind == "et_eps":
            out = AlgElt.e(1)
            for j in range(2, i + 1):
                out = qbracket(AlgElt.e(j), out, _QBAR)
        else:
            raise ValueError("unknown root-vector kind %r" % kind)
    _ROOT_CACHE[key] = out
    return out


def omega(x: AlgElt) -> AlgElt:
    """Chevalley anti-involution: reverses words, swaps e <-> f, fixes K."""
    out = AlgElt()
    terms = {}
    for w, c in x.terms.items():
        nw = tuple(_omega_gen(g) for g in reversed(w))
        terms[nw] = c
    out.terms = terms
    return out


def _omega_gen(g):
    kind = g[0]
    if kind == "e":
        return ("f", g[1])
    if kind == "f":
        return ("e", g[1])
    return g


def antipode(x: AlgElt, n: int, inverse: bool = False) -> AlgElt:
    """The antipode (or its inverse) for the fixed comultiplication.

    gamma(e_i) = -e_i K_i^{-1},  gamma(f_i) = -K_i f_i,  gamma(K) = K^{-1};
    the inverse puts the Cartan factor on the other side.
    """
    total = AlgElt()
    for w, c in x.terms.items():
        piece = AlgElt.unit()
        for g in reversed(w):
            piece = piece * _antipode_gen(g, n, inverse)
        total = total + piece.scaled(c)
    return total


def knormal(x: AlgElt, n: int) -> AlgElt:
    """Cartan normal form: commute every K-letter to the right end of its
    word, collecting the q-powers, and merge the K's into a single letter.

    Two words equal in the algebra modulo the Cartan commutation relations
    have identical images, so expansion identities involving K-letters are
    compared after this normalization.
    """
    out = AlgElt()
    terms: dict = {}
    for w, c in x.terms.items():
        mu = [0] * n
        letters = []
        vexp = 0
        for g in w:
            if g[0] == "K":
                for idx, m in enumerate(g[1]):
                    mu[idx] += m
            else:
                if any(mu):
                    av = alpha_vec(g[1], n)
                    dot = sum(m * a for m, a in zip(mu, av))
                    vexp += 2 * dot if g[0] == "e" else -2 * dot
                letters.append(g)
        if any(mu):
            letters.append(gen_k(tuple(mu)))
        nw = tuple(letters)
        cc = c * Scalar.v_power(vexp) if vexp else c
        cur = terms.get(nw)
        cur = cc if cur is None else cur + cc
        if cur:
            terms[nw] = cur
        else:
            terms.pop(nw, None)
    out.terms = terms
    return out


def _antipode_gen(g, n, inverse):
    kind = g[0]
    if kind == "K":
        return AlgElt({(gen_k(tuple(-c for c in g[1])),): ONE})
    i = g[1]
    av = alpha_vec(i, n)
    kneg = gen_k(tuple(-c for c in av))
    kpos = gen_k(av)
    if kind == "e":
        word = (gen_e(i), kneg) if not inverse else (kneg, gen_e(i))
    else:
        word = (kpos, gen_f(i)) if not inverse else (gen_f(i), kpos)
    return AlgElt({word: -ONE})
