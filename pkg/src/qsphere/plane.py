"""The quantum Euclidean plane on 2n+1 coordinates as a module algebra.

Coordinates x_{-n}, ..., x_0, ..., x_n carry the weights +-eps_i (x_0 is
weightless).  Products are normal-ordered with ascending indices; the
exchange rules couple each mirror pair (x_j, x_{-j}) to the pairs below it,
so normal forms of mirror swaps cascade down to x_0^2.  The quantum group
acts by the displayed generator rules extended through the comultiplication,
which makes the plane a module algebra; the star product twists the plain
multiplication by the inverse-form tensor.
"""

from __future__ import annotations

from .scalars import ONE, ZERO, Scalar, SpecMode, scalar_to_qqi
from .words import AlgElt, alpha_vec

_Q = Scalar.v_power(2)
_QBAR = Scalar.v_power(-2)
_QM1 = _Q - ONE  # q - 1


def index_weight(k: int, n: int):
    """Weight coordinates of x_k."""
    w = [0] * n
    if k > 0:
        w[k - 1] = 1
    elif k < 0:
        w[-k - 1] = -1
    return tuple(w)


def word_weight(word, n):
    w = [0] * n
    for k in word:
        if k > 0:
            w[k - 1] += 1
        elif k < 0:
            w[-k - 1] -= 1
    return tuple(w)


_NF_CACHE: dict = {}


def normalize_word(word, n) -> dict:
    """Normal form of a coordinate word as {exponent tuple: Scalar}."""
    word = tuple(word)
    key = (n, word)
    out = _NF_CACHE.get(key)
    if out is not None:
        return out
    pos = -1
    for t in range(len(word) - 1):
        if word[t] > word[t + 1]:
            pos = t
            break
    if pos < 0:
        out = {_word_mono(word, n): ONE}
    else:
        i, j = word[pos], word[pos + 1]
        head, tail = word[:pos], word[pos + 2 :]
        if i != -j:
            out = _scaled(normalize_word(head + (j, i) + tail, n), _QBAR)
        else:
            jj = i  # i = jj > 0, j = -jj
            acc = dict(normalize_word(head + (-jj, jj) + tail, n))
            if jj == 1:
                _acc_add(acc, normalize_word(head + (0, 0) + tail, n), _QM1)
            else:
                _acc_add(acc, normalize_word(head + (jj - 1, -jj + 1) + tail, n), _Q)
                _acc_add(acc, normalize_word(head + (-jj + 1, jj - 1) + tail, n), -_QBAR)
            out = {m: c for m, c in acc.items() if c}
    _NF_CACHE[key] = out
    return out


def _word_mono(word, n):
    exps = [0] * (2 * n + 1)
    for k in word:
        exps[k + n] += 1
    return tuple(exps)


def _mono_word(mono, n):
    out = []
    for idx, e in enumerate(mono):
        out.extend([idx - n] * e)
    return tuple(out)


def _scaled(d, c):
    return {m: c * cc for m, cc in d.items()}


def _acc_add(acc, d, c=None):
    for m, cc in d.items():
        val = cc if c is None else c * cc
        cur = acc.get(m)
        cur = val if cur is None else cur + val
        if cur:
            acc[m] = cur
        else:
            acc.pop(m, None)


class PlanePoly:
    """Scalar combination of normal-ordered coordinate monomials."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms = {}
        if terms:
            for m, c in terms.items():
                if not isinstance(c, Scalar):
                    c = Scalar._promote(c)
                if c:
                    self.terms[tuple(m)] = c

    @staticmethod
    def unit(n) -> "PlanePoly":
        return PlanePoly(n, {(0,) * (2 * n + 1): ONE})

    @staticmethod
    def coordinate(k, n) -> "PlanePoly":
        return PlanePoly(n, {_word_mono((k,), n): ONE})

    @staticmethod
    def from_word(word, n) -> "PlanePoly":
        p = PlanePoly(n)
        p.terms = dict(normalize_word(word, n))
        return p

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, PlanePoly) and self.n == other.n and self.terms == other.terms

    def __add__(self, other):
        out = PlanePoly(self.n)
        out.terms = dict(self.terms)
        _acc_add(out.terms, other.terms)
        return out

    def __neg__(self):
        out = PlanePoly(self.n)
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, c) -> "PlanePoly":
        if not isinstance(c, Scalar):
            c = Scalar._promote(c)
        out = PlanePoly(self.n)
        if c:
            out.terms = {m: c * cc for m, cc in self.terms.items()}
        return out

    def __mul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self.scaled(other)
        n = self.n
        acc: dict = {}
        for m1, c1 in self.terms.items():
            w1 = _mono_word(m1, n)
            for m2, c2 in other.terms.items():
                nf = normalize_word(w1 + _mono_word(m2, n), n)
                _acc_add(acc, nf, c1 * c2)
        out = PlanePoly(n)
        out.terms = {m: c for m, c in acc.items() if c}
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = PlanePoly.unit(self.n)
        for _ in range(k):
            out = out * self
        return out

    def degree(self):
        return max((sum(m) for m in self.terms), default=0)

    def weight_components(self):
        comps: dict = {}
        for m, c in self.terms.items():
            w = word_weight(_mono_word(m, self.n), self.n)
            comps.setdefault(w, {})[m] = c
        return comps

    def map_coeffs(self, fn) -> "PlanePoly":
        out = PlanePoly(self.n)
        for m, c in self.terms.items():
            v = fn(c)
            if v:
                out.terms[m] = v
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            c = self.terms[m]
            factors = []
            for idx, e in enumerate(m):
                if e:
                    factors.append("x[%d]^%d" % (idx - self.n, e))
            mono = " ".join(factors) if factors else "1"
            parts.append("%s * %s" % (c, mono))
        return "  +  ".join(parts)

    __repr__ = __str__


# ---------------------------------------------------------------------------
# The quantum-group action
# ---------------------------------------------------------------------------

def _e_on_coord(i, k):
    """e_{alpha_i} on x_k: sends x_{i-1} to x_i and x_{-i} to -x_{-i+1}."""
    if k == i - 1:
        return (i, ONE)
    if k == -i:
        return (-i + 1, -ONE)
    return None


def _f_on_coord(i, k):
    """f_{alpha_i} on x_k: sends x_i to x_{i-1} and x_{-i+1} to -x_{-i}."""
    if k == i:
        return (i - 1, ONE)
    if k == -i + 1:
        return (-i, -ONE)
    return None


def act_gen_on_word(g, word, n) -> dict:
    """Action of one generator on a raw coordinate word, via the iterated
    comultiplication; returns accumulated normal-form terms."""
    word = tuple(word)
    kind = g[0]
    acc: dict = {}
    if kind == "K":
        mu = g[1]
        w = word_weight(word, n)
        e = 2 * sum(a * b for a, b in zip(mu, w))
        fac = Scalar.v_power(e) if e else ONE
        _acc_add(acc, normalize_word(word, n), fac)
        return acc
    i = g[1]
    av = alpha_vec(i, n)
    if kind == "e":
        suff = 0  # 2*(alpha_i, weight of the suffix), accumulated from the right
        for t in range(len(word) - 1, -1, -1):
            k = word[t]
            hit = _e_on_coord(i, k)
            if hit is not None:
                nk, sgn = hit
                nf = normalize_word(word[:t] + (nk,) + word[t + 1 :], n)
                _acc_add(acc, nf, sgn * Scalar.v_power(suff))
            wk = index_weight(k, n)
            suff += 2 * sum(a * b for a, b in zip(av, wk))
    else:
        pref = 0  # -2*(alpha_i, weight of the prefix), accumulated from the left
        for t in range(len(word)):
            k = word[t]
            hit = _f_on_coord(i, k)
            if hit is not None:
                nk, sgn = hit
                nf = normalize_word(word[:t] + (nk,) + word[t + 1 :], n)
                _acc_add(acc, nf, sgn * Scalar.v_power(pref))
            wk = index_weight(k, n)
            pref -= 2 * sum(a * b for a, b in zip(av, wk))
    return acc


def act_generator(g, p: PlanePoly) -> PlanePoly:
    """Action of a single algebra generator through the comultiplication."""
    n = p.n
    acc: dict = {}
    for m, c in p.terms.items():
        for tm, tc in act_gen_on_word(g, _mono_word(m, n), n).items():
            cur = acc.get(tm)
            cur = c * tc if cur is None else cur + c * tc
            if cur:
                acc[tm] = cur
            else:
                acc.pop(tm, None)
    out = PlanePoly(n)
    out.terms = acc
    return out


def act(x: AlgElt, p: PlanePoly) -> PlanePoly:
    """Action of a word-algebra element: words compose right to left."""
    acc = PlanePoly(p.n)
    for w, c in x.terms.items():
        cur = p
        for g in reversed(w):
            cur = act_generator(g, cur)
            if cur.is_zero():
                break
        if not cur.is_zero():
            acc = acc + cur.scaled(c)
    return acc


def casimir(n: int) -> PlanePoly:
    """The quadratic invariant (1/(1+q)) x_0^2 + sum_i q^{i-1} x_i x_{-i}."""
    if n < 1:
        raise ValueError("rank must be at least 1")
    inv = ONE / (ONE + _Q)
    out = PlanePoly.from_word((0, 0), n).scaled(inv)
    for i in range(1, n + 1):
        out = out + PlanePoly.from_word((i, -i), n).scaled(Scalar.v_power(2 * (i - 1)))
    return out


def chev_twist(x: AlgElt) -> AlgElt:
    """Algebra automorphism e -> -f, f -> -e, K -> K^{-1} (the plane-side
    compatibility twist; involutive)."""
    out = AlgElt()
    terms = {}
    for w, c in x.terms.items():
        sign = 1
        nw = []
        for g in w:
            if g[0] == "K":
                nw.append(("K", tuple(-a for a in g[1])))
            elif g[0] == "e":
                nw.append(("f", g[1]))
                sign = -sign
            else:
                nw.append(("e", g[1]))
                sign = -sign
        cc = c if sign > 0 else -c
        cur = terms.get(tuple(nw))
        cur = cc if cur is None else cur + cc
        if cur:
            terms[tuple(nw)] = cur
        else:
            terms.pop(tuple(nw), None)
    out.terms = terms
    return out


def iota(p: PlanePoly) -> PlanePoly:
    """Anti-algebra involution x_k -> x_{-k}."""
    n = p.n
    acc: dict = {}
    for m, c in p.terms.items():
        word = _mono_word(m, n)
        rword = tuple(-k for k in reversed(word))
        _acc_add(acc, normalize_word(rword, n), c)
    out = PlanePoly(n)
    out.terms = {m: c for m, c in acc.items() if c}
    return out


# ---------------------------------------------------------------------------
# Star product
# ---------------------------------------------------------------------------

def star(p: PlanePoly, r: PlanePoly, F) -> PlanePoly:
    """Twisted multiplication: contract the inverse-form tensor through the
    action and multiply the halves.

    Exactness of the truncation needs F.D >= 2*min(deg p, deg r): a raising
    (or lowering) monomial of total degree beyond twice the polynomial degree
    annihilates it, by the weight-height bound on a fixed-degree component.
    """
    need = 2 * min(p.degree(), r.degree())
    if F.D < need:
        raise ValueError(
            "tensor truncation %d is insufficient; need at least %d" % (F.D, need)
        )
    acc = PlanePoly(p.n)
    for m, c, ep, fp in F.entries:
        left = act(ep, p)
        if left.is_zero():
            continue
        right = act(fp, r)
        if right.is_zero():
            continue
        acc = acc + (left * right).scaled(c)
    return acc


# ---------------------------------------------------------------------------
# Exact linear algebra over the plane (numeric points)
# ---------------------------------------------------------------------------

def monomials_of_degree(n, deg, weight=None):
    """All exponent tuples of total degree deg (optionally of fixed weight)."""
    out = []
    nvars = 2 * n + 1

    def rec(prefix, left):
        if len(prefix) == nvars - 1:
            out.append(tuple(prefix) + (left,))
            return
        for k in range(left + 1):
            rec(prefix + [k], left - k)

    rec([], deg)
    if weight is not None:
        out = [m for m in out if word_weight(_mono_word(m, n), n) == tuple(weight)]
    return sorted(out)


def nullspace_qqi(rows, ncols):
    """Kernel basis of a matrix over the Gaussian rationals (row echelon)."""
    from .scalars import QQI_ONE, QQI_ZERO, qqi_inv, qqi_mul, qqi_sub

    m = [list(r) for r in rows]
    pivots = []
    row = 0
    for col in range(ncols):
        piv = None
        for r in range(row, len(m)):
            if m[r][col] != QQI_ZERO:
                piv = r
                break
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = qqi_inv(m[row][col])
        m[row] = [qqi_mul(inv, x) for x in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col] != QQI_ZERO:
                f = m[r][col]
                m[r] = [qqi_sub(a, qqi_mul(f, b)) for a, b in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [QQI_ZERO] * ncols
        vec[fc] = QQI_ONE
        for r, pc in enumerate(pivots):
            coeff = m[r][fc]
            if coeff != QQI_ZERO:
                vec[pc] = qqi_sub(QQI_ZERO, coeff)
        basis.append(vec)
    return basis


def isotropy_operators(n) -> list:
    """The operator families cutting out the deformed-isotropy invariants:
    raising/lowering for the diagonal block plus the two doubled-root vectors."""
    from .words import root_vector

    ops = []
    for i in range(2, n + 1):
        ops.append(AlgElt.e(i))
        ops.append(AlgElt.f(i))
    ops.append(root_vector("e_delta", 1, n))
    ops.append(root_vector("f_delta", 1, n))
    return ops


class InvariantSlice:
    """Joint-kernel data for the degree-m invariants."""

    __slots__ = ("n", "m", "dimension", "basis_monos", "kernel", "candidates_inside", "candidates_independent")

    def __init__(self, n, m, dimension, basis_monos, kernel, inside, independent):
        self.n = n
        self.m = m
        self.dimension = dimension
        self.basis_monos = basis_monos
        self.kernel = kernel
        self.candidates_inside = inside
        self.candidates_independent = independent

    def basis_polys(self):
        """Kernel basis as plane polynomials (constant exact coefficients)."""
        from .scalars import QQI_ZERO, scalar_from_qqi

        out = []
        for vec in self.kernel:
            p = PlanePoly(self.n)
            for mono, val in zip(self.basis_monos, vec):
                if val != QQI_ZERO:
                    p.terms[mono] = scalar_from_qqi(val)
            out.append(p)
        return out


def candidate_invariants(n, m):
    """The spanning candidates C^l x_0^{m-2l}, l = 0..floor(m/2), symbolic."""
    C = casimir(n)
    x0 = PlanePoly.coordinate(0, n)
    out = []
    for l in range(m // 2 + 1):
        out.append((C ** l) * (x0 ** (m - 2 * l)))
    return out


def invariant_subspace(n, m, v0s=(2, 3), sigma=1):
    """Dimension and basis of the weight-zero degree-m joint kernel.

    The kernel is computed by exact linear algebra at each numeric point;
    the symbolic candidates are checked to lie inside (by applying every
    cutting operator symbolically) and to be independent at the points.
    """
    from .scalars import QQI_ZERO
    from .verma import rank_gauss, _qqi_rows_to_gauss

    basis = monomials_of_degree(n, m, weight=(0,) * n)
    ops = isotropy_operators(n)
    dims = []
    kernels = []
    for v0 in v0s:
        mode = SpecMode.numeric(v0, sigma)
        rows = []
        for op in ops:
            rows.extend(operator_matrix(op, basis, n, mode))
        if not rows:
            rows = [[QQI_ZERO] * len(basis)]
        ker = nullspace_qqi(rows, len(basis))
        dims.append(len(ker))
        kernels.append(ker)
    if len(set(dims)) != 1:
        raise RuntimeError("kernel dimensions disagree across numeric points: %r" % dims)

    cands = candidate_invariants(n, m)
    inside = all(act(op, c).is_zero() for c in cands for op in ops)
    # independence: coordinates of the candidates at each numeric point
    independent = True
    for v0 in v0s:
        mode = SpecMode.numeric(v0, sigma)
        rows = []
        for c in cands:
            rows.append([scalar_to_qqi(c.terms.get(mono, ZERO), mode) for mono in basis])
        if rank_gauss(_qqi_rows_to_gauss(rows)) != len(cands):
            independent = False
    return InvariantSlice(n, m, dims[0], basis, kernels[0], inside, independent)


def operator_matrix(op: AlgElt, basis_monos, n, mode: SpecMode):
    """Matrix of an algebra element on a monomial list at a numeric point;
    rows are indexed by the target monomials that actually occur."""
    from .scalars import QQI_ZERO

    targets: dict = {}
    entries = []  # per column: dict row index -> value
    for m in basis_monos:
        p = PlanePoly(n, {m: ONE})
        img = act(op, p)
        col: dict = {}
        for tm, c in img.terms.items():
            v = scalar_to_qqi(c, mode)
            if v != QQI_ZERO:
                if tm not in targets:
                    targets[tm] = len(targets)
                col[targets[tm]] = v
        entries.append(col)

    nrows = len(targets)
    rows = [[QQI_ZERO] * len(basis_monos) for _ in range(nrows)]
    for cidx, col in enumerate(entries):
        for ridx, v in col.items():
            rows[ridx][cidx] = v
    return rows
