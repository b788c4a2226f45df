"""Vacuum evaluation, contravariant forms and the module equality oracle.

The central object is the linear functional that projects a free word in
the generators onto its Cartan part and evaluates at the distinguished
highest weight.  Everything downstream -- the invariant pairing between the
highest- and lowest-weight modules, the contravariant (Shapovalov) form,
Gram matrices, ranks, and the ladder oracle deciding equality inside the
quotient module -- reduces to this functional.

Equality in the enveloping algebra and in the module is *never* decided by
rewriting: an element is declared zero exactly when it pairs to zero with a
spanning family, and the spanning property itself is certified bottom-up by
weight height ("the ladder").  The soundness gate for the whole scheme is
the radical property of the defining relations, which has its own suite.
"""

from __future__ import annotations

from .scalars import (
    G1,
    QQI_ONE,
    QQI_ZERO,
    ONE,
    ZERO,
    Scalar,
    SpecMode,
    pmul,
    qqi,
    qqi_add,
    qqi_inv,
    qqi_mul,
    qqi_sub,
    qqi_pow,
    scalar_from_qqi,
    scalar_to_qqi,
)
from .words import AlgElt, Weight, alpha_vec, antipode, cartan_pairing, omega, root_vector

_QDIFF = {(2,): G1, (-2,): (-1, 0)}  # q - q^{-1} as a Laurent polynomial in v

_qdiff_pows = {0: {(): G1}, 1: dict(_QDIFF)}


def _qdiff_pow(p):
    out = _qdiff_pows.get(p)
    if out is None:
        out = pmul(_qdiff_pow(p - 1), _QDIFF)
        _qdiff_pows[p] = out
    return out


class OracleError(RuntimeError):
    """An oracle precondition failed; results depending on it are void."""


class EvalContext:
    """Rank, specialization mode and cached root data for one suite run."""

    def __init__(self, n: int, mode: SpecMode, max_weight_bound: int = 16):
        if n < 1:
            raise ValueError("rank must be at least 1")
        self.n = n
        self.mode = mode
        self.max_weight_bound = max_weight_bound
        self.alpha = [None] + [alpha_vec(i, n) for i in range(1, n + 1)]
        self.cart = [None] + [
            [0] + [cartan_pairing(i, j) for j in range(1, n + 1)] for i in range(1, n + 1)
        ]
        self._ecoef_cache: dict = {}
        self._rank_gate: dict = {}
        self._pair_memo: dict = {}
        self._numeric = mode.kind == "numeric"
        if self._numeric:
            self._v0 = mode.v0
            self._v0_pows: dict = {0: QQI_ONE}

    # -- numeric helpers ------------------------------------------------------

    def v0_pow(self, k: int):
        out = self._v0_pows.get(k)
        if out is None:
            out = qqi_pow(self._v0, k)
            self._v0_pows[k] = out
        return out

    # -- E-crossing coefficients ----------------------------------------------

    def ecoef(self, i: int, a: int):
        """Coefficient created when a raising letter consumes a matching
        lowering letter over a tail of pairing value a; None when zero.

        In symbolic modes this is the numerator only, one global factor of
        (q - q^{-1}) per raising letter being accounted for separately.
        """
        key = (i, a)
        out = self._ecoef_cache.get(key, False)
        if out is not False:
            return out
        kind = self.mode.kind
        if kind == "specialized":
            if i == 1:
                u = (0, self.mode.sigma)
                out = {(2 * a - 1,): u, (1 - 2 * a,): u}
            elif a == 0:
                out = None
            else:
                out = {(2 * a,): G1, (-2 * a,): (-1, 0)}
        elif kind == "generic":
            if i == 1:
                out = {(2 * a, 1): G1, (-2 * a, -1): (-1, 0)}
            else:
                k1 = [0] * (i + 1)
                k1[0] = 2 * a
                k1[i - 1] = -1
                k1[i] = 1
                k2 = [0] * (i + 1)
                k2[0] = -2 * a
                k2[i - 1] = 1
                k2[i] = -1
                out = {tuple(k1): G1, tuple(k2): (-1, 0)}
        else:  # numeric
            if i > 1 and a == 0:
                out = None
            else:
                if i == 1:
                    lam = qqi_mul(qqi(0, self.mode.sigma), self.v0_pow(-1))
                else:
                    lam = QQI_ONE
                num = qqi_sub(
                    qqi_mul(self.v0_pow(2 * a), lam),
                    qqi_mul(self.v0_pow(-2 * a), qqi_inv(lam)),
                )
                den = qqi_sub(self.v0_pow(2), self.v0_pow(-2))
                out = qqi_mul(num, qqi_inv(den))
                if out == QQI_ZERO:
                    out = None
        self._ecoef_cache[key] = out
        return out

    def kfactor(self, mu, wdot: int):
        """Multiplier for commuting a Cartan letter to the vacuum end:
        q^{(mu, wt)} times the highest-weight eigenvalue of the letter."""
        kind = self.mode.kind
        if kind == "generic":
            key = (2 * wdot,) + tuple(mu)
            while key and key[-1] == 0:
                key = key[:-1]
            return {key: G1}
        s = sum(mu)
        if kind == "specialized":
            r = s % 4
            unit = ((1, 0), (0, 1), (-1, 0), (0, -1))[r]
            if self.mode.sigma < 0 and s % 2:
                unit = (-unit[0], -unit[1])
            e = 2 * wdot - s
            return {((e,) if e else ()): unit}
        unit = qqi_pow(qqi(0, self.mode.sigma), s % 4)
        return qqi_mul(unit, self.v0_pow(2 * wdot - s))


def _estep_poly(state, i, cart_i, ctx):
    out: dict = {}
    for w, c in state.items():
        a = 0
        for t in range(len(w) - 1, -1, -1):
            j = w[t]
            if j == i:
                coef = ctx.ecoef(i, a)
                if coef is not None:
                    nw = w[:t] + w[t + 1 :]
                    nc = pmul(c, coef)
                    s = out.get(nw)
                    if s is None:
                        out[nw] = nc
                    else:
                        for k, g in nc.items():
                            sg = s.get(k)
                            sg = g if sg is None else (sg[0] + g[0], sg[1] + g[1])
                            if sg == (0, 0):
                                s.pop(k, None)
                            else:
                                s[k] = sg
            a -= cart_i[j]
    return {w: c for w, c in out.items() if c}


def _estep_num(state, i, cart_i, ctx):
    out: dict = {}
    for w, c in state.items():
        a = 0
        for t in range(len(w) - 1, -1, -1):
            j = w[t]
            if j == i:
                coef = ctx.ecoef(i, a)
                if coef is not None:
                    nw = w[:t] + w[t + 1 :]
                    nc = qqi_mul(c, coef)
                    s = out.get(nw)
                    out[nw] = nc if s is None else qqi_add(s, nc)
            a -= cart_i[j]
    return {w: c for w, c in out.items() if c != QQI_ZERO}


def _kstep(state, mu, ctx):
    n = ctx.n
    dots = [0] * (n + 1)
    for j in range(1, n + 1):
        aj = ctx.alpha[j]
        dots[j] = sum(m * a for m, a in zip(mu, aj))
    out = {}
    numeric = ctx._numeric
    for w, c in state.items():
        wdot = -sum(dots[j] for j in w)
        fac = ctx.kfactor(mu, wdot)
        out[w] = qqi_mul(c, fac) if numeric else pmul(c, fac)
    return out


def _vacuum_word_raw(word, ctx):
    """Evaluate one free word; returns (raw coefficient or None, e-count)."""
    numeric = ctx._numeric
    state = {(): QQI_ONE if numeric else {(): G1}}
    p = 0
    estep = _estep_num if numeric else _estep_poly
    for g in reversed(word):
        kind = g[0]
        if kind == "f":
            state = {(g[1],) + w: c for w, c in state.items()}
        elif kind == "e":
            p += 1
            state = estep(state, g[1], ctx.cart[g[1]], ctx)
            if not state:
                return None, p
        else:
            state = _kstep(state, g[1], ctx)
    return state.get(()), p


def vacuum_eval(x: AlgElt, ctx: EvalContext) -> Scalar:
    """Cartan projection of an algebra element, evaluated at the weight."""
    if ctx._numeric:
        acc = QQI_ZERO
        for w, c in x.terms.items():
            val, _p = _vacuum_word_raw(w, ctx)
            if val is not None:
                acc = qqi_add(acc, qqi_mul(scalar_to_qqi(c, ctx.mode), val))
        return scalar_from_qqi(acc)
    total = ZERO
    for w, c in x.terms.items():
        num, p = _vacuum_word_raw(w, ctx)
        if num:
            total = total + c * Scalar(num, _qdiff_pow(p))
    return total


# ---------------------------------------------------------------------------
# Pairings of lowering-word combinations (the hot path)
# ---------------------------------------------------------------------------

def _pure_f_indices(x: AlgElt):
    """As a list of (index word, coefficient); None if not a pure f-element."""
    out = []
    for w, c in x.terms.items():
        idx = []
        for g in w:
            if g[0] != "f":
                return None
            idx.append(g[1])
        out.append((tuple(idx), c))
    return out


def _build_trie(terms):
    """Prefix trie over token words; per node, the maximal number of raising
    letters remaining below it (for state pruning)."""
    root: dict = {"d": 0}
    for w, c in terms:
        node = root
        for letter in w:
            nxt = node.get(letter)
            if nxt is None:
                nxt = {"d": 0}
                node[letter] = nxt
            node = nxt
        node.setdefault("end", []).append(c)

    def _depth(node):
        d = 0
        for key, child in node.items():
            if key in ("d", "end"):
                continue
            own = 1 if key[0] == "e" else 0
            d = max(d, own + _depth(child))
        node["d"] = d
        return d

    _depth(root)
    return root


def _left_token_words(x: AlgElt):
    """Words of a left factor as token tuples in processing order (right to
    left); None if any lowering letter appears."""
    out = []
    for w, c in x.terms.items():
        for g in w:
            if g[0] == "f":
                return None
        out.append((tuple(reversed(w)), c))
    return out


def pair_lowering(x: AlgElt, y: AlgElt, ctx: EvalContext) -> Scalar:
    """<omega(x) y> for pure lowering elements x, y, with shared-state
    evaluation across all words of both sides."""
    xt = _pure_f_indices(x)
    if xt is None:
        return vacuum_eval(omega(x) * y, ctx)
    left = [(tuple(("e", j) for j in w), c) for w, c in xt]
    return pair_left(left, y, ctx)


def pair_left(left, y: AlgElt, ctx: EvalContext) -> Scalar:
    """<L y> for a left factor without lowering letters and a pure lowering
    element y; left is a list of (token word in processing order, coeff)."""
    yt = _pure_f_indices(y)
    if yt is None:
        raise ValueError("the right factor must be a pure lowering element")
    if not left or not yt:
        return ZERO
    numeric = ctx._numeric

    # group the y-side by coefficient denominator so state coefficients stay
    # polynomial in symbolic modes
    total = ZERO
    acc_num = QQI_ZERO
    groups: dict = {}
    if numeric:
        state0 = {}
        for w, c in yt:
            cv = scalar_to_qqi(c, ctx.mode)
            s = state0.get(w)
            state0[w] = cv if s is None else qqi_add(s, cv)
        groups[None] = state0
    else:
        for w, c in yt:
            den_key = tuple(sorted(c.den.items()))
            st = groups.setdefault(den_key, (dict(c.den), {}))[1]
            s = st.get(w)
            if s is None:
                st[w] = dict(c.num)
            else:
                for k, g in c.num.items():
                    sg = s.get(k)
                    sg = g if sg is None else (sg[0] + g[0], sg[1] + g[1])
                    if sg == (0, 0):
                        s.pop(k, None)
                    else:
                        s[k] = sg

    trie = _build_trie(left)
    estep = _estep_num if numeric else _estep_poly

    for gkey, gval in groups.items():
        if numeric:
            state0 = gval
            den_scalar = None
        else:
            den_poly, state0 = gval
            den_scalar = Scalar(dict(den_poly)) if den_poly != {(): G1} else None
        state0 = {w: c for w, c in state0.items() if c}
        if not state0:
            continue
        # accumulate numerators keyed by (e-count, left coefficient)
        sym_acc: dict = {}
        num_acc = [QQI_ZERO]

        def dfs(node, state, p):
            ends = node.get("end")
            if ends is not None:
                val = state.get(())
                if val:
                    for c in ends:
                        if numeric:
                            num_acc[0] = qqi_add(
                                num_acc[0], qqi_mul(scalar_to_qqi(c, ctx.mode), val)
                            )
                        else:
                            key = (p, c)
                            cur = sym_acc.get(key)
                            if cur is None:
                                sym_acc[key] = dict(val)
                            else:
                                for k, g in val.items():
                                    sg = cur.get(k)
                                    sg = g if sg is None else (sg[0] + g[0], sg[1] + g[1])
                                    if sg == (0, 0):
                                        cur.pop(k, None)
                                    else:
                                        cur[k] = sg
            for token, child in node.items():
                if token == "d" or token == "end":
                    continue
                md = child["d"]
                if token[0] == "e":
                    ns = estep(state, token[1], ctx.cart[token[1]], ctx)
                    dp = 1
                else:
                    ns = _kstep(state, token[1], ctx)
                    dp = 0
                if ns:
                    if md < max(len(w) for w in ns):
                        ns = {w: c for w, c in ns.items() if len(w) <= md}
                        if not ns:
                            continue
                    dfs(child, ns, p + dp)

        dfs(trie, state0, 0)
        if numeric:
            acc_num = qqi_add(acc_num, num_acc[0])
        else:
            part = ZERO
            for (p, c), poly in sym_acc.items():
                if poly:
                    part = part + c * Scalar(poly, _qdiff_pow(p))
            if den_scalar is not None:
                part = part / den_scalar
            total = total + part
    if numeric:
        return scalar_from_qqi(acc_num)
    return total


def shapovalov(x: AlgElt, y: AlgElt, ctx: EvalContext) -> Scalar:
    """The contravariant form <omega(x) y> on lowering elements."""
    return pair_lowering(x, y, ctx)


def invariant_form(x: AlgElt, y: AlgElt, ctx: EvalContext) -> Scalar:
    """The invariant pairing of x (highest-weight side) against y (lowest-
    weight side): the vacuum value of antipode^{-1}(y) x."""
    gy = antipode(y, ctx.n, inverse=True)
    left = _left_token_words(gy)
    if left is not None and _pure_f_indices(x) is not None:
        return pair_left(left, x, ctx)
    return vacuum_eval(gy * x, ctx)


# ---------------------------------------------------------------------------
# Weight combinatorics
# ---------------------------------------------------------------------------

def weight_alpha_counts(coords, n):
    """Expansion of -coords over the simple roots; None if outside the cone."""
    a = [0] * (n + 1)
    tail = 0
    for j in range(n, 0, -1):
        tail += coords[j - 1]
        if -tail < 0:
            return None
        a[j] = -tail
    return a[1:]


def fwords_of_weight(coords, n, limit=None):
    """All words in the lowering generators of the given weight, lex order."""
    a = weight_alpha_counts(coords, n)
    if a is None:
        return []
    letters = []
    for j in range(1, n + 1):
        letters.extend([j] * a[j - 1])
    out = []

    def rec(prefix, remaining):
        if not remaining:
            out.append(tuple(prefix))
            return
        last = None
        for idx, letter in enumerate(remaining):
            if letter == last:
                continue
            last = letter
            rec(prefix + [letter], remaining[:idx] + remaining[idx + 1 :])

    rec([], sorted(letters))
    if limit is not None and len(out) > limit:
        raise OracleError(
            "weight %r has %d words, above the enumeration limit %d"
            % (tuple(coords), len(out), limit)
        )
    return out


def fword_elt(word_indices) -> AlgElt:
    return AlgElt({tuple(("f", j) for j in word_indices): ONE})


def b_index_of_weight(coords):
    """The unique basis multi-index of a weight, or None."""
    if any(c > 0 for c in coords):
        return None
    return tuple(-c for c in coords)


_B_CACHE: dict = {}


def b_monomial(m, n) -> AlgElt:
    """The basis monomial f_{eps_1}^{m_1} ... f_{eps_n}^{m_n}."""
    key = (tuple(m), n)
    out = _B_CACHE.get(key)
    if out is None:
        out = AlgElt.unit()
        for i, mi in enumerate(m, start=1):
            if mi:
                out = out * root_vector("f_eps", i, n) ** mi
        _B_CACHE[key] = out
    return out


def b_height(m) -> int:
    return sum(mi * i for i, mi in enumerate(m, start=1))


def enumerate_b_indices(n, max_total):
    """All basis multi-indices with total degree at most max_total."""
    out = []

    def rec(prefix, left):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for k in range(left + 1):
            rec(prefix + [k], left - k)

    rec([], max_total)
    return sorted(out)


# ---------------------------------------------------------------------------
# Gram matrices, ranks, and the module oracle
# ---------------------------------------------------------------------------

class GramSlice:
    """The contravariant form on all lowering words of one weight."""

    __slots__ = ("weight", "words", "entries")

    def __init__(self, weight, words, entries):
        self.weight = weight
        self.words = words
        self.entries = entries

    @property
    def size(self):
        return len(self.words)


def gram(weight: Weight, ctx: EvalContext, limit: int = 400) -> GramSlice:
    words = fwords_of_weight(weight.coords, ctx.n, limit=limit)
    elts = [fword_elt(w) for w in words]
    entries = [[shapovalov(a, b, ctx) for b in elts] for a in elts]
    return GramSlice(weight, words, entries)


def _qqi_rows_to_gauss(rows):
    """Clear denominators row by row; entries become Gaussian integers."""
    out = []
    for row in rows:
        den = 1
        for re, im in row:
            den = den * re.denominator // _igcd(den, re.denominator)
            den = den * im.denominator // _igcd(den, im.denominator)
        out.append([(int(re * den), int(im * den)) for re, im in row])
    return out


def _igcd(a, b):
    while b:
        a, b = b, a % b
    return a


def rank_gauss(rows) -> int:
    """Rank by fraction-free (Bareiss) elimination over the Gaussian integers."""
    from .scalars import _gdiv_exact, _gmul, _gsub

    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    rank = 0
    prev = (1, 0)
    row = 0
    for col in range(ncols):
        piv = None
        for r in range(row, nrows):
            if m[r][col] != (0, 0):
                piv = r
                break
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        pivot = m[row][col]
        for r in range(row + 1, nrows):
            for c in range(col + 1, ncols):
                num = _gsub(_gmul(pivot, m[r][c]), _gmul(m[r][col], m[row][c]))
                m[r][c] = _gdiv_exact(num, prev)
            m[r][col] = (0, 0)
        prev = pivot
        rank += 1
        row += 1
        if row == nrows:
            break
    return rank


def pair_words_qqi(u, w, ctx: EvalContext):
    """<(raising word u) (lowering word w)> at a numeric point, memoized.

    u and w are index tuples; the recursion consumes the rightmost raising
    letter against each matching lowering slot, so Gram slices share their
    subproblems across entries.
    """
    if not u:
        return QQI_ONE if not w else QQI_ZERO
    if len(u) != len(w):
        return QQI_ZERO
    key = (u, w)
    memo = ctx._pair_memo
    val = memo.get(key)
    if val is not None:
        return val
    c = u[-1]
    cart_c = ctx.cart[c]
    acc = QQI_ZERO
    a = 0
    for t in range(len(w) - 1, -1, -1):
        j = w[t]
        if j == c:
            coef = ctx.ecoef(c, a)
            if coef is not None:
                sub = pair_words_qqi(u[:-1], w[:t] + w[t + 1 :], ctx)
                if sub != QQI_ZERO:
                    acc = qqi_add(acc, qqi_mul(coef, sub))
        a -= cart_c[j]
    memo[key] = acc
    return acc


def rank_at(weight: Weight, ctx: EvalContext, limit: int = 400) -> int:
    """Rank of the full Gram slice at a numeric point."""
    if ctx.mode.kind != "numeric":
        raise ValueError("rank computations require a numeric mode")
    words = fwords_of_weight(weight.coords, ctx.n, limit=limit)
    if not words:
        return 0
    rows = [
        [pair_words_qqi(tuple(reversed(a)), b, ctx) for b in words] for a in words
    ]
    return rank_gauss(_qqi_rows_to_gauss(rows))


def ladder_spanning_set(coords, ctx: EvalContext):
    """Generator-prepended basis monomials spanning the weight space,
    granted the ladder facts at lower heights."""
    out = []
    for j in range(1, ctx.n + 1):
        up = tuple(c + a for c, a in zip(coords, ctx.alpha[j]))
        m = b_index_of_weight(up)
        if m is not None:
            out.append((j, m, AlgElt.f(j) * b_monomial(m, ctx.n)))
    return out


def _ladder_rank_ok(coords, ctx: EvalContext, check_points=(2, 3)) -> bool:
    """Verify rank(Gram of the spanning set) == number of basis monomials
    at independent numeric points."""
    key = tuple(coords)
    cached = ctx._rank_gate.get(key)
    if cached is not None:
        return cached
    expected = 0 if b_index_of_weight(coords) is None else 1
    span = ladder_spanning_set(coords, ctx)
    ok = True
    if span:
        for v0 in check_points:
            nctx = EvalContext(ctx.n, SpecMode.numeric(v0, ctx.mode.sigma))
            rows = [
                [
                    scalar_to_qqi(shapovalov(a[2], b[2], nctx), nctx.mode)
                    for b in span
                ]
                for a in span
            ]
            r = rank_gauss(_qqi_rows_to_gauss(rows))
            if r != expected:
                ok = False
                break
    else:
        ok = expected == 0
    ctx._rank_gate[key] = ok
    return ok


def is_zero_in_M(x: AlgElt, ctx: EvalContext) -> bool:
    """Whether a lowering element vanishes in the irreducible quotient.

    Sound when used ladder-style: all action checks at lower weight heights
    must have passed already, and the rank gate for this weight must hold.
    """
    if ctx.mode.kind == "generic":
        raise ValueError("module oracle needs the specialized weight")
    if x.is_zero():
        return True
    wt = x.weight(ctx.n)
    if not _ladder_rank_ok(wt.coords, ctx):
        raise OracleError(
            "rank gate failed at weight %r: form rank does not match the "
            "basis count" % (wt.coords,)
        )
    for _j, _m, w in ladder_spanning_set(wt.coords, ctx):
        if not shapovalov(w, x, ctx).is_zero():
            return False
    return True


def is_zero_generic(x: AlgElt, ctx: EvalContext, limit: int = 400) -> bool:
    """Zero test in the negative half at a fully generic weight: the element
    must pair to zero with every lowering word of its weight."""
    if ctx.mode.kind != "generic":
        raise ValueError("generic mode required")
    if x.is_zero():
        return True
    wt = x.weight(ctx.n)
    for w in fwords_of_weight(wt.coords, ctx.n, limit=limit):
        if not shapovalov(fword_elt(w), x, ctx).is_zero():
            return False
    return True
