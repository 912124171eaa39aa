"""Flexion operators and the ari/gari toolbox.

The two flexions attach the letter-sum of one word block to the boundary
letter of a neighbouring block.  Summing mould evaluations over flexion-
decorated factorizations of a word yields the derivation ``arit``, the
pre-Lie product ``preari``, the Lie bracket ``ari``, the twisted action
``garit``, the group law ``gari``, the exponential/logarithm pair
``expari``/``logari``, the group inverse ``invgari`` and the conjugation
``adari``.

Every factorization sum is implemented once, at the level of words, as a
function of evaluation callables (``*_at`` helpers).  Concrete moulds run
them at the canonical words; the lazy wrappers in this module run them at
arbitrary words, which is what the generic (opaque-symbol) identity checks
and the depth-by-depth solvers need.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterator

from .algebra import LinearForm, RationalFunction, rf_sum
from .moulds import (
    Mould,
    NotDefinedError,
    NotInvertibleError,
    Word,
    canonical_word,
    mu,
    mu_inverse,
)

__all__ = [
    "flexion_up",
    "flexion_down",
    "tri_factorizations",
    "garit_factorizations",
    "arit",
    "preari",
    "preari_n",
    "ari",
    "garit",
    "gari",
    "expari",
    "logari",
    "invgari",
    "adari",
    "LazyMould",
    "lazy_mu",
    "lazy_arit",
    "lazy_preari",
    "lazy_ari",
    "lazy_mu_inverse",
    "lazy_garit",
    "lazy_gari",
    "lazy_expari",
    "lazy_logari",
    "lazy_invgari",
    "lazy_adari",
    "lazy_neg",
    "lazy_leng",
    "lazy_unit",
]


def _letter_sum(w: Word) -> LinearForm:
    total = LinearForm.zero()
    for letter in w:
        total = total + letter
    return total


def flexion_up(beta: Word, alpha: Word) -> Word:
    """Attach the letter sum of beta to the first letter of alpha.

    Conventions: empty beta leaves alpha unchanged; empty alpha gives the
    empty word.
    """
    if not beta:
        return alpha
    if not alpha:
        return ()
    return (_letter_sum(beta) + alpha[0],) + alpha[1:]


def flexion_down(alpha: Word, beta: Word) -> Word:
    """Attach the letter sum of beta to the last letter of alpha.

    Conventions: empty beta leaves alpha unchanged; empty alpha gives the
    empty word.
    """
    if not beta:
        return alpha
    if not alpha:
        return ()
    return alpha[:-1] + (alpha[-1] + _letter_sum(beta),)


def tri_factorizations(w: Word) -> Iterator[tuple[Word, Word, Word]]:
    """All splittings w = alpha beta gamma, each exactly once."""
    n = len(w)
    for i in range(n + 1):
        for j in range(i, n + 1):
            yield w[:i], w[i:j], w[j:]


def garit_factorizations(
    w: Word,
) -> Iterator[tuple[tuple[Word, Word, Word], ...]]:
    """All block factorizations w = a1 b1 c1 ... as bs cs.

    Constraints: every b_i is nonempty, and for i < s the concatenation
    c_i a_{i+1} is nonempty (the trailing c_s may be empty).
    """
    n = len(w)

    def rec(start: int, first: bool, prev_c_empty: bool):
        # choose a = w[start:i], b = w[i:j] (nonempty), c = w[j:k]
        for i in range(start, n):
            a = w[start:i]
            if not first and prev_c_empty and not a:
                continue
            for j in range(i + 1, n + 1):
                b = w[i:j]
                for k in range(j, n + 1):
                    c = w[j:k]
                    if k == n:
                        yield ((a, b, c),)
                    else:
                        for rest in rec(k, False, not c):
                            yield ((a, b, c),) + rest

    yield from rec(0, True, True)


Eval = Callable[[Word], RationalFunction]


# ---------------------------------------------------------------------------
# factorization sums at the level of words
# ---------------------------------------------------------------------------


def mu_at(w: Word, f: Eval, g: Eval) -> RationalFunction:
    # The shorter factor is evaluated first: self-referential evaluators
    # (the logari solver) rely on never being probed at the full word when
    # the complementary factor already vanishes on the empty word.
    parts = []
    n = len(w)
    for i in range(n + 1):
        if i <= n - i:
            a = f(w[:i])
            if a.is_zero():
                continue
            b = g(w[i:])
            if b.is_zero():
                continue
        else:
            b = g(w[i:])
            if b.is_zero():
                continue
            a = f(w[:i])
            if a.is_zero():
                continue
        parts.append(a * b)
    return rf_sum(parts)


def arit_at(w: Word, m_eval: Eval, n_eval: Eval) -> RationalFunction:
    """The derivation sum: M(alpha ur(beta, gamma)) N(beta) terms minus
    M(dl(alpha, beta) gamma) N(beta) terms, over splittings w = alpha beta gamma."""
    if len(w) < 2:
        return RationalFunction.zero()
    parts = []
    for alpha, beta, gamma in tri_factorizations(w):
        if not beta or (not alpha and not gamma):
            continue
        nb = n_eval(beta)
        if nb.is_zero():
            continue
        if gamma:
            parts.append(m_eval(alpha + flexion_up(beta, gamma)) * nb)
        if alpha:
            parts.append(-(m_eval(flexion_down(alpha, beta) + gamma) * nb))
    return rf_sum(parts)


def preari_at(w: Word, m_eval: Eval, n_eval: Eval) -> RationalFunction:
    return arit_at(w, m_eval, n_eval) + mu_at(w, m_eval, n_eval)


def garit_at(w: Word, s_eval: Eval, t_eval: Eval, tinv_eval: Eval) -> RationalFunction:
    """The twisted action sum over block factorizations of w."""
    if not w:
        return s_eval(())
    parts = []
    for blocks in garit_factorizations(w):
        decorated: Word = ()
        factor = RationalFunction.one()
        for a, b, c in blocks:
            decorated = decorated + flexion_up(a, flexion_down(b, c))
            if a:
                factor = factor * t_eval(a)
                if factor.is_zero():
                    break
            if c:
                factor = factor * tinv_eval(c)
                if factor.is_zero():
                    break
        if factor.is_zero():
            continue
        sval = s_eval(decorated)
        if sval.is_zero():
            continue
        parts.append(sval * factor)
    return rf_sum(parts)


# ---------------------------------------------------------------------------
# concrete operations on moulds
# ---------------------------------------------------------------------------


def _require_ari(M: Mould, what: str) -> None:
    if not M.components[0].is_zero():
        raise NotDefinedError(f"{what} needs depth-0 component 0")


def _require_gari(S: Mould, what: str) -> None:
    c = S.components[0]
    if not (c.is_constant() and c.constant_value() == 1):
        raise NotInvertibleError(f"{what} needs depth-0 component 1")


def arit(N: Mould) -> Callable[[Mould], Mould]:
    """The derivation-like operator attached to N."""

    def apply(M: Mould) -> Mould:
        d = min(M.depth, N.depth)
        return Mould(
            [arit_at(canonical_word(m), M.eval_word, N.eval_word) for m in range(d + 1)]
        )

    return apply


def preari(M: Mould, N: Mould) -> Mould:
    """Pre-Lie product preari(M, N) = arit(N)(M) + M x N."""
    d = min(M.depth, N.depth)
    return Mould(
        [preari_at(canonical_word(m), M.eval_word, N.eval_word) for m in range(d + 1)]
    )


def preari_n(n: int, A: Mould) -> Mould:
    """Left-iterated pre-Lie powers: preari_0 = 1, preari_1 = A, ..."""
    if n < 0:
        raise ValueError("iterate index must be nonnegative")
    if n == 0:
        return Mould.unit(A.depth)
    out = A
    for _ in range(n - 1):
        out = preari(out, A)
    return out


def ari(M: Mould, N: Mould) -> Mould:
    """Lie bracket ari(M, N) = preari(M, N) - preari(N, M)."""
    return preari(M, N) - preari(N, M)


def garit(T: Mould) -> Callable[[Mould], Mould]:
    """The twisted action of the group element T."""
    _require_gari(T, "garit")
    Tinv = mu_inverse(T)

    def apply(S: Mould) -> Mould:
        d = min(S.depth, T.depth)
        return Mould(
            [
                garit_at(canonical_word(m), S.eval_word, T.eval_word, Tinv.eval_word)
                for m in range(d + 1)
            ]
        )

    return apply


def gari(S: Mould, T: Mould) -> Mould:
    """Group law gari(S, T) = garit(T)(S) x T."""
    return mu(garit(T)(S), T)


def expari(A: Mould) -> Mould:
    """Exponential sum of pre-Lie iterates: sum_n preari_n(A) / n!."""
    _require_ari(A, "expari")
    total = Mould.unit(A.depth) + A
    chain = A
    fact = 1
    for n in range(2, A.depth + 1):
        chain = preari(chain, A)
        fact *= n
        total = total + chain * Fraction(1, fact)
    return total


def logari(S: Mould) -> Mould:
    """Inverse of expari, solved depth by depth."""
    _require_gari(S, "logari")
    return _materialize(lazy_logari(S), S.depth)


def invgari(S: Mould) -> Mould:
    """Inverse element for the gari group law, solved depth by depth."""
    _require_gari(S, "invgari")
    return _materialize(lazy_invgari(S), S.depth)


def adari(S: Mould) -> Callable[[Mould], Mould]:
    """Conjugation of the Lie structure by the group element S.

    adari(S)(A) = logari(gari(gari(S, expari(A)), invgari(S))).
    """
    _require_gari(S, "adari")

    def apply(A: Mould) -> Mould:
        _require_ari(A, "adari")
        d = min(S.depth, A.depth)
        return _materialize(lazy_adari(S)(A), d)

    return apply


# ---------------------------------------------------------------------------
# lazy moulds: evaluation at arbitrary words, memoized
# ---------------------------------------------------------------------------


class LazyMould:
    """A mould given by an evaluation rule rather than stored components.

    Anything with ``depth`` and ``eval_word`` interoperates with these
    wrappers, including concrete moulds and opaque symbol moulds.
    """

    __slots__ = ("depth", "_fn", "_memo")

    def __init__(self, depth: int, fn: Callable[[Word], RationalFunction] | None):
        self.depth = depth
        self._fn = fn
        self._memo: dict = {}

    def eval_word(self, w: Word) -> RationalFunction:
        got = self._memo.get(w)
        if got is None:
            got = self._fn(w)
            self._memo[w] = got
        return got


def _materialize(L, depth: int) -> Mould:
    return Mould.from_word_function(min(depth, L.depth), L.eval_word)


def lazy_unit(depth: int) -> LazyMould:
    one = RationalFunction.one()
    zero = RationalFunction.zero()
    return LazyMould(depth, lambda w: one if not w else zero)


def lazy_scale(c, M) -> LazyMould:
    c = Fraction(c)
    return LazyMould(M.depth, lambda w: M.eval_word(w) * c)


def lazy_add(A, B) -> LazyMould:
    return LazyMould(
        min(A.depth, B.depth), lambda w: A.eval_word(w) + B.eval_word(w)
    )


def lazy_sub(A, B) -> LazyMould:
    return LazyMould(
        min(A.depth, B.depth), lambda w: A.eval_word(w) - B.eval_word(w)
    )


def lazy_neg(M) -> LazyMould:
    return LazyMould(
        M.depth, lambda w: M.eval_word(tuple(-letter for letter in w))
    )


def lazy_leng(r: int, M) -> LazyMould:
    zero = RationalFunction.zero()
    return LazyMould(
        M.depth, lambda w: M.eval_word(w) if len(w) == r else zero
    )


def lazy_mu(M, N) -> LazyMould:
    return LazyMould(
        min(M.depth, N.depth), lambda w: mu_at(w, M.eval_word, N.eval_word)
    )


def lazy_arit(N) -> Callable:
    def apply(M) -> LazyMould:
        return LazyMould(
            min(M.depth, N.depth), lambda w: arit_at(w, M.eval_word, N.eval_word)
        )

    return apply


def lazy_preari(M, N) -> LazyMould:
    return LazyMould(
        min(M.depth, N.depth), lambda w: preari_at(w, M.eval_word, N.eval_word)
    )


def lazy_ari(M, N) -> LazyMould:
    return LazyMould(
        min(M.depth, N.depth),
        lambda w: preari_at(w, M.eval_word, N.eval_word)
        - preari_at(w, N.eval_word, M.eval_word),
    )


def lazy_mu_inverse(T) -> LazyMould:
    U = LazyMould(T.depth, None)

    def fn(w: Word) -> RationalFunction:
        if not w:
            return RationalFunction.one()
        parts = []
        for i in range(1, len(w) + 1):
            a = T.eval_word(w[:i])
            if a.is_zero():
                continue
            b = U.eval_word(w[i:])
            if b.is_zero():
                continue
            parts.append(a * b)
        return -rf_sum(parts)

    U._fn = fn
    return U


def lazy_garit(T) -> Callable:
    Tinv = lazy_mu_inverse(T)

    def apply(S) -> LazyMould:
        return LazyMould(
            min(S.depth, T.depth),
            lambda w: garit_at(w, S.eval_word, T.eval_word, Tinv.eval_word),
        )

    return apply


def lazy_gari(S, T) -> LazyMould:
    return lazy_mu(lazy_garit(T)(S), T)


def lazy_expari(A) -> LazyMould:
    depth = A.depth
    chain = [lazy_unit(depth), A]
    for _ in range(2, depth + 1):
        chain.append(lazy_preari(chain[-1], A))
    facts = [1]
    for n in range(1, depth + 1):
        facts.append(facts[-1] * n)

    def fn(w: Word) -> RationalFunction:
        if not w:
            return RationalFunction.one()
        total = RationalFunction.zero()
        for n in range(1, len(w) + 1):
            total = total + chain[n].eval_word(w) * Fraction(1, facts[n])
        return total

    return LazyMould(depth, fn)


def lazy_logari(S) -> LazyMould:
    """Solve expari(X) = S for X; the correction terms at a word only
    involve X at strictly shorter words, so the recursion is well founded."""
    depth = S.depth
    X = LazyMould(depth, None)
    chain = [lazy_unit(depth), X]
    for _ in range(2, depth + 1):
        chain.append(lazy_preari(chain[-1], X))
    facts = [1]
    for n in range(1, depth + 1):
        facts.append(facts[-1] * n)

    def fn(w: Word) -> RationalFunction:
        if not w:
            return RationalFunction.zero()
        val = S.eval_word(w)
        for n in range(2, len(w) + 1):
            val = val - chain[n].eval_word(w) * Fraction(1, facts[n])
        return val

    X._fn = fn
    return X


def lazy_invgari(S) -> LazyMould:
    """Solve gari(S, G) = 1 for G; the depth-m value only involves G at
    strictly shorter words (every garit block is flanked by a nonempty b)."""
    depth = S.depth
    G = LazyMould(depth, None)
    Ginv = lazy_mu_inverse(G)
    garit_sg = LazyMould(
        depth, lambda w: garit_at(w, S.eval_word, G.eval_word, Ginv.eval_word)
    )

    def fn(w: Word) -> RationalFunction:
        if not w:
            return RationalFunction.one()
        parts = []
        for i in range(1, len(w) + 1):
            a = garit_sg.eval_word(w[:i])
            if a.is_zero():
                continue
            b = G.eval_word(w[i:])
            if b.is_zero():
                continue
            parts.append(a * b)
        return -rf_sum(parts)

    G._fn = fn
    return G


def lazy_adari(S) -> Callable:
    def apply(A) -> LazyMould:
        inner = lazy_gari(lazy_gari(S, lazy_expari(A)), lazy_invgari(S))
        return lazy_logari(inner)

    return apply
