"""Moulds at finite truncation depth and the elementary mould algebra.

A mould is a collection ``M = (M^m(x_1, ..., x_m))_{0 <= m <= N}`` of rational
functions, one per depth m, truncated at a global bound N.  Words are tuples
of linear forms; evaluating a mould on a word substitutes the letters into
the component of matching depth.  This module provides the word algebra
(shuffle product), the mould product ``mu`` with its inverse / log / exp, and
the elementary unary operators (neg, dur scaling, sharp, leng).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, Mapping, Sequence

from .algebra import (
    LinearForm,
    RationalFunction,
    rf_sum,
    rf_from_json,
    rf_to_json,
    x_var,
)

Word = tuple  # tuple[LinearForm, ...]

__all__ = [
    "Word",
    "word",
    "canonical_word",
    "sum_form",
    "shuffle",
    "Mould",
    "DepthExceededError",
    "NotInvertibleError",
    "NotDefinedError",
    "mu",
    "lu",
    "mu_inverse",
    "mu_exp",
    "mu_log",
    "neg",
    "dur",
    "dur_scale",
    "dur_unscale",
    "sharp",
    "leng",
    "equal_mod_depth",
    "mould_to_json",
    "mould_from_json",
]


class DepthExceededError(ValueError):
    """A word longer than the mould's truncation depth was evaluated."""


class NotInvertibleError(ValueError):
    """mu-inversion requires depth-0 component 1."""


class NotDefinedError(ValueError):
    """Operation preconditions on the depth-0 component are violated."""


def word(*forms: LinearForm) -> Word:
    return tuple(forms)


@lru_cache(maxsize=None)
def canonical_word(m: int, offset: int = 0) -> Word:
    """The word (x_{offset+1}, ..., x_{offset+m})."""
    return tuple(x_var(offset + i) for i in range(1, m + 1))


@lru_cache(maxsize=None)
def sum_form(m: int) -> LinearForm:
    """The linear form x_1 + ... + x_m."""
    return LinearForm((1,) * m)


def shuffle(w1: Word, w2: Word) -> dict[Word, int]:
    """Shuffle product of two words as a multiset of interleavings.

    Follows the recursion  a w1 sh b w2 = a (w1 sh b w2) + b (a w1 sh w2),
    with the empty word as unit.  The multiplicities sum to
    binomial(len(w1) + len(w2), len(w1)).
    """
    out: dict[Word, int] = {}

    def rec(a: Word, b: Word, prefix: list):
        if not a:
            key = tuple(prefix) + b
            out[key] = out.get(key, 0) + 1
            return
        if not b:
            key = tuple(prefix) + a
            out[key] = out.get(key, 0) + 1
            return
        prefix.append(a[0])
        rec(a[1:], b, prefix)
        prefix.pop()
        prefix.append(b[0])
        rec(a, b[1:], prefix)
        prefix.pop()

    rec(tuple(w1), tuple(w2), [])
    return out


class Mould:
    """Depth-truncated mould with rational-function components.

    ``components[m]`` is the depth-m value as a rational function of the
    slot variables x_1..x_m; component 0 is a constant.  Immutable.
    """

    __slots__ = ("depth", "components", "_eval_cache")

    def __init__(self, components: Sequence[RationalFunction]):
        comps = tuple(components)
        if not comps:
            raise ValueError("a mould needs at least the depth-0 component")
        for m, c in enumerate(comps):
            if c.max_var() > m:
                raise ValueError(
                    f"depth-{m} component uses variable x_{c.max_var()}"
                )
        self.depth = len(comps) - 1
        self.components = comps
        self._eval_cache: dict = {}

    # -- constructors --------------------------------------------------------

    @staticmethod
    def zero(depth: int) -> "Mould":
        return Mould([RationalFunction.zero()] * (depth + 1))

    @staticmethod
    def unit(depth: int) -> "Mould":
        return Mould(
            [RationalFunction.one()] + [RationalFunction.zero()] * depth
        )

    @staticmethod
    def from_function(depth: int, fn: Callable[[int], RationalFunction]) -> "Mould":
        return Mould([fn(m) for m in range(depth + 1)])

    @staticmethod
    def from_word_function(
        depth: int, eval_word: Callable[[Word], RationalFunction]
    ) -> "Mould":
        """Materialize from evaluations at the canonical words."""
        return Mould([eval_word(canonical_word(m)) for m in range(depth + 1)])

    # -- access ----------------------------------------------------------------

    def component(self, m: int) -> RationalFunction:
        if m > self.depth:
            raise DepthExceededError(f"depth {m} exceeds truncation {self.depth}")
        return self.components[m]

    def eval_word(self, w: Word) -> RationalFunction:
        m = len(w)
        if m > self.depth:
            raise DepthExceededError(f"word of length {m} exceeds depth {self.depth}")
        if m == 0:
            return self.components[0]
        got = self._eval_cache.get(w)
        if got is None:
            got = self.components[m].substitute(w)
            self._eval_cache[w] = got
        return got

    def eval_combination(self, comb: Mapping[Word, object]) -> RationalFunction:
        """Evaluate linearly on a formal combination of words."""
        return rf_sum(
            self.eval_word(w) * Fraction(coeff) for w, coeff in comb.items()
        )

    def truncate(self, depth: int) -> "Mould":
        if depth >= self.depth:
            return self
        return Mould(self.components[: depth + 1])

    # -- linear structure --------------------------------------------------------

    def __add__(self, other: "Mould") -> "Mould":
        d = min(self.depth, other.depth)
        return Mould(
            [self.components[m] + other.components[m] for m in range(d + 1)]
        )

    def __sub__(self, other: "Mould") -> "Mould":
        d = min(self.depth, other.depth)
        return Mould(
            [self.components[m] - other.components[m] for m in range(d + 1)]
        )

    def __neg__(self) -> "Mould":
        # Additive inverse; for sign-flip of the arguments see neg().
        return Mould([-c for c in self.components])

    def __mul__(self, scalar) -> "Mould":
        return Mould([c * Fraction(scalar) for c in self.components])

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Mould)
            and self.depth == other.depth
            and self.components == other.components
        )

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        body = ", ".join(f"{m}: {c}" for m, c in enumerate(self.components))
        return f"Mould({body})"

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)


# ---------------------------------------------------------------------------
# the mould product and its friends
# ---------------------------------------------------------------------------


def mu(M: Mould, N: Mould) -> Mould:
    """Mould product: (M x N)^m = sum_k M^k(x_1..x_k) N^{m-k}(x_{k+1}..x_m)."""
    d = min(M.depth, N.depth)
    comps = []
    for m in range(d + 1):
        comps.append(
            rf_sum(
                M.components[k] * N.components[m - k].shift(k)
                for k in range(m + 1)
                if not M.components[k].is_zero()
                and not N.components[m - k].is_zero()
            )
        )
    return Mould(comps)


def lu(M: Mould, N: Mould) -> Mould:
    """Commutator bracket lu(M, N) = M x N - N x M."""
    return mu(M, N) - mu(N, M)


def mu_inverse(S: Mould) -> Mould:
    """Inverse for the mould product; requires S^0 = 1."""
    if not S.components[0].is_constant() or S.components[0].constant_value() != 1:
        raise NotInvertibleError("mu-inverse needs depth-0 component 1")
    comps = [RationalFunction.one()]
    for m in range(1, S.depth + 1):
        total = rf_sum(
            S.components[k] * comps[m - k].shift(k)
            for k in range(1, m + 1)
            if not S.components[k].is_zero() and not comps[m - k].is_zero()
        )
        comps.append(-total)
    return Mould(comps)


def mu_exp(A: Mould) -> Mould:
    """Exponential for the mould product; requires A^0 = 0."""
    if not A.components[0].is_zero():
        raise NotDefinedError("mu-exponential needs depth-0 component 0")
    total = Mould.unit(A.depth)
    power = Mould.unit(A.depth)
    fact = 1
    for h in range(1, A.depth + 1):
        power = mu(power, A)
        fact *= h
        total = total + power * Fraction(1, fact)
    return total


def mu_log(S: Mould) -> Mould:
    """Logarithm for the mould product; requires S^0 = 1.

    Computed as sum_h ((-1)^{h+1}/h) (S - 1)^{x h}; the series is finite at
    each truncation depth.
    """
    if not S.components[0].is_constant() or S.components[0].constant_value() != 1:
        raise NotDefinedError("mu-logarithm needs depth-0 component 1")
    D = S - Mould.unit(S.depth)
    total = Mould.zero(S.depth)
    power = D
    for h in range(1, S.depth + 1):
        total = total + power * Fraction((-1) ** (h + 1), h)
        if h < S.depth:
            power = mu(power, D)
    return total


# ---------------------------------------------------------------------------
# elementary unary operators
# ---------------------------------------------------------------------------


def neg(M: Mould) -> Mould:
    """Sign flip of all arguments: neg(M)^m(x_1..x_m) = M^m(-x_1..-x_m)."""
    comps = [M.components[0]]
    for m in range(1, M.depth + 1):
        forms = tuple(-f for f in canonical_word(m))
        comps.append(M.components[m].substitute(forms))
    return Mould(comps)


def dur(depth: int) -> Mould:
    """The mould with components x_1 + ... + x_m (0 at depth 0)."""
    comps = [RationalFunction.zero()]
    for m in range(1, depth + 1):
        comps.append(RationalFunction.make(1, sum_form(m).as_polynomial()))
    return Mould(comps)


def dur_scale(M: Mould) -> Mould:
    """Pointwise product with dur: multiply depth m by x_1 + ... + x_m."""
    comps = [M.components[0]]
    for m in range(1, M.depth + 1):
        comps.append(M.components[m].mul_linear(sum_form(m)))
    return Mould(comps)


def dur_unscale(M: Mould) -> Mould:
    """Divide depth m by x_1 + ... + x_m; requires M^0 = 0."""
    if not M.components[0].is_zero():
        raise NotDefinedError("dur-unscale needs depth-0 component 0")
    comps = [M.components[0]]
    for m in range(1, M.depth + 1):
        comps.append(M.components[m].div_linear(sum_form(m)))
    return Mould(comps)


def sharp(M: Mould) -> Mould:
    """Change of coordinates f(x_1,..,x_m) -> f(x_1, x_1+x_2, .., x_1+..+x_m)."""
    comps = [M.components[0]]
    for m in range(1, M.depth + 1):
        forms = tuple(sum_form(i) for i in range(1, m + 1))
        comps.append(M.components[m].substitute(forms))
    return Mould(comps)


def leng(r: int, M: Mould) -> Mould:
    """Keep only the depth-r component."""
    if r < 0:
        raise ValueError("depth selector must be nonnegative")
    return Mould(
        [
            M.components[m] if m == r else RationalFunction.zero()
            for m in range(M.depth + 1)
        ]
    )


def equal_mod_depth(M: Mould, N: Mould, k: int) -> bool:
    """True iff the components agree for all depths m < k."""
    if M.depth < k - 1 or N.depth < k - 1:
        raise DepthExceededError(f"both moulds need depth at least {k - 1}")
    return all(M.components[m] == N.components[m] for m in range(k))


def agree_up_to(M: Mould, N: Mould, depth: int) -> bool:
    """True iff the components agree for all depths m <= depth."""
    return equal_mod_depth(M, N, depth + 1)


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------


def mould_to_json(M: Mould) -> dict:
    return {
        "depth": M.depth,
        "components": [rf_to_json(c) for c in M.components],
    }


def mould_from_json(obj: Mapping) -> Mould:
    depth = int(obj["depth"])
    comps = [rf_from_json(c) for c in obj["components"]]
    if len(comps) != depth + 1:
        raise ValueError("component count does not match depth")
    return Mould(comps)
