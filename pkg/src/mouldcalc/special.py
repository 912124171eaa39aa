"""The named moulds and singulator operators.

Constructors for the classical objects of flexion theory: the monomial
moulds sa_s, the polar moulds paj and mupaj, the Bernoulli mould dupal and
its symmetral partner pal (defined by dur . pal = pal x dupal), the depth-2
corrector s', the singulator sang with its expanded four-sum form, and the
depth projections slang_r conjugated by pal.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache
from math import comb

from .algebra import (
    LinearForm,
    Polynomial,
    RationalFunction,
    one_over_forms,
)
from .flexions import adari, invgari
from .moulds import Mould, NotDefinedError, leng, mu, neg, sum_form

__all__ = [
    "bernoulli",
    "sa",
    "paj",
    "mupaj",
    "dupal",
    "pal",
    "s_prime",
    "sang",
    "sang_expanded",
    "slang",
    "slang_split",
    "UnsupportedInputError",
]


class UnsupportedInputError(ValueError):
    """The expanded singulator formula needs depth-1-supported input."""


_BERNOULLI: list[Fraction] = [Fraction(1)]
_BERNOULLI_LOCK = threading.Lock()


def bernoulli(m: int) -> Fraction:
    """Bernoulli number B_m under the x/(e^x - 1) convention (B_1 = -1/2).

    Computed by the recurrence sum_{k<=m} C(m+1, k) B_k = 0 and cached;
    the lock keeps concurrent growth of the cache consistent.
    """
    if m < 0:
        raise ValueError("Bernoulli index must be nonnegative")
    if len(_BERNOULLI) <= m:
        with _BERNOULLI_LOCK:
            while len(_BERNOULLI) <= m:
                n = len(_BERNOULLI)
                acc = sum(
                    Fraction(comb(n + 1, k)) * _BERNOULLI[k] for k in range(n)
                )
                _BERNOULLI.append(-acc / (n + 1))
    return _BERNOULLI[m]


def sa(s: int, depth: int) -> Mould:
    """The depth-1 mould u -> u^{s-1}; s may be negative (s = -1 gives u^-2)."""
    if s == 0:
        raise ValueError("exponent s must be nonzero")
    e = s - 1
    if e >= 0:
        comp = RationalFunction.make(1, Polynomial({(e,) if e else (): 1}))
    else:
        comp = RationalFunction.make(
            1, Polynomial.one(), [(LinearForm.variable(1), -e)]
        )
    comps = [RationalFunction.zero()] * (depth + 1)
    if depth >= 1:
        comps[1] = comp
    return Mould(comps)


@lru_cache(maxsize=None)
def paj(depth: int) -> Mould:
    """Polar mould 1 / (x_1 (x_1+x_2) ... (x_1+...+x_m)); 1 at depth 0."""
    comps = [RationalFunction.one()]
    for m in range(1, depth + 1):
        forms = [LinearForm((1,) * k) for k in range(1, m + 1)]
        comps.append(one_over_forms(*forms))
    return Mould(comps)


@lru_cache(maxsize=None)
def mupaj(depth: int) -> Mould:
    """Reversed polar mould (-1)^m / (x_m (x_m+x_{m-1}) ... (x_m+...+x_1)).

    This is the mu-inverse of paj; the identity paj x mupaj = 1 is part of
    the test suite rather than assumed.
    """
    comps = [RationalFunction.one()]
    for m in range(1, depth + 1):
        forms = [
            LinearForm((0,) * (m - k) + (1,) * k) for k in range(1, m + 1)
        ]
        comps.append(one_over_forms(*forms) * Fraction((-1) ** m))
    return Mould(comps)


@lru_cache(maxsize=None)
def dupal(depth: int) -> Mould:
    """Bernoulli mould (B_m/m!) (1/(x_1..x_m)) sum_k (-1)^k C(m-1,k) x_{k+1}."""
    comps = [RationalFunction.zero()]
    fact = 1
    for m in range(1, depth + 1):
        fact *= m
        bm = bernoulli(m)
        if bm == 0:
            comps.append(RationalFunction.zero())
            continue
        numer = Polynomial.from_dict(
            {
                (0,) * k + (1,): (-1) ** k * comb(m - 1, k)
                for k in range(m)
            }
        )
        comps.append(
            RationalFunction.make(
                bm / fact,
                numer,
                [(LinearForm.variable(i), 1) for i in range(1, m + 1)],
            )
        )
    return Mould(comps)


@lru_cache(maxsize=None)
def pal(depth: int) -> Mould:
    """The symmetral mould solving dur . pal = pal x dupal with pal^0 = 1.

    The relation is triangular: the depth-m right side uses only lower pal
    components because dupal^0 = 0, so pal is solved depth by depth and the
    division by x_1 + ... + x_m stays exact in the polar ring.
    """
    dup = dupal(depth)
    comps = [RationalFunction.one()]
    for m in range(1, depth + 1):
        rhs = RationalFunction.zero()
        for k in range(m):
            a = comps[k]
            if a.is_zero():
                continue
            b = dup.components[m - k]
            if b.is_zero():
                continue
            rhs = rhs + a * b.shift(k)
        comps.append(rhs.div_linear(sum_form(m)))
    return Mould(comps)


def s_prime(depth: int = 3) -> Mould:
    """Depth-2 corrector: 1/(2 u_1) and (1/12)(1/(u_1(u_1+u_2)) - 1/(u_2(u_1+u_2))).

    Zero beyond depth 2 (it is only ever used modulo higher depths).
    """
    if depth < 2:
        raise ValueError("s' needs depth at least 2")
    u1 = LinearForm.variable(1)
    u2 = LinearForm.variable(2)
    u12 = u1 + u2
    comps = [RationalFunction.zero()] * (depth + 1)
    comps[1] = one_over_forms(u1) * Fraction(1, 2)
    comps[2] = (one_over_forms(u1, u12) - one_over_forms(u2, u12)) * Fraction(1, 12)
    return Mould(comps)


def sang(M: Mould) -> Mould:
    """Singulator: (1/2)(id + neg . adari(paj)) (mupaj x M x paj)."""
    if not M.components[0].is_zero():
        raise NotDefinedError("the singulator needs depth-0 component 0")
    d = M.depth
    B = mu(mu(mupaj(d), M), paj(d))
    return (B + neg(adari(paj(d))(B))) * Fraction(1, 2)


def sang_expanded(M: Mould) -> Mould:
    """Expanded four-sum form of the singulator for depth-1-supported M.

    2 sang(S) at depth d is the sum over insertion positions of
    mupaj-prefix * S(letter) * paj-suffix terms, together with the three
    neg-type sums that evaluate S at -(x_1+..+x_d), -(x_1+..+x_{d-1}) and
    -(x_2+..+x_d).  Agreement with the compositional sang is a test, not an
    assumption.
    """
    for m in range(M.depth + 1):
        if m != 1 and not M.components[m].is_zero():
            raise UnsupportedInputError(
                "expanded singulator needs a depth-1-supported mould"
            )
    f = M.components[1]
    d_max = M.depth
    pj = paj(d_max)
    mp = mupaj(d_max)

    def f_at(form: LinearForm) -> RationalFunction:
        return f.substitute((form,))

    comps = [RationalFunction.zero()]
    for d in range(1, d_max + 1):
        total = RationalFunction.zero()
        whole = sum_form(d)
        # mupaj(x_1..x_{i-1}) S(x_i) paj(x_{i+1}..x_d)
        for i in range(1, d + 1):
            term = mp.components[i - 1] * f_at(LinearForm.variable(i))
            term = term * pj.components[d - i].shift(i)
            total = total + term
        # paj(x_1..x_{i-1}) S(-(x_1+..+x_d)) mupaj(x_{i+1}..x_d)
        s_whole = f_at(-whole)
        for i in range(1, d + 1):
            term = pj.components[i - 1] * s_whole
            term = term * mp.components[d - i].shift(i)
            total = total + term
        # - paj(x_1..x_{i-1}) S(-(x_1+..+x_{d-1})) mupaj(x_{i+1}..x_{d-1}) / (x_1+..+x_d)
        if d >= 2:
            s_head = f_at(-sum_form(d - 1))
            for i in range(1, d):
                term = pj.components[i - 1] * s_head
                term = term * mp.components[d - 1 - i].shift(i)
                total = total - term.div_linear(whole)
        # + paj(x_2..x_{i-1}) S(-(x_2+..+x_d)) mupaj(x_{i+1}..x_d) / (x_1+..+x_d)
        if d >= 2:
            tail = LinearForm((0,) + (1,) * (d - 1))  # x_2 + ... + x_d
            s_tail = f_at(-tail)
            for i in range(2, d + 1):
                term = pj.components[i - 2].shift(1) * s_tail
                term = term * mp.components[d - i].shift(i)
                total = total + term.div_linear(whole)
        comps.append(total * Fraction(1, 2))
    return Mould(comps)


def slang(r: int, A: Mould) -> Mould:
    """Depth-r slice of the singulator conjugated by pal:
    adari(pal) . leng_r . adari(pal)^{-1} . sang(A)."""
    if r < 1:
        raise ValueError("slice index must be positive")
    d = A.depth
    p = pal(d)
    inner = adari(invgari(p))(sang(A))
    return adari(p)(leng(r, inner))


def slang_split(A: Mould) -> list[Mould]:
    """All slices slang_r(A) for 1 <= r <= depth, sharing the inner work.

    Their sum recovers sang(A) up to the truncation depth.
    """
    d = A.depth
    p = pal(d)
    conj = adari(p)
    inner = adari(invgari(p))(sang(A))
    return [conj(leng(r, inner)) for r in range(1, d + 1)]
