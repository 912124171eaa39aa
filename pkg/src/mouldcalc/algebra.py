"""Exact arithmetic kernel.

Provides arbitrary-precision rationals, sparse multivariate polynomials with
integer coefficients, integer linear forms in the variables x_1, x_2, ..., and
rational functions whose denominators are products of linear forms.  That last
class is closed under addition, multiplication and substitution of linear
forms for variables, which is all the mould operations ever need; keeping
denominators factored sidesteps multivariate gcd computations entirely.

Canonical forms
---------------
* ``Monomial``: tuple of exponents for x_1..x_k with trailing zeros trimmed.
* ``Polynomial``: integer coefficients only; rational content lives in the
  enclosing ``RationalFunction`` scalar.
* ``LinearForm``: arbitrary integer coefficient vector; denominators store
  the primitive representative (gcd 1, first nonzero coefficient positive)
  with sign and content absorbed into the scalar.
* ``RationalFunction``: ``scalar * numerator / prod(form**mult)`` where the
  numerator has content 1 and positive leading coefficient under graded
  lexicographic order, and no denominator form divides the numerator.  Zero
  is uniquely ``(0, 1, ())``.  Structural equality is therefore semantic
  equality.

All values are immutable; every operation returns a new value.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Callable, Iterable, Mapping, Sequence

Rational = Fraction

__all__ = [
    "Rational",
    "Monomial",
    "Polynomial",
    "LinearForm",
    "RationalFunction",
    "NotDivisibleError",
    "ZeroDenominatorError",
    "x_var",
    "rf_from_int",
    "rf_from_fraction",
    "rf_monomial",
    "rf_sum",
    "one_over_forms",
    "rf_to_json",
    "rf_from_json",
]


class NotDivisibleError(ArithmeticError):
    """Exact division was requested but does not hold."""


class ZeroDenominatorError(ZeroDivisionError):
    """A denominator linear form became identically zero."""


# ---------------------------------------------------------------------------
# monomials: exponent tuples, trailing zeros trimmed, () is the constant 1
# ---------------------------------------------------------------------------

Monomial = tuple


def _trim(seq: Sequence[int]) -> tuple:
    n = len(seq)
    while n > 0 and seq[n - 1] == 0:
        n -= 1
    return tuple(seq[:n])


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a
    return tuple(x + y for x, y in zip(a, b)) + a[len(b):]


def monomial_degree(m: Monomial) -> int:
    return sum(m)


def grlex_key(m: Monomial):
    # Trimmed tuples compare correctly under (degree, lex with x_1 major).
    return (sum(m), m)


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------


class Polynomial:
    """Sparse multivariate polynomial with integer coefficients.

    ``terms`` maps monomials to nonzero integers.  Instances are treated as
    immutable; do not mutate ``terms`` after construction.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: dict):
        self.terms = terms
        self._hash = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_dict(d: Mapping[Monomial, int]) -> "Polynomial":
        out: dict = {}
        for m, c in d.items():
            if not c:
                continue
            key = _trim(m)
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                del out[key]
        return Polynomial(out)

    @staticmethod
    def zero() -> "Polynomial":
        return _POLY_ZERO

    @staticmethod
    def one() -> "Polynomial":
        return _POLY_ONE

    @staticmethod
    def constant(c: int) -> "Polynomial":
        return Polynomial({(): c}) if c else _POLY_ZERO

    @staticmethod
    def variable(i: int) -> "Polynomial":
        if i < 1:
            raise ValueError("variable indices start at 1")
        return Polynomial({(0,) * (i - 1) + (1,): 1})

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or self.terms.keys() == {()}

    def constant_value(self) -> int:
        return self.terms.get((), 0)

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def max_var(self) -> int:
        return max((len(m) for m in self.terms), default=0)

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=grlex_key)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self):
        return f"Polynomial({self.terms!r})"

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        big, small = (self.terms, other.terms)
        if len(big) < len(small):
            big, small = small, big
        out = dict(big)
        for m, c in small.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return _POLY_ZERO
            if other == 1:
                return self
            return Polynomial({m: c * other for m, c in self.terms.items()})
        out: dict = {}
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = monomial_mul(ma, mb)
                s = out.get(m, 0) + ca * cb
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial(out)

    def __rmul__(self, other: int) -> "Polynomial":
        return self.__mul__(other)

    def content_sign_primitive(self) -> tuple[int, "Polynomial"]:
        """Split off signed integer content: ``self == c * P``.

        ``P`` has coprime coefficients and positive leading coefficient
        under graded lexicographic order.  The zero polynomial returns
        ``(0, 1)``.
        """
        if not self.terms:
            return 0, _POLY_ONE
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
            if g == 1:
                break
        if self.terms[self.leading_monomial()] < 0:
            g = -g
        if g == 1:
            return 1, self
        return g, Polynomial({m: c // g for m, c in self.terms.items()})

    # -- structural operations ---------------------------------------------

    def shift(self, k: int) -> "Polynomial":
        """Rename every variable x_i to x_{i+k}."""
        if k == 0 or not self.terms:
            return self
        pad = (0,) * k
        return Polynomial({(pad + m if m else m): c for m, c in self.terms.items()})

    def compose(self, forms: Sequence["LinearForm"]) -> "Polynomial":
        """Substitute ``forms[i-1]`` for x_i.  Result is exact."""
        nvars = len(forms)
        if self.max_var() > nvars:
            raise ValueError(
                f"polynomial uses x_{self.max_var()} but only {nvars} forms given"
            )
        form_polys = [f.as_polynomial() for f in forms]
        powers: list[list[Polynomial]] = [[_POLY_ONE] for _ in range(nvars)]

        def power(i: int, e: int) -> Polynomial:
            cache = powers[i]
            while len(cache) <= e:
                cache.append(cache[-1] * form_polys[i])
            return cache[e]

        total = _POLY_ZERO
        for m, c in self.terms.items():
            term = Polynomial.constant(c)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            total = total + term
        return total

    def mul_linear(self, form: "LinearForm") -> "Polynomial":
        return self * form.as_polynomial()

    def try_div_linear(self, form: "LinearForm") -> "Polynomial | None":
        """Exact quotient ``self / form`` or None.

        Synthetic division in the form's leading variable x_j: writing
        p = sum_k p_k x_j^k and form = c x_j + r, exactness forces
        q_{k-1} = (p_k - r q_k) / c  downward from the top, with the final
        residue p_0 - r q_0 vanishing.  For a primitive linear divisor,
        exactness over the rationals implies integer quotients (Gauss), so
        any non-integer step already means "not divisible".
        """
        if form.is_zero():
            raise ZeroDivisionError("division by the zero form")
        if not self.terms:
            return _POLY_ZERO
        j = form.leading_var() - 1  # 0-based position of x_j
        c = form.coeffs[j]
        rest = [(i, fc) for i, fc in enumerate(form.coeffs) if fc and i != j]
        # bucket by x_j exponent, storing monomials with x_j removed
        levels: dict[int, dict] = {}
        deg = 0
        for m, coeff in self.terms.items():
            e = m[j] if len(m) > j else 0
            if e > deg:
                deg = e
            key = _trim(m[:j] + (0,) + m[j + 1:]) if len(m) > j else m
            levels.setdefault(e, {})[key] = coeff
        if deg == 0:
            return None

        def mul_rest(d: dict) -> dict:
            out: dict = {}
            for i, fc in rest:
                for m, cf in d.items():
                    if len(m) > i:
                        key = m[:i] + (m[i] + 1,) + m[i + 1:]
                    else:
                        key = m + (0,) * (i - len(m)) + (1,)
                    s = out.get(key, 0) + fc * cf
                    if s:
                        out[key] = s
                    else:
                        del out[key]
            return out

        q_levels: dict[int, dict] = {}
        carry = levels.get(deg, {})
        for k in range(deg, 0, -1):
            qk: dict = {}
            for m, cf in carry.items():
                if cf % c:
                    return None
                qk[m] = cf // c
            q_levels[k - 1] = qk
            carry = dict(levels.get(k - 1, {}))
            for m, cf in mul_rest(qk).items():
                s = carry.get(m, 0) - cf
                if s:
                    carry[m] = s
                else:
                    carry.pop(m, None)
        if carry:
            return None
        out: dict = {}
        for e, level in q_levels.items():
            for m, cf in level.items():
                if e == 0:
                    out[m] = cf
                elif len(m) > j:
                    out[m[:j] + (e,) + m[j + 1:]] = cf
                else:
                    out[m + (0,) * (j - len(m)) + (e,)] = cf
        return Polynomial(out)

    def div_linear(self, form: "LinearForm") -> "Polynomial":
        q = self.try_div_linear(form)
        if q is None:
            raise NotDivisibleError(f"{self} is not divisible by {form}")
        return q


_POLY_ZERO = Polynomial({})
_POLY_ONE = Polynomial({(): 1})


# ---------------------------------------------------------------------------
# linear forms
# ---------------------------------------------------------------------------


class LinearForm:
    """Integer linear combination of the ambient variables x_1, x_2, ...

    Used both as word letters (arbitrary integer vectors) and, in primitive
    normalized guise, as denominator factors of rational functions.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int]):
        self.coeffs = _trim(tuple(coeffs))
        self._hash = None

    @staticmethod
    def zero() -> "LinearForm":
        return _FORM_ZERO

    @staticmethod
    def variable(i: int) -> "LinearForm":
        if i < 1:
            raise ValueError("variable indices start at 1")
        return LinearForm((0,) * (i - 1) + (1,))

    def is_zero(self) -> bool:
        return not self.coeffs

    def max_var(self) -> int:
        return len(self.coeffs)

    def leading_var(self) -> int:
        for i, c in enumerate(self.coeffs):
            if c:
                return i + 1
        raise ValueError("zero form has no leading variable")

    def __add__(self, other: "LinearForm") -> "LinearForm":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return LinearForm(tuple(x + y for x, y in zip(a, b)) + a[len(b):])

    def __sub__(self, other: "LinearForm") -> "LinearForm":
        return self + (-other)

    def __neg__(self) -> "LinearForm":
        return LinearForm(tuple(-c for c in self.coeffs))

    def __mul__(self, k: int) -> "LinearForm":
        return LinearForm(tuple(c * k for c in self.coeffs))

    __rmul__ = __mul__

    def primitive(self) -> tuple[int, "LinearForm"]:
        """Return ``(k, f)`` with ``self == k * f`` and f primitive.

        f has gcd-1 coefficients with its first nonzero coefficient
        positive; the zero form returns ``(0, zero)``.
        """
        if not self.coeffs:
            return 0, _FORM_ZERO
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        if self.coeffs[self.leading_var() - 1] < 0:
            g = -g
        if g == 1:
            return 1, self
        return g, LinearForm(tuple(c // g for c in self.coeffs))

    def as_polynomial(self) -> Polynomial:
        return Polynomial(
            {
                (0,) * i + (1,): c
                for i, c in enumerate(self.coeffs)
                if c
            }
        )

    def compose(self, forms: Sequence["LinearForm"]) -> "LinearForm":
        """Substitute ``forms[i-1]`` for x_i; linear in, linear out."""
        if len(self.coeffs) > len(forms):
            raise ValueError(
                f"form uses x_{len(self.coeffs)} but only {len(forms)} forms given"
            )
        out = _FORM_ZERO
        for c, f in zip(self.coeffs, forms):
            if c:
                out = out + c * f
        return out

    def shift(self, k: int) -> "LinearForm":
        if k == 0 or not self.coeffs:
            return self
        return LinearForm((0,) * k + self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, LinearForm) and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __repr__(self):
        return f"LinearForm({self.coeffs!r})"

    def __str__(self):
        return form_str(self)


_FORM_ZERO = LinearForm(())


def x_var(i: int) -> LinearForm:
    """Shorthand for the linear form x_i."""
    return LinearForm.variable(i)


# ---------------------------------------------------------------------------
# rational functions with linear-form denominators
# ---------------------------------------------------------------------------


class RationalFunction:
    """``scalar * numerator / prod(form ** mult)`` in canonical form.

    The denominator is a multiset of primitive linear forms.  Sums and
    products stay in this class, so the canonical form makes ``==`` decide
    semantic equality.
    """

    __slots__ = ("scalar", "numerator", "denominator", "_hash")

    def __init__(self, scalar, numerator, denominator):
        # Internal: arguments must already be canonical.  Use make().
        self.scalar = scalar
        self.numerator = numerator
        self.denominator = denominator
        self._hash = None

    # -- construction --------------------------------------------------------

    @staticmethod
    def make(
        scalar: Fraction | int,
        numerator: Polynomial,
        denominator: Iterable[tuple[LinearForm, int]] = (),
    ) -> "RationalFunction":
        """Canonicalize and build.  The only sanctioned constructor."""
        scalar = Fraction(scalar)
        if scalar == 0 or numerator.is_zero():
            return RF_ZERO
        den: dict[LinearForm, int] = {}
        for form, mult in denominator:
            if mult < 0:
                raise ValueError("negative multiplicity")
            if mult == 0:
                continue
            k, f = form.primitive()
            if k == 0:
                raise ZeroDenominatorError("zero linear form in denominator")
            scalar /= Fraction(k) ** mult
            den[f] = den.get(f, 0) + mult
        # cancel numerator against denominator factors
        for f in list(den):
            mult = den[f]
            while mult > 0:
                q = numerator.try_div_linear(f)
                if q is None:
                    break
                numerator = q
                mult -= 1
            if mult:
                den[f] = mult
            else:
                del den[f]
        c, prim = numerator.content_sign_primitive()
        scalar *= c
        if scalar == 0:
            return RF_ZERO
        dens = tuple(sorted(den.items(), key=lambda kv: kv[0].coeffs))
        return RationalFunction(scalar, prim, dens)

    @staticmethod
    def zero() -> "RationalFunction":
        return RF_ZERO

    @staticmethod
    def one() -> "RationalFunction":
        return RF_ONE

    # -- queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        return self.scalar == 0

    def is_polynomial(self) -> bool:
        return not self.denominator

    def is_constant(self) -> bool:
        return not self.denominator and self.numerator.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.scalar * self.numerator.constant_value()

    def max_var(self) -> int:
        n = self.numerator.max_var()
        for f, _ in self.denominator:
            n = max(n, f.max_var())
        return n

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RationalFunction)
            and self.scalar == other.scalar
            and self.denominator == other.denominator
            and self.numerator == other.numerator
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.scalar, self.numerator, self.denominator))
        return self._hash

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        return rf_str(self)

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        if self.scalar == 0:
            return other
        if other.scalar == 0:
            return self
        da = dict(self.denominator)
        db = dict(other.denominator)
        common = {f: max(da.get(f, 0), db.get(f, 0)) for f in {*da, *db}}
        num_a = self.numerator
        for f, m in common.items():
            for _ in range(m - da.get(f, 0)):
                num_a = num_a.mul_linear(f)
        num_b = other.numerator
        for f, m in common.items():
            for _ in range(m - db.get(f, 0)):
                num_b = num_b.mul_linear(f)
        # integer cross-scaling so the combined numerator stays integral
        sa, sb = self.scalar, other.scalar
        lcm = sa.denominator * sb.denominator // gcd(sa.denominator, sb.denominator)
        num = (sa.numerator * (lcm // sa.denominator)) * num_a + (
            sb.numerator * (lcm // sb.denominator)
        ) * num_b
        return RationalFunction.make(Fraction(1, lcm), num, common.items())

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return self + (-other)

    def __neg__(self) -> "RationalFunction":
        if self.scalar == 0:
            return self
        return RationalFunction(-self.scalar, self.numerator, self.denominator)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0 or self.scalar == 0:
                return RF_ZERO
            return RationalFunction(
                self.scalar * other, self.numerator, self.denominator
            )
        if self.scalar == 0 or other.scalar == 0:
            return RF_ZERO
        den: dict[LinearForm, int] = dict(self.denominator)
        for f, m in other.denominator:
            den[f] = den.get(f, 0) + m
        return RationalFunction.make(
            self.scalar * other.scalar,
            self.numerator * other.numerator,
            den.items(),
        )

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        raise TypeError("only scalar division is supported; use div_linear")

    def div_linear(self, form: LinearForm) -> "RationalFunction":
        """Divide by a nonzero linear form (always stays in the class)."""
        if form.is_zero():
            raise ZeroDivisionError("division by the zero form")
        if self.scalar == 0:
            return self
        den = dict(self.denominator)
        den[form] = den.get(form, 0) + 1
        return RationalFunction.make(self.scalar, self.numerator, den.items())

    def mul_linear(self, form: LinearForm) -> "RationalFunction":
        if self.scalar == 0:
            return self
        return RationalFunction.make(
            self.scalar, self.numerator.mul_linear(form), self.denominator
        )

    # -- structural operations -------------------------------------------------

    def substitute(self, forms: Sequence[LinearForm]) -> "RationalFunction":
        """Evaluate at the given linear forms (x_i := forms[i-1]).

        Raises ZeroDenominatorError if a denominator factor collapses to
        the zero form.
        """
        if self.scalar == 0:
            return self
        if self.max_var() > len(forms):
            raise ValueError(
                f"value uses x_{self.max_var()} but only {len(forms)} forms given"
            )
        num = self.numerator.compose(forms)
        den = []
        for f, m in self.denominator:
            g = f.compose(forms)
            if g.is_zero():
                raise ZeroDenominatorError(
                    f"denominator factor {f} vanishes under substitution"
                )
            den.append((g, m))
        return RationalFunction.make(self.scalar, num, den)

    def shift(self, k: int) -> "RationalFunction":
        """Rename every variable x_i to x_{i+k}."""
        if k == 0 or self.scalar == 0:
            return self
        return RationalFunction(
            self.scalar,
            self.numerator.shift(k),
            tuple((f.shift(k), m) for f, m in self.denominator),
        )


RF_ZERO = RationalFunction(Fraction(0), _POLY_ONE, ())
RF_ONE = RationalFunction(Fraction(1), _POLY_ONE, ())


def rf_sum(items: Iterable[RationalFunction]) -> RationalFunction:
    """Sum many rational functions over one common denominator.

    Equivalent to repeated ``+`` but canonicalizes once, which matters in
    the factorization sums where dozens of terms share most denominator
    factors.
    """
    terms = [r for r in items if r.scalar != 0]
    if not terms:
        return RF_ZERO
    if len(terms) == 1:
        return terms[0]
    common: dict[LinearForm, int] = {}
    for r in terms:
        for f, m in r.denominator:
            if common.get(f, 0) < m:
                common[f] = m
    lcm = 1
    for r in terms:
        q = r.scalar.denominator
        lcm = lcm * q // gcd(lcm, q)
    total = _POLY_ZERO
    for r in terms:
        num = r.numerator
        da = dict(r.denominator)
        for f, m in common.items():
            for _ in range(m - da.get(f, 0)):
                num = num.mul_linear(f)
        total = total + (r.scalar.numerator * (lcm // r.scalar.denominator)) * num
    return RationalFunction.make(Fraction(1, lcm), total, common.items())


def rf_from_int(c: int) -> RationalFunction:
    return RationalFunction.make(c, _POLY_ONE)


def rf_from_fraction(c: Fraction | int) -> RationalFunction:
    return RationalFunction.make(Fraction(c), _POLY_ONE)


def rf_monomial(scalar, *var_exponents: tuple[int, int]) -> RationalFunction:
    """Build ``scalar * prod(x_i ** e)`` from (index, exponent) pairs."""
    mono: dict[int, int] = {}
    for i, e in var_exponents:
        mono[i] = mono.get(i, 0) + e
    width = max(mono, default=0)
    m = _trim(tuple(mono.get(i, 0) for i in range(1, width + 1)))
    return RationalFunction.make(Fraction(scalar), Polynomial({m: 1}))


def one_over_forms(*forms: LinearForm) -> RationalFunction:
    """``1 / (f1 * f2 * ...)`` for nonzero linear forms."""
    return RationalFunction.make(1, _POLY_ONE, ((f, 1) for f in forms))


# ---------------------------------------------------------------------------
# rendering and JSON
# ---------------------------------------------------------------------------


def _sorted_terms(p: Polynomial):
    return sorted(p.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)


def monomial_str(m: Monomial, var: str = "x") -> str:
    if not m:
        return "1"
    parts = []
    for i, e in enumerate(m, start=1):
        if e == 1:
            parts.append(f"{var}{i}")
        elif e > 1:
            parts.append(f"{var}{i}^{e}")
    return "*".join(parts)


def poly_str(p: Polynomial, var: str = "x") -> str:
    if p.is_zero():
        return "0"
    out = []
    for m, c in _sorted_terms(p):
        mono = monomial_str(m, var)
        if mono == "1":
            piece = str(abs(c))
        elif abs(c) == 1:
            piece = mono
        else:
            piece = f"{abs(c)}*{mono}"
        if not out:
            out.append(piece if c > 0 else f"-{piece}")
        else:
            out.append(f"+ {piece}" if c > 0 else f"- {piece}")
    return " ".join(out)


def form_str(f: LinearForm, var: str = "x") -> str:
    return poly_str(f.as_polynomial(), var) if not f.is_zero() else "0"


def rf_str(r: RationalFunction, var: str = "x") -> str:
    if r.scalar == 0:
        return "0"
    num = poly_str(r.numerator, var)
    parts = []
    if r.scalar != 1:
        parts.append(f"({r.scalar})")
    if num != "1" or not parts and not r.denominator:
        parts.append(f"({num})" if ("+" in num or "-" in num[1:]) else num)
    head = "*".join(parts) if parts else "1"
    if not r.denominator:
        return head
    den = "*".join(
        f"({form_str(f, var)})" + (f"^{m}" if m > 1 else "")
        for f, m in r.denominator
    )
    return f"{head}/[{den}]"


def monomial_latex(m: Monomial, var: str = "x") -> str:
    if not m:
        return ""
    parts = []
    for i, e in enumerate(m, start=1):
        if e == 1:
            parts.append(f"{var}_{{{i}}}")
        elif e > 1:
            parts.append(f"{var}_{{{i}}}^{{{e}}}")
    return " ".join(parts)


def poly_latex(p: Polynomial, var: str = "x") -> str:
    if p.is_zero():
        return "0"
    out = []
    for m, c in _sorted_terms(p):
        mono = monomial_latex(m, var)
        if not mono:
            piece = str(abs(c))
        elif abs(c) == 1:
            piece = mono
        else:
            piece = f"{abs(c)} {mono}"
        if not out:
            out.append(piece if c > 0 else f"-{piece}")
        else:
            out.append(f"+ {piece}" if c > 0 else f"- {piece}")
    return " ".join(out)


def rf_latex(r: RationalFunction, var: str = "x") -> str:
    if r.scalar == 0:
        return "0"
    sign = "-" if r.scalar < 0 else ""
    p, q = abs(r.scalar.numerator), r.scalar.denominator
    num = poly_latex(r.numerator, var)
    if p != 1:
        num = f"{p} \\left({num}\\right)" if num != "1" else str(p)
    if not r.denominator and q == 1:
        return sign + num
    den_parts = [] if q == 1 else [str(q)]
    for f, m in r.denominator:
        factor = poly_latex(f.as_polynomial(), var)
        if len(f.coeffs) - f.coeffs.count(0) > 1 or m > 1:
            factor = f"\\left({factor}\\right)"
        if m > 1:
            factor = f"{factor}^{{{m}}}"
        den_parts.append(factor)
    return f"{sign}\\frac{{{num}}}{{{' '.join(den_parts)}}}"


def rf_to_json(r: RationalFunction) -> dict:
    return {
        "scalar": str(r.scalar),
        "numerator": [[list(m), str(c)] for m, c in _sorted_terms(r.numerator)],
        "denominator": [[list(f.coeffs), m] for f, m in r.denominator],
    }


def rf_from_json(obj: Mapping) -> RationalFunction:
    scalar = Fraction(obj["scalar"])
    raw = [
        (_trim(tuple(int(e) for e in mono)), Fraction(coeff))
        for mono, coeff in obj["numerator"]
    ]
    lcm = 1
    for _, c in raw:
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    num_terms: dict = {}
    for m, c in raw:
        num_terms[m] = num_terms.get(m, 0) + int(c * lcm)
    den = [(LinearForm(int(c) for c in coeffs), int(m)) for coeffs, m in obj["denominator"]]
    return RationalFunction.make(scalar / lcm, Polynomial.from_dict(num_terms), den)
