"""Exact rational functions with factored linear-form denominators.

Everything in this library lives in the ring of rational functions whose
denominators are products of integer linear forms.  The canonical form
(primitive denominator factors, content-1 numerator, scalar out front)
makes structural equality decide semantic equality, with no floating
point anywhere.
"""

from fractions import Fraction

from mouldcalc import LinearForm, Polynomial, RationalFunction, x_var
from mouldcalc.algebra import one_over_forms, rf_latex, rf_str

x1, x2, x3 = x_var(1), x_var(2), x_var(3)

print("== building blocks ==")
a = one_over_forms(x1)
b = one_over_forms(x2)
print("1/x1 + 1/x2          =", rf_str(a + b))
print("1/x1 * 1/(x1+x2)     =", rf_str(a * one_over_forms(x1 + x2)))

print()
print("== cancellation is automatic ==")
f = RationalFunction.make(1, (x1 - x2).as_polynomial(), [(x1, 1)])
g = RationalFunction.make(1, x1.as_polynomial(), [(x1 - x2, 1)])
print("(x1-x2)/x1 * x1/(x1-x2) =", rf_str(f * g))

h = RationalFunction.make(1, Polynomial.from_dict({(2,): 1, (0, 2): -1}), [(x1 - x2, 1)])
print("(x1^2-x2^2)/(x1-x2)      =", rf_str(h))

print()
print("== substitution of linear forms keeps the shape ==")
print("1/x1 at x1 := x1+x2+x3   =", rf_str(a.substitute((x1 + x2 + x3,))))

print()
print("== canonical equality ==")
lhs = RationalFunction.make(
    Fraction(1, 12), Polynomial.from_dict({(1,): 1, (0, 1): 2}), [(x1, 1), (x2, 1), (x1 + x2, 1)]
)
rhs = RationalFunction.make(
    Fraction(1, 12), Polynomial.from_dict({(1,): 1, (0, 1): 2}), [(x1 + x2, 1), (x1, 1), (x2, 1)]
)
print("permuted denominators compare equal:", lhs == rhs)
print("LaTeX:", rf_latex(lhs))
