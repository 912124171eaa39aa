"""A tour of the mould algebra and the flexion toolbox.

Moulds are depth-indexed families of rational functions; the flexion
operators (arit, ari, garit, gari, expari/logari, adari) make the spaces
with vanishing / unit constant term into a Lie algebra and a group.  The
named moulds paj, dupal and pal are the classical polar examples.
"""


from mouldcalc import (
    Mould,
    adari,
    ari,
    dupal,
    expari,
    gari,
    invgari,
    is_alternal,
    is_symmetral,
    logari,
    mu,
    mu_inverse,
    mupaj,
    paj,
    pal,
    sa,
)
from mouldcalc.algebra import rf_str
from mouldcalc.verify import random_ari_mould, random_gari_mould
import random

print("== the polar mould paj and its product inverse ==")
P = paj(4)
for m in range(1, 4):
    print(f"paj^{m} =", rf_str(P.component(m)))
print("paj x mupaj == 1:", mu(P, mupaj(4)) == Mould.unit(4))
print("mupaj == mu_inverse(paj):", mupaj(4) == mu_inverse(P))

print()
print("== dupal (alternal) and pal (symmetral) ==")
D = dupal(6)
print("dupal^2 =", rf_str(D.component(2)))
print("dupal odd components vanish:", D.component(3).is_zero(), D.component(5).is_zero())
print("dupal alternal to depth 6:", bool(is_alternal(D)))
L = pal(5)
print("pal^3  =", rf_str(L.component(3)))
print("pal symmetral to depth 5:", bool(is_symmetral(L)))

print()
print("== group structure ==")
rng = random.Random(1)
S = random_gari_mould(rng, 4)
T = random_gari_mould(rng, 4)
U = random_gari_mould(rng, 4)
print("gari associativity:", gari(gari(S, T), U) == gari(S, gari(T, U)))
print("invgari is two-sided:", gari(S, invgari(S)) == Mould.unit(4))

A = random_ari_mould(rng, 4)
print("logari(expari(A)) == A:", logari(expari(A)) == A)
print("adari(S) conjugation undone by adari(invgari(S)):",
      adari(S)(adari(invgari(S))(A)) == A)

print()
print("== the ari bracket is a Lie bracket ==")
M, N, Q = (random_ari_mould(rng, 4) for _ in range(3))
jac = ari(ari(M, N), Q) + ari(ari(N, Q), M) + ari(ari(Q, M), N)
print("Jacobi identity:", jac.is_zero())

print()
print("== the singulator collapses sa_3 to a polynomial at depth 2 ==")
from mouldcalc import sang

sg = sang(sa(3, 3))
print("sang(sa_3)^2 =", rf_str(sg.component(2)))
