"""Alternality and symmetrality at truncation depth.

A mould is alternal when all its shuffle sums
``M^{p+q}((x_1..x_p) sh (x_{p+1}..x_{p+q}))`` vanish, and symmetral when
they factor as ``M^p(x_1..x_p) M^q(x_{p+1}..x_{p+q})``.  Both notions are
decided here directly from the shuffle sums, and independently through
dimoulds: the shuffle-evaluation map Sh is an algebra map into bi-indexed
moulds, and a mould is alternal iff Sh(M) = M (x) 1 + 1 (x) M, symmetral
iff Sh(M) = M (x) M.  Decisions are valid up to the truncation depth only;
reports carry the verified depth and a failing cell witness.
"""

from __future__ import annotations

from typing import Callable, Mapping

from .algebra import RationalFunction, rf_to_json
from .moulds import Mould, canonical_word, shuffle

__all__ = [
    "Dimould",
    "dimould_mu",
    "tensor",
    "sh_map",
    "SymmetryReport",
    "is_alternal",
    "is_symmetral",
    "is_alternal_via_sh",
    "is_symmetral_via_sh",
    "inductive_alternality_oracle",
]


class Dimould:
    """Bi-indexed mould: components M^{r,s} for r + s <= depth.

    The component at (r, s) is a rational function of r + s slot variables,
    the first r forming the left block and the rest the right block.
    """

    __slots__ = ("depth", "components")

    def __init__(self, depth: int, components: Mapping[tuple, RationalFunction]):
        self.depth = depth
        comps = {}
        for r in range(depth + 1):
            for s in range(depth + 1 - r):
                c = components.get((r, s), RationalFunction.zero())
                if c.max_var() > r + s:
                    raise ValueError(f"component ({r},{s}) uses too many variables")
                comps[(r, s)] = c
        self.components = comps

    @staticmethod
    def unit(depth: int) -> "Dimould":
        return Dimould(depth, {(0, 0): RationalFunction.one()})

    @staticmethod
    def from_function(
        depth: int, fn: Callable[[int, int], RationalFunction]
    ) -> "Dimould":
        return Dimould(
            depth,
            {
                (r, s): fn(r, s)
                for r in range(depth + 1)
                for s in range(depth + 1 - r)
            },
        )

    def component(self, r: int, s: int) -> RationalFunction:
        return self.components[(r, s)]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Dimould)
            and self.depth == other.depth
            and self.components == other.components
        )

    def __add__(self, other: "Dimould") -> "Dimould":
        d = min(self.depth, other.depth)
        return Dimould.from_function(
            d, lambda r, s: self.components[(r, s)] + other.components[(r, s)]
        )

    def __repr__(self):
        body = ", ".join(
            f"{rs}: {c}" for rs, c in sorted(self.components.items()) if not c.is_zero()
        )
        return f"Dimould({body})"


def dimould_mu(A: Dimould, B: Dimould) -> Dimould:
    """Product of dimoulds: both blocks split independently."""
    d = min(A.depth, B.depth)

    def comp(r: int, s: int) -> RationalFunction:
        left = canonical_word(r)
        right = canonical_word(s, offset=r)
        total = RationalFunction.zero()
        for i in range(r + 1):
            for j in range(s + 1):
                a = A.components[(i, j)]
                if a.is_zero():
                    continue
                b = B.components[(r - i, s - j)]
                if b.is_zero():
                    continue
                a_sub = a.substitute(left[:i] + right[:j]) if i + j else a
                b_sub = (
                    b.substitute(left[i:] + right[j:]) if (r - i) + (s - j) else b
                )
                total = total + a_sub * b_sub
        return total

    return Dimould.from_function(d, comp)


def tensor(M: Mould, N: Mould) -> Dimould:
    """Tensor embedding: (M (x) N)^{r,s} = M^r(x_1..x_r) N^s(x_{r+1}..x_{r+s})."""
    d = min(M.depth, N.depth)
    return Dimould.from_function(
        d, lambda r, s: M.components[r] * N.components[s].shift(r)
    )


def sh_map(M: Mould) -> Dimould:
    """Evaluate M on the shuffle of the two canonical blocks."""

    def comp(r: int, s: int) -> RationalFunction:
        comb = shuffle(canonical_word(r), canonical_word(s, offset=r))
        return M.eval_combination(comb)

    return Dimould.from_function(M.depth, comp)


class SymmetryReport:
    """Outcome of an alternality/symmetrality decision up to a depth.

    Falsy when a shuffle sum fails; the witness records the failing block
    sizes and the nonzero residual.
    """

    __slots__ = ("ok", "depth", "p", "q", "residual")

    def __init__(self, ok, depth, p=None, q=None, residual=None):
        self.ok = ok
        self.depth = depth
        self.p = p
        self.q = q
        self.residual = residual

    def __bool__(self) -> bool:
        return self.ok

    def witness_json(self) -> dict | None:
        if self.ok:
            return None
        return {"p": self.p, "q": self.q, "residual": rf_to_json(self.residual)}

    def __repr__(self):
        if self.ok:
            return f"SymmetryReport(ok, depth={self.depth})"
        return (
            f"SymmetryReport(fail at ({self.p},{self.q}), residual={self.residual})"
        )


def _shuffle_sum(M: Mould, p: int, q: int) -> RationalFunction:
    comb = shuffle(canonical_word(p), canonical_word(q, offset=p))
    return M.eval_combination(comb)


def is_alternal(M: Mould) -> SymmetryReport:
    """All shuffle sums with p, q >= 1 vanish; requires M^0 = 0."""
    if not M.components[0].is_zero():
        return SymmetryReport(False, M.depth, 0, 0, M.components[0])
    for total in range(2, M.depth + 1):
        for p in range(1, total):
            q = total - p
            residual = _shuffle_sum(M, p, q)
            if not residual.is_zero():
                return SymmetryReport(False, M.depth, p, q, residual)
    return SymmetryReport(True, M.depth)


def is_symmetral(S: Mould) -> SymmetryReport:
    """Shuffle sums factor multiplicatively; requires S^0 = 1."""
    c0 = S.components[0]
    if not (c0.is_constant() and not c0.is_zero() and c0.constant_value() == 1):
        return SymmetryReport(False, S.depth, 0, 0, c0 - RationalFunction.one())
    for total in range(2, S.depth + 1):
        for p in range(1, total):
            q = total - p
            residual = _shuffle_sum(S, p, q) - S.components[p] * S.components[
                q
            ].shift(p)
            if not residual.is_zero():
                return SymmetryReport(False, S.depth, p, q, residual)
    return SymmetryReport(True, S.depth)


def is_alternal_via_sh(M: Mould) -> bool:
    """Dimould characterization: Sh(M) = M (x) 1 + 1 (x) M."""
    unit = Mould.unit(M.depth)
    return sh_map(M) == tensor(M, unit) + tensor(unit, M)


def is_symmetral_via_sh(M: Mould) -> bool:
    """Dimould characterization: Sh(M) = M (x) M with M(empty) = 1."""
    c0 = M.components[0]
    if not (c0.is_constant() and c0.constant_value() == 1):
        return False
    return sh_map(M) == tensor(M, M)


def inductive_alternality_oracle(A: Mould) -> bool:
    """Check A^m(x_1..x_m) = A^{m-1}(x_1..x_{m-1}) - A^{m-1}(x_2..x_m).

    Moulds satisfying this recursion are alternal, so a True here must be
    matched by is_alternal; the pair is used as a consistency test.
    """
    for m in range(2, A.depth + 1):
        prev = A.components[m - 1]
        if A.components[m] != prev - prev.shift(1):
            return False
    return True
