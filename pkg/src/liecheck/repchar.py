"""Formal characters: highest-weight modules, tensor operations, decomposition."""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import _linalg as la
from .rootdata import RootDatum


class FormalCharacter:
    """A finite weight -> multiplicity map on the character lattice of a datum."""

    __slots__ = ("datum", "_mult")

    def __init__(self, datum: RootDatum, mult: Mapping | Iterable = ()):
        self.datum = datum
        items = mult.items() if isinstance(mult, Mapping) else mult
        clean: dict = {}
        for w, m in items:
            w = tuple(int(x) for x in w)
            if len(w) != datum.rank:
                raise ValueError("weight of wrong length")
            clean[w] = clean.get(w, 0) + m
        self._mult = {w: m for w, m in clean.items() if m}

    # -- mapping view ---------------------------------------------------------
    def multiplicity(self, w: Sequence[int]) -> int:
        return self._mult.get(tuple(w), 0)

    def items(self):
        return self._mult.items()

    def weights(self):
        return self._mult.keys()

    @property
    def dim(self) -> int:
        return sum(self._mult.values())

    def is_zero(self) -> bool:
        return not self._mult

    def sorted_items(self) -> list:
        return sorted(self._mult.items())

    def __eq__(self, other) -> bool:
        return (isinstance(other, FormalCharacter) and self.datum is other.datum
                and self._mult == other._mult)

    def __hash__(self):
        return hash(frozenset(self._mult.items()))

    def __repr__(self) -> str:
        return f"FormalCharacter(dim={self.dim}, weights={len(self._mult)})"

    def _check(self, other: "FormalCharacter"):
        if self.datum is not other.datum:
            raise ValueError("characters live on different root data")

    def __add__(self, other: "FormalCharacter") -> "FormalCharacter":
        self._check(other)
        c = Counter(self._mult)
        c.update(other._mult)
        return FormalCharacter(self.datum, c)

    def __sub__(self, other: "FormalCharacter") -> "FormalCharacter":
        self._check(other)
        c = dict(self._mult)
        for w, m in other._mult.items():
            c[w] = c.get(w, 0) - m
        return FormalCharacter(self.datum, c)

    def scale(self, k) -> "FormalCharacter":
        return FormalCharacter(self.datum, {w: k * m for w, m in self._mult.items()})

    def is_genuine(self) -> bool:
        return all(isinstance(m, int) and m > 0 for m in self._mult.values())

    def is_weyl_invariant(self) -> bool:
        d = self.datum
        for w, m in self._mult.items():
            for i in range(d.semisimple_rank):
                if self._mult.get(d.reflect(i, w), 0) != m:
                    return False
        return True

    def adams(self, k: int) -> "FormalCharacter":
        """ψ^k: every weight multiplied by k."""
        out: dict = {}
        for w, m in self._mult.items():
            kw = tuple(k * x for x in w)
            out[kw] = out.get(kw, 0) + m
        return FormalCharacter(self.datum, out)

    def dominant_part(self) -> dict:
        d = self.datum
        return {w: m for w, m in self._mult.items() if d.is_dominant(w)}

    def transport(self, target: RootDatum, matrix: Sequence[Sequence[int]]) -> "FormalCharacter":
        """Image under a lattice map given as rows (target weight = matrix applied to w)."""
        out: dict = {}
        for w, m in self._mult.items():
            v = tuple(la.dot(row, w) for row in matrix)
            out[v] = out.get(v, 0) + m
        return FormalCharacter(target, out)


def zero(d: RootDatum) -> FormalCharacter:
    return FormalCharacter(d, {})


def trivial(d: RootDatum) -> FormalCharacter:
    return FormalCharacter(d, {(0,) * d.rank: 1})


def _form(d: RootDatum, x, y):
    """W-invariant form: sum over all coroots of <x,β∨><y,β∨>."""
    return sum(la.dot(x, c) * la.dot(y, c) for c in d.coroots)


def _require_dominant(d: RootDatum, lam) -> tuple:
    lam = d.check_vector(tuple(lam))
    if any(Fraction(x).denominator != 1 for x in lam):
        raise ValueError("highest weight is not in the character lattice")
    lam = tuple(int(x) for x in lam)
    if not d.is_dominant(lam):
        raise ValueError(f"weight {lam} is not dominant")
    return lam


def dominant_multiplicities(d: RootDatum, lam: Sequence[int]) -> dict:
    """Freudenthal multiplicities of the dominant weights of V(λ)."""
    lam = _require_dominant(d, lam)
    pos = [(d.roots[i], sum(d.root_coefficients(i))) for i in d.positive_root_indices()]
    # dominant weights below λ, with depth = height of λ - μ
    depth = {lam: 0}
    frontier = [lam]
    while frontier:
        new = []
        for mu in frontier:
            for a, h in pos:
                nu = tuple(x - y for x, y in zip(mu, a))
                if nu not in depth and d.is_dominant(nu):
                    depth[nu] = depth[mu] + h
                    new.append(nu)
        frontier = new
    order = sorted(depth, key=lambda w: (depth[w], w))
    lr = tuple(Fraction(x) + r for x, r in zip(lam, d.rho))
    norm_top = _form(d, lr, lr)
    mult: dict = {lam: 1}

    for mu in order[1:]:
        num = 0
        for a, _ in pos:
            k = 1
            while True:
                w = tuple(x + k * y for x, y in zip(mu, a))
                dw = d.dominant_representative(w)
                if dw not in depth:
                    break
                mw = mult.get(dw, 0)
                if mw:
                    num += mw * _form(d, w, a)
                k += 1
        mr = tuple(Fraction(x) + r for x, r in zip(mu, d.rho))
        den = norm_top - _form(d, mr, mr)
        val = Fraction(2 * num) / den
        if val.denominator != 1:
            raise ArithmeticError("non-integral Freudenthal multiplicity")
        if val:
            mult[mu] = int(val)
    return mult


def irrep_character(d: RootDatum, lam: Sequence[int]) -> FormalCharacter:
    out: dict = {}
    for mu, m in dominant_multiplicities(d, lam).items():
        for w in d.weyl_orbit(mu):
            out[w] = m
    return FormalCharacter(d, out)


def dim_weyl(d: RootDatum, lam: Sequence[int]) -> int:
    lam = _require_dominant(d, lam)
    num = Fraction(1)
    for i in d.positive_root_indices():
        c = d.coroots[i]
        num *= Fraction(la.dot(lam, c) + la.dot(d.rho, c), la.dot(d.rho, c))
    return int(num)


def tensor(a: FormalCharacter, b: FormalCharacter) -> FormalCharacter:
    a._check(b)
    out: dict = {}
    for w1, m1 in a.items():
        for w2, m2 in b.items():
            w = tuple(x + y for x, y in zip(w1, w2))
            out[w] = out.get(w, 0) + m1 * m2
    return FormalCharacter(a.datum, out)


def direct_sum(chars: Iterable[FormalCharacter]) -> FormalCharacter:
    chars = list(chars)
    out = chars[0]
    for c in chars[1:]:
        out = out + c
    return out


def dual(a: FormalCharacter) -> FormalCharacter:
    return FormalCharacter(a.datum, {tuple(-x for x in w): m for w, m in a.items()})


def exterior_power(a: FormalCharacter, k: int) -> FormalCharacter:
    """Λ^k via Newton's identities  k e_k = Σ_{i=1..k} (-1)^{i-1} e_{k-i} ψ^i."""
    if k < 0 or k > a.dim:
        raise ValueError("exterior power degree out of range")
    d = a.datum
    e = [trivial(d)]
    psi = [None] + [a.adams(i) for i in range(1, k + 1)]
    for n in range(1, k + 1):
        acc: dict = {}
        for i in range(1, n + 1):
            sign = 1 if i % 2 else -1
            for w, m in tensor(e[n - i], psi[i]).items():
                acc[w] = acc.get(w, 0) + sign * m
        en = {}
        for w, m in acc.items():
            if m % n:
                raise ArithmeticError("Newton identity produced a non-integral multiplicity")
            en[w] = m // n
        e.append(FormalCharacter(d, en))
    return e[k]


def symmetric_power(a: FormalCharacter, k: int) -> FormalCharacter:
    """Sym^k via k h_k = Σ_{i=1..k} h_{k-i} ψ^i."""
    d = a.datum
    h = [trivial(d)]
    for n in range(1, k + 1):
        acc: dict = {}
        for i in range(1, n + 1):
            for w, m in tensor(h[n - i], a.adams(i)).items():
                acc[w] = acc.get(w, 0) + m
        h.append(FormalCharacter(d, {w: m // n for w, m in acc.items()}))
    return h[k]


def _selection_key(d: RootDatum, w):
    return (la.dot(w, d.two_rho_vee), d.dynkin_labels(w), d.central_weight(w), w)


def decompose(a: FormalCharacter) -> list[tuple[tuple, int]]:
    """Irreducible constituents as sorted (highest weight, multiplicity) pairs."""
    d = a.datum
    rem = dict(a.items())
    out: dict = {}
    while rem:
        dom = [w for w in rem if d.is_dominant(w)]
        if not dom:
            raise ValueError("not a character: no dominant weight remains")
        top = max(dom, key=lambda w: _selection_key(d, w))
        m = rem[top]
        if m < 0:
            raise ValueError("not a character: negative multiplicity")
        out[top] = out.get(top, 0) + m
        for w, mw in irrep_character(d, top).items():
            v = rem.get(w, 0) - m * mw
            if v < 0:
                raise ValueError("not a character: negative multiplicity")
            if v:
                rem[w] = v
            else:
                rem.pop(w, None)
    return sorted(out.items(), key=lambda t: _selection_key(d, t[0]), reverse=True)


def lowest_dominant_dual(d: RootDatum, lam: Sequence[int]) -> tuple:
    """Highest weight of the dual module, -w0 λ."""
    return d.dominant_representative(tuple(-x for x in lam))


def fs_indicator(d: RootDatum, lam: Sequence[int]) -> int:
    """+1 orthogonal, -1 symplectic, 0 not self-dual."""
    lam = _require_dominant(d, lam)
    if lowest_dominant_dual(d, lam) != lam:
        return 0
    return -1 if la.dot(lam, d.two_rho_vee) % 2 else 1


def symplectic_type(a: FormalCharacter) -> bool:
    """True when the representation carries a nondegenerate invariant symplectic form.

    Self-dual constituents must be symplectic or occur with even multiplicity;
    the others must occur together with their duals with equal multiplicity.
    """
    d = a.datum
    pieces = dict(decompose(a))
    for lam, m in pieces.items():
        lamd = lowest_dominant_dual(d, lam)
        if lamd == lam:
            if fs_indicator(d, lam) == 1 and m % 2:
                return False
        elif pieces.get(lamd, 0) != m:
            return False
    return True
