"""Finite-order semisimple elements: Kac coordinates, centralizers, eigenspaces.

A torsion element is s = exp(2πi x) for a rational cocharacter x ∈ X∨ ⊗ Q.
Conjugacy classes are points of the fundamental alcove modulo Ω_X, and the
centre's identity component is quotiented out (points differing by a central
rational direction are identified).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from . import _linalg as la
from .repchar import FormalCharacter
from .rootdata import (FiniteAbelianGroup, RootDatum, alcove_normalize, coweight_coordinates,
                       fundamental_coweights, omega_act, omega_elements, omega_lattice)


@dataclass(frozen=True)
class KacCoordinates:
    """Per simple component the tuple (s_0, ..., s_l); plus a central rational part."""
    values: tuple[tuple[int, ...], ...]
    central: tuple[Fraction, ...] = ()

    def component_orders(self, d: RootDatum) -> tuple[int, ...]:
        return tuple(sum(a * s for a, s in zip(marks, vals))
                     for marks, vals in zip(d.affine_marks, self.values))

    def order(self, d: RootDatum) -> int:
        out = 1
        for m in self.component_orders(d):
            out = la.lcm(out, m)
        return out

    def __str__(self) -> str:
        return " ; ".join("(" + ",".join(map(str, v)) + ")" for v in self.values)


class TorsionPoint:
    """s = exp(2πi x) with x a rational cocharacter."""

    def __init__(self, datum: RootDatum, x: Sequence):
        self.datum = datum
        self.x = tuple(Fraction(v) for v in datum.check_vector(tuple(x)))

    def __eq__(self, other):
        return isinstance(other, TorsionPoint) and other.datum is self.datum and other.x == self.x

    def __hash__(self):
        return hash(self.x)

    def __repr__(self) -> str:
        return f"TorsionPoint({', '.join(str(v) for v in self.x)})"

    @cached_property
    def exact_order(self) -> int:
        """Order of s in the torus: least m with m·x ∈ X∨."""
        return la.denominator_lcm(self.x)

    @cached_property
    def order(self) -> int:
        """Order modulo the identity component of the centre."""
        d = self.datum
        if d.semisimple_rank == 0:
            return 1
        v = coweight_coordinates(d, self.x)
        basis = omega_lattice(d)
        coords = la.solve_left(basis, v)
        return la.denominator_lcm(coords)

    @cached_property
    def normalized(self) -> "TorsionPoint":
        """Alcove representative, keeping the central part of x."""
        return TorsionPoint(self.datum, alcove_normalize(self.datum, self.x))

    @cached_property
    def kac(self) -> KacCoordinates:
        return point_to_kac(self)

    @property
    def kac_order(self) -> int:
        return self.kac.order(self.datum)

    def scaled(self, k: int) -> "TorsionPoint":
        return TorsionPoint(self.datum, tuple(k * v for v in self.x))


def _central_part(d: RootDatum, x: Sequence) -> tuple:
    """x minus its projection to the coroot span."""
    cow = fundamental_coweights(d)
    proj = [Fraction(0)] * d.rank
    for c, w in zip(coweight_coordinates(d, x), cow):
        proj = [a + c * b for a, b in zip(proj, w)]
    return tuple(Fraction(a) - b for a, b in zip(x, proj))


def kac_to_point(d: RootDatum, k: KacCoordinates) -> TorsionPoint:
    if len(k.values) != len(d.components):
        raise ValueError("one Kac tuple per simple component is required")
    cow = fundamental_coweights(d)
    x = [Fraction(0)] * d.rank
    for comp, marks, vals in zip(d.components, d.affine_marks, k.values):
        if len(vals) != comp.rank + 1 or any(v < 0 for v in vals):
            raise ValueError(f"bad Kac tuple {vals} for {comp.name}")
        m = sum(a * s for a, s in zip(marks, vals))
        if m < 1:
            raise ValueError("Kac tuple of order zero")
        for i, pos in enumerate(comp.simple, start=1):
            x = [a + Fraction(vals[i], m) * b for a, b in zip(x, cow[pos])]
    if k.central:
        x = [a + Fraction(b) for a, b in zip(x, k.central)]
    return TorsionPoint(d, x)


def point_to_kac(p: TorsionPoint) -> KacCoordinates:
    d = p.datum
    x = alcove_normalize(d, p.x)
    vals = []
    for c, comp in enumerate(d.components):
        fr = [Fraction(la.dot(d.simple_roots[pos], x)) for pos in comp.simple]
        th = d.roots[d.highest_roots[c]]
        fr = [1 - Fraction(la.dot(th, x))] + fr
        m = la.denominator_lcm(fr)
        vals.append(tuple(int(f * m) for f in fr))
    return KacCoordinates(tuple(vals), _central_part(d, p.x))


def _kac_key(d: RootDatum, x) -> tuple:
    return point_to_kac(TorsionPoint(d, x)).values


def canonical_point(d: RootDatum, x: Sequence) -> TorsionPoint:
    """Representative of the Ω_X-orbit with the smallest Kac tuple."""
    base = alcove_normalize(d, x)
    cands = [omega_act(d, g, base) for g in omega_elements(d)]
    best = min(cands, key=lambda y: _kac_key(d, y))
    return TorsionPoint(d, best)


def _compositions(marks: Sequence[int], total: int):
    """Nonnegative s with Σ marks_i s_i == total."""
    n = len(marks)
    out = []
    s = [0] * n

    def rec(i, left):
        if i == n - 1:
            if left % marks[i] == 0:
                s[i] = left // marks[i]
                out.append(tuple(s))
            return
        for v in range(left // marks[i] + 1):
            s[i] = v
            rec(i + 1, left - v * marks[i])

    rec(0, total)
    return out


def enumerate_torsion(d: RootDatum, m: int, order_kind: str = "kac") -> list[TorsionPoint]:
    """Conjugacy classes of torsion points modulo the central torus.

    ``order_kind="kac"`` lists classes whose Kac order Σ a_i s_i divides m on
    every component; ``order_kind="group"`` lists classes of elements whose
    order in the group (modulo the central torus) divides m.
    """
    if m < 1:
        raise ValueError("order must be positive")
    if order_kind not in ("kac", "group"):
        raise ValueError("order_kind must be 'kac' or 'group'")
    if d.semisimple_rank == 0:
        return [TorsionPoint(d, (0,) * d.rank)]
    cow = fundamental_coweights(d)
    per_comp = [_compositions(marks, m) for marks in d.affine_marks]
    seen = set()
    out = []

    def build(choice):
        x = [Fraction(0)] * d.rank
        for comp, vals in zip(d.components, choice):
            for i, pos in enumerate(comp.simple, start=1):
                x = [a + Fraction(vals[i], m) * b for a, b in zip(x, cow[pos])]
        return x

    def rec(c, choice):
        if c == len(per_comp):
            p = canonical_point(d, build(choice))
            if p.x in seen:
                return
            if order_kind == "group" and m % p.order:
                return
            seen.add(p.x)
            out.append(p)
            return
        for vals in per_comp[c]:
            rec(c + 1, choice + [vals])

    rec(0, [])
    out.sort(key=lambda p: (p.order, p.kac_order, p.kac.values))
    return out


def centralizer_roots(d: RootDatum, p: TorsionPoint) -> list[int]:
    return [i for i, a in enumerate(d.roots) if Fraction(la.dot(a, p.x)).denominator == 1]


def centralizer_subsystem(d: RootDatum, p: TorsionPoint) -> RootDatum:
    """Connected centralizer: same lattice, roots integral on x."""
    if p.datum is not d:
        raise ValueError("torsion point belongs to another datum")
    return d.subsystem(centralizer_roots(d, p))


def is_elliptic(d: RootDatum, p: TorsionPoint) -> bool:
    return centralizer_subsystem(d, p).semisimple_rank == d.semisimple_rank


def eigenspace_decomposition(chi: FormalCharacter, p: TorsionPoint,
                             centralizer: RootDatum | None = None) -> tuple[int, dict]:
    """Split a character by the eigenvalues exp(2πi k/m) of s.

    Returns (m, {k: character over the centralizer}) with m the exact order.
    """
    d = chi.datum
    if p.datum is not d:
        raise ValueError("character and point live on different data")
    m = p.exact_order
    cent = centralizer or centralizer_subsystem(d, p)
    parts: dict = {}
    for w, mult in chi.items():
        v = la.dot(w, p.x) * m
        if v.denominator != 1:
            raise ValueError("weight pairing has a denominator not dividing the order")
        k = int(v) % m
        parts.setdefault(k, {})[w] = mult
    return m, {k: FormalCharacter(cent, ws) for k, ws in sorted(parts.items())}


def minus_one_part(chi: FormalCharacter, p: TorsionPoint, centralizer: RootDatum | None = None):
    """(V_+, V_-) for an element acting with eigenvalues ±1 only."""
    m, parts = eigenspace_decomposition(chi, p, centralizer)
    cent = centralizer or centralizer_subsystem(chi.datum, p)
    if m == 1:
        return parts.get(0, FormalCharacter(cent)), FormalCharacter(cent)
    bad = [k for k in parts if k not in (0, m // 2) or (k and m % 2)]
    if bad:
        raise ValueError("element has eigenvalues other than ±1 on this representation")
    return parts.get(0, FormalCharacter(cent)), parts.get(m // 2, FormalCharacter(cent))


def _subgroup_invariants(elements_coords: list[list[int]], moduli: list[int]) -> tuple[int, ...]:
    n = len(moduli)
    gens = [list(e) for e in elements_coords] + [[moduli[i] * int(i == j) for j in range(n)]
                                                 for i in range(n)]
    basis = la.integer_row_basis(gens, n)
    rel = []
    for i in range(n):
        target = [moduli[i] * int(i == j) for j in range(n)]
        rel.append([int(c) for c in la.solve_left(basis, target)])
    _, dm, _ = la.smith_normal_form(rel)
    return tuple(dm[i][i] for i in range(len(dm)) if dm[i][i] > 1)


def component_group_adjoint(d: RootDatum, p: TorsionPoint) -> FiniteAbelianGroup:
    """Stabilizer in Ω of the Kac diagram of p (π0 of the adjoint centralizer)."""
    omega = omega_elements(d)
    r = d.semisimple_rank
    cartan_t = [[d.cartan[j][i] for j in range(r)] for i in range(r)]
    _, dm, v = la.smith_normal_form(cartan_t)
    moduli = [dm[i][i] for i in range(r)]
    full = 1
    for mi in moduli:
        full *= mi
    if len(omega) != full:
        raise ValueError("component groups are computed for adjoint data only")
    base = alcove_normalize(d, p.x)
    stab = [g for g in omega if omega_act(d, g, base) == base]
    coords = []
    for g in stab:
        y = coweight_coordinates(d, g)
        yv = [sum(y[k] * v[k][i] for k in range(r)) for i in range(r)]
        coords.append([int(c) % mi if mi else 0 for c, mi in zip(yv, moduli)])
    keep = [i for i, mi in enumerate(moduli) if mi > 1]
    inv = _subgroup_invariants([[c[i] for i in keep] for c in coords], [moduli[i] for i in keep])
    return FiniteAbelianGroup(inv, tuple(stab))


@dataclass(frozen=True)
class TorsionSummary:
    label: str
    order: int
    kac_order: int
    elliptic: bool
    kac: str

    def as_row(self) -> tuple:
        return (self.label, self.order, self.elliptic, self.kac)


def summarize(d: RootDatum, p: TorsionPoint) -> TorsionSummary:
    cent = centralizer_subsystem(d, p)
    return TorsionSummary(cent.type_label, p.order, p.kac_order,
                          cent.semisimple_rank == d.semisimple_rank, str(p.kac))

