"""Root data, Weyl groups, centers and the group-shape descriptor language.

A :class:`RootDatum` stores integer coordinates of roots in a basis of the
character lattice X and of coroots in the dual basis of X∨. Every datum also
carries a :class:`Frame` recording how its lattice sits inside the "ambient"
coordinates of the product it was built from, so that highest weights and
torsion points can be written in familiar coordinates (fundamental weights
for simply connected factors, e_i for GL_n) and converted.

Descriptor grammar (whitespace is insignificant)::

    shape    := product ("|" modifier)*
    product  := factor ("x" factor)*
    factor   := E7:sc | D6:ad | A1 | GL4 | SL6 | T1 | Spin11 | GSpin7 | GHSpinDual12
    modifier := ker(charexpr)       connected kernel of a character
              | quot(eltexpr)       quotient by a finite central cyclic subgroup
    charexpr := term ("+" term)*    term: [int*]name@k or [v1,v2,...]
    eltexpr  := term ("+" term)*    term: name@k or [q1,q2,...] (rationals)

Factor numbering in ``@k`` is 1-based in declaration order.

Named characters: ``det`` (GL), ``id`` (torus), ``sim`` and ``t`` (GSpin: a ↦ a², a ↦ a).
Named elements: ``z`` generates the centre of a simply connected factor (for
Spin, the kernel of the map to SO); for even D_n ``zp`` and ``zm`` act trivially
on the half-spin ω_n and ω_{n-1} respectively; ``minus`` is -1 in GL_n.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product as iproduct
from math import gcd, prod
from typing import Iterable, Sequence

from . import _linalg as la

Vec = tuple


# ----------------------------------------------------------------------------
# Cartan matrices (Bourbaki numbering), C[i][j] = <alpha_i, alpha_j^vee>

def cartan_matrix(letter: str, n: int) -> list[list[int]]:
    letter = letter.upper()
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, a_ij=-1, a_ji=-1):
        c[i][j] = a_ij
        c[j][i] = a_ji

    if letter == "A" and n >= 1:
        for i in range(n - 1):
            link(i, i + 1)
    elif letter in "BC" and n >= 2:
        for i in range(n - 2):
            link(i, i + 1)
        if letter == "B":
            link(n - 2, n - 1, -2, -1)
        else:
            link(n - 2, n - 1, -1, -2)
    elif letter == "D" and n >= 4:
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif letter == "E" and n in (6, 7, 8):
        link(0, 2)
        link(1, 3)
        for i in range(2, n - 1):
            link(i, i + 1)
    elif letter == "F" and n == 4:
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
    elif letter == "G" and n == 2:
        link(0, 1, -1, -3)
    else:
        raise ValueError(f"unsupported Cartan type {letter}{n}")
    return c


_DEGREES = {
    "E6": (2, 5, 6, 8, 9, 12),
    "E7": (2, 6, 8, 10, 12, 14, 18),
    "E8": (2, 8, 12, 14, 18, 20, 24, 30),
    "F4": (2, 6, 8, 12),
    "G2": (2, 6),
}


def degrees(letter: str, n: int) -> tuple[int, ...]:
    """Degrees of the basic W-invariant polynomials."""
    if letter == "A":
        return tuple(range(2, n + 2))
    if letter in "BC":
        return tuple(range(2, 2 * n + 1, 2))
    if letter == "D":
        return tuple(sorted(tuple(range(2, 2 * n - 1, 2)) + (n,)))
    return _DEGREES[f"{letter}{n}"]


def _candidate_types(n: int) -> list[tuple[str, int]]:
    out = [("A", n)]
    if n >= 2:
        out += [("B", n)]
    if n >= 3:
        out += [("C", n)]
    if n >= 4:
        out += [("D", n)]
    if n in (6, 7, 8):
        out += [("E", n)]
    if n == 4:
        out += [("F", 4)]
    if n == 2:
        out += [("G", 2)]
    return out


def _match_cartan(std: list[list[int]], comp: list[list[int]], first_only=True):
    """Bijections p (std index -> comp index) with std[i][j] == comp[p i][p j]."""
    n = len(std)
    found = []
    p = [None] * n
    used = [False] * n

    def extend(i):
        if i == n:
            found.append(tuple(p))
            return first_only
        for cand in range(n):
            if used[cand] or comp[cand][cand] != std[i][i]:
                continue
            if all(std[i][j] == comp[cand][p[j]] and std[j][i] == comp[p[j]][cand]
                   for j in range(i)):
                p[i] = cand
                used[cand] = True
                if extend(i + 1):
                    return True
                used[cand] = False
        return False

    extend(0)
    return found


def identify_type(comp_cartan: list[list[int]]) -> tuple[str, int, tuple[int, ...]]:
    """Cartan type of a connected Cartan matrix and a Bourbaki ordering of its nodes."""
    n = len(comp_cartan)
    for letter, r in _candidate_types(n):
        hit = _match_cartan(cartan_matrix(letter, r), comp_cartan)
        if hit:
            return letter, r, hit[0]
    raise ValueError("Cartan matrix of unknown type")


def diagram_automorphisms(letter: str, n: int) -> list[tuple[int, ...]]:
    c = cartan_matrix(letter, n)
    return _match_cartan(c, c, first_only=False)


def normalize_type_name(letter: str, n: int) -> list[tuple[str, int]]:
    """Low-rank coincidences folded to one spelling (B1=C1=A1, D2=2A1, D3=A3, C2=B2)."""
    if n == 1 and letter in "ABC":
        return [("A", 1)]
    if letter == "D" and n == 2:
        return [("A", 1), ("A", 1)]
    if letter == "D" and n == 3:
        return [("A", 3)]
    if letter == "C" and n == 2:
        return [("B", 2)]
    return [(letter, n)]


def _component_sort_key(t: tuple[str, int]):
    return (-t[1], t[0])


def format_type(parts: Iterable[tuple[str, int]], torus_rank: int = 0) -> str:
    flat = []
    for letter, n in parts:
        flat.extend(normalize_type_name(letter, n))
    flat.sort(key=_component_sort_key)
    s = "+".join(f"{l}{n}" for l, n in flat)
    if torus_rank:
        s = f"{s}+T{torus_rank}" if s else f"T{torus_rank}"
    return s or "T0"


def parse_type_label(label: str) -> tuple[list[tuple[str, int]], int]:
    parts, torus = [], 0
    for tok in label.replace(" ", "").split("+"):
        if not tok:
            continue
        m = re.fullmatch(r"(\d*)([A-GT])(\d+)", tok)
        if not m:
            raise ValueError(f"bad type label {label!r}")
        mult = int(m.group(1) or 1)
        if m.group(2) == "T":
            torus += mult * int(m.group(3))
        else:
            parts += [(m.group(2), int(m.group(3)))] * mult
    return parts, torus


def canonical_type_label(label: str) -> str:
    parts, torus = parse_type_label(label)
    return format_type(parts, torus)


# ----------------------------------------------------------------------------
# Frames: ambient coordinates

@dataclass(frozen=True)
class Factor:
    """One declared factor of a product shape, in ambient coordinates."""
    label: str
    offset: int
    dim: int
    components: tuple[tuple[str, int], ...]
    std_weights: tuple[Vec, ...] = ()
    std_kind: str = ""          # "GL", "SL", "B", "C", "D" or ""


@dataclass(frozen=True)
class Frame:
    ambient_dim: int
    basis: tuple[Vec, ...]                       # X∨ basis in ambient cocharacter coords
    constraints: tuple[tuple[Vec, Vec], ...] = ()  # (chi, y0) from kernel modifiers
    factors: tuple[Factor, ...] = ()
    characters: tuple[tuple[str, Vec], ...] = ()   # "det@2" -> ambient character
    elements: tuple[tuple[str, Vec], ...] = ()     # "z@1" -> ambient rational cocharacter

    @staticmethod
    def trivial(n: int) -> "Frame":
        return Frame(n, tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)))


# ----------------------------------------------------------------------------

@dataclass(frozen=True)
class Component:
    letter: str
    rank: int
    simple: tuple[int, ...]   # positions in the simple list, Bourbaki order

    @property
    def name(self) -> str:
        return f"{self.letter}{self.rank}"


class RootDatum:
    """An immutable based root datum with integer coordinates."""

    def __init__(self, rank: int, simple_roots: Sequence[Sequence[int]],
                 simple_coroots: Sequence[Sequence[int]], frame: Frame | None = None,
                 name: str = ""):
        self.rank = rank
        self.frame = frame or Frame.trivial(rank)
        self.name = name
        sr = [tuple(int(x) for x in v) for v in simple_roots]
        sc = [tuple(int(x) for x in v) for v in simple_coroots]
        for v in sr + sc:
            if len(v) != rank:
                raise ValueError("root vector of wrong length")
        ordered, comps = self._order_simple(sr, sc)
        self._simple_roots = tuple(sr[i] for i in ordered)
        self._simple_coroots = tuple(sc[i] for i in ordered)
        self.components = comps
        self._generate()

    # -- construction ------------------------------------------------------
    @staticmethod
    def _order_simple(sr, sc):
        r = len(sr)
        cm = [[la.dot(sr[i], sc[j]) for j in range(r)] for i in range(r)]
        seen, groups = set(), []
        for i in range(r):
            if i in seen:
                continue
            stack, grp = [i], []
            seen.add(i)
            while stack:
                a = stack.pop()
                grp.append(a)
                for b in range(r):
                    if b not in seen and (cm[a][b] or cm[b][a]):
                        seen.add(b)
                        stack.append(b)
            groups.append(sorted(grp))
        ordered, comps = [], []
        for grp in groups:
            sub = [[cm[a][b] for b in grp] for a in grp]
            letter, n, perm = identify_type(sub)
            start = len(ordered)
            ordered += [grp[p] for p in perm]
            comps.append(Component(letter, n, tuple(range(start, start + n))))
        return ordered, tuple(comps)

    def _generate(self):
        r = len(self._simple_roots)
        sr, sc = self._simple_roots, self._simple_coroots
        cm = [[la.dot(sr[i], sc[j]) for j in range(r)] for i in range(r)]
        for i in range(r):
            if cm[i][i] != 2:
                raise ValueError("simple root/coroot pairing is not 2")
        start = [(tuple(int(i == j) for j in range(r)), sr[i], sc[i]) for i in range(r)]
        found = {s[0]: s for s in start}
        frontier = list(start)
        while frontier:
            new = []
            for coeff, root, coroot in frontier:
                for i in range(r):
                    k = la.dot(root, sc[i])
                    if k == 0:
                        continue
                    c2 = list(coeff)
                    c2[i] -= k
                    c2 = tuple(c2)
                    if c2 in found:
                        continue
                    kk = la.dot(sr[i], coroot)
                    item = (c2, tuple(a - k * b for a, b in zip(root, sr[i])),
                            tuple(a - kk * b for a, b in zip(coroot, sc[i])))
                    found[c2] = item
                    new.append(item)
            frontier = new
        pos = sorted((v for v in found.values() if sum(v[0]) > 0),
                     key=lambda v: (sum(v[0]), tuple(-c for c in v[0])))
        neg = [(tuple(-c for c in v[0]), tuple(-x for x in v[1]), tuple(-x for x in v[2]))
               for v in pos]
        allr = pos + neg
        if len(neg) != len(pos) or len(found) != len(allr):
            raise ValueError("root system generation failed")
        self._coeffs = tuple(v[0] for v in allr)
        self.roots = tuple(v[1] for v in allr)
        self.coroots = tuple(v[2] for v in allr)
        self.num_positive = len(pos)
        self.simple_indices = tuple(range(r))
        self.cartan = tuple(tuple(row) for row in cm)
        self._index = {v: i for i, v in enumerate(self.roots)}

    # -- basic accessors ----------------------------------------------------
    @property
    def simple_roots(self) -> tuple[Vec, ...]:
        return self._simple_roots

    @property
    def simple_coroots(self) -> tuple[Vec, ...]:
        return self._simple_coroots

    @property
    def semisimple_rank(self) -> int:
        return len(self._simple_roots)

    @property
    def torus_rank(self) -> int:
        return self.rank - self.semisimple_rank

    def root_index(self, root: Vec) -> int | None:
        return self._index.get(tuple(root))

    def root_coefficients(self, i: int) -> Vec:
        return self._coeffs[i]

    def positive_root_indices(self) -> range:
        return range(self.num_positive)

    @property
    def type_label(self) -> str:
        return format_type(((c.letter, c.rank) for c in self.components), self.torus_rank)

    @cached_property
    def highest_roots(self) -> tuple[int, ...]:
        """Index of the highest root of each component."""
        out = []
        for comp in self.components:
            best = None
            for i in range(self.num_positive):
                co = self._coeffs[i]
                if any(co[j] for j in range(len(co)) if j not in comp.simple):
                    continue
                if best is None or sum(co) > sum(self._coeffs[best]):
                    best = i
            out.append(best)
        return tuple(out)

    @cached_property
    def affine_marks(self) -> tuple[tuple[int, ...], ...]:
        """Marks (a_0 = 1, a_1, ..., a_l) per component."""
        out = []
        for comp, h in zip(self.components, self.highest_roots):
            co = self._coeffs[h]
            out.append((1,) + tuple(co[j] for j in comp.simple))
        return tuple(out)

    @cached_property
    def two_rho_vee(self) -> Vec:
        acc = [0] * self.rank
        for i in range(self.num_positive):
            acc = [a + b for a, b in zip(acc, self.coroots[i])]
        return tuple(acc)

    @cached_property
    def rho(self) -> Vec:
        acc = [Fraction(0)] * self.rank
        for i in range(self.num_positive):
            acc = [a + b for a, b in zip(acc, self.roots[i])]
        return tuple(a / 2 for a in acc)

    @cached_property
    def central_cocharacters(self) -> tuple[Vec, ...]:
        """Z-basis of cocharacters killed by every root (the central torus)."""
        if not self._simple_roots:
            return tuple(tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank))
        return tuple(tuple(v) for v in la.integer_kernel(list(self._simple_roots), self.rank))

    def check_vector(self, w: Sequence) -> Vec:
        w = tuple(w)
        if len(w) != self.rank:
            raise ValueError(f"vector of length {len(w)} for rank {self.rank}")
        return w

    # -- Weyl group action ---------------------------------------------------
    def reflect(self, i: int, w: Sequence) -> Vec:
        """Simple reflection s_i on a weight."""
        k = la.dot(w, self._simple_coroots[i])
        return tuple(a - k * b for a, b in zip(w, self._simple_roots[i]))

    def reflect_coweight(self, i: int, x: Sequence) -> Vec:
        k = la.dot(self._simple_roots[i], x)
        return tuple(a - k * b for a, b in zip(x, self._simple_coroots[i]))

    def dynkin_labels(self, w: Sequence) -> Vec:
        return tuple(la.dot(w, c) for c in self._simple_coroots)

    def central_weight(self, w: Sequence) -> Vec:
        return tuple(la.dot(w, y) for y in self.central_cocharacters)

    def is_dominant(self, w: Sequence) -> bool:
        return all(x >= 0 for x in self.dynkin_labels(self.check_vector(w)))

    def dominant_representative(self, w: Sequence) -> Vec:
        w = tuple(w)
        while True:
            for i, c in enumerate(self._simple_coroots):
                if la.dot(w, c) < 0:
                    w = self.reflect(i, w)
                    break
            else:
                return w

    def weyl_orbit(self, w: Sequence) -> frozenset:
        w = self.check_vector(w)
        seen = {w}
        frontier = [w]
        while frontier:
            new = []
            for v in frontier:
                for i in range(self.semisimple_rank):
                    u = self.reflect(i, v)
                    if u not in seen:
                        seen.add(u)
                        new.append(u)
            frontier = new
        return frozenset(seen)

    # -- subsystems ----------------------------------------------------------
    def subsystem(self, root_indices: Iterable[int], name: str = "") -> "RootDatum":
        """Datum on the same lattice with the closed root subsystem given."""
        idx = set(root_indices)
        pos = [i for i in idx if i < self.num_positive]
        posset = {self.roots[i] for i in pos}
        simple = []
        for i in sorted(pos):
            r = self.roots[i]
            decomposable = any(
                tuple(a - b for a, b in zip(r, self.roots[j])) in posset
                for j in pos if j != i)
            if not decomposable:
                simple.append(i)
        return RootDatum(self.rank, [self.roots[i] for i in simple],
                         [self.coroots[i] for i in simple], self.frame, name or self.name)

    def levi(self, simple_subset: Iterable[int]) -> "RootDatum":
        sub = sorted(set(simple_subset))
        if any(i < 0 or i >= self.semisimple_rank for i in sub):
            raise ValueError("invalid simple-root subset")
        return RootDatum(self.rank, [self._simple_roots[i] for i in sub],
                         [self._simple_coroots[i] for i in sub], self.frame, self.name)

    # -- ambient conversions ---------------------------------------------------
    def weight_from_ambient(self, lam: Sequence) -> Vec:
        lam = [Fraction(x) for x in lam]
        if len(lam) != self.frame.ambient_dim:
            raise ValueError("ambient weight of wrong length")
        out = []
        for b in self.frame.basis:
            v = la.dot(lam, b)
            if v.denominator != 1:
                raise ValueError("weight is not a character of this lattice")
            out.append(int(v))
        return tuple(out)

    def point_from_ambient(self, x: Sequence) -> Vec:
        x = [Fraction(v) for v in x]
        if len(x) != self.frame.ambient_dim:
            raise ValueError("ambient cocharacter of wrong length")
        for chi, y0 in self.frame.constraints:
            k = la.dot(chi, x)
            if k.denominator != 1:
                raise ValueError("point does not lie in the subgroup")
            x = [a - k * b for a, b in zip(x, y0)]
        sol = la.solve_left(self.frame.basis, x)
        if sol is None:
            raise ValueError("point does not lie in the subgroup")
        return tuple(sol)

    def ambient_character(self, name: str) -> Vec:
        return dict(self.frame.characters)[name]

    def ambient_element(self, name: str) -> Vec:
        return dict(self.frame.elements)[name]

    def __repr__(self) -> str:
        return f"RootDatum({self.name or self.type_label!r}, rank={self.rank})"


def _memoized(fn):
    """Cache a function of a datum on the datum itself (data are immutable)."""
    key = fn.__name__

    def wrapper(d, *args):
        cache = d.__dict__.setdefault("_memo", {})
        k = (key, args)
        if k not in cache:
            cache[k] = fn(d, *args)
        return cache[k]

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


# ----------------------------------------------------------------------------
# Weyl group, fundamental group, centre

def weyl_group_order(d: RootDatum) -> int:
    """|W| as the product over components of the product of degrees."""
    return prod(prod(degrees(c.letter, c.rank)) for c in d.components)


def positive_roots(d: RootDatum) -> list[Vec]:
    return [d.roots[i] for i in d.positive_root_indices()]


@_memoized
def fundamental_weights(d: RootDatum) -> list[Vec]:
    """Rational weights ω_i with <ω_i, α_j∨> = δ_ij inside the span of the roots."""
    r = d.semisimple_rank
    if r == 0:
        return []
    # ω_i = sum_k M_ik α_k with sum_k M_ik C[k][j] = δ_ij
    inv = la.inverse([list(row) for row in d.cartan])
    out = []
    for i in range(r):
        v = [Fraction(0)] * d.rank
        for k in range(r):
            if inv[i][k]:
                v = [a + inv[i][k] * b for a, b in zip(v, d.simple_roots[k])]
        out.append(tuple(v))
    return out


@_memoized
def fundamental_coweights(d: RootDatum) -> list[Vec]:
    """Rational coweights ω_i∨ with <α_j, ω_i∨> = δ_ij inside the span of the coroots."""
    r = d.semisimple_rank
    if r == 0:
        return []
    inv = la.inverse([list(row) for row in d.cartan])
    out = []
    for i in range(r):
        v = [Fraction(0)] * d.rank
        for k in range(r):
            # <α_j, Σ_k M_ki α_k∨> = Σ_k C[j][k] M_ki
            if inv[k][i]:
                v = [a + inv[k][i] * b for a, b in zip(v, d.simple_coroots[k])]
        out.append(tuple(v))
    return out


def dominant(d: RootDatum, w: Sequence) -> bool:
    return d.is_dominant(w)


def weyl_orbit(d: RootDatum, w: Sequence) -> frozenset:
    return d.weyl_orbit(w)


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """A finite abelian group by invariant factors with covector generators."""
    invariants: tuple[int, ...]
    generators: tuple[Vec, ...] = ()

    @property
    def order(self) -> int:
        return prod(self.invariants)

    def is_trivial(self) -> bool:
        return self.order == 1

    def elements(self) -> list[Vec]:
        if not self.generators:
            return []
        n = len(self.generators[0])
        out = []
        for ks in iproduct(*(range(m) for m in self.invariants)):
            v = [Fraction(0)] * n
            for k, g in zip(ks, self.generators):
                v = [a + k * b for a, b in zip(v, g)]
            out.append(tuple(v))
        return out

    def __str__(self) -> str:
        if not self.invariants:
            return "1"
        return " x ".join(f"Z/{m}" for m in self.invariants)


def _finite_quotient(rows: Sequence[Sequence[int]], ncols: int):
    """Torsion of Z^ncols / rowspace: invariants and dual generators."""
    u, dmat, v = la.smith_normal_form(rows)
    inv, gens = [], []
    for i in range(min(len(dmat), ncols)):
        di = dmat[i][i]
        if di > 1:
            inv.append(di)
            gens.append(tuple(Fraction(v[k][i], di) for k in range(ncols)))
    return tuple(inv), tuple(gens)


@_memoized
def center(d: RootDatum) -> tuple[FiniteAbelianGroup, int]:
    """Component group of the centre (kernel of all roots) and its torus rank.

    Generators are rational cocharacters in X∨ ⊗ Q.
    """
    if d.semisimple_rank == 0:
        return FiniteAbelianGroup(()), d.rank
    inv, gens = _finite_quotient(d.simple_roots, d.rank)
    return FiniteAbelianGroup(inv, gens), d.rank - d.semisimple_rank


@_memoized
def fundamental_group(d: RootDatum) -> FiniteAbelianGroup:
    """Ω ≅ P∨/Q∨ of the root system; generators are fundamental coweights."""
    if d.semisimple_rank == 0:
        return FiniteAbelianGroup(())
    inv, gens = _finite_quotient([list(r) for r in d.cartan], d.semisimple_rank)
    cow = fundamental_coweights(d)
    out = []
    for g in gens:
        v = [Fraction(0)] * d.rank
        for k, c in enumerate(g):
            # g is expressed against the basis dual to the simple roots, i.e. coweights
            v = [a + c * b for a, b in zip(v, cow[k])]
        out.append(tuple(v))
    return FiniteAbelianGroup(inv, tuple(out))


# ----------------------------------------------------------------------------
# Factor constructors (local coordinates)

@dataclass
class _Local:
    label: str
    dim: int
    sroots: list
    scoroots: list
    components: list
    std: list = field(default_factory=list)
    std_kind: str = ""
    characters: dict = field(default_factory=dict)
    elements: dict = field(default_factory=dict)
    quotients: list = field(default_factory=list)


def _std_weights_sc(letter: str, n: int) -> list[list[Fraction]]:
    """Weights ε_i of the standard representation in fundamental-weight coordinates."""
    def w(*pairs):
        v = [Fraction(0)] * n
        for idx, c in pairs:
            if 0 <= idx < n:
                v[idx] += c
        return v
    if letter == "A":
        return [w((i, 1), (i - 1, -1)) for i in range(n + 1)]
    if letter == "C":
        return [w((i, 1), (i - 1, -1)) for i in range(n)]
    if letter == "B":
        out = [w((i, 1), (i - 1, -1)) for i in range(n - 1)]
        out.append(w((n - 1, 2), (n - 2, -1)))
        return out
    if letter == "D":
        out = [w((i, 1), (i - 1, -1)) for i in range(n - 2)]
        out.append(w((n - 2, 1), (n - 1, 1), (n - 3, -1)))
        out.append(w((n - 1, 1), (n - 2, -1)))
        return out
    return []


def _coweight_mod1(letter: str, n: int, i: int) -> list[Fraction]:
    """Fundamental coweight ω_i∨ (1-based) in simple-coroot coordinates, reduced mod 1."""
    inv = la.inverse(cartan_matrix(letter, n))
    return [Fraction(inv[k][i - 1]) % 1 for k in range(n)]


def _spin_center(letter: str, n: int) -> dict:
    """Named central elements of a simply connected factor (simple-coroot coords).

    ``z`` generates the centre (for Spin: the kernel of the map to SO).  For
    even D_n, ``zp`` acts trivially on the half-spin ω_n and ``zm`` on ω_{n-1}.
    """
    if letter == "A":
        return {"z": _coweight_mod1("A", n, 1)}
    if letter == "B":
        return {"z": _coweight_mod1("B", n, 1)}
    if letter == "C":
        return {"z": _coweight_mod1("C", n, n)}
    if letter == "D":
        out = {"z": _coweight_mod1("D", n, 1)}
        if n % 2 == 0:
            # <ω_n, ω_{n-1}∨> = (n-2)/4, so which coweight kills ω_n depends on n mod 4
            a, b = _coweight_mod1("D", n, n - 1), _coweight_mod1("D", n, n)
            out["zp"], out["zm"] = (a, b) if n % 4 == 2 else (b, a)
        return out
    if letter == "E" and n in (6, 7):
        return {"z": _coweight_mod1("E", n, 1 if n == 6 else 7)}
    return {}


def _local_simple(letter: str, n: int, isogeny: str) -> _Local:
    c = cartan_matrix(letter, n)
    if isogeny == "sc":
        sroots = [list(c[i]) for i in range(n)]
        scoroots = [[int(i == j) for j in range(n)] for i in range(n)]
    elif isogeny == "ad":
        sroots = [[int(i == j) for j in range(n)] for i in range(n)]
        scoroots = [[c[j][i] for j in range(n)] for i in range(n)]
    else:
        raise ValueError(f"unknown isogeny {isogeny!r}")
    loc = _Local(f"{letter}{n}:{isogeny}", n, sroots, scoroots, [(letter, n)])
    if isogeny == "sc":
        loc.std = _std_weights_sc(letter, n)
        loc.std_kind = "SL" if letter == "A" else letter if letter in "BCD" else ""
        loc.elements = _spin_center(letter, n)
    return loc


def _local_gl(n: int) -> _Local:
    sroots = [[int(j == i) - int(j == i + 1) for j in range(n)] for i in range(n - 1)]
    comps = [("A", n - 1)] if n >= 2 else []
    loc = _Local(f"GL{n}", n, sroots, [list(r) for r in sroots], comps)
    loc.std = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    loc.std_kind = "GL"
    loc.characters = {"det": [1] * n}
    loc.elements = {"minus": [Fraction(1, 2)] * n}
    return loc


def _local_torus(n: int) -> _Local:
    loc = _Local(f"T{n}", n, [], [], [])
    loc.characters = {"id": [1] * n}
    return loc


def _local_gspin(letter: str, n: int, label: str, central: str = "z") -> _Local:
    """(Spin × GL1)/<(c, -1)> with similitude a ↦ a² (c = named central element)."""
    base = _local_simple(letter, n, "sc")
    dim = n + 1
    loc = _Local(label, dim, [r + [0] for r in base.sroots], [r + [0] for r in base.scoroots],
                 base.components)
    loc.std = [list(v) + [Fraction(0)] for v in base.std]
    loc.std_kind = base.std_kind
    loc.characters = {"sim": [0] * n + [2], "t": [0] * n + [1]}
    loc.elements = {k: list(v) + [Fraction(0)] for k, v in base.elements.items()}
    loc.quotients = [list(base.elements[central]) + [Fraction(1, 2)]]
    return loc


_FACTOR_RE = re.compile(r"^(?:([A-G])(\d+)(?::(sc|ad))?|GL(\d+)|SL(\d+)|T(\d+)|Spin(\d+)|GSpin(\d+)|GHSpinDual(\d+))$")


def _parse_factor(tok: str) -> _Local:
    m = _FACTOR_RE.match(tok)
    if not m:
        raise ValueError(f"unsupported factor {tok!r}")
    simple, rank, iso, gl, sl, tor, spin, gspin, ghs = m.groups()
    if simple:
        loc = _local_simple(simple, int(rank), iso or "sc")
        loc.label = tok
        return loc
    if gl:
        return _local_gl(int(gl))
    if sl:
        loc = _local_simple("A", int(sl) - 1, "sc")
        loc.label = tok
        return loc
    if tor:
        return _local_torus(int(tor))
    if spin:
        k = int(spin)
        letter, n = ("B", (k - 1) // 2) if k % 2 else ("D", k // 2)
        loc = _local_simple(letter, n, "sc")
        loc.label = tok
        return loc
    if gspin:
        k = int(gspin)
        letter, n = ("B", (k - 1) // 2) if k % 2 else ("D", k // 2)
        return _local_gspin(letter, n, tok)
    k = int(ghs)
    if k % 4:
        raise ValueError("GHSpinDual needs a multiple of 4")
    # the central element chosen acts trivially on the half-spin ω_n
    return _local_gspin("D", k // 2, tok, central="zp")


# ----------------------------------------------------------------------------
# Assembling products, kernels and quotients

def product_datum(locals_: Sequence[_Local], name: str = "") -> RootDatum:
    n = sum(l.dim for l in locals_)
    sroots, scoroots, factors, chars, elts = [], [], [], [], []
    off = 0
    quotients = []
    for k, loc in enumerate(locals_, start=1):
        pad = lambda v: [0] * off + list(v) + [0] * (n - off - loc.dim)
        sroots += [pad(v) for v in loc.sroots]
        scoroots += [pad(v) for v in loc.scoroots]
        factors.append(Factor(loc.label, off, loc.dim, tuple(loc.components),
                              tuple(tuple(Fraction(x) for x in pad(v)) for v in loc.std),
                              loc.std_kind))
        chars += [(f"{c}@{k}", tuple(pad(v))) for c, v in loc.characters.items()]
        elts += [(f"{e}@{k}", tuple(Fraction(x) for x in pad(v))) for e, v in loc.elements.items()]
        quotients += [[Fraction(x) for x in pad(v)] for v in loc.quotients]
        off += loc.dim
    frame = Frame.trivial(n)
    frame = Frame(n, frame.basis, (), tuple(factors), tuple(chars), tuple(elts))
    d = RootDatum(n, sroots, scoroots, frame, name)
    for g in quotients:
        d = quotient_datum(d, g)
    return d


def kernel_datum(d: RootDatum, chi_ambient: Sequence[int]) -> RootDatum:
    """Identity component of the kernel of a character vanishing on coroots."""
    chi = d.weight_from_ambient(chi_ambient)
    if any(la.dot(chi, c) for c in d.coroots):
        raise ValueError("character does not vanish on coroots")
    g = 0
    for x in chi:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("trivial character")
    chi = tuple(x // g for x in chi)
    kern = la.integer_kernel([list(chi)], d.rank)         # rows in current coords
    u, dm, v = la.smith_normal_form([list(chi)])
    w = [v[k][0] for k in range(d.rank)]                  # chi . w = ±1
    s = la.dot(chi, w)
    w = [x * s for x in w]
    new_basis = tuple(tuple(sum(Fraction(k[i]) * d.frame.basis[i][j] for i in range(d.rank))
                            for j in range(d.frame.ambient_dim)) for k in kern)
    y0 = tuple(sum(Fraction(w[i]) * d.frame.basis[i][j] for i in range(d.rank))
               for j in range(d.frame.ambient_dim))
    chi_amb = tuple(Fraction(x) / g for x in chi_ambient)
    frame = Frame(d.frame.ambient_dim, new_basis, d.frame.constraints + ((chi_amb, y0),),
                  d.frame.factors, d.frame.characters, d.frame.elements)
    sroots = [[la.dot(r, k) for k in kern] for r in d.simple_roots]
    scoroots = []
    for c in d.simple_coroots:
        sol = la.solve_left(kern, c)
        if sol is None or any(x.denominator != 1 for x in sol):
            raise ValueError("coroot outside the kernel lattice")
        scoroots.append([int(x) for x in sol])
    return RootDatum(len(kern), sroots, scoroots, frame, d.name)


def quotient_datum(d: RootDatum, gen_ambient: Sequence) -> RootDatum:
    """Quotient by the cyclic central subgroup generated by an ambient cocharacter."""
    g = d.point_from_ambient(gen_ambient)
    for r in d.roots:
        if la.dot(r, g).denominator != 1:
            raise ValueError("quotient subgroup is not central")
    n = d.rank
    big = la.denominator_lcm(g)
    gens = [[big * int(i == j) for j in range(n)] for i in range(n)]
    gens.append([int(x * big) for x in g])
    basis = la.integer_row_basis(gens, n)
    basis = [[Fraction(x, big) for x in row] for row in basis]
    new_amb = tuple(tuple(sum(row[i] * d.frame.basis[i][j] for i in range(n))
                          for j in range(d.frame.ambient_dim)) for row in basis)
    frame = Frame(d.frame.ambient_dim, new_amb, d.frame.constraints, d.frame.factors,
                  d.frame.characters, d.frame.elements)
    sroots = []
    for r in d.simple_roots:
        v = [la.dot(r, b) for b in basis]
        if any(x.denominator != 1 for x in v):
            raise ValueError("quotient subgroup is not central")
        sroots.append([int(x) for x in v])
    scoroots = []
    for c in d.simple_coroots:
        sol = la.solve_left(basis, c)
        scoroots.append([int(x) for x in sol])
    return RootDatum(n, sroots, scoroots, frame, d.name)


def _parse_rational(tok: str) -> Fraction:
    return Fraction(tok.strip())


def _eval_expr(expr: str, table: dict, n: int, rational: bool) -> list:
    acc = [Fraction(0)] * n
    for term in re.split(r"\+(?![^\[]*\])", expr):
        term = term.strip()
        if not term:
            continue
        if term.startswith("["):
            vals = [_parse_rational(t) for t in term.strip("[]").split(",")]
            if len(vals) != n:
                raise ValueError(f"vector {term} has wrong length (expected {n})")
        else:
            m = re.fullmatch(r"(?:(-?\d+(?:/\d+)?)\*)?(\w+@\d+)", term)
            if not m or m.group(2) not in table:
                raise ValueError(f"unknown term {term!r}")
            coef = Fraction(m.group(1) or 1)
            vals = [coef * Fraction(x) for x in table[m.group(2)]]
        acc = [a + b for a, b in zip(acc, vals)]
    if not rational:
        if any(x.denominator != 1 for x in acc):
            raise ValueError("character expression is not integral")
        return [int(x) for x in acc]
    return acc


def build_datum(descriptor: str) -> RootDatum:
    """Build a root datum from a descriptor string (see module docstring)."""
    text = descriptor.strip()
    parts = [p.strip() for p in text.split("|")]
    factors = [f.strip() for f in re.split(r"\s+x\s+|\s*\*\s*", parts[0]) if f.strip()]
    if not factors:
        raise ValueError("empty descriptor")
    d = product_datum([_parse_factor(f) for f in factors], name=text)
    for mod in parts[1:]:
        m = re.fullmatch(r"(ker|quot)\((.*)\)", mod.replace(" ", ""))
        if not m:
            raise ValueError(f"unsupported modifier {mod!r}")
        if m.group(1) == "ker":
            chi = _eval_expr(m.group(2), dict(d.frame.characters), d.frame.ambient_dim, False)
            d = kernel_datum(d, chi)
        else:
            g = _eval_expr(m.group(2), dict(d.frame.elements), d.frame.ambient_dim, True)
            d = quotient_datum(d, g)
    d.name = text
    return d


# ----------------------------------------------------------------------------
# Points from eigenvalues on standard representations

def point_from_std(d: RootDatum, values: dict[int, Sequence], extra: Sequence | None = None) -> Vec:
    """Torsion point from prescribed <ε_i, x> on the standard weights of factors.

    ``values`` maps a 1-based factor number to the list of values on its
    standard weights (for SL_n the sum is corrected by an integer if needed).
    ``extra`` is an ambient vector added verbatim (e.g. a GL1 coordinate).
    """
    x = [Fraction(0)] * d.frame.ambient_dim
    for k, vals in values.items():
        fac = d.frame.factors[k - 1]
        vals = [Fraction(v) for v in vals]
        if len(vals) != len(fac.std_weights):
            raise ValueError(f"factor {k} needs {len(fac.std_weights)} values")
        if fac.std_kind == "SL":
            s = sum(vals)
            if s.denominator != 1:
                raise ValueError("eigenvalues do not have determinant one")
            vals[-1] -= s
        local = [list(w[fac.offset:fac.offset + fac.dim]) for w in fac.std_weights]
        cols = fac.dim
        # solve local . x_block = vals (least-constrained: coordinates outside std span are 0)
        aug = [row + [v] for row, v in zip(local, vals)]
        red, piv = la.rref(aug)
        if cols in piv:
            raise ValueError("inconsistent eigenvalue data")
        block = [Fraction(0)] * cols
        for r, c in enumerate(piv):
            block[c] = red[r][cols]
        for i in range(cols):
            x[fac.offset + i] += block[i]
    if extra is not None:
        x = [a + Fraction(b) for a, b in zip(x, extra)]
    return d.point_from_ambient(x)


# ----------------------------------------------------------------------------
# Affine Weyl group: alcove normalization, Ω_X and extended diagrams

def coweight_coordinates(d: RootDatum, x: Sequence) -> Vec:
    """(<α_i, x>)_i: coordinates of the projection of x to the coroot span."""
    return tuple(Fraction(la.dot(a, x)) for a in d.simple_roots)


def _theta(d: RootDatum, c: int) -> tuple[Vec, Vec]:
    h = d.highest_roots[c]
    return d.roots[h], d.coroots[h]


def alcove_normalize(d: RootDatum, x: Sequence) -> Vec:
    """The unique point of the closed fundamental alcove W_aff-conjugate to x."""
    x = tuple(Fraction(v) for v in x)
    thetas = [_theta(d, c) for c in range(len(d.components))]
    changed = True
    while changed:
        changed = False
        for i, a in enumerate(d.simple_roots):
            if la.dot(a, x) < 0:
                x = d.reflect_coweight(i, x)
                changed = True
        for th, thv in thetas:
            k = la.dot(th, x) - 1
            if k > 0:
                x = tuple(v - k * w for v, w in zip(x, thv))
                changed = True
    return x


@_memoized
def omega_lattice(d: RootDatum) -> list[list[int]]:
    """Rows spanning π(X∨) in fundamental-coweight coordinates."""
    rows = []
    for k in range(d.rank):
        e = [int(k == j) for j in range(d.rank)]
        rows.append([la.dot(a, e) for a in d.simple_roots])
    return la.integer_row_basis(rows, d.semisimple_rank) if d.semisimple_rank else []


@_memoized
def omega_elements(d: RootDatum) -> list[Vec]:
    """Ω_X = π(X∨)/Q∨ as the alcove vertices reached from 0 (identity first)."""
    cow = fundamental_coweights(d)
    gens = []
    for row in omega_lattice(d):
        v = [Fraction(0)] * d.rank
        for c, w in zip(row, cow):
            v = [a + c * b for a, b in zip(v, w)]
        gens.append(tuple(v))
    zero = tuple(Fraction(0) for _ in range(d.rank))
    seen = [zero]
    frontier = [zero]
    while frontier:
        new = []
        for s in frontier:
            for g in gens:
                t = alcove_normalize(d, [a + b for a, b in zip(s, g)])
                if t not in seen:
                    seen.append(t)
                    new.append(t)
        frontier = new
    return seen


def omega_act(d: RootDatum, element: Vec, x: Sequence) -> Vec:
    """Action of an Ω_X element (alcove vertex) on an alcove point."""
    return alcove_normalize(d, [Fraction(a) + b for a, b in zip(x, element)])


@_memoized
def alcove_vertices(d: RootDatum) -> list[tuple[tuple[int, int], Vec]]:
    """Vertices of the alcove labelled by (component, affine node)."""
    cow = fundamental_coweights(d)
    zero = tuple(Fraction(0) for _ in range(d.rank))
    out = []
    for c, comp in enumerate(d.components):
        marks = d.affine_marks[c]
        out.append(((c, 0), zero))
        for i, pos in enumerate(comp.simple, start=1):
            out.append(((c, i), tuple(v / marks[i] for v in cow[pos])))
    return out


@dataclass(frozen=True)
class AffineDiagram:
    """Extended Dynkin diagram per component with the Ω_X permutations of its nodes."""
    components: tuple[str, ...]
    marks: tuple[tuple[int, ...], ...]
    cartan: tuple[tuple[tuple[int, ...], ...], ...]
    omega_order: int
    omega_permutations: tuple[dict, ...]


@_memoized
def extended_diagram(d: RootDatum) -> AffineDiagram:
    if d.semisimple_rank == 0:
        raise ValueError("extended diagram needs a nonempty semisimple part")
    cartans = []
    for c, comp in enumerate(d.components):
        th, thv = _theta(d, c)
        aff_roots = [tuple(-v for v in th)] + [d.simple_roots[p] for p in comp.simple]
        aff_coroots = [tuple(-v for v in thv)] + [d.simple_coroots[p] for p in comp.simple]
        cartans.append(tuple(tuple(la.dot(a, b) for b in aff_coroots) for a in aff_roots))
    # a node of component c sits in the face where the other nodes of c vanish;
    # the image of a node is read off from a point in the interior of that face
    verts = alcove_vertices(d)
    perms = []
    for g in omega_elements(d):
        perm = {}
        for c, comp in enumerate(d.components):
            same = [v for (cc, i), v in verts if cc == c]
            for (cc, i), v in verts:
                if cc != c:
                    continue
                # point = vertex i of component c, barycentre of the other components
                pt = list(v)
                for c2 in range(len(d.components)):
                    if c2 == c:
                        continue
                    vs = [w for (k, _), w in verts if k == c2]
                    for w in vs:
                        pt = [a + b / len(vs) for a, b in zip(pt, w)]
                img = omega_act(d, g, pt)
                # identify which vertex of component c the image projects to
                for j, w in enumerate(same):
                    if all(la.dot(d.simple_roots[p], img) == la.dot(d.simple_roots[p], w)
                           for p in comp.simple):
                        perm[(c, i)] = (c, j)
                        break
                else:
                    # Ω may permute isomorphic components
                    for (c3, j), w in verts:
                        comp3 = d.components[c3]
                        if all(la.dot(d.simple_roots[p], img) == la.dot(d.simple_roots[p], w)
                               for p in comp3.simple) and c3 != c:
                            perm[(c, i)] = (c3, j)
                            break
        perms.append(perm)
    return AffineDiagram(tuple(c.name for c in d.components), d.affine_marks,
                         tuple(cartans), len(perms), tuple(perms))


def element_from_expr(d: RootDatum, expr: str) -> Vec:
    """Rational point of X∨ ⊗ Q from an expression in named elements, e.g. ``zp@1+minus@2``."""
    x = _eval_expr(expr, dict(d.frame.elements), d.frame.ambient_dim, True)
    return d.point_from_ambient(x)


def character_from_expr(d: RootDatum, expr: str) -> Vec:
    """Weight of X from an expression in named ambient characters or raw vectors."""
    lam = _eval_expr(expr, dict(d.frame.characters), d.frame.ambient_dim, False)
    return d.weight_from_ambient(lam)
