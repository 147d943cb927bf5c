"""Restriction of characters to Levi subgroups, pseudo-Levi centralizers and embeddings."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import _linalg as la
from .repchar import FormalCharacter, decompose, dim_weyl
from .rootdata import RootDatum
from .torsion import TorsionPoint, centralizer_subsystem


@dataclass(frozen=True)
class LatticeMap:
    """Restriction of weights from ``target`` (ambient group) to ``source`` (subgroup).

    ``matrix`` has one row per source coordinate: source weight = matrix · target weight.
    """
    source: RootDatum
    target: RootDatum
    matrix: tuple[tuple[int, ...], ...]

    def apply(self, w: Sequence[int]) -> tuple:
        return tuple(la.dot(row, w) for row in self.matrix)


def _identity(n: int) -> tuple:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def identity_map(d: RootDatum) -> LatticeMap:
    return LatticeMap(d, d, _identity(d.rank))


def levi_map(d: RootDatum, simple_subset: Iterable[int]) -> LatticeMap:
    return LatticeMap(d.levi(simple_subset), d, _identity(d.rank))


def pseudo_levi_map(d: RootDatum, p: TorsionPoint) -> LatticeMap:
    return LatticeMap(centralizer_subsystem(d, p), d, _identity(d.rank))


def subsystem_map(d: RootDatum, sub: RootDatum) -> LatticeMap:
    if sub.rank != d.rank:
        raise ValueError("subsystem must live on the same lattice")
    return LatticeMap(sub, d, _identity(d.rank))


def embedding_map(source: RootDatum, target: RootDatum,
                  cocharacter_map: Sequence[Sequence]) -> LatticeMap:
    """Map induced by a homomorphism given on ambient cocharacters.

    ``cocharacter_map`` has one row per target ambient coordinate and one
    column per source ambient coordinate.
    """
    rows = []
    for b in source.frame.basis:
        img = la.matvec(cocharacter_map, b)
        c = target.point_from_ambient(img)
        if any(v.denominator != 1 for v in c):
            raise ValueError("cocharacter map does not send X∨ into X∨")
        rows.append(tuple(int(v) for v in c))
    return LatticeMap(source, target, tuple(rows))


def restrict(chi: FormalCharacter, m: LatticeMap) -> FormalCharacter:
    if chi.datum is not m.target:
        raise ValueError("character is not on the map's target datum")
    return chi.transport(m.source, m.matrix)


def branch(chi: FormalCharacter, m: LatticeMap) -> list[tuple[tuple, int]]:
    return decompose(restrict(chi, m))


@dataclass(frozen=True, order=True)
class BranchRow:
    labels: tuple[int, ...]      # Dynkin labels on the source simple coroots
    central: tuple[int, ...]     # pairing with the central cocharacters of the source
    multiplicity: int
    dim: int


def branch_rows(pieces: Sequence[tuple[tuple, int]], source: RootDatum) -> list[BranchRow]:
    rows = [BranchRow(source.dynkin_labels(w), source.central_weight(w), m, dim_weyl(source, w))
            for w, m in pieces]
    return sorted(rows, reverse=True)
