"""Semisimple class data for similitude classical groups and endoscopic sign bookkeeping.

A conjugacy class is a list of indexed factors (F_i, F_±i, x_i) with degree
d_i = [F_±i : F]; a rational class adds a norm-class bit c_i ∈ Z/2 for each
field factor.  Local fields are never modeled: a quadratic extension is a tag
with a two-element norm-class group, which is all the sign combinatorics uses.

Bits are taken modulo scaling by F^×.  A scalar f moves c_i by
η_{F_i/F_±i}(f) = η(f^{d_i}) for unitary groups, so only odd-degree field
factors flip; that is the default for every group and can be overridden per
factor.

The product GU4 × GU2 with H = (GU2 × GU2)^0 gets its own handling: the
stable class of H is a pair of blocks (A, B), the GU2 factor of G carries the
A block, and the pure inner form holding a rational class is read off from
which blocks are quasi-split.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, replace
from itertools import combinations, product
from typing import Iterable, Sequence

from .report import VerificationReport

KINDS = ("field", "split")
GROUPS = ("GU", "GSp", "GSO", "GU4xGU2")


@dataclass(frozen=True)
class ClassFactor:
    label: str
    kind: str = "field"
    degree: int = 1
    block: str = ""                  # "A" or "B" for GU4xGU2 classes
    flips: bool | None = None        # does F^× act on the bit? default: odd degree

    @property
    def has_bit(self) -> bool:
        return self.kind == "field"

    @property
    def flippable(self) -> bool:
        if not self.has_bit:
            return False
        return self.degree % 2 == 1 if self.flips is None else self.flips


@dataclass(frozen=True)
class ClassDatum:
    group: str
    size: int                        # Σ d_i
    factors: tuple[ClassFactor, ...]
    bits: tuple[int, ...] | None = None   # one per factor, 0 for split factors
    outer: int | None = None         # GSO: which of the two outer-conjugate classes

    def __post_init__(self):
        if self.group not in GROUPS:
            raise ValueError(f"unknown group tag {self.group!r}")
        if sum(f.degree for f in self.factors) != self.size:
            raise ValueError("degrees do not add up to the size of the group")
        for f in self.factors:
            if f.kind not in KINDS:
                raise ValueError(f"unknown factor kind {f.kind!r}")
        if self.bits is not None:
            if len(self.bits) != len(self.factors):
                raise ValueError("one bit per factor is required")
            for f, b in zip(self.factors, self.bits):
                if b not in (0, 1) or (not f.has_bit and b):
                    raise ValueError("bits live in Z/2 and only on field factors")

    @property
    def stable(self) -> "ClassDatum":
        return replace(self, bits=None, outer=None)

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(range(len(self.factors)))

    def block(self, name: str) -> tuple[int, ...]:
        return tuple(i for i, f in enumerate(self.factors) if f.block == name)

    def __str__(self) -> str:
        parts = []
        for i, f in enumerate(self.factors):
            tag = ("E" if f.degree == 1 else f"Q{f.degree}") if f.has_bit else f"S{f.degree}"
            s = f"{tag}:{f.label}"
            if self.bits is not None and f.has_bit:
                s += f"[{self.bits[i]}]"
            parts.append(s)
        if self.group == "GU4xGU2":
            a = [p for p, f in zip(parts, self.factors) if f.block == "A"]
            b = [p for p, f in zip(parts, self.factors) if f.block == "B"]
            body = ",".join(a) + " | " + ",".join(b)
        else:
            body = ",".join(parts)
        out = f"{self.group}{self.size}: {body}" if self.group != "GU4xGU2" else f"GU4xGU2: {body}"
        return out if self.outer is None else f"{out} (outer {self.outer})"


def canonical_bits(factors: Sequence[ClassFactor], bits: Sequence[int]) -> tuple[int, ...]:
    """Representative modulo F^×: the first flippable bit is 0."""
    bits = tuple(bits)
    for i, f in enumerate(factors):
        if f.flippable:
            if bits[i]:
                return tuple(b ^ 1 if g.flippable else b for g, b in zip(factors, bits))
            return bits
    return bits


def flip(c: ClassDatum) -> ClassDatum:
    """The same rational class written with every flippable bit changed."""
    if c.bits is None:
        raise ValueError("a stable class has no bits")
    return replace(c, bits=tuple(b ^ 1 if f.flippable else b for f, b in zip(c.factors, c.bits)))


# ----------------------------------------------------------------------------
# Shape strings

_TOKEN = re.compile(r"^(E|Q(\d+)|S(\d+))(~)?(?::(\w+))?$")
_GROUP = re.compile(r"^(GU4xGU2|GU|GSp|GSO)(\d*)$")


def _factor(tok: str, default_label: str, block: str) -> ClassFactor:
    m = _TOKEN.match(tok)
    if not m:
        raise ValueError(f"cannot read factor {tok!r} (use E, Qd, Sd with optional ~ and :label)")
    kind, deg = ("field", 1) if m.group(1) == "E" else \
        ("field", int(m.group(2))) if m.group(2) else ("split", int(m.group(3)))
    if deg < 1:
        raise ValueError("degree must be positive")
    flips = None
    if m.group(4):
        flips = not (deg % 2 == 1)
    return ClassFactor(m.group(5) or default_label, kind, deg, block, flips)


def parse_stable(text: str) -> ClassDatum:
    """'GU4xGU2: E,E | E,E', 'GU2: E,E', 'GSp4: Q1,S1' and so on.

    A trailing ~ on a factor toggles whether F^× moves its bit.  Labels default
    to a1, a2, ... in the first block and b1, b2, ... in the second.
    """
    head, _, body = text.partition(":")
    m = _GROUP.match(head.strip())
    if not m or not body.strip():
        raise ValueError(f"cannot read stable class {text!r}")
    group = m.group(1)
    if group == "GU4xGU2":
        blocks = [b.strip() for b in body.split("|")]
        if len(blocks) != 2:
            raise ValueError("GU4xGU2 classes need two blocks separated by |")
        factors = []
        for name, prefix, blk in zip("AB", "ab", blocks):
            for k, tok in enumerate(t.strip() for t in blk.split(",")):
                factors.append(_factor(tok, f"{prefix}{k + 1}", name))
        c = ClassDatum(group, 4, tuple(factors))
        for name in "AB":
            if sum(c.factors[i].degree for i in c.block(name)) != 2:
                raise ValueError(f"block {name} must have total degree 2")
        return c
    toks = [t.strip() for t in body.split(",")]
    factors = tuple(_factor(t, f"x{k + 1}", "") for k, t in enumerate(toks))
    size = sum(f.degree for f in factors)
    if m.group(2):
        size = int(m.group(2))
        if group in ("GSp", "GSO"):
            if size % 2:
                raise ValueError(f"{group} needs an even size")
            size //= 2
    return ClassDatum(group, size, factors)


# ----------------------------------------------------------------------------
# Rational classes

def _quasi_split(factors: Sequence[ClassFactor], bits: Sequence[int], delta: int) -> bool:
    """Hermitian space of dimension 2n is quasi-split iff Σ c_i ≡ n·δ.

    δ = 1 when η_{E/F}(−1) = −1.  A split factor of degree d is a hyperbolic
    space and counts as (d/2)·δ, so a block made of it is always quasi-split.
    """
    n2 = sum(f.degree for f in factors)
    acc = sum(b for f, b in zip(factors, bits) if f.has_bit)
    acc += sum((f.degree // 2) * delta for f in factors if not f.has_bit)
    return (acc - (n2 // 2) * delta) % 2 == 0


def _delta(eta_minus_one: int) -> int:
    if eta_minus_one not in (1, -1):
        raise ValueError("eta(-1) is 1 or -1")
    return 0 if eta_minus_one == 1 else 1


SIDES = ("H", "H1+H4", "H2", "H3")


def side_of(c: ClassDatum, eta_minus_one: int) -> str:
    """Which pure inner form of H holds a GU4xGU2 rational class."""
    d = _delta(eta_minus_one)
    qs = {}
    for name in "AB":
        idx = c.block(name)
        qs[name] = _quasi_split([c.factors[i] for i in idx], [c.bits[i] for i in idx], d)
    return {(True, True): "H", (False, False): "H1+H4",
            (True, False): "H2", (False, True): "H3"}[(qs["A"], qs["B"])]


def kottwitz_sign(c: ClassDatum, eta_minus_one: int) -> int:
    """e(G_i) of the inner form of GU4 × GU2 holding the class.

    −1 for each factor that is not quasi-split: the GU4 part (both blocks
    together) and the GU2 part (a copy of block A).
    """
    d = _delta(eta_minus_one)
    bits = c.bits
    a = c.block("A")
    gu4 = _quasi_split(c.factors, bits, d)
    gu2 = _quasi_split([c.factors[i] for i in a], [bits[i] for i in a], d)
    return (1 if gu4 else -1) * (1 if gu2 else -1)


def all_rational_classes(stable: ClassDatum) -> list[ClassDatum]:
    """Every bit pattern modulo F^×, one canonical datum per class."""
    base = stable.stable
    choices = [(0, 1) if f.has_bit else (0,) for f in base.factors]
    seen, out = set(), []
    for bits in product(*choices):
        cb = canonical_bits(base.factors, bits)
        if cb in seen:
            continue
        seen.add(cb)
        out.append(replace(base, bits=cb))
    if base.group == "GSO":
        out = [replace(c, outer=o) for c in out for o in (0, 1)]
    return out


def rational_classes(stable: ClassDatum, side: str = "all", eta_minus_one: int = 1) -> list[ClassDatum]:
    """Rational classes inside a stable class, optionally restricted to one side.

    Sides apply to GU4xGU2 classes: "H" for the quasi-split H, "H1+H4" for the
    inner forms with both blocks anisotropic, "H2" and "H3" for the mixed ones.
    """
    out = all_rational_classes(stable)
    if side == "all":
        return out
    if stable.group != "GU4xGU2":
        raise ValueError("sides are only defined for GU4xGU2 classes")
    if side not in SIDES:
        raise ValueError(f"unknown side {side!r}")
    return [c for c in out if side_of(c, eta_minus_one) == side]


# ----------------------------------------------------------------------------
# Endoscopic matches

@dataclass(frozen=True)
class EndoMatch:
    plus: tuple[int, ...]
    minus: tuple[int, ...]
    outer: tuple[int, int] | None = None     # GSO: labels of the two G′ factors

    def __post_init__(self):
        if set(self.plus) & set(self.minus):
            raise ValueError("I+ and I- overlap")


def _allowed(group: str, n_plus: int, n_minus: int) -> bool:
    if group == "GSp":
        return n_minus != 1
    if group == "GSO":
        return n_plus != 1 and n_minus != 1
    return True


def _describe(c: ClassDatum, idx: Sequence[int]) -> str:
    return "(" + ",".join(c.factors[i].label for i in idx) + ")"


def stable_matches(stable: ClassDatum, collapse: bool = False) -> list[tuple[str, EndoMatch]]:
    """Stable classes of G′ associated with a stable class of G, one per partition.

    For GU4xGU2 the partition runs over the GU4 factors with both parts of total
    degree 2; the GU2 factor stays whole.  With collapse=True, partitions that
    give the same G′ class (equal labels and types) are listed once.
    """
    c = stable.stable
    idx = c.indices
    out, seen = [], set()
    for r in range(len(idx) + 1):
        for minus in combinations(idx, r):
            plus = tuple(i for i in idx if i not in minus)
            n_minus = sum(c.factors[i].degree for i in minus)
            n_plus = c.size - n_minus
            if c.group == "GU4xGU2":
                if n_minus != 2:
                    continue
            elif not _allowed(c.group, n_plus, n_minus):
                continue
            if collapse:
                key = (tuple(sorted((c.factors[i].label, c.factors[i].kind, c.factors[i].degree)
                                    for i in plus)),
                       tuple(sorted((c.factors[i].label, c.factors[i].kind, c.factors[i].degree)
                                    for i in minus)))
                if key in seen:
                    continue
                seen.add(key)
            desc = f"{_describe(c, plus)} x {_describe(c, minus)}"
            if c.group == "GU4xGU2":
                desc += f" x {_describe(c, c.block('A'))}"
            if c.group == "GSO":
                for o in product((0, 1), repeat=2):
                    out.append((desc + f" outer{o}", EndoMatch(plus, minus, o)))
            else:
                out.append((desc, EndoMatch(plus, minus)))
    return out


def associated(c: ClassDatum, m: EndoMatch) -> bool:
    """Whether a rational class of G corresponds to the G′ class of the match.

    Outside GSO every match is associated; for GSO the class with outer label o
    goes with the two G′ labels whose sum is o.
    """
    if c.group != "GSO" or m.outer is None or c.outer is None:
        return True
    return (m.outer[0] + m.outer[1]) % 2 == c.outer


def transfer_sign(c: ClassDatum, m: EndoMatch) -> int:
    """Π over field factors in I− of (−1)^{c_i}; split factors contribute 1."""
    if c.bits is None:
        raise ValueError("transfer signs need a rational class")
    s = 0
    for i in m.minus:
        if c.factors[i].has_bit:
            s += c.bits[i]
    return -1 if s % 2 else 1


# ----------------------------------------------------------------------------
# The cancellation identity

@dataclass(frozen=True)
class CancellationRow:
    shape: str
    eta_minus_one: int
    match: str
    h_sum: int
    inner_sum: int

    @property
    def total(self) -> int:
        return self.h_sum - self.inner_sum


IDENTITIES = {"first": ("H", "H1+H4"), "second": ("H2", "H3")}


def is_elliptic_in_h(stable: ClassDatum) -> bool:
    """No split factors: the torus of H is anisotropic modulo the centre."""
    return all(f.has_bit for f in stable.factors)


def cancellation_rows(stable: ClassDatum, eta_minus_one: int,
                      identity: str = "first") -> list[CancellationRow]:
    """Per G′ match, Σ e(G_i)·Δ over the classes on each side of the identity.

    "first" compares H with H1 ∪ H4, "second" compares H2 with H3.
    """
    if stable.group != "GU4xGU2":
        raise ValueError("the cancellation identity is stated for GU4xGU2 classes")
    if not is_elliptic_in_h(stable):
        raise ValueError("the cancellation identity concerns elliptic classes of H")
    sides = IDENTITIES[identity]
    left = rational_classes(stable, sides[0], eta_minus_one)
    right = rational_classes(stable, sides[1], eta_minus_one)
    rows = []
    for desc, m in stable_matches(stable):
        h = sum(kottwitz_sign(c, eta_minus_one) * transfer_sign(c, m) for c in left)
        k = sum(kottwitz_sign(c, eta_minus_one) * transfer_sign(c, m) for c in right)
        rows.append(CancellationRow(str(stable.stable), eta_minus_one, desc, h, k))
    return rows


def verify_cancellation(stable: ClassDatum, eta_minus_one: int, identity: str = "first") -> int:
    """Largest |Σ_H θ − Σ_{H1,H4} θ_i| coefficient over the G′ matches; 0 on success."""
    rows = cancellation_rows(stable, eta_minus_one, identity)
    return max((abs(r.total) for r in rows), default=0)


ELLIPTIC_BLOCKS = ("E,E", "Q2")


def gu_shapes() -> list[ClassDatum]:
    """All elliptic GU4xGU2 stable shapes (at most four indices)."""
    return [parse_stable(f"GU4xGU2: {a} | {b}") for a in ELLIPTIC_BLOCKS for b in ELLIPTIC_BLOCKS]


def cancellation_sweep(shapes: Iterable[ClassDatum] | None = None,
                       identity: str = "first") -> list[CancellationRow]:
    rows = []
    for s in gu_shapes() if shapes is None else shapes:
        for eta in (1, -1):
            rows.extend(cancellation_rows(s, eta, identity))
    return rows


def verify_endoscopy() -> VerificationReport:
    """Class counts and the cancellation identity over every elliptic GU4xGU2 shape."""
    r = VerificationReport("GU4xGU2 transfer signs")
    generic = parse_stable("GU4xGU2: E,E | E,E")
    r.check("endo:matches", "GU4xGU2 generic class: matches in G'", len(stable_matches(generic)), 6)
    for eta in (1, -1):
        for side in ("H", "H1+H4"):
            r.check(f"endo:classes:{side}:eta={eta}", f"GU4xGU2 generic class: rational classes on {side}",
                    len(rational_classes(generic, side, eta)), 2)
    for identity in IDENTITIES:
        for row in cancellation_sweep(identity=identity):
            r.check(f"endo:{identity}:{row.shape}:eta={row.eta_minus_one}:{row.match}",
                    f"cancellation ({identity} identity)", row.total, 0)
    return r
