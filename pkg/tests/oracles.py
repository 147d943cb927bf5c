"""Independent reference computations used by the tests.

Nothing here calls into liecheck's algorithms: only Cartan-matrix level data
(simple roots/coroots as integer vectors) is taken from a datum.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import product

import sympy


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


# -- Weyl group by closure -----------------------------------------------------

def reflection_matrices(simple_roots, simple_coroots, rank):
    """s_i(w) = w − <w, α_i∨> α_i as integer matrices acting on column vectors."""
    mats = []
    for a, c in zip(simple_roots, simple_coroots):
        m = [[int(i == j) - a[i] * c[j] for j in range(rank)] for i in range(rank)]
        mats.append(tuple(tuple(r) for r in m))
    return mats


def _mul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n))


def weyl_group(simple_roots, simple_coroots, rank):
    """All elements of W as matrices, with their signs."""
    gens = reflection_matrices(simple_roots, simple_coroots, rank)
    ident = tuple(tuple(int(i == j) for j in range(rank)) for i in range(rank))
    seen = {ident: 1}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = _mul(s, g)
                if h not in seen:
                    seen[h] = -seen[g]
                    nxt.append(h)
        frontier = nxt
    return seen


def _act(m, v):
    return tuple(sum(m[i][j] * v[j] for j in range(len(v))) for i in range(len(m)))


def positive_roots(simple_roots, simple_coroots, rank):
    """Positive roots by reflecting simple roots and keeping those with nonnegative coefficients."""
    gens = reflection_matrices(simple_roots, simple_coroots, rank)
    roots = set(tuple(a) for a in simple_roots)
    frontier = list(roots)
    while frontier:
        nxt = []
        for r in frontier:
            for s in gens:
                t = _act(s, r)
                if t not in roots and tuple(-x for x in t) not in roots:
                    roots.add(t)
                    nxt.append(t)
        frontier = nxt
    # keep the ones that are nonnegative combinations of simple roots
    mat = sympy.Matrix([list(a) for a in simple_roots]).T
    out = []
    for r in roots:
        for cand in (r, tuple(-x for x in r)):
            sol = mat.solve_least_squares(sympy.Matrix(list(cand)))
            if all(x >= 0 for x in sol):
                out.append(cand)
                break
    return sorted(set(out))


# -- Weyl character formula -------------------------------------------------------

def weyl_character(simple_roots, simple_coroots, rank, lam):
    """Multiplicities of V(λ) from Σ ε(w) e^{w(λ+ρ)} / e^ρ Π (1 − e^{−α})."""
    W = weyl_group(simple_roots, simple_coroots, rank)
    pos = positive_roots(simple_roots, simple_coroots, rank)
    rho = tuple(Fraction(sum(r[i] for r in pos), 2) for i in range(rank))
    top = tuple(Fraction(x) + y for x, y in zip(lam, rho))
    num = {}
    for g, sgn in W.items():
        v = _act(g, top)
        num[v] = num.get(v, 0) + sgn
    num = {k: v for k, v in num.items() if v}
    # a height taking generic positive values on the simple roots
    want = sympy.Matrix([sympy.Rational(1) + sympy.Rational(1, 7 ** (i + 1)) for i in range(rank)])
    sol = sympy.Matrix([list(a) for a in simple_roots]).solve(want)
    height = [Fraction(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1])) for x in sol]

    def h(v):
        return _dot(v, height)

    for alpha in pos:
        ha = h(alpha)
        lo = min(h(v) for v in num)
        # Q(μ) = P(μ) + Q(μ + α), filled from the top down
        cands = set()
        for v in num:
            k = 0
            while h(v) - k * ha >= lo - ha:
                cands.add(tuple(x - k * a for x, a in zip(v, alpha)))
                k += 1
        q = {}
        for mu in sorted(cands, key=h, reverse=True):
            up = tuple(x + a for x, a in zip(mu, alpha))
            val = num.get(mu, 0) + q.get(up, 0)
            if val:
                q[mu] = val
        back = {}
        for mu, c in q.items():
            back[mu] = back.get(mu, 0) + c
            dn = tuple(x - a for x, a in zip(mu, alpha))
            back[dn] = back.get(dn, 0) - c
        if {k: v for k, v in back.items() if v} != num:
            raise AssertionError("Weyl numerator not divisible")
        num = q
    return {tuple(int(x - r) for x, r in zip(k, rho)): v for k, v in num.items()}


# -- torsion classes by brute force ----------------------------------------------

def torsion_orbits(simple_roots, simple_coroots, rank, generators, m, exponent=1):
    """W ⋉ X∨ orbits on (1/m)L for a semisimple datum written in X∨ coordinates.

    ``generators`` span L: the fundamental coweights give elements whose adjoint
    image has order dividing m, the unit vectors give elements of order dividing m.
    ``exponent`` must kill L/X∨.
    """
    W = weyl_group(simple_coroots, simple_roots, rank)  # action on coweights

    def reduce(x):
        return tuple(Fraction(v) % 1 for v in x)

    pts = set()
    for cs in product(range(m * exponent), repeat=rank):
        x = [Fraction(0)] * rank
        for c, w in zip(cs, generators):
            x = [a + Fraction(c, m) * b for a, b in zip(x, w)]
        pts.add(reduce(x))
    orbits = []
    seen = set()
    for p in sorted(pts):
        if p in seen:
            continue
        orb = {reduce(_act(g, p)) for g in W}
        seen |= orb
        orbits.append(frozenset(orb))
    return orbits


# -- invariant bilinear forms ----------------------------------------------------

def unit_vectors(rank):
    return [tuple(int(i == j) for j in range(rank)) for i in range(rank)]


def invariant_forms(generators):
    """Basis of bilinear forms B with X^T B + B X = 0 for every generator X."""
    n = generators[0].shape[0]
    syms = sympy.symbols(f"b0:{n * n}")
    B = sympy.Matrix(n, n, syms)
    eqs = []
    for X in generators:
        eqs.extend(list(X.T * B + B * X))
    sol = sympy.linsolve(eqs, syms)
    (vec,) = list(sol)
    free = sorted(set().union(*[sympy.sympify(v).free_symbols for v in vec]), key=str)
    out = []
    for f in free:
        sub = {g: (1 if g == f else 0) for g in free}
        out.append(sympy.Matrix(n, n, [sympy.sympify(v).subs(sub) for v in vec]))
    return out


def form_sign(generators):
    """+1 if the invariant form is symmetric, −1 if alternating."""
    forms = invariant_forms(generators)
    if len(forms) != 1:
        raise AssertionError(f"expected a unique invariant form, got {len(forms)}")
    B = forms[0]
    if B == B.T:
        return 1
    if B == -B.T:
        return -1
    raise AssertionError("form is neither symmetric nor alternating")


def sl2_std():
    e = sympy.Matrix([[0, 1], [0, 0]])
    f = sympy.Matrix([[0, 0], [1, 0]])
    h = sympy.Matrix([[1, 0], [0, -1]])
    return [e, f, h]


def so7_spin():
    """so(7) acting on the 8-dimensional spinors through γ_a γ_b, a < b."""
    I2 = sympy.eye(2)
    X = sympy.Matrix([[0, 1], [1, 0]])
    Y = sympy.Matrix([[0, -sympy.I], [sympy.I, 0]])
    Z = sympy.Matrix([[1, 0], [0, -1]])

    def kron(*ms):
        out = ms[0]
        for m in ms[1:]:
            out = sympy.kronecker_product(out, m)
        return out

    gammas = [kron(X, I2, I2), kron(Y, I2, I2), kron(Z, X, I2), kron(Z, Y, I2),
              kron(Z, Z, X), kron(Z, Z, Y), kron(Z, Z, Z)]
    for i, a in enumerate(gammas):
        for j, b in enumerate(gammas):
            assert a * b + b * a == (2 * sympy.eye(8) if i == j else sympy.zeros(8))
    return [gammas[a] * gammas[b] for a in range(7) for b in range(a + 1, 7)]


# -- endoscopy: direct double sum --------------------------------------------------

def raw_cancellation(stable, eta, match, left_sides, right_sides, side_of, kottwitz, sign):
    """Σ over every raw bit pattern (no quotient) of e·Δ, left minus right.

    Each rational class is hit once per representative, so the result is the
    cancellation coefficient times the size of the F^× orbit.
    """
    from dataclasses import replace
    choices = [(0, 1) if f.has_bit else (0,) for f in stable.factors]
    total = 0
    for bits in product(*choices):
        c = replace(stable, bits=tuple(bits))
        side = side_of(c, eta)
        val = kottwitz(c, eta) * sign(c, match)
        if side in left_sides:
            total += val
        elif side in right_sides:
            total -= val
    return total
