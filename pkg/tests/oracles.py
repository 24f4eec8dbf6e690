"""
Independent reference computations used to derive the frozen expected values
in the test suite. Nothing here imports braidint: cyclotomic arithmetic goes
through sympy polynomials and the Sweedler algebra is rebuilt from its
generators and relations.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import sympy

x = sympy.Symbol("x")


def cyclotomic_coeffs(n: int) -> tuple[int, ...]:
    """Phi_n in ascending coefficient order."""
    return tuple(int(c) for c in reversed(sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()))


def reduce_poly(expr, n: int) -> tuple[Fraction, ...]:
    """A polynomial in x reduced modulo Phi_n, as phi(n) ascending coefficients."""
    phi = int(sympy.totient(n))
    r = sympy.rem(sympy.Poly(sympy.expand(expr), x, domain="QQ"),
                  sympy.Poly(sympy.cyclotomic_poly(n, x), x, domain="QQ"))
    coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(r.all_coeffs())] if not r.is_zero else []
    return tuple(coeffs + [Fraction(0)] * (phi - len(coeffs)))


def zeta_power(n: int, k: int) -> tuple[Fraction, ...]:
    return reduce_poly(x ** (k % n), n)


def inverse(expr, n: int) -> tuple[Fraction, ...]:
    """The inverse modulo Phi_n by the extended Euclidean algorithm."""
    return reduce_poly(sympy.invert(sympy.expand(expr), sympy.cyclotomic_poly(n, x), x), n)


def q_power(n: int, e: int, k: int) -> tuple[Fraction, ...]:
    return zeta_power(n, e * k)


def q_sum(n: int, e: int, m: int):
    """1 + q + ... + q^(m-1) as a polynomial in zeta."""
    return sum(x ** ((e * i) % n) for i in range(m))


def gaussian_factorial(n: int, e: int, j: int) -> tuple[Fraction, ...]:
    """prod_{m=1..j} (1 + q + ... + q^(m-1)), the braided factorial on a 1-dim degree-1 line."""
    expr = sympy.Integer(1)
    for m in range(1, j + 1):
        expr = sympy.expand(expr * q_sum(n, e, m))
    return reduce_poly(expr, n)


def line_dimension(n: int, e: int, k: int) -> tuple[Fraction, ...]:
    """
    ev' o Psi o coev' on a 1-dim object of degree k: coevaluation and
    evaluation are 1, the crossing of degree k past degree -k is q^(-k^2).
    """
    return q_power(n, e, -k * k)


def trace_of_diagonal(n: int, e: int, diagonal: dict[int, int], degrees: list[int]) -> tuple[Fraction, ...]:
    """Sum of diagonal entries weighted by the line dimensions."""
    expr = sum(c * x ** ((-e * degrees[i] ** 2) % n) for i, c in diagonal.items())
    return reduce_poly(expr, n)


def monodromy_factor(n: int, e: int, d: int, j: int) -> tuple[Fraction, ...]:
    """Two crossings between degrees d and j give q^(dj) twice."""
    return q_power(n, e, 2 * d * j)


def matmul(a, b):
    return [[sum(Fraction(a[i][k]) * Fraction(b[k][j]) for k in range(len(b))) for j in range(len(b[0]))]
            for i in range(len(a))]


def bubble_sort_word(sigma: tuple[int, ...]) -> tuple[int, ...]:
    """
    A reduced word for sigma (1-based image tuple) with sigma = s_w1 ... s_wk,
    found by sorting the one-line notation with adjacent swaps.
    """
    line = list(sigma)
    swaps = []
    changed = True
    while changed:
        changed = False
        for i in range(len(line) - 1):
            if line[i] > line[i + 1]:
                line[i], line[i + 1] = line[i + 1], line[i]
                swaps.append(i + 1)
                changed = True
    return tuple(swaps)


def inversions(sigma: tuple[int, ...]) -> int:
    return sum(1 for i, j in itertools.combinations(range(len(sigma)), 2) if sigma[i] > sigma[j])


# Sweedler's algebra from generators g, x with g^2 = 1, x^2 = 0, xg = -gx

SWEEDLER_BASIS = ((0, 0), (1, 0), (0, 1), (1, 1))  # g^a x^b: 1, g, x, gx


def _sw_mul(u: dict, v: dict) -> dict:
    out: dict = {}
    for (a, b), s in u.items():
        for (c, d), t in v.items():
            if b + d > 1:
                continue
            sign = -1 if (b and c) else 1
            key = ((a + c) % 2, b + d)
            out[key] = out.get(key, 0) + sign * s * t
    return {k: v for k, v in out.items() if v}


def _sw_tensor_mul(u: dict, v: dict) -> dict:
    out: dict = {}
    for (l1, r1), s in u.items():
        for (l2, r2), t in v.items():
            for kl, cl in _sw_mul({l1: 1}, {l2: 1}).items():
                for kr, cr in _sw_mul({r1: 1}, {r2: 1}).items():
                    out[(kl, kr)] = out.get((kl, kr), 0) + s * t * cl * cr
    return {k: v for k, v in out.items() if v}


def sweedler_comul(basis_index: int) -> dict:
    """Delta of g^a x^b as the product of Delta g = g (x) g and Delta x = x (x) 1 + g (x) x."""
    a, b = SWEEDLER_BASIS[basis_index]
    delta = {((0, 0), (0, 0)): 1}
    for _ in range(a):
        delta = _sw_tensor_mul(delta, {((1, 0), (1, 0)): 1})
    for _ in range(b):
        delta = _sw_tensor_mul(delta, {((0, 1), (0, 0)): 1, ((1, 0), (0, 1)): 1})
    return delta


def sweedler_counit(basis_index: int) -> int:
    return 1 if SWEEDLER_BASIS[basis_index][1] == 0 else 0


def _vector(elem: dict) -> list:
    return [elem.get(b, 0) for b in SWEEDLER_BASIS]


def _single_vector(rows: list[list]) -> list:
    null = sympy.Matrix(rows).nullspace()
    assert len(null) == 1, "expected a one-dimensional solution space"
    v = null[0]
    pivot = next(c for c in v if c != 0)
    return [Fraction(int((c / pivot).p), int((c / pivot).q)) for c in v]


def sweedler_integrals() -> dict:
    """
    Brute-force cointegral c (h c = eps(h) c), its modulus alpha (c h = alpha(h) c),
    integral lam ((1 (x) lam) Delta = lam), and its modulus a ((lam (x) 1) Delta = lam(h) a).
    """
    dim = 4
    basis = [{b: 1} for b in SWEEDLER_BASIS]
    # h c - eps(h) c = 0 for every basis h: 4 equations per h in the 4 unknowns of c
    rows = []
    for h in range(dim):
        for out in range(dim):
            rows.append([_vector(_sw_mul(basis[h], basis[k]))[out] - (sweedler_counit(h) if out == k else 0)
                         for k in range(dim)])
    c = _single_vector(rows)
    c_elem = {SWEEDLER_BASIS[k]: c[k] for k in range(dim) if c[k]}
    alpha = []
    for h in range(dim):
        prod = _vector(_sw_mul(c_elem, basis[h]))
        k = next(i for i in range(dim) if c[i])
        alpha.append(Fraction(prod[k]) / c[k])
        assert all(Fraction(prod[i]) == alpha[-1] * c[i] for i in range(dim))
    # sum h1 lam(h2) - lam(h) 1 = 0
    rows = []
    for h in range(dim):
        delta = sweedler_comul(h)
        for out in range(dim):
            row = [0] * dim
            for (l, r), s in delta.items():
                if l == SWEEDLER_BASIS[out]:
                    row[SWEEDLER_BASIS.index(r)] += s
            if out == 0:
                row[h] -= 1
            rows.append(row)
    lam = _single_vector(rows)
    h0 = next(i for i in range(dim) if lam[i])
    a = [Fraction(0)] * dim
    for (l, r), s in sweedler_comul(h0).items():
        a[SWEEDLER_BASIS.index(r)] += s * lam[SWEEDLER_BASIS.index(l)] / lam[h0]
    q_tilde = sum(alpha[i] * a[i] for i in range(dim))
    return {"cointegral": c, "alpha": alpha, "integral": lam, "a": a, "q_tilde": q_tilde}


def sweedler_antipode_matrix() -> list[list[int]]:
    """S(g) = g, S(x) = -gx, S(gx) = S(x) S(g) = -gx g = x, as columns."""
    images = [{(0, 0): 1}, {(1, 0): 1}, {(1, 1): -1}, _sw_mul({(1, 1): -1}, {(1, 0): 1})]
    cols = [_vector(im) for im in images]
    return [[cols[j][i] for j in range(4)] for i in range(4)]


def sweedler_conjugation_by_g() -> list[list[int]]:
    """h -> g h g^-1 (g^-1 = g)."""
    cols = [_vector(_sw_mul(_sw_mul({(1, 0): 1}, {b: 1}), {(1, 0): 1})) for b in SWEEDLER_BASIS]
    return [[cols[j][i] for j in range(4)] for i in range(4)]


def group_algebra_tables(m: int) -> dict:
    """Structure constants of k[Z/m] on the basis g^0..g^(m-1), as plain dicts."""
    return {
        "mul": {(a, b): (a + b) % m for a in range(m) for b in range(m)},
        "comul": {a: (a, a) for a in range(m)},
        "counit": {a: 1 for a in range(m)},
        "antipode": {a: (-a) % m for a in range(m)},
    }


def group_algebra_axioms(m: int) -> bool:
    """Classical Hopf axioms of k[Z/m] checked on basis elements."""
    t = group_algebra_tables(m)
    mul, comul, eps, S = t["mul"], t["comul"], t["counit"], t["antipode"]
    assoc = all(mul[(mul[(a, b)], c)] == mul[(a, mul[(b, c)])] for a in range(m) for b in range(m) for c in range(m))
    bialg = all(comul[mul[(a, b)]] == (mul[(comul[a][0], comul[b][0])], mul[(comul[a][1], comul[b][1])])
                for a in range(m) for b in range(m))
    antipode = all(mul[(S[comul[a][0]], comul[a][1])] == 0 and eps[a] == 1 for a in range(m))
    return assoc and bialg and antipode
