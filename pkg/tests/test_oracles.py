"""The frozen expected values used across the suite, re-derived from the oracles."""

from fractions import Fraction

import oracles

# frozen from oracles.sweedler_integrals() over the basis 1, g, x, gx
SWEEDLER_A = (0, 1, 0, 0)
SWEEDLER_ALPHA = (1, -1, 0, 0)
SWEEDLER_COINTEGRAL = (0, 0, 1, 1)
SWEEDLER_INTEGRAL = (0, 0, 0, 1)
SWEEDLER_Q_TILDE = -1
SWEEDLER_S = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 1), (0, 0, -1, 0))
SWEEDLER_AD_G = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, -1, 0), (0, 0, 0, -1))

# frozen from oracles.cyclotomic_coeffs
PHI = {1: (-1, 1), 4: (1, 0, 1), 6: (1, -1, 1)}
# n = 3: 1 / zeta = -1 - zeta
INV_ZETA_3 = (-1, -1)
# n = 3: [2]! = 1 + q, [3]! = 0
FACT_3 = {2: (1, 1), 3: (0, 0)}


def as_tuple(seq):
    return tuple(Fraction(c) for c in seq)


def test_sweedler_oracle_reproduces_frozen_values():
    data = oracles.sweedler_integrals()
    assert tuple(data["a"]) == as_tuple(SWEEDLER_A)
    assert tuple(data["alpha"]) == as_tuple(SWEEDLER_ALPHA)
    assert tuple(data["cointegral"]) == as_tuple(SWEEDLER_COINTEGRAL)
    assert tuple(data["integral"]) == as_tuple(SWEEDLER_INTEGRAL)
    assert data["q_tilde"] == SWEEDLER_Q_TILDE


def test_sweedler_antipode_oracle():
    S = oracles.sweedler_antipode_matrix()
    assert tuple(map(tuple, S)) == SWEEDLER_S
    assert tuple(map(tuple, oracles.sweedler_conjugation_by_g())) == SWEEDLER_AD_G
    assert oracles.matmul(S, S) == [list(map(Fraction, r)) for r in SWEEDLER_AD_G]


def test_cyclotomic_oracle():
    for n, coeffs in PHI.items():
        assert oracles.cyclotomic_coeffs(n) == coeffs


def test_inverse_and_factorial_oracles():
    assert oracles.inverse(oracles.x, 3) == as_tuple(INV_ZETA_3)
    for j, value in FACT_3.items():
        assert oracles.gaussian_factorial(3, 1, j) == as_tuple(value)


def test_line_dimension_oracle_at_top_degree():
    # (n-1)^2 = 1 mod n, so the top line of Taft has dimension q^-1
    for n in range(2, 7):
        assert oracles.line_dimension(n, 1, n - 1) == oracles.q_power(n, 1, -1)
