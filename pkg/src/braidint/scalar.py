"""
Exact arithmetic in the cyclotomic field Q(zeta_n).

An element is stored as a vector of integer numerators over one positive common
denominator, in the power basis 1, zeta, ..., zeta^(phi(n)-1), reduced modulo the
n-th cyclotomic polynomial. The representation is canonical, so equality is a
tuple compare. For n = 1 and n = 2 the field is Q itself.

>>> z = zeta(4)
>>> z * z
FieldElement(4, '-1')
>>> FieldElement.from_int(3, 1) / zeta(3)
FieldElement(3, '-1 - z')
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction
from typing import Iterable, Sequence


class OrderMismatch(ValueError):
    """Raised when two field elements live in different cyclotomic fields."""


class DivisionByZero(ZeroDivisionError):
    """Raised when inverting the zero element."""


def _poly_divmod_int(num: Sequence[int], den: Sequence[int]) -> tuple[list[int], list[int]]:
    """Division of integer polynomials by a monic divisor (coefficients low to high)."""
    num = list(num)
    dn = len(den) - 1
    assert den[-1] == 1
    if len(num) - 1 < dn:
        return [0], num
    quot = [0] * (len(num) - dn)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]
        if c:
            quot[k - dn] = c
            for t in range(dn + 1):
                num[k - dn + t] -= c * den[t]
    rem = num[:dn] or [0]
    return quot, rem


def _poly_mul_int(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


@functools.lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """
    Integer coefficients of the n-th cyclotomic polynomial, constant term first.

    >>> cyclotomic_polynomial(6)
    (1, -1, 1)
    """
    if n < 1:
        raise ValueError(f"cyclotomic order must be positive, got {n}")
    numerator = [-1] + [0] * (n - 1) + [1]
    divisor = [1]
    for d in range(1, n):
        if n % d == 0:
            divisor = _poly_mul_int(divisor, cyclotomic_polynomial(d))
    quot, rem = _poly_divmod_int(numerator, divisor)
    assert not any(rem)
    return tuple(quot)


class _Field:
    """Per-order tables: degree, and the reduction of x^k for 0 <= k < max(2*phi(n) - 1, n)."""

    def __init__(self, n: int):
        self.n = n
        self.modulus = cyclotomic_polynomial(n)
        self.phi = len(self.modulus) - 1
        phi = self.phi
        table: list[tuple[int, ...]] = []
        for k in range(max(2 * phi - 1, n)):
            mono = [0] * k + [1]
            _, rem = _poly_divmod_int(mono, self.modulus)
            rem = rem + [0] * (phi - len(rem))
            table.append(tuple(rem[:phi]))
        self.power_table = table

    def reduce(self, coeffs: Sequence[int]) -> list[int]:
        phi = self.phi
        out = list(coeffs[:phi]) + [0] * max(0, phi - len(coeffs))
        for k in range(phi, len(coeffs)):
            c = coeffs[k]
            if c:
                row = self.power_table[k % self.n]
                for t in range(phi):
                    if row[t]:
                        out[t] += c * row[t]
        return out


@functools.lru_cache(maxsize=None)
def _field(n: int) -> _Field:
    return _Field(n)


def totient(n: int) -> int:
    return _field(n).phi


class FieldElement:
    """
    An element of Q(zeta_n).

    ``nums`` holds integer numerators over the common positive denominator ``den``;
    the triple is normalised so that gcd(nums, den) = 1. Use :meth:`coeffs` for
    the Fraction view.
    """

    __slots__ = ("n", "nums", "den", "_hash")

    def __init__(self, n: int, coeffs: Iterable[int | Fraction | str] = ()):
        field = _field(n)
        fracs = [Fraction(c) for c in coeffs]
        if len(fracs) > field.phi:
            raise ValueError(f"expected at most {field.phi} coefficients for n={n}, got {len(fracs)}")
        den = 1
        for f in fracs:
            den = den * f.denominator // math.gcd(den, f.denominator)
        nums = [int(f * den) for f in fracs] + [0] * (field.phi - len(fracs))
        self._set(n, nums, den)

    def _set(self, n: int, nums: list[int], den: int) -> None:
        g = den
        for x in nums:
            if x:
                g = math.gcd(g, x)
                if g == 1:
                    break
        if not any(nums):
            den, g = 1, 1
        if g != 1:
            nums = [x // g for x in nums]
            den //= g
        self.n = n
        self.nums = tuple(nums)
        self.den = den
        self._hash = None

    @classmethod
    def _raw(cls, n: int, nums: list[int], den: int) -> "FieldElement":
        obj = cls.__new__(cls)
        obj._set(n, nums, den)
        return obj

    @classmethod
    def from_int(cls, n: int, value: int | Fraction) -> "FieldElement":
        value = Fraction(value)
        phi = _field(n).phi
        return cls._raw(n, [value.numerator] + [0] * (phi - 1), value.denominator)

    @classmethod
    def from_poly(cls, n: int, coeffs: Sequence[int | Fraction]) -> "FieldElement":
        """Reduce an arbitrary-length coefficient sequence modulo the cyclotomic polynomial."""
        fracs = [Fraction(c) for c in coeffs]
        den = 1
        for f in fracs:
            den = den * f.denominator // math.gcd(den, f.denominator)
        nums = [int(f * den) for f in fracs]
        return cls._raw(n, _field(n).reduce(nums), den)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(x, self.den) for x in self.nums)

    def is_zero(self) -> bool:
        return not any(self.nums)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.n != self.n:
                raise OrderMismatch(f"cannot combine elements of orders {self.n} and {other.n}")
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElement.from_int(self.n, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return FieldElement._raw(self.n, [a + b for a, b in zip(self.nums, other.nums)], self.den)
        d1, d2 = self.den, other.den
        return FieldElement._raw(self.n, [a * d2 + b * d1 for a, b in zip(self.nums, other.nums)], d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement._raw(self.n, [-a for a in self.nums], self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = self.n
        if other.is_rational():
            c = other.nums[0]
            return FieldElement._raw(n, [a * c for a in self.nums], self.den * other.den)
        if self.is_rational():
            c = self.nums[0]
            return FieldElement._raw(n, [b * c for b in other.nums], self.den * other.den)
        prod = _poly_mul_int(self.nums, other.nums)
        return FieldElement._raw(n, _field(n).reduce(prod), self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise DivisionByZero("inverse of zero field element")
        n = self.n
        if self.is_rational():
            return FieldElement.from_int(n, Fraction(self.den, self.nums[0]))
        inv = _poly_inverse([Fraction(x, self.den) for x in self.nums], list(_field(n).modulus))
        return FieldElement.from_poly(n, inv)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int) -> "FieldElement":
        base = self
        if k < 0:
            base, k = self.inverse(), -k
        result = FieldElement.from_int(self.n, 1)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = FieldElement.from_int(self.n, other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.n == other.n and self.den == other.den and self.nums == other.nums

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.nums, self.den))
        return self._hash

    def __repr__(self) -> str:
        return f"FieldElement({self.n}, {str(self)!r})"

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> dict:
        return {"n": self.n, "coeffs": [_frac_str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "FieldElement":
        if not isinstance(data, dict) or "n" not in data or "coeffs" not in data:
            raise ValueError("field element must be an object with 'n' and 'coeffs'")
        return cls(int(data["n"]), [Fraction(c) for c in data["coeffs"]])


def _frac_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _poly_inverse(a: list[Fraction], modulus: list[int]) -> list[Fraction]:
    """Inverse of a modulo an irreducible modulus, by the extended Euclidean algorithm."""
    r0, r1 = [Fraction(c) for c in modulus], _poly_trim(list(a))
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while len(r1) > 1 or r1[0] != 0:
        # one long division r0 = quot * r1 + rem
        rem = list(r0)
        quot = [Fraction(0)] * max(1, len(r0) - len(r1) + 1)
        lead = r1[-1]
        for k in range(len(rem) - 1, len(r1) - 2, -1):
            c = rem[k] / lead
            if c:
                quot[k - len(r1) + 1] = c
                for t in range(len(r1)):
                    rem[k - len(r1) + 1 + t] -= c * r1[t]
        rem = _poly_trim(rem[: max(1, len(r1) - 1)])
        prod = [Fraction(0)] * (len(quot) + len(s1) - 1)
        for i, x in enumerate(quot):
            for j, y in enumerate(s1):
                prod[i + j] += x * y
        width = max(len(s0), len(prod))
        s_next = [(s0[i] if i < len(s0) else 0) - (prod[i] if i < len(prod) else 0) for i in range(width)]
        r0, r1 = r1, rem
        s0, s1 = s1, _poly_trim(s_next)
    # r0 is a nonzero constant
    return [c / r0[0] for c in s0]


@functools.lru_cache(maxsize=None)
def zeta_power(n: int, k: int) -> FieldElement:
    """zeta_n^k, depending only on k mod n."""
    table = _field(n).power_table
    return FieldElement._raw(n, list(table[k % n]), 1)


def zeta(n: int) -> FieldElement:
    return zeta_power(n, 1)


def one(n: int) -> FieldElement:
    return zeta_power(n, 0)


def zero(n: int) -> FieldElement:
    return FieldElement._raw(n, [0] * _field(n).phi, 1)


def scalar_arith(a: FieldElement, b: FieldElement, op: str) -> FieldElement:
    """Binary field operation by name: add, sub, mul or div."""
    if a.n != b.n:
        raise OrderMismatch(f"cannot combine elements of orders {a.n} and {b.n}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def scalar_pow(a: FieldElement, k: int) -> FieldElement:
    return a ** k
