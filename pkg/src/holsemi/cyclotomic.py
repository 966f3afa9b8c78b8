"""Exact arithmetic in cyclotomic fields Q(zeta_n).

An element is stored in the power basis ``1, z, ..., z^(phi(n)-1)`` of
``Q[x]/Phi_n(x)`` as integer numerators over one positive common
denominator.  Operands with different conductors are embedded into the
field of the lcm before combining.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, constant term first."""
    if n < 1:
        raise ValueError("conductor must be positive")
    num = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num = _exact_div(num, cyclotomic_polynomial(d))
    return tuple(num)


def _exact_div(num: list[int], den: tuple[int, ...]) -> list[int]:
    # den is monic
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j, b in enumerate(den):
                num[i - dd + j] -= c * b
    assert not any(num), "cyclotomic division left a remainder"
    return quot


def euler_phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


def _reduce(coeffs: list[int], n: int) -> list[int]:
    """Reduce an integer coefficient list modulo Phi_n."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    c = list(coeffs) + [0] * max(0, deg - len(coeffs))
    for i in range(len(c) - 1, deg - 1, -1):
        a = c[i]
        if a:
            base = i - deg
            for j in range(deg):
                c[base + j] -= a * phi[j]
            c[i] = 0
    return c[:deg]


class Cyclotomic:
    """An element of Q(zeta_n)."""

    __slots__ = ("conductor", "nums", "den")

    def __init__(self, conductor: int, nums, den: int = 1):
        if den <= 0:
            raise ValueError("denominator must be positive")
        nums = tuple(nums)
        if len(nums) != euler_phi(conductor):
            nums = tuple(_reduce(list(nums), conductor))
        g = math.gcd(den, *nums)
        if g > 1:
            nums = tuple(a // g for a in nums)
            den //= g
        self.conductor = conductor
        self.nums = nums
        self.den = den

    # -- constructors ----------------------------------------------------

    @classmethod
    def rational(cls, q, conductor: int = 1) -> Cyclotomic:
        q = Fraction(q)
        return cls(conductor, [q.numerator] + [0] * (euler_phi(conductor) - 1), q.denominator)

    @classmethod
    def zeta(cls, n: int, k: int = 1) -> Cyclotomic:
        coeffs = [0] * n
        coeffs[k % n] = 1
        return cls(n, _reduce(coeffs, n))

    @classmethod
    def from_exponent_counts(cls, n: int, counts, den: int = 1) -> Cyclotomic:
        """``(sum_k counts[k] * zeta_n^k) / den``."""
        return cls(n, _reduce(list(counts), n), den)

    # -- structure -------------------------------------------------------

    @property
    def coeffs(self) -> list[Fraction]:
        return [Fraction(a, self.den) for a in self.nums]

    def with_conductor(self, m: int) -> Cyclotomic:
        """Embed into Q(zeta_m); ``m`` must be a multiple of the conductor."""
        n = self.conductor
        if m == n:
            return self
        if m % n:
            raise ValueError(f"cannot embed Q(zeta_{n}) into Q(zeta_{m})")
        step = m // n
        coeffs = [0] * (step * (len(self.nums) - 1) + 1) if self.nums else [0]
        for i, a in enumerate(self.nums):
            coeffs[i * step] = a
        return Cyclotomic(m, _reduce(coeffs, m), self.den)

    def _align(self, other):
        if isinstance(other, Cyclotomic):
            if other.conductor == self.conductor:
                return self, other
            m = math.lcm(self.conductor, other.conductor)
            return self.with_conductor(m), other.with_conductor(m)
        if isinstance(other, (int, Rational)):
            return self, Cyclotomic.rational(other, self.conductor)
        return None, None

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        return Cyclotomic(a.conductor, [x * b.den + y * a.den for x, y in zip(a.nums, b.nums)], a.den * b.den)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.conductor, [-x for x in self.nums], self.den)

    def __sub__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            q = Fraction(other)
            return Cyclotomic(self.conductor, [x * q.numerator for x in self.nums], self.den * q.denominator)
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        prod = [0] * (len(a.nums) + len(b.nums) - 1)
        for i, x in enumerate(a.nums):
            if x:
                for j, y in enumerate(b.nums):
                    prod[i + j] += x * y
        return Cyclotomic(a.conductor, _reduce(prod, a.conductor), a.den * b.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by a nonzero rational only."""
        if isinstance(other, Cyclotomic):
            q = other.as_rational()
            if q is None:
                raise TypeError("only division by rational elements is supported")
            other = q
        if not isinstance(other, (int, Rational)):
            return NotImplemented
        q = Fraction(other)
        if q == 0:
            raise ZeroDivisionError("division by zero")
        sign = 1 if q > 0 else -1
        return Cyclotomic(self.conductor, [sign * x * q.denominator for x in self.nums], self.den * abs(q.numerator))

    def conj(self) -> Cyclotomic:
        """Complex conjugation, zeta_n^k -> zeta_n^(n-k)."""
        n = self.conductor
        coeffs = [0] * n
        for k, a in enumerate(self.nums):
            coeffs[(-k) % n] += a
        return Cyclotomic(n, _reduce(coeffs, n), self.den)

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = Cyclotomic.rational(1, self.conductor)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.nums)

    def as_rational(self) -> Fraction | None:
        """The rational value, or None when the element is irrational."""
        if any(self.nums[1:]):
            return None
        return Fraction(self.nums[0] if self.nums else 0, self.den)

    def to_complex(self) -> complex:
        n = self.conductor
        return sum(a * cmath.exp(2j * math.pi * k / n) for k, a in enumerate(self.nums)) / self.den

    def __eq__(self, other):
        a, b = self._align(other)
        if a is None:
            return NotImplemented
        return a.den == b.den and a.nums == b.nums

    def __hash__(self):
        q = self.as_rational()
        if q is not None:
            return hash(q)
        # irrational elements can coincide across conductors; hash coarsely
        return hash("cyclotomic-irrational")

    def sort_key(self) -> tuple:
        """Deterministic ordering key (within one conductor)."""
        return (self.conductor, tuple(Fraction(a, self.den) for a in self.nums))

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        return {
            "conductor": self.conductor,
            "coeffs": [[k, _fmt_fraction(Fraction(a, self.den))] for k, a in enumerate(self.nums) if a],
        }

    @classmethod
    def from_json(cls, data: dict) -> Cyclotomic:
        n = int(data["conductor"])
        coeffs = [Fraction(0)] * euler_phi(n)
        for k, q in data["coeffs"]:
            coeffs[int(k)] += Fraction(q)
        den = math.lcm(1, *(c.denominator for c in coeffs))
        return cls(n, [int(c * den) for c in coeffs], den)

    def __str__(self):
        terms = []
        for k, a in enumerate(self.nums):
            if not a:
                continue
            q = Fraction(a, self.den)
            mag = abs(q)
            if k == 0:
                body = _fmt_fraction(mag)
            else:
                z = f"ζ{self.conductor}" + (f"^{k}" if k > 1 else "")
                body = z if mag == 1 else f"{_fmt_fraction(mag)}*{z}"
            terms.append(("-" if q < 0 else "+", body))
        if not terms:
            return "0"
        sign, body = terms[0]
        out = ("−" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            out += f" {'−' if sign == '-' else '+'} {body}"
        return out

    def __repr__(self):
        return f"Cyclotomic({self})"


def _fmt_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def root_of_unity(n: int, k: int) -> Cyclotomic:
    if n < 1:
        raise ValueError("n must be positive")
    return Cyclotomic.zeta(n, k)


def as_rational(a: Cyclotomic) -> Fraction | None:
    return a.as_rational()
