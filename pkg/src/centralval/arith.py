"""Exact integer and number-theoretic primitives shared by all modules.

Kronecker symbols, square roots mod a prime, naive point counting over
prime fields and Hecke-multiplicative Fourier coefficients of the weight-2
eigenform attached to an elliptic curve of prime conductor.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

SQRT_MOD_CUTOFF = 10**6  # exhaustive search bound; larger moduli rejected


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond any modulus used here."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_up_to(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i in range(2, n + 1) if sieve[i]]


def squarefree_part_is_one(n: int) -> bool:
    """True iff n > 0 is squarefree."""
    if n <= 0:
        return False
    for q in range(2, math.isqrt(n) + 1):
        if n % (q * q) == 0:
            return False
    return True


def is_fundamental(D: int) -> bool:
    """Fundamental discriminant of a quadratic field (D != 1 here)."""
    if D == 0 or D == 1:
        return False
    if D % 4 == 1:
        return squarefree_part_is_one(abs(D))
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and squarefree_part_is_one(abs(m))
    return False


def kronecker(D: int, n: int) -> int:
    """Full Kronecker symbol (D/n) for n >= 0, completely multiplicative in n.

    Conventions: (D/0) = 1 if D = ±1 else 0; (D/1) = 1; (D/2) = 0 for even D
    and ±1 according to D mod 8 otherwise.
    """
    if n < 0:
        raise ValueError("kronecker: n must be >= 0")
    if n == 0:
        return 1 if D in (1, -1) else 0
    a = D
    result = 1
    # factor out twos of n
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            result = -result
    # now n odd; Jacobi symbol (a/n) with reciprocity
    a %= n
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def kronecker_signed(D: int, n: int) -> int:
    """Kronecker symbol allowing negative n, with (D/-1) = sign of D."""
    if n >= 0:
        return kronecker(D, n)
    s = 1 if D > 0 else -1
    return s * kronecker(D, -n)


def sqrt_mod(D: int, N: int) -> int:
    """Smallest b with 0 < b < N and b*b = D mod N, for an odd prime N.

    Exhaustive search (documented cutoff SQRT_MOD_CUTOFF); raises when D is
    not a nonzero quadratic residue.
    """
    if not is_prime(N) or N == 2:
        raise ValueError("sqrt_mod: modulus must be an odd prime")
    if N > SQRT_MOD_CUTOFF:
        raise ValueError("sqrt_mod: modulus above exhaustive-search cutoff")
    d = D % N
    if d == 0 or kronecker(D, N) != 1:
        raise ValueError("no square root: %d is not a residue mod %d" % (D, N))
    for b in range(1, N // 2 + 1):
        if b * b % N == d:
            return b
    raise AssertionError("unreachable: residue with no root")


@dataclass
class CurveData:
    """Integral Weierstrass coefficients of an elliptic curve of prime conductor."""

    a1: int
    a2: int
    a3: int
    a4: int
    a6: int
    conductor: int
    root_number: Optional[int] = None  # filled by lfun
    generator: Optional[tuple[Fraction, Fraction]] = None

    def __post_init__(self):
        if self.discriminant() == 0:
            raise ValueError("singular curve")
        if not is_prime(self.conductor):
            raise ValueError("conductor must be prime")
        d = abs(self.discriminant())
        while d % self.conductor == 0:
            d //= self.conductor
        if d != 1:
            raise ValueError("discriminant is not a power of the conductor")
        if self.generator is not None:
            x, y = (Fraction(v) for v in self.generator)
            if not self.on_curve(x, y):
                raise ValueError("generator is not on the curve")
            self.generator = (x, y)

    def b_invariants(self) -> tuple[int, int, int, int]:
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return b2, b4, b6, b8

    def discriminant(self) -> int:
        b2, b4, b6, b8 = self.b_invariants()
        return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    def on_curve(self, x, y) -> bool:
        return (
            y * y + self.a1 * x * y + self.a3 * y
            == x**3 + self.a2 * x * x + self.a4 * x + self.a6
        )


@dataclass(frozen=True)
class FourierCoeffs:
    """Prefix a_1..a_M of the Fourier expansion of the attached eigenform."""

    M: int
    a: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        return self.a[n - 1]


def _count_points(E: CurveData, p: int) -> int:
    """#E(F_p) including infinity, naive O(p) count (good reduction assumed)."""
    a1, a2, a3, a4, a6 = E.a1 % p, E.a2 % p, E.a3 % p, E.a4 % p, E.a6 % p
    if p == 2:
        count = 1
        for x in (0, 1):
            for y in (0, 1):
                if (y * y + a1 * x * y + a3 * y) % 2 == (
                    x * x * x + a2 * x * x + a4 * x + a6
                ) % 2:
                    count += 1
        return count
    # complete the square: (2y + a1 x + a3)^2 = 4(x^3+a2x^2+a4x+a6) + (a1x+a3)^2
    squares = bytearray(p)
    for t in range((p + 1) // 2):
        squares[t * t % p] = 1
    count = 1
    for x in range(p):
        rhs = (4 * ((x * x % p * x + a2 * x * x + a4 * x + a6) % p) + (a1 * x + a3) ** 2) % p
        if rhs == 0:
            count += 1
        elif squares[rhs]:
            count += 2
    return count


def _a_conductor(E: CurveData) -> int:
    """a_N for the prime conductor N: N minus the number of nonsingular F_N points.

    Multiplicative reduction: a_N = +1 (split) or -1 (non-split).
    """
    p = E.conductor
    a1, a2, a3, a4, a6 = E.a1 % p, E.a2 % p, E.a3 % p, E.a4 % p, E.a6 % p
    count = 1  # infinity is always smooth
    for x in range(p):
        fx = (x * x % p * x + a2 * x * x + a4 * x + a6) % p
        for y in range(p):
            if (y * y + a1 * x * y + a3 * y) % p != fx:
                continue
            # singular iff both partials vanish
            dy = (2 * y + a1 * x + a3) % p
            dx = (a1 * y - (3 * x * x + 2 * a2 * x + a4)) % p
            if dy == 0 and dx == 0:
                continue
            count += 1
    a = p - count
    if a not in (1, -1):
        raise AssertionError("conductor prime is not multiplicative: a_N = %d" % a)
    return a


def fourier_coefficients(E: CurveData, M: int) -> FourierCoeffs:
    """a_1..a_M by naive point counting at primes plus the Hecke recursion."""
    if M < 1:
        raise ValueError("M must be >= 1")
    N = E.conductor
    a = [0] * (M + 1)
    a[1] = 1
    for p in primes_up_to(M):
        if p == N:
            ap = _a_conductor(E)
        else:
            ap = p + 1 - _count_points(E, p)
            if ap * ap > 4 * p:
                raise AssertionError("Hasse bound violated at p=%d" % p)
        q = p
        a[q] = ap
        while q * p <= M:
            q *= p
            if p == N:
                a[q] = ap * a[q // p]
            else:
                a[q] = ap * a[q // p] - p * a[q // (p * p)]
    # multiplicative fill-in along smallest prime factors
    spf = list(range(M + 1))
    for p in primes_up_to(M):
        for k in range(p, M + 1, p):
            if spf[k] == k and k != p:
                spf[k] = p
    for n in range(2, M + 1):
        p = spf[n]
        q = p
        m = n // p
        while m % p == 0:
            q *= p
            m //= p
        if m > 1:
            a[n] = a[q] * a[m]
    return FourierCoeffs(M, tuple(a[1:]))
