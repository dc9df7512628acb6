"""Exact integer/rational primitives: factorization, quadratic symbols,
Hilbert symbols, and local squareclasses of Q_p.

Everything here is pure and stateless; all results are exact (int / Fraction).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt

# Marker for the real place of Q in hilbert_symbol().
OO = float("inf")

_PRIME_LIMIT = 10**6
_FACTOR_LIMIT = _PRIME_LIMIT**2


@lru_cache(maxsize=1)
def primes_below(limit: int = _PRIME_LIMIT) -> tuple[int, ...]:
    """All primes < limit, by sieve of Eratosthenes."""
    sieve = bytearray([1]) * limit
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, limit, p)))
    return tuple(i for i in range(limit) if sieve[i])


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < _PRIME_LIMIT:
        ps = primes_below()
        import bisect

        i = bisect.bisect_left(ps, n)
        return i < len(ps) and ps[i] == n
    if n >= _FACTOR_LIMIT:
        raise ValueError(f"{n} is beyond the supported factorization range")
    for p in primes_below():
        if p * p > n:
            return True
        if n % p == 0:
            return False
    return True


def factor(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n > 0 as a sorted list of (p, exponent).

    Trial division by primes < 10^6; larger inputs are rejected rather than
    silently mis-factored.
    """
    if n <= 0:
        raise ValueError("factor() requires a positive integer")
    if n >= _FACTOR_LIMIT:
        raise ValueError(f"{n} is beyond the supported factorization range")
    out = []
    for p in primes_below():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    if n > 1:
        out.append((n, 1))
    return out


def valuation(m: int, p: int) -> int:
    """Largest k with p^k | m.  Rejects m = 0."""
    if m == 0:
        raise ValueError("valuation of 0 is undefined")
    if p < 2 or not is_prime(p):
        raise ValueError(f"{p} is not prime")
    k = 0
    m = abs(m)
    while m % p == 0:
        m //= p
        k += 1
    return k


def kronecker(a: int, m: int) -> int:
    """Kronecker symbol (a|m), m != 0.

    At 2 it is +1 for a = +-1 (mod 8), -1 for a = +-3 (mod 8), 0 for even a;
    completely multiplicative in both arguments.
    """
    if m == 0:
        raise ValueError("kronecker symbol needs m != 0")
    result = 1
    if m < 0:
        m = -m
        if a < 0:
            result = -result
    # split off the even part of m
    if m % 2 == 0:
        if a % 2 == 0:
            return 0
        tab = {1: 1, 7: 1, 3: -1, 5: -1}
        while m % 2 == 0:
            m //= 2
            result *= tab[a % 8]
    # Jacobi symbol for the remaining odd m via reciprocity
    a %= m
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                result = -result
        a, m = m, a
        if a % 4 == 3 and m % 4 == 3:
            result = -result
        a %= m
    return result if m == 1 else 0


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a|p) for an odd prime p."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"{p} is not an odd prime")
    return kronecker(a, p)


def _split(x: Fraction | int, p: int) -> tuple[int, Fraction]:
    """x = p^alpha * u with u a p-adic unit; returns (alpha, u)."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("nonzero value required")
    alpha = valuation(x.numerator, p) - valuation(x.denominator, p)
    return alpha, x / Fraction(p) ** alpha


def _unit_mod(u: Fraction, modulus: int) -> int:
    """Residue of a p-adic unit written as a fraction, mod `modulus`."""
    num, den = u.numerator % modulus, u.denominator % modulus
    return num * pow(den, -1, modulus) % modulus


def hilbert_symbol(a, b, place) -> int:
    """Hilbert symbol (a, b)_v over Q; `place` is a prime or OO.

    Closed formulas: at odd p via valuations and Legendre symbols, at 2 via
    the mod-8 epsilon/omega formula, at OO it is -1 iff both arguments are
    negative.
    """
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise ValueError("hilbert symbol needs nonzero arguments")
    if place == OO:
        return -1 if (a < 0 and b < 0) else 1
    p = place
    if not is_prime(p):
        raise ValueError(f"place must be a prime or OO, got {place!r}")
    alpha, u = _split(a, p)
    beta, w = _split(b, p)
    if p != 2:
        uu = _unit_mod(u, p)
        ww = _unit_mod(w, p)
        sign = 1
        if alpha % 2 and beta % 2 and p % 4 == 3:
            sign = -sign
        if beta % 2:
            sign *= legendre(uu, p)
        if alpha % 2:
            sign *= legendre(ww, p)
        return sign
    uu = _unit_mod(u, 8)
    ww = _unit_mod(w, 8)
    eps_u, eps_w = (uu - 1) // 2 % 2, (ww - 1) // 2 % 2
    om_u, om_w = (uu * uu - 1) // 8 % 2, (ww * ww - 1) // 8 % 2
    e = eps_u * eps_w + alpha * om_w + beta * om_u
    return -1 if e % 2 else 1


def chi(u, p: int) -> int:
    """The character chi_u(p) = kronecker(-u, p); u a unit class at p."""
    if isinstance(u, LocalSquareClass):
        u = u.unit_rep()
    return kronecker(-u, p)


def gamma_factor(u, p: int) -> Fraction:
    """gamma_p(u) = 1 - chi_u(p)/p, exactly."""
    return 1 - Fraction(chi(u, p), p)


# unit-class tags: odd p uses +1 (square) / -1 (non-square); p = 2 uses the
# residue mod 8.
QR, NQR = 1, -1


@dataclass(frozen=True)
class LocalSquareClass:
    """Element of SqCl(Q_p^x, Z_p^x): a valuation and a unit-class tag."""

    p: int
    val: int
    unit: int

    def __post_init__(self):
        if self.p == 2:
            if self.unit % 8 != self.unit or self.unit % 2 == 0:
                raise ValueError("unit tag at 2 must be one of 1, 3, 5, 7")
        elif self.unit not in (QR, NQR):
            raise ValueError("unit tag at odd p must be +1 or -1")

    def __mul__(self, other: "LocalSquareClass") -> "LocalSquareClass":
        if self.p != other.p:
            raise ValueError("mismatched primes")
        if self.p == 2:
            tag = self.unit * other.unit % 8
        else:
            tag = self.unit * other.unit
        return LocalSquareClass(self.p, self.val + other.val, tag)

    def unit_rep(self) -> int:
        """A representative integer for the unit part."""
        if self.p == 2:
            return self.unit
        if self.unit == QR:
            return 1
        return min(r for r in range(2, self.p) if legendre(r, self.p) == -1)

    def normalized_unit(self) -> "LocalSquareClass":
        """The associated normalized squareclass (valuation stripped)."""
        return LocalSquareClass(self.p, 0, self.unit)

    @staticmethod
    def of(m: int, p: int) -> "LocalSquareClass":
        """The squareclass of a nonzero integer m at p."""
        v = valuation(m, p)
        u = m // p**v if m > 0 else -((-m) // p**v)
        if p == 2:
            return LocalSquareClass(2, v, u % 8)
        return LocalSquareClass(p, v, legendre(u, p))


@dataclass(frozen=True)
class GlobalDeterminant:
    """A positive Hessian determinant together with its factorization."""

    value: int
    factorization: tuple[tuple[int, int], ...]

    @staticmethod
    def of(S: int) -> "GlobalDeterminant":
        if S <= 0:
            raise ValueError("determinant must be positive")
        return GlobalDeterminant(S, tuple(factor(S)))

    def ord(self, p: int) -> int:
        for q, e in self.factorization:
            if q == p:
                return e
        return 0

    def localize(self, p: int) -> LocalSquareClass:
        return LocalSquareClass.of(self.value, p)

    def support(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factorization)

    def ideal(self) -> int:
        """The associated valuation ideal prod p^ord_p(S); over Q this is S."""
        out = 1
        for p, e in self.factorization:
            out *= p**e
        return out

    def is_square_ideal(self) -> bool:
        return all(e % 2 == 0 for _, e in self.factorization)
