"""Exact Laurent-polynomial and cyclotomic-integer arithmetic.

Everything in this module is exact.  Laurent polynomials carry int or
Fraction coefficients; elements of Z[q], with q a primitive 2p-th root of
unity, are kept in a canonical coordinate vector so that equality of field
elements is literal equality of tuples.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt

Scalar = int | Fraction


class IntegralityError(ArithmeticError):
    """An exact division left a remainder, or a value that is an integer by
    theorem failed to be one.  Signals an implementation bug or inconsistent
    input, never a rounding problem."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


def check_odd_prime(p: int) -> None:
    if p == 2:
        raise ValueError("p = 2 is not supported here: the trace machinery needs p > 2")
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")


def _norm_scalar(c: Scalar) -> Scalar:
    if isinstance(c, Fraction):
        return int(c) if c.denominator == 1 else c
    if isinstance(c, bool) or not isinstance(c, int):
        raise TypeError(f"coefficient must be int or Fraction, got {type(c).__name__}")
    return c


class LaurentPoly:
    """Finitely supported Laurent polynomial sum_j b_j z^j.

    Immutable; zero coefficients are never stored.  Coefficients are ints,
    promoted to Fractions only when a denominator actually appears.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: dict[int, Scalar] | None = None):
        data: dict[int, Scalar] = {}
        if coeffs:
            for e, c in coeffs.items():
                c = _norm_scalar(c)
                if c != 0:
                    data[int(e)] = c
        object.__setattr__(self, "_coeffs", data)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def constant(cls, c: Scalar) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, exponent: int, coeff: Scalar = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    # -- inspection --------------------------------------------------------

    def coeff(self, e: int) -> Scalar:
        return self._coeffs.get(e, 0)

    def items(self) -> list[tuple[int, Scalar]]:
        return sorted(self._coeffs.items())

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(sorted(self._coeffs))

    def is_zero(self) -> bool:
        return not self._coeffs

    def degree(self) -> int:
        """Largest exponent with nonzero coefficient (0 for the zero polynomial)."""
        return max(self._coeffs) if self._coeffs else 0

    def valuation(self) -> int:
        return min(self._coeffs) if self._coeffs else 0

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._coeffs.values())

    def is_symmetric(self) -> bool:
        """True iff b_j = b_{-j} for all j, i.e. the polynomial is fixed by z -> 1/z."""
        return all(self._coeffs.get(-e, 0) == c for e, c in self._coeffs.items())

    def evaluate(self, x: Scalar) -> Scalar:
        if x == 0:
            raise ValueError("cannot evaluate a Laurent polynomial at 0")
        total: Scalar = 0
        for e, c in self._coeffs.items():
            total += c * (Fraction(x) ** e if e < 0 else x**e)
        return _norm_scalar(Fraction(total) if not isinstance(total, int) else total)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "LaurentPoly | Scalar") -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: "LaurentPoly | Scalar") -> "LaurentPoly":
        return self + (-other if isinstance(other, LaurentPoly) else -LaurentPoly.constant(other))

    def __rsub__(self, other: Scalar) -> "LaurentPoly":
        return LaurentPoly.constant(other) - self

    def __mul__(self, other: "LaurentPoly | Scalar") -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            return LaurentPoly({e: c * other for e, c in self._coeffs.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out: dict[int, Scalar] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers of Laurent polynomials are not defined")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def reciprocal(self) -> "LaurentPoly":
        """The image under z -> 1/z."""
        return LaurentPoly({-e: c for e, c in self._coeffs.items()})

    def scale_exponents(self, k: int) -> "LaurentPoly":
        """The image under z -> z^k, for nonzero k."""
        if k == 0:
            raise ValueError("exponent scale factor must be nonzero")
        return LaurentPoly({k * e: c for e, c in self._coeffs.items()})

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient self / other; raises IntegralityError on any remainder."""
        if other.is_zero():
            raise ValueError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero()
        sn, sd = self.valuation(), other.valuation()
        num = [Fraction(self._coeffs.get(e, 0)) for e in range(sn, self.degree() + 1)]
        den = [Fraction(other._coeffs.get(e, 0)) for e in range(sd, other.degree() + 1)]
        if len(num) < len(den):
            raise IntegralityError("Laurent division left a nonzero remainder")
        quot = [Fraction(0)] * (len(num) - len(den) + 1)
        rem = num[:]
        for i in range(len(quot) - 1, -1, -1):
            c = rem[i + len(den) - 1] / den[-1]
            quot[i] = c
            if c:
                for j, dc in enumerate(den):
                    rem[i + j] -= c * dc
        if any(rem):
            raise IntegralityError("Laurent division left a nonzero remainder")
        return LaurentPoly({i + sn - sd: c for i, c in enumerate(quot) if c})

    # -- object protocol ---------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(frozenset(self._coeffs.items()))

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for e, c in sorted(self._coeffs.items(), reverse=True):
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if isinstance(mag, Fraction):
                cs = f"({mag})"
            else:
                cs = str(mag) if (mag != 1 or e == 0) else ""
            if e == 0:
                term = cs or "1"
            elif e == 1:
                term = f"{cs}z"
            else:
                term = f"{cs}z^{e}"
            parts.append((sign, term))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, term in parts[1:]:
            text += sign + term
        return text

    def __repr__(self) -> str:
        return f"LaurentPoly({dict(self.items())!r})"


@lru_cache(maxsize=None)
def quantum_int(r: int) -> LaurentPoly:
    """The quantum integer [r]_z = (z^r - z^-r) / (z - z^-1).

    Expands to z^{r-1} + z^{r-3} + ... + z^{1-r} for r >= 1; [0]_z = 0 and
    [-r]_z = -[r]_z.  Always symmetric and integral.
    """
    if r == 0:
        return LaurentPoly.zero()
    if r < 0:
        return -quantum_int(-r)
    return LaurentPoly({r - 1 - 2 * k: 1 for k in range(r)})


@lru_cache(maxsize=None)
def gauss_binom(n: int, m: int) -> LaurentPoly:
    """The symmetrized Gauss polynomial binom(n, m)_z.

    Computed as the exact quotient of prod_{j=1}^m (z^{n-j+1} - z^{-(n-j+1)})
    by prod_{j=1}^m (z^j - z^-j); the division being remainder-free is a
    theorem, so a remainder raises IntegralityError.  The value at z = 1 is
    the ordinary binomial coefficient.
    """
    if m < 0 or n < 0 or m > n:
        raise ValueError(f"gauss_binom requires 0 <= m <= n, got n={n}, m={m}")
    num = LaurentPoly.one()
    den = LaurentPoly.one()
    for j in range(1, m + 1):
        num = num * LaurentPoly({n - j + 1: 1, -(n - j + 1): -1})
        den = den * LaurentPoly({j: 1, -j: -1})
    return num.exact_div(den)


def twice_trace(f: LaurentPoly, p: int) -> Scalar:
    """Twice the field trace of f(q) from the real subfield of Q(q) down to Q,
    for q a primitive 2p-th root of unity, computed combinatorially:

        p * sum_j (-1)^j b_{pj}  -  f(-1),

    where b_j are the coefficients of f.  Requires f symmetric, so that f(q)
    is real.
    """
    check_odd_prime(p)
    if not f.is_symmetric():
        raise ValueError("twice_trace requires a symmetric Laurent polynomial")
    alt: Scalar = 0
    jmax = max(abs(f.valuation()), abs(f.degree())) // p
    for j in range(-jmax, jmax + 1):
        c = f.coeff(p * j)
        if c:
            alt += -c if j % 2 else c
    return _norm_scalar(p * alt - f.evaluate(-1))


# ---------------------------------------------------------------------------
# Canonical elements of Z[q], q = primitive 2p-th root of unity.
# ---------------------------------------------------------------------------


def _canonical_coords(p: int, terms: dict[int, int]) -> tuple[int, ...]:
    """Reduce an integer combination of powers of q to coordinates over the
    basis 1, q, ..., q^{p-2}, using q^{2p} = 1, q^p = -1 and the minimal
    polynomial q^{p-1} - q^{p-2} + ... - q + 1 = 0."""
    acc = [0] * (p - 1)
    for e, c in terms.items():
        if c == 0:
            continue
        e %= 2 * p
        if e >= p:
            e -= p
            c = -c
        if e <= p - 2:
            acc[e] += c
        else:
            # q^{p-1} = q^{p-2} - q^{p-3} + ... + q - 1
            for i in range(p - 1):
                acc[i] += c if i % 2 else -c
    return tuple(acc)


@dataclass(frozen=True)
class Cyclotomic:
    """Canonical element of Z[q] with q a primitive 2p-th root of unity.

    Coordinates are over the basis 1, q, ..., q^{p-2}; two elements are equal
    iff their coordinate tuples are equal.  For p = 2 the ring degenerates to
    Z (a single coordinate) since the real subfield is Q.
    """

    p: int
    coords: tuple[int, ...]

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if len(self.coords) != self.p - 1:
            raise ValueError(f"expected {self.p - 1} coordinates, got {len(self.coords)}")
        if not all(isinstance(c, int) for c in self.coords):
            raise TypeError("coordinates must be integers")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, p: int) -> "Cyclotomic":
        return cls(p, (0,) * (p - 1))

    @classmethod
    def one(cls, p: int) -> "Cyclotomic":
        return cls.from_int(p, 1)

    @classmethod
    def from_int(cls, p: int, n: int) -> "Cyclotomic":
        return cls(p, (n,) + (0,) * (p - 2))

    @classmethod
    def root_power(cls, p: int, e: int) -> "Cyclotomic":
        """The canonical form of q^e."""
        check_odd_prime(p)
        return cls(p, _canonical_coords(p, {e: 1}))

    # -- arithmetic --------------------------------------------------------

    def _check_same(self, other: "Cyclotomic") -> None:
        if self.p != other.p:
            raise ValueError(f"mixed cyclotomic orders: p={self.p} vs p={other.p}")

    def __add__(self, other: "Cyclotomic | int") -> "Cyclotomic":
        if isinstance(other, int):
            other = Cyclotomic.from_int(self.p, other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        self._check_same(other)
        return Cyclotomic(self.p, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self) -> "Cyclotomic":
        return Cyclotomic(self.p, tuple(-a for a in self.coords))

    def __sub__(self, other: "Cyclotomic | int") -> "Cyclotomic":
        if isinstance(other, int):
            other = Cyclotomic.from_int(self.p, other)
        return self + (-other)

    def __rsub__(self, other: int) -> "Cyclotomic":
        return Cyclotomic.from_int(self.p, other) - self

    def __mul__(self, other: "Cyclotomic | int") -> "Cyclotomic":
        if isinstance(other, int):
            return Cyclotomic(self.p, tuple(a * other for a in self.coords))
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        self._check_same(other)
        if self.p == 2:
            return Cyclotomic(2, (self.coords[0] * other.coords[0],))
        prod: dict[int, int] = {}
        for i, a in enumerate(self.coords):
            if a == 0:
                continue
            for j, b in enumerate(other.coords):
                if b:
                    prod[i + j] = prod.get(i + j, 0) + a * b
        return Cyclotomic(self.p, _canonical_coords(self.p, prod))

    __rmul__ = __mul__

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coords)

    @property
    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def as_int(self) -> int:
        if not self.is_rational:
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def conjugate(self) -> "Cyclotomic":
        """The image under q -> 1/q (complex conjugation); identity for p = 2."""
        if self.p == 2:
            return self
        return galois(self, 2 * self.p - 1)

    @property
    def is_real(self) -> bool:
        return self.conjugate() == self

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for e in range(self.p - 2, -1, -1):
            c = self.coords[e]
            if c == 0:
                continue
            mag = str(abs(c)) if (abs(c) != 1 or e == 0) else ""
            if e == 0:
                term = mag or "1"
            elif e == 1:
                term = f"{mag}q"
            else:
                term = f"{mag}q^{e}"
            parts.append(("-" if c < 0 else "+", term))
        text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, term in parts[1:]:
            text += sign + term
        return text


def to_cyclotomic(f: LaurentPoly, p: int) -> Cyclotomic:
    """Evaluate an integral Laurent polynomial at q and reduce to canonical form."""
    check_odd_prime(p)
    if not f.is_integral():
        raise ValueError("to_cyclotomic requires integer coefficients")
    return Cyclotomic(p, _canonical_coords(p, dict(f.items())))


def galois(x: Cyclotomic, k: int) -> Cyclotomic:
    """The ring automorphism q -> q^k of Z[q], for k coprime to 2p."""
    p = x.p
    check_odd_prime(p)
    if gcd(k, 2 * p) != 1:
        raise ValueError(f"k = {k} is not coprime to 2p = {2 * p}")
    terms: dict[int, int] = {}
    for i, c in enumerate(x.coords):
        if c:
            e = (i * k) % (2 * p)
            terms[e] = terms.get(e, 0) + c
    return Cyclotomic(p, _canonical_coords(p, terms))
