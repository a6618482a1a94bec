"""Type-A input to the decomposition routine: alcove weights for SL_m, the
q-deformed Weyl dimension, the super sign, and the resulting expansion of a
Weyl-alcove simple into Verlinde simples.

Root data are hard-coded for type A (positive roots e_i - e_j, i < j); no
general Lie-theory layer is intended.
"""
from __future__ import annotations

from dataclasses import dataclass

from .laurent import LaurentPoly, check_odd_prime, quantum_int
from .powers import decompose_from_dims
from .ring import VerObj


@dataclass(frozen=True)
class Weight:
    """Dominant integral weight for SL_m: weakly decreasing nonnegative parts
    lambda_1 >= ... >= lambda_{m-1}, with lambda_m = 0 implicit."""

    m: int
    parts: tuple[int, ...]

    def __post_init__(self):
        if self.m < 2:
            raise ValueError(f"rank parameter m = {self.m} must be at least 2")
        if len(self.parts) != self.m - 1:
            raise ValueError(f"expected {self.m - 1} parts for SL_{self.m}, got {len(self.parts)}")
        if not all(isinstance(a, int) and a >= 0 for a in self.parts):
            raise ValueError("parts must be nonnegative integers")
        if any(self.parts[k] < self.parts[k + 1] for k in range(len(self.parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing, got {self.parts}")

    @classmethod
    def of(cls, m: int, parts) -> "Weight":
        """Build a weight, accepting up to m entries with trailing zeros."""
        parts = tuple(int(a) for a in parts)
        if len(parts) > m:
            raise ValueError(f"too many parts for SL_{m}: {parts}")
        if len(parts) == m and parts[-1] != 0:
            raise ValueError(f"an SL_{m} weight must end in 0 when all {m} parts are given")
        parts = parts[: m - 1] + (0,) * (m - 1 - len(parts))
        return cls(m, parts)

    @classmethod
    def fundamental(cls, m: int, i: int = 1) -> "Weight":
        """The i-th fundamental weight (1 repeated i times)."""
        if not 1 <= i <= m - 1:
            raise ValueError(f"fundamental weight index {i} out of range 1..{m - 1}")
        return cls(m, (1,) * i + (0,) * (m - 1 - i))

    def full_parts(self) -> tuple[int, ...]:
        return self.parts + (0,)

    def __str__(self) -> str:
        return ",".join(str(a) for a in self.full_parts())


def alcove_check(w: Weight, p: int) -> bool:
    """True iff the weight lies in the fundamental alcove for p, which in
    type A reduces to lambda_1 + m - 1 < p."""
    top = w.parts[0] if w.parts else 0
    return top + w.m - 1 < p


def qweyl_dim(w: Weight) -> LaurentPoly:
    """q-deformed Weyl dimension as a symmetric Laurent polynomial: the exact
    quotient of prod_{i<j} [l_i - l_j + j - i]_z by prod_{i<j} [j - i]_z,
    with l the parts padded by l_m = 0.  Its value at z = 1 is the classical
    Weyl dimension."""
    parts = w.full_parts()
    num = LaurentPoly.one()
    den = LaurentPoly.one()
    for i in range(w.m):
        for j in range(i + 1, w.m):
            num = num * quantum_int(parts[i] - parts[j] + j - i)
            den = den * quantum_int(j - i)
    return num.exact_div(den)


def super_sign(w: Weight) -> int:
    """Parity sign of the weight: -1 to the sum of lambda paired with every
    positive coroot, which is sum_{i<j} (l_i - l_j) in type A."""
    parts = w.full_parts()
    total = sum(parts[i] - parts[j] for i in range(w.m) for j in range(i + 1, w.m))
    return -1 if total % 2 else 1


def decompose_weyl(w: Weight, p: int) -> VerObj:
    """Expand the alcove simple of highest weight w into Verlinde simples.

    Its Frobenius-Perron dimension is the q-Weyl dimension and its super
    dimension the same up to super_sign, so the trace projection applies."""
    check_odd_prime(p)
    if not alcove_check(w, p):
        raise ValueError(f"weight {w} is outside the fundamental alcove for p = {p}")
    g = qweyl_dim(w)
    signed = g if super_sign(w) == 1 else -g
    return decompose_from_dims(g, signed, p, expect_effective=True)
