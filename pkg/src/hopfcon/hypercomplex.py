"""Quaternion and octonion arithmetic over real coefficient vectors.

Both algebras are represented by fixed-width tuples of double-precision
reals against the basis e0 = 1, e1, ..., with multiplication driven by a
signed structure table generated once from the totally antisymmetric
structure constants (f_ijk = +1 on the index triples listed in
FANO_TRIPLES, plus the quaternionic triple (1, 2, 3)).  Generating the
tables instead of hard-coding them makes transcription errors detectable:
the test suite asserts every basis-product cell independently.

Conventions used throughout the package:

* a complex number z is embedded as z = x + y*e1;
* a quaternion splits as q = z1 + z2*e2 with complex z1, z2;
* an octonion splits as o = z0 + z1*e2 + (z2 + z3*e2)*e4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Index triples (i, j, k) with e_i * e_j = e_k; totally antisymmetric.
FANO_TRIPLES = ((1, 2, 3), (1, 4, 5), (2, 4, 6), (3, 4, 7),
                (6, 1, 7), (7, 2, 5), (5, 3, 6))


def _structure_table(dim: int, triples) -> np.ndarray:
    """Signed table t with e_i * e_j = sum_k t[i, j, k] * e_k."""
    table = np.zeros((dim, dim, dim), dtype=np.int8)
    table[0, 0, 0] = 1
    for i in range(1, dim):
        table[0, i, i] = 1
        table[i, 0, i] = 1
        table[i, i, 0] = -1
    for i, j, k in triples:
        for (a, b, c), sign in (((i, j, k), 1), ((j, k, i), 1), ((k, i, j), 1),
                                ((j, i, k), -1), ((i, k, j), -1), ((k, j, i), -1)):
            table[a, b, c] = sign
    return table


QUATERNION_TABLE = _structure_table(4, ((1, 2, 3),))
OCTONION_TABLE = _structure_table(8, FANO_TRIPLES)


def _mul_terms(table: np.ndarray):
    """Flatten a structure table into (i, j, k, sign) product terms."""
    terms = []
    dim = table.shape[0]
    for i in range(dim):
        for j in range(dim):
            for k in range(dim):
                sign = int(table[i, j, k])
                if sign:
                    terms.append((i, j, k, float(sign)))
    return tuple(terms)


_QUAT_TERMS = _mul_terms(QUATERNION_TABLE)
_OCT_TERMS = _mul_terms(OCTONION_TABLE)


def _multiply(a, b, terms, dim):
    out = [0.0] * dim
    for i, j, k, sign in terms:
        out[k] += sign * a[i] * b[j]
    return out


@dataclass(frozen=True)
class Quaternion:
    """Rank-4 hypercomplex number x0 + x1*e1 + x2*e2 + x3*e3."""

    x0: float = 0.0
    x1: float = 0.0
    x2: float = 0.0
    x3: float = 0.0

    @classmethod
    def from_complex_pair(cls, z1: complex, z2: complex = 0j) -> "Quaternion":
        """Build z1 + z2*e2 from two complex numbers (e1 plays the role of i)."""
        z1, z2 = complex(z1), complex(z2)
        return cls(z1.real, z1.imag, z2.real, z2.imag)

    def complex_pair(self) -> tuple[complex, complex]:
        """Inverse of from_complex_pair; round-trips exactly."""
        return complex(self.x0, self.x1), complex(self.x2, self.x3)

    def coefficients(self) -> tuple[float, float, float, float]:
        return (self.x0, self.x1, self.x2, self.x3)

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.x0, -self.x1, -self.x2, -self.x3)

    def star(self) -> "Quaternion":
        """The involution z1 + z2*e2 -> z1 - z2*e2 (fixes the complex part)."""
        return Quaternion(self.x0, self.x1, -self.x2, -self.x3)

    def norm_squared(self) -> float:
        return self.x0 * self.x0 + self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3

    def norm(self) -> float:
        return math.sqrt(self.norm_squared())

    def inverse(self) -> "Quaternion":
        n2 = self.norm_squared()
        if n2 == 0.0:
            raise ZeroDivisionError("zero quaternion has no inverse")
        return Quaternion(self.x0 / n2, -self.x1 / n2, -self.x2 / n2, -self.x3 / n2)

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.x0 + other.x0, self.x1 + other.x1,
                          self.x2 + other.x2, self.x3 + other.x3)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.x0 - other.x0, self.x1 - other.x1,
                          self.x2 - other.x2, self.x3 - other.x3)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.x0, -self.x1, -self.x2, -self.x3)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return quat_mul(self, other)
        if isinstance(other, (int, float)):
            f = float(other)
            return Quaternion(self.x0 * f, self.x1 * f, self.x2 * f, self.x3 * f)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return self.__mul__(other)
        return NotImplemented


@dataclass(frozen=True)
class Octonion:
    """Rank-8 hypercomplex number sum_i x_i * e_i (non-associative)."""

    x0: float = 0.0
    x1: float = 0.0
    x2: float = 0.0
    x3: float = 0.0
    x4: float = 0.0
    x5: float = 0.0
    x6: float = 0.0
    x7: float = 0.0

    @classmethod
    def from_complex_quadruple(cls, z0: complex, z1: complex = 0j,
                               z2: complex = 0j, z3: complex = 0j) -> "Octonion":
        """Build z0 + z1*e2 + (z2 + z3*e2)*e4 from four complex numbers."""
        z0, z1, z2, z3 = complex(z0), complex(z1), complex(z2), complex(z3)
        return cls(z0.real, z0.imag, z1.real, z1.imag,
                   z2.real, z2.imag, z3.real, z3.imag)

    @classmethod
    def from_quaternion(cls, q: Quaternion) -> "Octonion":
        return cls(q.x0, q.x1, q.x2, q.x3)

    def complex_quadruple(self) -> tuple[complex, complex, complex, complex]:
        """Inverse of from_complex_quadruple; round-trips exactly."""
        return (complex(self.x0, self.x1), complex(self.x2, self.x3),
                complex(self.x4, self.x5), complex(self.x6, self.x7))

    def coefficients(self) -> tuple[float, ...]:
        return (self.x0, self.x1, self.x2, self.x3,
                self.x4, self.x5, self.x6, self.x7)

    def conjugate(self) -> "Octonion":
        return Octonion(self.x0, -self.x1, -self.x2, -self.x3,
                        -self.x4, -self.x5, -self.x6, -self.x7)

    def norm_squared(self) -> float:
        return sum(x * x for x in self.coefficients())

    def norm(self) -> float:
        return math.sqrt(self.norm_squared())

    def inverse(self) -> "Octonion":
        return oct_inverse(self)

    def __add__(self, other: "Octonion") -> "Octonion":
        return Octonion(*(a + b for a, b in zip(self.coefficients(), other.coefficients())))

    def __sub__(self, other: "Octonion") -> "Octonion":
        return Octonion(*(a - b for a, b in zip(self.coefficients(), other.coefficients())))

    def __neg__(self) -> "Octonion":
        return Octonion(*(-a for a in self.coefficients()))

    def __mul__(self, other):
        if isinstance(other, Octonion):
            return oct_mul(self, other)
        if isinstance(other, (int, float)):
            f = float(other)
            return Octonion(*(a * f for a in self.coefficients()))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return self.__mul__(other)
        return NotImplemented


def quat_mul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Quaternion product (associative, noncommutative)."""
    return Quaternion(*_multiply(a.coefficients(), b.coefficients(), _QUAT_TERMS, 4))


def quat_conj(q: Quaternion) -> Quaternion:
    """Quaternion conjugation: keeps x0, negates x1..x3."""
    return q.conjugate()


def quat_star(q: Quaternion) -> Quaternion:
    """Negate only the e2-component of the complex split: z1 + z2*e2 -> z1 - z2*e2."""
    return q.star()


def oct_mul(a: Octonion, b: Octonion) -> Octonion:
    """Octonion product (norm-composing, not associative)."""
    return Octonion(*_multiply(a.coefficients(), b.coefficients(), _OCT_TERMS, 8))


def oct_conj(o: Octonion) -> Octonion:
    """Octonion conjugation: keeps x0, negates x1..x7."""
    return o.conjugate()


def oct_inverse(o: Octonion) -> Octonion:
    """Unique inverse conj(o) / |o|^2 of a nonzero octonion."""
    n2 = o.norm_squared()
    if n2 == 0.0:
        raise ZeroDivisionError("zero octonion has no inverse")
    return Octonion(*(x / n2 for x in o.conjugate().coefficients()))


QUAT_UNITS = tuple(Quaternion(*row) for row in np.eye(4))
OCT_UNITS = tuple(Octonion(*row) for row in np.eye(8))
