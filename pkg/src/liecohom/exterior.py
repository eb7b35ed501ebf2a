"""Exterior algebra of a finite-dimensional rational vector space.

Basis monomials of degree r are strictly increasing index tuples
(multi-indices), enumerated in lexicographic order by :func:`basis`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import DegreeOverflow, DimensionMismatch, ValidationError, WrongDegree
from .linalg import Matrix, format_scalar, scalar

MultiIndex = tuple  # tuple[int, ...], strictly increasing


def check_multi_index(idx: Sequence[int], dim: int) -> MultiIndex:
    idx = tuple(idx)
    if any(not 0 <= i < dim for i in idx):
        raise ValidationError(f"multi-index {idx} out of range for dimension {dim}")
    if any(a >= b for a, b in zip(idx, idx[1:])):
        raise ValidationError(f"multi-index {idx} is not strictly increasing")
    return idx


def basis(dim: int, r: int) -> list[MultiIndex]:
    if r < 0 or r > dim:
        return []
    return list(combinations(range(dim), r))


def basis_position(dim: int, r: int) -> dict[MultiIndex, int]:
    return {idx: pos for pos, idx in enumerate(basis(dim, r))}


def sort_sign(seq: Sequence[int]) -> tuple[int, MultiIndex]:
    """Sign of the permutation sorting ``seq`` and the sorted tuple.

    Returns ``(0, ())`` when an index repeats (the monomial vanishes).
    """
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0, ()
    sign = 1
    # insertion sort, counting transpositions
    for i in range(1, len(seq)):
        j = i
        while j > 0 and seq[j - 1] > seq[j]:
            seq[j - 1], seq[j] = seq[j], seq[j - 1]
            sign = -sign
            j -= 1
    return sign, tuple(seq)


@dataclass(frozen=True)
class ExteriorElement:
    """Homogeneous element of degree ``degree`` in the exterior algebra of a
    ``dim``-dimensional space; ``terms`` is sorted with nonzero coefficients."""

    dim: int
    degree: int
    terms: tuple  # tuple[tuple[MultiIndex, Fraction], ...]

    @classmethod
    def from_dict(cls, dim: int, degree: int, coeffs: Mapping) -> "ExteriorElement":
        acc: dict = {}
        for idx, c in coeffs.items():
            c = scalar(c)
            if len(idx) != degree:
                raise WrongDegree(f"monomial {idx} in a degree-{degree} element")
            sign, key = sort_sign(idx)
            if sign == 0 or c == 0:
                continue
            check_multi_index(key, dim)
            acc[key] = acc.get(key, Fraction(0)) + sign * c
        return cls(dim, degree, tuple(sorted((k, v) for k, v in acc.items() if v != 0)))

    @classmethod
    def monomial(cls, dim: int, idx: Sequence[int], coeff=1) -> "ExteriorElement":
        return cls.from_dict(dim, len(idx), {tuple(idx): coeff})

    @classmethod
    def from_vector(cls, v: Sequence) -> "ExteriorElement":
        return cls.from_dict(len(v), 1, {(i,): c for i, c in enumerate(v)})

    @classmethod
    def zero(cls, dim: int, degree: int) -> "ExteriorElement":
        return cls(dim, degree, ())

    def as_dict(self) -> dict:
        return dict(self.terms)

    def coefficient(self, idx: MultiIndex) -> Fraction:
        return self.as_dict().get(tuple(idx), Fraction(0))

    def coordinates(self) -> tuple:
        """Dense coefficient vector in the order of :func:`basis`."""
        d = self.as_dict()
        return tuple(d.get(idx, Fraction(0)) for idx in basis(self.dim, self.degree))

    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "ExteriorElement"):
        if self.dim != other.dim:
            raise DimensionMismatch("elements live in different exterior algebras")

    def __add__(self, other: "ExteriorElement") -> "ExteriorElement":
        self._check(other)
        if self.degree != other.degree:
            raise WrongDegree("cannot add elements of different degrees")
        acc = self.as_dict()
        for k, v in other.terms:
            acc[k] = acc.get(k, Fraction(0)) + v
        return ExteriorElement.from_dict(self.dim, self.degree, acc)

    def __neg__(self) -> "ExteriorElement":
        return ExteriorElement(self.dim, self.degree, tuple((k, -v) for k, v in self.terms))

    def __sub__(self, other: "ExteriorElement") -> "ExteriorElement":
        return self + (-other)

    def __rmul__(self, c) -> "ExteriorElement":
        c = scalar(c)
        return ExteriorElement.from_dict(self.dim, self.degree, {k: c * v for k, v in self.terms})

    def __xor__(self, other: "ExteriorElement") -> "ExteriorElement":
        return wedge(self, other)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for idx, c in self.terms:
            mono = "e" + "".join(str(i + 1) for i in idx) if idx else "1"
            parts.append(f"{format_scalar(c)}*{mono}")
        return " + ".join(parts)


def wedge(a: ExteriorElement, b: ExteriorElement) -> ExteriorElement:
    a._check(b)
    degree = a.degree + b.degree
    if degree > a.dim:
        raise DegreeOverflow(f"degree {degree} exceeds dimension {a.dim}")
    acc: dict = {}
    for ia, ca in a.terms:
        for ib, cb in b.terms:
            sign, key = sort_sign(ia + ib)
            if sign:
                acc[key] = acc.get(key, Fraction(0)) + sign * ca * cb
    return ExteriorElement.from_dict(a.dim, degree, acc)


def eval_top(orientation: MultiIndex, a: ExteriorElement) -> Fraction:
    """Top-degree evaluation normalised by ``orientation -> 1``."""
    orientation = check_multi_index(orientation, a.dim)
    if len(orientation) != a.dim:
        raise WrongDegree("orientation must be the full multi-index")
    if a.degree != a.dim:
        raise WrongDegree(f"eval_top needs a degree-{a.dim} element, got degree {a.degree}")
    return a.coefficient(orientation)


def wedge_vectors(vectors: Iterable[Sequence], dim: int) -> ExteriorElement:
    out = ExteriorElement.monomial(dim, ())
    for v in vectors:
        out = wedge(out, ExteriorElement.from_vector(v))
    return out


def exterior_power_matrix(a: Matrix, r: int) -> Matrix:
    """Induced action of ``a`` on the r-th exterior power (compound matrix)."""
    if not a.is_square():
        raise DimensionMismatch("exterior powers need a square matrix")
    n = a.nrows
    cols = a.columns()
    out = []
    for idx in basis(n, r):
        out.append(wedge_vectors([cols[i] for i in idx], n).coordinates())
    return Matrix.from_columns(out, len(basis(n, r)))


def exterior_derivation_matrix(a: Matrix, r: int) -> Matrix:
    """Induced derivation on the r-th exterior power:
    ``x1^...^xr -> sum_i x1^...^(a xi)^...^xr``."""
    if not a.is_square():
        raise DimensionMismatch("exterior powers need a square matrix")
    n = a.nrows
    pos = basis_position(n, r)
    out = []
    for idx in basis(n, r):
        col = [Fraction(0)] * len(pos)
        for slot, i in enumerate(idx):
            for j in range(n):
                c = a[j, i]
                if not c:
                    continue
                sign, key = sort_sign(idx[:slot] + (j,) + idx[slot + 1:])
                if sign:
                    col[pos[key]] += sign * c
        out.append(col)
    return Matrix.from_columns(out, len(pos))
