"""Subgroups of Z^n as canonical lattices.

A subgroup of Z^n is held as its unique row-HNF basis, so equality of
subgroups is equality of values. Distances between commensurable subgroups are
carried as the exact integer mu' = max(|A : A∩B|, |B : A∩B|); logarithms are
applied only at display time, with a configurable base.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import total_ordering
from typing import Optional, Sequence, Union

from . import exactmat


@total_ordering
@dataclass(frozen=True)
class ExtNat:
    """An element of {1, 2, 3, ...} ∪ {∞}; `value` is None for infinity."""

    value: Optional[int] = None

    def __post_init__(self) -> None:
        if self.value is not None and self.value < 1:
            raise ValueError("finite ExtNat values must be >= 1")

    @classmethod
    def finite(cls, n: int) -> "ExtNat":
        return cls(n)

    @classmethod
    def infinity(cls) -> "ExtNat":
        return cls(None)

    @property
    def is_finite(self) -> bool:
        return self.value is not None

    def _key(self) -> tuple[int, int]:
        return (0, self.value) if self.value is not None else (1, 0)

    def __lt__(self, other: "ExtNat") -> bool:
        return self._key() < other._key()

    def __mul__(self, other: "ExtNat") -> "ExtNat":
        if self.value is None or other.value is None:
            return ExtNat(None)
        return ExtNat(self.value * other.value)

    def log(self, base: float = math.e) -> float:
        if base <= 1:
            raise ValueError("logarithm base must be > 1")
        if self.value is None:
            return math.inf
        return math.log(self.value) / math.log(base)

    def to_json(self) -> Union[int, str]:
        return self.value if self.value is not None else "inf"

    @classmethod
    def from_json(cls, data: Union[int, str]) -> "ExtNat":
        if data == "inf":
            return cls(None)
        return cls(int(data))


INFINITE = ExtNat.infinity()
ONE = ExtNat.finite(1)


@dataclass(frozen=True)
class Lattice:
    """A subgroup of Z^ambient with `basis` in canonical row HNF.

    Rank 0 (empty basis) is the trivial subgroup {0}, a first-class value.
    Construct through lattice_from_generators unless the rows are already
    known to be canonical.
    """

    ambient: int
    basis: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def to_json(self) -> dict:
        return {"ambient": self.ambient, "basis": [list(r) for r in self.basis]}

    @classmethod
    def from_json(cls, data: dict) -> "Lattice":
        return lattice_from_generators(data["ambient"], data["basis"])


def lattice_from_generators(ambient: int, gens: Sequence[Sequence[int]]) -> Lattice:
    """Canonical lattice whose point set is the integer row span of gens."""
    if ambient < 0:
        raise ValueError("ambient dimension must be >= 0")
    rows = [list(r) for r in gens]
    for r in rows:
        if len(r) != ambient:
            raise ValueError("generator length does not match ambient dimension")
    h = exactmat.row_hnf(rows)
    return Lattice(ambient, tuple(tuple(r) for r in h))


def full_lattice(ambient: int) -> Lattice:
    """Z^ambient itself."""
    eye = [[int(i == j) for j in range(ambient)] for i in range(ambient)]
    return Lattice(ambient, tuple(tuple(r) for r in eye))


def trivial_lattice(ambient: int) -> Lattice:
    return Lattice(ambient, ())


def member(x: Sequence[int], lat: Lattice) -> bool:
    """Is x an integer combination of the basis rows?"""
    if len(x) != lat.ambient:
        raise ValueError("vector length does not match ambient dimension")
    if lat.rank == 0:
        return not any(x)
    return exactmat.solve_integer(lat.basis, x) is not None


def lattice_sum(a: Lattice, b: Lattice) -> Lattice:
    _check_same_ambient(a, b)
    return lattice_from_generators(a.ambient, list(a.basis) + list(b.basis))


def lattice_intersection(a: Lattice, b: Lattice) -> Lattice:
    """A ∩ B via the integer left kernel of the stacked bases.

    Every x in A ∩ B is cA·basis(A) = cB·basis(B), i.e. (cA, -cB) lies in the
    left kernel of the stacked matrix; projecting kernel basis vectors through
    basis(A) therefore spans the intersection exactly.
    """
    _check_same_ambient(a, b)
    if a.rank == 0 or b.rank == 0:
        return trivial_lattice(a.ambient)
    stacked = [list(r) for r in a.basis] + [list(r) for r in b.basis]
    kernel = exactmat.left_kernel(stacked)
    ra = a.rank
    points = []
    for u in kernel:
        x = [0] * a.ambient
        for c, row in zip(u[:ra], a.basis):
            if c:
                for j in range(a.ambient):
                    x[j] += c * row[j]
        points.append(x)
    return lattice_from_generators(a.ambient, points)


def index_in(a: Lattice, b: Lattice) -> ExtNat:
    """The index |B : A| for A a subgroup of B.

    Finite iff the ranks agree, in which case it equals |det| of A's basis
    written in B's coordinates. Raises if A is not contained in B.
    """
    _check_same_ambient(a, b)
    coords = []
    for row in a.basis:
        c = exactmat.solve_integer(b.basis, row) if b.rank else (None if any(row) else [])
        if c is None:
            raise ValueError("not a subgroup")
        coords.append(c)
    if a.rank < b.rank:
        return INFINITE
    return ExtNat.finite(exactmat.abs_det(coords))


def saturation(h: Lattice) -> Lattice:
    """The pure closure sat(H) = {x in Z^n : m*x in H for some m != 0}.

    Computed as the integer vectors orthogonal to everything orthogonal to H;
    integer kernels are automatically pure, so no division step is needed.
    """
    if h.rank == 0:
        return h
    n = h.ambient
    if h.rank == n:
        return full_lattice(n)
    transpose = [[row[j] for row in h.basis] for j in range(n)]
    orth = exactmat.left_kernel(transpose)  # vectors y with basis · y = 0
    back = [[row[j] for row in orth] for j in range(n)]
    sat_rows = exactmat.left_kernel(back)
    return Lattice(n, tuple(tuple(r) for r in sat_rows))


def commensurable(a: Lattice, b: Lattice) -> bool:
    """Both indices |A : A∩B| and |B : A∩B| finite."""
    _check_same_ambient(a, b)
    cap = lattice_intersection(a, b)
    return cap.rank == a.rank == b.rank


def log_subgroup_distance(a: Lattice, b: Lattice) -> ExtNat:
    """mu' = max(|A : A∩B|, |B : A∩B|); infinity iff not commensurable.

    The displayed distance is log(mu') in any base > 1; bases differ only by
    a bounded rescaling, so the exact integer is the authoritative value.
    """
    _check_same_ambient(a, b)
    cap = lattice_intersection(a, b)
    ia = index_in(cap, a)
    ib = index_in(cap, b)
    return max(ia, ib)


def _check_same_ambient(a: Lattice, b: Lattice) -> None:
    if a.ambient != b.ambient:
        raise ValueError("ambient dimensions differ")
