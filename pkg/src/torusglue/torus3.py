"""Curves, essential tori, and fibrations of the 3-torus at the homology level.

Isotopy classes of essential (unoriented) curves in T^3 are primitive
vectors in H_1(T^3) = Z^3 up to sign; essential 2-tori are primitive
covectors up to sign.  We normalize signs so the first nonzero entry is
positive.  Every essential torus class n determines a fibration T^3 -> S^1
whose fibers are the tori in that class: the covector is n and the fiber
lattice is ker n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from .lattice import (
    IntMatrix,
    NonPrimitive,
    NotUnimodular,
    Vec,
    content,
    cross,
    dot,
    is_primitive,
    kernel_basis,
    smith_normal_form,
    unimodular_inverse,
    xgcd,
)


class ParallelCurves(ValueError):
    """Two curve classes that were required to be distinct coincide."""


def _is_sign_normalized(v: Sequence[int]) -> bool:
    for x in v:
        if x != 0:
            return x > 0
    return False


def sign_normalize(v: Sequence[int]) -> Vec:
    """Flip signs so the first nonzero entry is positive."""
    for x in v:
        if x > 0:
            return tuple(v)
        if x < 0:
            return tuple(-y for y in v)
    raise ValueError("zero vector has no sign normalization")


@dataclass(frozen=True)
class CurveClass:
    """Isotopy class of an essential curve: a sign-normalized primitive vector."""

    v: Vec

    def __post_init__(self) -> None:
        object.__setattr__(self, "v", tuple(int(x) for x in self.v))
        if len(self.v) != 3:
            raise ValueError("curve classes live in Z^3")
        if not is_primitive(self.v):
            raise NonPrimitive(f"curve vector {self.v} has content != 1")
        if not _is_sign_normalized(self.v):
            raise ValueError(f"curve vector {self.v} is not sign-normalized")

    @classmethod
    def of(cls, v: Sequence[int]) -> "CurveClass":
        """The class of a primitive vector, normalizing the sign."""
        if not is_primitive(v):
            raise NonPrimitive(f"curve vector {tuple(v)} has content != 1")
        return cls(sign_normalize(v))


@dataclass(frozen=True)
class TorusClass:
    """Isotopy class of an essential 2-torus: a sign-normalized primitive covector."""

    n: Vec

    def __post_init__(self) -> None:
        object.__setattr__(self, "n", tuple(int(x) for x in self.n))
        if len(self.n) != 3:
            raise ValueError("torus classes live in Z^3")
        if not is_primitive(self.n):
            raise NonPrimitive(f"torus covector {self.n} has content != 1")
        if not _is_sign_normalized(self.n):
            raise ValueError(f"torus covector {self.n} is not sign-normalized")

    @classmethod
    def of(cls, n: Sequence[int]) -> "TorusClass":
        if not is_primitive(n):
            raise NonPrimitive(f"torus covector {tuple(n)} has content != 1")
        return cls(sign_normalize(n))


@dataclass(frozen=True)
class FibrationOfT3:
    """A fibration T^3 -> S^1, recorded as a primitive covector phi.

    The fiber is the 2-torus with homology ker(phi); fiber_basis is a basis
    of that kernel lattice (the kernel of an integer covector is saturated,
    so the basis generates every class the fiber contains).
    """

    phi: Vec
    fiber_basis: tuple[Vec, Vec]

    def __post_init__(self) -> None:
        object.__setattr__(self, "phi", tuple(int(x) for x in self.phi))
        object.__setattr__(
            self, "fiber_basis", tuple(tuple(int(x) for x in b) for b in self.fiber_basis)
        )
        if not is_primitive(self.phi):
            raise NonPrimitive(f"fibration covector {self.phi} has content != 1")
        for b in self.fiber_basis:
            if dot(self.phi, b) != 0:
                raise ValueError(f"fiber basis vector {b} is not killed by {self.phi}")
        diag = smith_normal_form(IntMatrix.from_rows(self.fiber_basis)).diagonal
        if diag != (1, 1):
            raise ValueError("fiber_basis does not span the full kernel lattice")

    def annihilates(self, c: CurveClass) -> bool:
        return dot(self.phi, c.v) == 0


def torus_through(a: CurveClass, b: CurveClass) -> TorusClass:
    """The unique essential torus containing two non-parallel curves.

    Its covector is the cross product of the curve vectors divided by the
    content.
    """
    n = cross(a.v, b.v)
    if n == (0, 0, 0):
        raise ParallelCurves(f"{a.v} and {b.v} span no torus")
    c = content(n)
    return TorusClass.of(tuple(x // c for x in n))


def _normalized_primitive_vectors() -> Iterator[Vec]:
    """All sign-normalized primitive vectors in Z^3, in a fixed order.

    Order: shells of increasing max-abs entry; lexicographic (entrywise
    integer comparison) within a shell.  Every deterministic "pick some
    torus/curve" choice below uses this enumeration.
    """
    bound = 1
    while True:
        for x in range(0, bound + 1):
            for y in range(-bound, bound + 1):
                for z in range(-bound, bound + 1):
                    v = (x, y, z)
                    if max(abs(x), abs(y), abs(z)) != bound:
                        continue
                    if not _is_sign_normalized(v) or content(v) != 1:
                        continue
                    yield v
        bound += 1


def canonical_torus_containing(a: CurveClass) -> TorusClass:
    """A deterministic essential torus containing the given curve.

    Among the covectors annihilating the curve, takes the one of minimal
    max-abs entry, ties broken lexicographically.  In particular (0,0,1) is
    contained in the torus (0,1,0), and (1,0,0) in (0,0,1).
    """
    for n in _normalized_primitive_vectors():
        if dot(n, a.v) == 0:
            return TorusClass(n)
    raise AssertionError("unreachable: every curve lies on some essential torus")


def fibration_from_torus(t: TorusClass) -> FibrationOfT3:
    """The fibration of T^3 whose fibers are tori of the given class."""
    b1, b2 = kernel_basis(IntMatrix.from_rows([t.n]))
    return FibrationOfT3(phi=t.n, fiber_basis=(b1, b2))


def contains(t: TorusClass, c: CurveClass) -> bool:
    """Whether the torus contains the curve: the covector kills the class."""
    return dot(t.n, c.v) == 0


def dual_curve(t: TorusClass) -> CurveClass:
    """A deterministic curve class c with n . c = 1.

    One exists because n is primitive.  Built by two extended gcds; if the
    result is not sign-normalized, it is shifted by the unique smallest
    multiple of a fixed kernel vector that makes the first coordinate
    positive (which never changes the pairing).
    """
    n1, n2, n3 = t.n
    g, x, y = xgcd(n1, n2)
    if g == 0:
        d = (0, 0, 1 if n3 > 0 else -1)
    else:
        _, u, w = xgcd(g, n3)
        d = (x * u, y * u, w)
    assert dot(t.n, d) == 1
    if not _is_sign_normalized(d):
        for b in kernel_basis(IntMatrix.from_rows([t.n])):
            if b[0] != 0:
                k = b if b[0] > 0 else tuple(-x for x in b)
                shift = (k[0] - d[0]) // k[0]  # smallest t with d0 + t*k0 >= 1
                d = tuple(di + shift * ki for di, ki in zip(d, k))
                break
        else:
            raise AssertionError("unreachable: kernel meets the first-coordinate axis")
    assert dot(t.n, d) == 1
    return CurveClass(tuple(d))


def act(m: IntMatrix, x: Union[CurveClass, TorusClass]) -> Union[CurveClass, TorusClass]:
    """Mapping-class action of a unimodular matrix on curve and torus classes.

    Curves transform by the matrix itself, torus covectors by the inverse
    transpose, so containment and duality pairings are preserved.
    """
    if m.rows != 3 or m.cols != 3 or not m.is_unimodular():
        raise NotUnimodular("action requires a 3x3 matrix of determinant +-1")
    if isinstance(x, CurveClass):
        return CurveClass.of(m.apply(x.v))
    if isinstance(x, TorusClass):
        return TorusClass.of(unimodular_inverse(m).transpose().apply(x.n))
    raise TypeError(f"cannot act on {type(x).__name__}")
