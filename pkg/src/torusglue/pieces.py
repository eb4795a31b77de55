"""4-manifold pieces with 3-torus boundary, and fibration extension.

Two classes of piece are supported, both fibered: the product of a circle
with a fibered-knot exterior, and a once-punctured-surface bundle over the
2-torus whose monodromy fixes the fiber boundary pointwise.  T^2 x D^2 is
kept as its own kind; it is the knot-exterior product for the unknot, whose
fiber surface is a disk.

Each piece carries a framing of H_1(boundary) = Z^3 in which one basis
vector is the distinguished curve lambda (the boundary of the fiber
surface).  A fibration of the boundary 3-torus extends over the piece
exactly when its covector kills lambda; the extension certificate is a
basis (gamma, lambda, alpha) of Z^3 with gamma, lambda spanning the fiber
torus and alpha the fibration direction.

First homology of a piece and the map induced by including the boundary
are declared data: computing them from a monodromy is out of scope, and
nothing here checks that declared data is realized by an actual manifold.
Monodromies are stored as opaque labels for the same reason.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .lattice import AbelianGroup, IntMatrix, dot, solve, xgcd
from .torus3 import CurveClass, FibrationOfT3, TorusClass, dual_curve


class ExtensionObstructed(ValueError):
    """The fibration does not kill the piece's lambda curve, so it cannot extend."""


class PieceKind(enum.Enum):
    KNOT_EXTERIOR_PRODUCT = "knot_exterior_product"
    SURFACE_BUNDLE_OVER_TORUS = "surface_bundle_over_torus"
    TORUS_TIMES_DISK = "torus_times_disk"


@dataclass(frozen=True)
class Piece:
    """A 4-manifold piece with T^3 boundary.

    framing names the basis (e1, e2, e3) of H_1(boundary); lambda_index
    (1-based) says which basis vector is the fiber-boundary curve lambda.
    h1 and inclusion (the matrix of H_1(T^3) -> H_1(piece) in the declared
    generators, free generators first, then one generator per torsion
    factor) may be omitted for the two fibered kinds; T^2 x D^2 always has
    its canonical values: H_1 = Z^2 and inclusion killing exactly lambda,
    which bounds the disk fiber.
    """

    kind: PieceKind
    genus: int
    monodromy_label: str
    framing: tuple[str, str, str]
    lambda_index: int
    h1: AbelianGroup | None = None
    inclusion: IntMatrix | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "framing", tuple(self.framing))
        if len(self.framing) != 3:
            raise ValueError("framing names three basis vectors")
        if self.lambda_index not in (1, 2, 3):
            raise ValueError(f"lambda_index {self.lambda_index} not in 1..3")
        if self.genus < 0:
            raise ValueError("negative genus")
        if (self.h1 is None) != (self.inclusion is None):
            raise ValueError("declare h1 and inclusion together or not at all")
        if self.inclusion is not None:
            gens = self.h1.free_rank + len(self.h1.torsion)
            if self.inclusion.cols != 3:
                raise ValueError("inclusion must have 3 columns (one per boundary class)")
            if self.inclusion.rows != gens:
                raise ValueError(
                    f"inclusion has {self.inclusion.rows} rows but h1 has {gens} generators"
                )
        if self.kind is PieceKind.TORUS_TIMES_DISK:
            if self.genus != 0:
                raise ValueError("T^2 x D^2 has a genus-0 (disk) fiber")
            if self.h1 != AbelianGroup(2, ()):
                raise ValueError("T^2 x D^2 has H_1 = Z^2")
            lam = self.lambda_index - 1
            if self.inclusion.column(lam) != (0, 0):
                raise ValueError("the lambda curve of T^2 x D^2 bounds, so it must map to 0")
            others = [self.inclusion.column(j) for j in range(3) if j != lam]
            if abs(IntMatrix.from_columns(others).det()) != 1:
                raise ValueError("the non-lambda boundary classes must generate H_1(T^2 x D^2)")


def torus_times_disk(
    framing: tuple[str, str, str] = ("s", "mu", "lambda"),
    lambda_index: int = 3,
) -> Piece:
    """A T^2 x D^2 piece with lambda at the given framing position.

    H_1 = Z^2 is generated by the two non-lambda framing curves, in framing
    order; lambda bounds the disk fiber and maps to 0.
    """
    rows = []
    for gen_pos in range(3):
        if gen_pos == lambda_index - 1:
            continue
        rows.append(tuple(1 if j == gen_pos else 0 for j in range(3)))
    return Piece(
        kind=PieceKind.TORUS_TIMES_DISK,
        genus=0,
        monodromy_label="",
        framing=framing,
        lambda_index=lambda_index,
        h1=AbelianGroup(2, ()),
        inclusion=IntMatrix.from_rows(rows),
    )


def make_torus_times_disk() -> Piece:
    """The canonical T^2 x D^2 piece: framing (s, mu, lambda), lambda last."""
    return torus_times_disk()


def knot_exterior_product(
    genus: int,
    monodromy_label: str = "",
    framing: tuple[str, str, str] = ("mu", "lambda", "s"),
    lambda_index: int = 2,
    h1: AbelianGroup | None = None,
    inclusion: IntMatrix | None = None,
) -> Piece:
    """S^1 times the exterior of a fibered knot, with declared homology data.

    The defaults (no declared data) are fine for fibration finding; homology
    verification needs h1 and inclusion.
    """
    return Piece(
        kind=PieceKind.KNOT_EXTERIOR_PRODUCT,
        genus=genus,
        monodromy_label=monodromy_label,
        framing=framing,
        lambda_index=lambda_index,
        h1=h1,
        inclusion=inclusion,
    )


def surface_bundle_over_torus(
    genus: int,
    monodromy_label: str = "",
    framing: tuple[str, str, str] = ("lambda", "t1", "t2"),
    lambda_index: int = 1,
    h1: AbelianGroup | None = None,
    inclusion: IntMatrix | None = None,
) -> Piece:
    """A genus-g once-punctured-surface bundle over T^2, boundary fixed pointwise."""
    return Piece(
        kind=PieceKind.SURFACE_BUNDLE_OVER_TORUS,
        genus=genus,
        monodromy_label=monodromy_label,
        framing=framing,
        lambda_index=lambda_index,
        h1=h1,
        inclusion=inclusion,
    )


def sample_piece(kind: PieceKind) -> Piece:
    """The simplest representative of each kind, with declared homology.

    - T^2 x D^2: the canonical framing.
    - Knot exterior product: S^1 times the exterior of a genus-1 fibered
      knot in S^3 (any knot in S^3 gives H_1 = Z^2 generated by the product
      circle and the meridian, with the Seifert-framed longitude bounding).
    - Surface bundle: the trivial genus-1 bundle over T^2, H_1 = Z^4 with
      the fiber boundary null-homologous and the base circles surviving.
    """
    if kind is PieceKind.TORUS_TIMES_DISK:
        return make_torus_times_disk()
    if kind is PieceKind.KNOT_EXTERIOR_PRODUCT:
        return knot_exterior_product(
            genus=1,
            monodromy_label="genus-1 fibered knot in S^3",
            h1=AbelianGroup(2, ()),
            inclusion=IntMatrix.from_rows([(1, 0, 0), (0, 0, 1)]),
        )
    if kind is PieceKind.SURFACE_BUNDLE_OVER_TORUS:
        return surface_bundle_over_torus(
            genus=1,
            monodromy_label="trivial bundle",
            h1=AbelianGroup(4, ()),
            inclusion=IntMatrix.from_rows(
                [(0, 0, 0), (0, 0, 0), (0, 1, 0), (0, 0, 1)]
            ),
        )
    raise ValueError(f"unknown kind {kind}")


def boundary_lambda(p: Piece) -> CurveClass:
    """The distinguished fiber-boundary curve: a standard basis vector."""
    return CurveClass(tuple(1 if j == p.lambda_index - 1 else 0 for j in range(3)))


def euler_characteristic(p: Piece) -> int:
    """0 for every piece kind: each fibers with a circle or torus factor in play.

    chi is multiplicative over fiber bundles and chi(S^1) = chi(T^2) = 0.
    """
    return 0


def can_extend(p: Piece, fib: FibrationOfT3) -> bool:
    """Whether the boundary fibration extends over the piece: phi(lambda) = 0."""
    return dot(fib.phi, boundary_lambda(p).v) == 0


@dataclass(frozen=True)
class ExtensionCertificate:
    """Basis (gamma, lambda, alpha) of Z^3 witnessing a fibration extension.

    gamma and lambda span the fiber torus (the kernel of the extended
    covector) and alpha is the fibration direction, paired to 1 with the
    normalized covector.
    """

    gamma: CurveClass
    lam: CurveClass
    alpha: CurveClass

    def __post_init__(self) -> None:
        if abs(IntMatrix.from_columns([self.gamma.v, self.lam.v, self.alpha.v]).det()) != 1:
            raise ValueError("certificate triple is not a basis of Z^3")

    @property
    def basis(self) -> tuple[CurveClass, CurveClass, CurveClass]:
        return (self.gamma, self.lam, self.alpha)

    @property
    def fibration_direction(self) -> CurveClass:
        return self.alpha


def extension_certificate(p: Piece, fib: FibrationOfT3) -> ExtensionCertificate:
    """Certificate that fib extends over p.

    lambda is the piece's fiber-boundary curve; gamma completes it to a
    basis of the fiber torus (deterministically, by an extended gcd on the
    coordinates of lambda in the kernel basis); alpha is the dual curve of
    the fiber torus.
    """
    lam = boundary_lambda(p)
    if dot(fib.phi, lam.v) != 0:
        raise ExtensionObstructed(
            f"covector {fib.phi} does not kill lambda = {lam.v} of the {p.kind.value} piece"
        )
    b1, b2 = fib.fiber_basis
    coords = solve(IntMatrix.from_columns([b1, b2]), lam.v)
    assert coords is not None  # lambda lies in the (saturated) kernel
    x, y = coords
    g, s, t = xgcd(x, y)
    assert g == 1  # lambda is primitive, and the kernel is saturated
    gamma = tuple(-t * u + s * w for u, w in zip(b1, b2))
    alpha = dual_curve(TorusClass.of(fib.phi))
    cert = ExtensionCertificate(
        gamma=CurveClass.of(gamma), lam=lam, alpha=alpha
    )
    assert dot(fib.phi, cert.gamma.v) == 0
    assert abs(dot(fib.phi, cert.alpha.v)) == 1
    return cert
