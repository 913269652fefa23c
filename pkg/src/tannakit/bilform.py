"""Universal quantum groups of non-degenerate bilinear forms.

A form b on an n-dimensional space induces a monoidal functor from the
cup/cap diagram category to vector spaces; compiling its coend yields the
Hopf algebra H(b) whose relations say that b is a comodule morphism.  The
only invariant needed downstream is the quantum dimension q(b), the scalar
the circle diagram maps to, which classifies the H(b) up to co-Morita
equivalence.

Sign convention: with the snake-normalized coevaluation (coefficient tensor
the inverse matrix), the standard q-form gives q(b) = -(q + 1/q).  The
negated value is reported alongside since some sources use the opposite
sign; classification is insensitive to the global sign.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactlin import MatrixExact, rank, right_inverse
from .moncat import build_category
from .coendc import (
    DualityDatum,
    FiberFunctorData,
    PresentedBialgebra,
    antipode_derive,
    compile_coend,
)


@dataclass
class BilinearForm:
    """b(e_i, e_j) = matrix.entries[i][j]; must be invertible, n >= 2."""

    matrix: MatrixExact

    def __post_init__(self):
        n = self.matrix.rows
        if n < 2 or self.matrix.cols != n:
            raise ValueError("form must be square of size >= 2")
        if rank(self.matrix) != n:
            raise ValueError("bilinear form is degenerate")

    @property
    def n(self):
        return self.matrix.rows

    @property
    def field(self):
        return self.matrix.field

    def inverse(self) -> MatrixExact:
        return right_inverse(self.matrix)

    @classmethod
    def from_rows(cls, field, rows):
        return cls(MatrixExact(field, len(rows), len(rows[0]), rows))


def q_form(field, q):
    """The 2x2 form [[0, 1], [-1/q, 0]] whose quantum group is the quantum
    coordinate ring of SL_2 at parameter q."""
    one = field.one()
    qv = field.of(q)
    return BilinearForm.from_rows(
        field, [[field.zero(), one], [-(one / qv), field.zero()]]
    )


@dataclass
class QDim:
    value: object
    convention: str = "snake-normalized"


def tl_functor(bf: BilinearForm) -> FiberFunctorData:
    """Fiber functor on the cup/cap category: the cap maps to the row vector
    of b, the cup to the column of the inverse matrix (the unique coefficient
    tensor making both snake composites the identity)."""
    n = bf.n
    f = bf.field
    binv = bf.inverse()
    cap = MatrixExact(f, 1, n * n)
    cup = MatrixExact(f, n * n, 1)
    for i in range(n):
        for j in range(n):
            cap.entries[0][i * n + j] = bf.matrix.entries[i][j]
            cup.entries[i * n + j][0] = binv.entries[i][j]
    return FiberFunctorData(
        field=f, obj_dims={"v": n}, mor_matrices={"cap": cap, "cup": cup}
    )


def quantum_dimension(bf: BilinearForm) -> QDim:
    """Image of the circle diagram: sum_{ij} (B^-1)_{ij} B_{ij}."""
    binv = bf.inverse()
    acc = bf.field.zero()
    for i in range(bf.n):
        for j in range(bf.n):
            acc = acc + binv.entries[i][j] * bf.matrix.entries[i][j]
    return QDim(acc)


def hb_presentation(bf: BilinearForm, with_antipode=True,
                    max_passes=10000) -> PresentedBialgebra:
    """Compile H(b) and (optionally) derive and verify its antipode
    S(Z) = B^-1 Z^T B from the self-duality of the fundamental comodule."""
    cat = build_category("TL")
    b = compile_coend(cat, tl_functor(bf))
    if with_antipode:
        antipode_derive(b, [self_duality_datum(bf)], max_passes)
    return b


def self_duality_datum(bf: BilinearForm) -> DualityDatum:
    """The fundamental comodule is its own dual; pairing by the inverse
    matrix and copairing by the matrix keeps the snakes exact and produces
    the antipode B^-1 Z^T B."""
    n = bf.n
    f = bf.field
    binv = bf.inverse()
    ev = MatrixExact(f, 1, n * n)
    coev = MatrixExact(f, n * n, 1)
    for i in range(n):
        for j in range(n):
            ev.entries[0][i * n + j] = binv.entries[i][j]
            coev.entries[i * n + j][0] = bf.matrix.entries[i][j]
    return DualityDatum(obj="v", dual_word=(("v", 1),), ev=ev, coev=coev)


def comorita_components(forms):
    """Partition by exact equality of the quantum dimension.  Returns a list
    of (q-value, [indices into the input list])."""
    buckets = []
    for idx, bf in enumerate(forms):
        q = quantum_dimension(bf).value
        for qv, members in buckets:
            if qv == q:
                members.append(idx)
                break
        else:
            buckets.append((q, [idx]))
    return buckets
