"""The coend compiler.

Given a presented monoidal category and matrices realising its generators on
concrete vector spaces, emit the presented bialgebra of universal matrix
coefficients: one z-generator per matrix entry of each object generator, one
relation per entry of the compatibility equation P^T Z_target = Z_source P^T
for each morphism generator, plus inversion relations for group-like
invertible objects.  Comultiplication and counit follow the matrix pattern.

The module also houses the direct quadratic-algebra builder (transposed
relation spaces in the z-basis), generator elimination, and antipode
derivation from duality data.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dfield

from .exactlin import MatrixExact, Subspace, kron_many, right_inverse
from .moncat import PresentedMonoidalCategory
from .ncpoly import (
    NCPoly,
    PresentedAlgebra,
    orient,
    poly_to_signed_terms,
    rewrite_reduce,
)
from .quadalg import QuadraticAlgebra, koszul_dual


# ---------------------------------------------------------------------------
# Matrices with polynomial entries

class SymMatrix:
    """Dense matrix of NCPoly entries; scalar matrices multiply from either
    side without leaving the exact field."""

    def __init__(self, field, rows, cols, entries=None):
        self.field = field
        self.rows = rows
        self.cols = cols
        if entries is None:
            z = NCPoly.zero(field)
            self.entries = [[z] * cols for _ in range(rows)]
        else:
            self.entries = entries

    @classmethod
    def identity(cls, field, n):
        m = cls(field, n, n)
        for i in range(n):
            m.entries[i][i] = NCPoly.one(field)
        return m

    def transpose(self):
        out = SymMatrix(self.field, self.cols, self.rows)
        for i in range(self.rows):
            for j in range(self.cols):
                out.entries[j][i] = self.entries[i][j]
        return out

    def __sub__(self, other):
        out = SymMatrix(self.field, self.rows, self.cols)
        for i in range(self.rows):
            for j in range(self.cols):
                out.entries[i][j] = self.entries[i][j] - other.entries[i][j]
        return out

    def __mul__(self, other):
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        out = SymMatrix(self.field, self.rows, other.cols)
        for i in range(self.rows):
            for j in range(other.cols):
                acc = NCPoly.zero(self.field)
                for k in range(self.cols):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if a.is_zero() or b.is_zero():
                        continue
                    acc = acc + a * b
                out.entries[i][j] = acc
        return out

    def scalar_left(self, scalar: MatrixExact):
        """scalar . self, entries of `scalar` acting as coefficients."""
        out = SymMatrix(self.field, scalar.rows, self.cols)
        for i in range(scalar.rows):
            for j in range(self.cols):
                acc = NCPoly.zero(self.field)
                for k in range(self.rows):
                    c = scalar.entries[i][k]
                    if c:
                        acc = acc + self.entries[k][j].scale(c)
                out.entries[i][j] = acc
        return out

    def scalar_right(self, scalar: MatrixExact):
        out = SymMatrix(self.field, self.rows, scalar.cols)
        for i in range(self.rows):
            for j in range(scalar.cols):
                acc = NCPoly.zero(self.field)
                for k in range(self.cols):
                    c = scalar.entries[k][j]
                    if c:
                        acc = acc + self.entries[i][k].scale(c)
                out.entries[i][j] = acc
        return out

    def kron(self, other):
        out = SymMatrix(
            self.field, self.rows * other.rows, self.cols * other.cols
        )
        for i in range(self.rows):
            for j in range(self.cols):
                a = self.entries[i][j]
                if a.is_zero():
                    continue
                for k in range(other.rows):
                    for l in range(other.cols):
                        b = other.entries[k][l]
                        if not b.is_zero():
                            out.entries[i * other.rows + k][
                                j * other.cols + l
                            ] = a * b
        return out


# ---------------------------------------------------------------------------
# Fiber functor data and the presented bialgebra

@dataclass
class FiberFunctorData:
    field: object
    obj_dims: dict              # object generator name -> dimension
    mor_matrices: dict          # morphism generator name -> MatrixExact

    def word_dim(self, word):
        out = 1
        for name, exp in word:
            out *= 1 if exp == -1 else self.obj_dims[name]
        return out

    def validate(self, cat: PresentedMonoidalCategory):
        cat.check_words()
        for g in cat.objects:
            if g.invertible and self.obj_dims[g.name] != 1:
                raise ValueError(
                    "invertible generator %r must have a 1-dimensional image "
                    "(group-like inversion only)" % g.name
                )
        for m in cat.morphisms:
            mat = self.mor_matrices[m.name]
            if mat.rows != self.word_dim(m.target) or mat.cols != self.word_dim(
                m.source
            ):
                raise ValueError(
                    "matrix for %r has shape %dx%d, expected %dx%d"
                    % (
                        m.name,
                        mat.rows,
                        mat.cols,
                        self.word_dim(m.target),
                        self.word_dim(m.source),
                    )
                )


@dataclass
class PresentedBialgebra:
    field: object
    gen_names: list
    gen_weights: list
    relations: list                        # of NCPoly
    comultiplication: dict                 # gen index -> [(g1, g2), ...]
    counit: dict                           # gen index -> scalar
    obj_blocks: dict                       # object name -> matrix of gen indices
    inverse_idx: dict = dfield(default_factory=dict)  # object name -> index
    antipode: dict = dfield(default_factory=dict)     # gen index -> NCPoly

    @property
    def ngens(self):
        return len(self.gen_names)

    def z_matrix(self, word) -> SymMatrix:
        """The Kronecker coaction matrix of an object word."""
        mats = []
        for name, exp in word:
            if exp == -1:
                m = SymMatrix(self.field, 1, 1)
                m.entries[0][0] = NCPoly.monomial(
                    self.field, (self.inverse_idx[name],)
                )
            else:
                block = self.obj_blocks[name]
                n = len(block)
                m = SymMatrix(self.field, n, n)
                for i in range(n):
                    for j in range(n):
                        m.entries[i][j] = NCPoly.monomial(
                            self.field, (block[i][j],)
                        )
            mats.append(m)
        if not mats:
            return SymMatrix.identity(self.field, 1)
        out = mats[0]
        for m in mats[1:]:
            out = out.kron(m)
        return out

    def counit_of(self, p: NCPoly):
        acc = self.field.zero()
        for mon, c in p.terms.items():
            v = c
            for g in mon:
                v = v * self.field.of(self.counit[g])
            acc = acc + v
        return acc

    def weight_of(self, mon):
        return sum(self.gen_weights[g] for g in mon)

    def check_counit_kills_relations(self):
        return all(not self.counit_of(rel) for rel in self.relations)

    def check_relations_homogeneous(self):
        for rel in self.relations:
            ws = {self.weight_of(mon) for mon in rel.terms}
            if len(ws) > 1:
                return False
        return True

    def to_algebra(self) -> PresentedAlgebra:
        return PresentedAlgebra(
            self.field, list(self.gen_names), list(self.gen_weights),
            list(self.relations),
        )


def compile_coend(cat: PresentedMonoidalCategory, f: FiberFunctorData,
                  gen_names=None) -> PresentedBialgebra:
    """Run the presentation procedure.

    `gen_names` optionally maps object generator name -> matrix of symbol
    names (or a single name for 1-dimensional objects), purely cosmetic.
    """
    f.validate(cat)
    names, weights = [], []
    obj_blocks, inverse_idx = {}, {}
    comul, counit = {}, {}

    def fresh(name, weight):
        names.append(name)
        weights.append(weight)
        return len(names) - 1

    for g in cat.objects:
        n = f.obj_dims[g.name]
        custom = (gen_names or {}).get(g.name)
        block = []
        for i in range(n):
            row = []
            for j in range(n):
                if custom is None:
                    label = (
                        "z_%s" % g.name
                        if n == 1
                        else "z_%s_%d%d" % (g.name, i + 1, j + 1)
                    )
                elif isinstance(custom, str):
                    label = custom
                else:
                    label = custom[i][j]
                row.append(fresh(label, g.weight))
            block.append(row)
        obj_blocks[g.name] = block
    for g in cat.objects:
        if g.invertible:
            base = names[obj_blocks[g.name][0][0]]
            inverse_idx[g.name] = fresh(base + "_inv", -g.weight)

    for g in cat.objects:
        block = obj_blocks[g.name]
        n = len(block)
        for i in range(n):
            for j in range(n):
                idx = block[i][j]
                comul[idx] = [(block[i][p], block[p][j]) for p in range(n)]
                counit[idx] = 1 if i == j else 0
        if g.invertible:
            idx = inverse_idx[g.name]
            comul[idx] = [(idx, idx)]
            counit[idx] = 1

    bial = PresentedBialgebra(
        field=f.field,
        gen_names=names,
        gen_weights=weights,
        relations=[],
        comultiplication=comul,
        counit=counit,
        obj_blocks=obj_blocks,
        inverse_idx=inverse_idx,
    )

    rels = []
    for m in cat.morphisms:
        mat = f.mor_matrices[m.name]
        pt = mat.transpose()
        z_t = bial.z_matrix(m.target)
        z_s = bial.z_matrix(m.source)
        diff = z_t.scalar_left(pt) - z_s.scalar_right(pt)
        for row in diff.entries:
            for entry in row:
                if not entry.is_zero():
                    rels.append(entry)
    one = NCPoly.one(f.field)
    for g in cat.objects:
        if g.invertible:
            z = NCPoly.monomial(f.field, (obj_blocks[g.name][0][0],))
            zi = NCPoly.monomial(f.field, (inverse_idx[g.name],))
            rels.append(z * zi - one)
            rels.append(zi * z - one)
    bial.relations = rels
    return bial


# ---------------------------------------------------------------------------
# Fiber functors from quadratic algebras

def quadratic_fiber(a: QuadraticAlgebra):
    """Category with r_1, r_2 and the inclusion r_2 -> r_1 r_1, realised on
    (V, R).  Compiling this yields the universal bialgebra of the quadratic
    algebra."""
    from .moncat import build_category

    cat = build_category("C")
    f = FiberFunctorData(
        field=a.field,
        obj_dims={"r1": a.dim_v, "r2": a.relations.dim},
        mor_matrices={"incl2": a.relations.basis.transpose()},
    )
    return cat, f


def regular_fiber(ctx, kind="D", a=1):
    """Realise the d-letter category on the relation spaces of a regular
    quadratic algebra.  `ctx` is a comodule StructureContext; kind "D" uses
    the inclusions r_i -> r_1^i plus one pairing, kind "U" the full phi/theta
    family."""
    from .moncat import build_category

    d = ctx.d
    cat = build_category(kind, d=d, a=a)
    dims = {"r%d" % i: ctx.space_dim(i) for i in range(1, d + 1)}
    mats = {}
    for m in cat.morphisms:
        if m.family == "inclusion":
            i = int(m.name[4:])
            mats[m.name] = ctx.spaces[i - 1].basis.transpose()
        elif m.family == "pairing":
            i = int(m.name[4:].split("_")[0])
            mats[m.name] = ctx.theta(i, d - i)
        elif m.family == "phi":
            i, j = (int(s) for s in m.name[3:].split("_"))
            mats[m.name] = ctx.phi(i, j)
        elif m.family == "theta":
            i, j = (int(s) for s in m.name[5:].split("_"))
            mats[m.name] = ctx.theta(i, j)
        else:
            raise ValueError("unhandled morphism family %r" % m.family)
    return cat, FiberFunctorData(field=ctx.algebra.field, obj_dims=dims,
                                 mor_matrices=mats)


def regular_duality_data(ctx):
    """Right duals for r_1 .. r_{d-1}: the dual of r_k is r_d^-1 r_{d-k},
    with evaluation the inverse pairing and coevaluation the pairing."""
    d = ctx.d
    f = ctx.algebra.field
    out = []
    for k in range(1, d):
        from .quadalg import pairing_matrix

        c = pairing_matrix(ctx.algebra, ctx.spaces, d, d - k)
        e = right_inverse(c)
        n = ctx.space_dim(k)
        m = ctx.space_dim(d - k)
        ev = MatrixExact(f, 1, n * m)
        for i in range(n):
            for j in range(m):
                ev.entries[0][i * m + j] = e.entries[i][j]
        coev = MatrixExact(f, m * n, 1)
        for j in range(m):
            for i in range(n):
                coev.entries[j * n + i][0] = c.entries[j][i]
        out.append(
            DualityDatum(
                obj="r%d" % k,
                dual_word=(("r%d" % d, -1), ("r%d" % (d - k), 1)),
                ev=ev,
                coev=coev,
            )
        )
    return out


# ---------------------------------------------------------------------------
# Direct quadratic route and generator elimination

def uend_direct(a: QuadraticAlgebra) -> PresentedAlgebra:
    """Presentation of the universal bialgebra of a quadratic algebra in the
    z-basis: one generator per matrix coefficient of V, relations spanned by
    the factor-transposed product of the dual relation space with the
    relation space."""
    n = a.dim_v
    f = a.field
    names = [
        "z_%d%d" % (i + 1, j + 1) for i in range(n) for j in range(n)
    ]
    dual = koszul_dual(a)
    rels = []
    for phi in dual.relations.basis.entries:
        for x in a.relations.basis.entries:
            terms = {}
            for k in range(n):
                for l in range(n):
                    c1 = phi[k * n + l]
                    if not c1:
                        continue
                    for u in range(n):
                        for v in range(n):
                            c2 = x[u * n + v]
                            if not c2:
                                continue
                            mon = (u * n + k, v * n + l)
                            terms[mon] = terms.get(mon, f.zero()) + c1 * c2
            p = NCPoly(f)
            p.terms = {m: c for m, c in terms.items() if c}
            if not p.is_zero():
                rels.append(p)
    return PresentedAlgebra(f, names, [1] * len(names), rels)


def eliminate_defined_generators(b: PresentedBialgebra,
                                 cat: PresentedMonoidalCategory,
                                 f: FiberFunctorData) -> PresentedAlgebra:
    """Remove object generators that are cut out by a single injective
    inclusion morphism, substituting the induced matrix-coefficient formula
    Z_src = P^T Z_target S (S a right inverse of P^T) into every relation."""
    defining = {}
    for m in cat.morphisms:
        if len(m.source) == 1 and m.source[0][1] == 1:
            src = m.source[0][0]
            if all(name != src for name, _ in m.target):
                defining.setdefault(src, []).append(m)
    table = {}
    eliminated = set()
    for src, mors in defining.items():
        if len(mors) != 1:
            raise ValueError(
                "generator %r has %d defining morphisms, need exactly one"
                % (src, len(mors))
            )
        m = mors[0]
        if any(t in defining for t, _ in m.target):
            raise ValueError("chained eliminations are not supported")
        mat = f.mor_matrices[m.name]
        pt = mat.transpose()
        s = right_inverse(pt)  # raises when P is not injective
        z_y = b.z_matrix(m.target)
        z_sub = z_y.scalar_left(pt).scalar_right(s)
        block = b.obj_blocks[src]
        n = len(block)
        for i in range(n):
            for j in range(n):
                table[block[i][j]] = z_sub.entries[i][j]
        eliminated.add(src)

    kept = [
        g
        for g in range(b.ngens)
        if g not in table
    ]
    index_map = {g: k for k, g in enumerate(kept)}
    new_rels = []
    for rel in b.relations:
        sub = rel.substitute(table)
        if not sub.is_zero():
            new_rels.append(sub.rename(index_map))
    return PresentedAlgebra(
        b.field,
        [b.gen_names[g] for g in kept],
        [b.gen_weights[g] for g in kept],
        new_rels,
    )


# ---------------------------------------------------------------------------
# Antipode from duality data

@dataclass
class DualityDatum:
    """Right-dual data for one object generator: the dual word, the matrix of
    the evaluation X (x) dual -> 1 and of the coevaluation 1 -> dual (x) X."""

    obj: str
    dual_word: tuple
    ev: MatrixExact        # 1 x (n * m)
    coev: MatrixExact      # (m * n) x 1


class AntipodeError(RuntimeError):
    pass


def antipode_derive(b: PresentedBialgebra, duality, max_passes=10000):
    """Fill in b.antipode from duality data and verify both antipode
    identities by rewriting; raises AntipodeError when the snake data is
    inconsistent or the verification is inconclusive."""
    f = b.field
    for datum in duality:
        n = len(b.obj_blocks[datum.obj])
        m = 1
        for name, exp in datum.dual_word:
            m *= 1 if exp == -1 else len(b.obj_blocks[name])
        if datum.ev.rows != 1 or datum.ev.cols != n * m:
            raise AntipodeError("evaluation for %r must be 1 x %d" % (datum.obj, n * m))
        if datum.coev.rows != m * n or datum.coev.cols != 1:
            raise AntipodeError("coevaluation for %r must be %d x 1" % (datum.obj, m * n))
        e = MatrixExact(f, n, m)
        for i in range(n):
            for k in range(m):
                e.entries[i][k] = datum.ev.entries[0][i * m + k]
        c = MatrixExact(f, m, n)
        for k in range(m):
            for i in range(n):
                c.entries[k][i] = datum.coev.entries[k * n + i][0]
        prod1 = e * c
        prod2 = c * e
        if prod1 != MatrixExact.identity(f, n) or prod2 != MatrixExact.identity(
            f, m
        ):
            raise AntipodeError(
                "snake identities fail for %r: duality data inconsistent"
                % datum.obj
            )
        w = b.z_matrix(datum.dual_word).transpose()
        s_mat = w.scalar_left(e).scalar_right(c)
        block = b.obj_blocks[datum.obj]
        for i in range(n):
            for j in range(n):
                b.antipode[block[i][j]] = s_mat.entries[i][j]
    for name, inv in b.inverse_idx.items():
        base = b.obj_blocks[name][0][0]
        b.antipode[base] = NCPoly.monomial(f, (inv,))
        b.antipode[inv] = NCPoly.monomial(f, (base,))

    missing = [g for g in range(b.ngens) if g not in b.antipode]
    if missing:
        raise AntipodeError(
            "no duality data for generators %s"
            % ", ".join(b.gen_names[g] for g in missing)
        )
    verify_antipode(b, max_passes)
    return b.antipode


def verify_antipode(b: PresentedBialgebra, max_passes=10000):
    """Check sum_k S(z_ik) z_kj = delta_ij = sum_k z_ik S(z_kj) for every
    object block, and S(z) z = 1 = z S(z) for inverses, by rewriting."""
    f = b.field
    rules = orient(b.relations)
    one = NCPoly.one(f)

    def reduce_or_fail(p, what):
        res = rewrite_reduce(p, rules, max_passes)
        if not res.is_zero:
            raise AntipodeError("antipode verification inconclusive for %s" % what)

    for name, block in b.obj_blocks.items():
        n = len(block)
        for i in range(n):
            for j in range(n):
                delta = one if i == j else NCPoly.zero(f)
                lhs = NCPoly.zero(f)
                rhs = NCPoly.zero(f)
                for k in range(n):
                    lhs = lhs + b.antipode[block[i][k]] * NCPoly.monomial(
                        f, (block[k][j],)
                    )
                    rhs = rhs + NCPoly.monomial(
                        f, (block[i][k],)
                    ) * b.antipode[block[k][j]]
                reduce_or_fail(lhs - delta, "S*Z at %s[%d][%d]" % (name, i, j))
                reduce_or_fail(rhs - delta, "Z*S at %s[%d][%d]" % (name, i, j))
    for name, inv in b.inverse_idx.items():
        base = b.obj_blocks[name][0][0]
        for g in (base, inv):
            z = NCPoly.monomial(f, (g,))
            reduce_or_fail(b.antipode[g] * z - one, "S*Z at %s" % b.gen_names[g])
            reduce_or_fail(z * b.antipode[g] - one, "Z*S at %s" % b.gen_names[g])


# ---------------------------------------------------------------------------
# Emission

def bialgebra_to_json(b: PresentedBialgebra) -> dict:
    gens = []
    inv_of = {v: k for k, v in b.inverse_idx.items()}
    for g in range(b.ngens):
        entry = {"name": b.gen_names[g], "weight": b.gen_weights[g]}
        if g in inv_of:
            entry["inverse_of"] = b.gen_names[b.obj_blocks[inv_of[g]][0][0]]
        gens.append(entry)
    doc = {
        "generators": gens,
        "relations": [
            poly_to_signed_terms(rel, b.gen_names) for rel in b.relations
        ],
        "comultiplication": {
            b.gen_names[g]: [
                [b.gen_names[x], b.gen_names[y]] for x, y in pairs
            ]
            for g, pairs in sorted(b.comultiplication.items())
        },
        "counit": {
            b.gen_names[g]: v for g, v in sorted(b.counit.items())
        },
    }
    if b.antipode:
        doc["antipode"] = {
            b.gen_names[g]: poly_to_signed_terms(p, b.gen_names)
            for g, p in sorted(b.antipode.items())
        }
    return doc


def relations_to_latex(relations, names) -> str:
    lines = [r"\begin{aligned}"]
    for rel in relations:
        lines.append(_poly_latex(rel, names) + r" &= 0 \\")
    lines.append(r"\end{aligned}")
    return "\n".join(lines)


def _poly_latex(p: NCPoly, names):
    if p.is_zero():
        return "0"
    bits = []
    for mon, c in sorted(p.terms.items(), key=lambda kv: (-len(kv[0]), kv[0])):
        word = " ".join(_latex_name(names[g]) for g in mon) if mon else "1"
        coef = str(c)
        if coef == "1" and mon:
            term = word
        elif coef == "-1" and mon:
            term = "-" + word
        elif mon:
            term = "%s \\, %s" % (coef, word)
        else:
            term = coef
        if bits and not term.startswith("-"):
            bits.append("+ " + term)
        elif bits:
            bits.append("- " + term[1:])
        else:
            bits.append(term)
    return " ".join(bits)


def _latex_name(name):
    if name.endswith("_inv"):
        return _latex_name(name[:-4]) + "^{-1}"
    if "_" in name:
        head, tail = name.split("_", 1)
        return "%s_{%s}" % (head, tail.replace("_", ""))
    return name
