"""Free associative polynomials over an exact field.

Monomials are tuples of generator indices; polynomials map monomials to
nonzero coefficients.  The module provides the graded-dimension count for
length-graded presentations, span equality of relation sets at a length
bound, and oriented rewriting as a sound (one-sided) ideal-membership test
for presentations that are not length-homogeneous.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dfield
from itertools import product

from .exactlin import MatrixExact, QQ, Subspace, rank


class NCPoly:
    """A noncommutative polynomial: dict {monomial tuple: coefficient}."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms=None):
        self.field = field
        self.terms = {}
        if terms:
            for mon, c in terms.items():
                c = field.of(c)
                if c:
                    self.terms[tuple(mon)] = c

    @classmethod
    def zero(cls, field):
        return cls(field)

    @classmethod
    def monomial(cls, field, mon, coef=1):
        return cls(field, {tuple(mon): coef})

    @classmethod
    def one(cls, field):
        return cls(field, {(): 1})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, NCPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for mon, c in other.terms.items():
            s = out.get(mon, self.field.zero()) + c
            if s:
                out[mon] = s
            else:
                out.pop(mon, None)
        p = NCPoly(self.field)
        p.terms = out
        return p

    def __neg__(self):
        p = NCPoly(self.field)
        p.terms = {mon: -c for mon, c in self.terms.items()}
        return p

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = self.field.of(c)
        p = NCPoly(self.field)
        if c:
            p.terms = {mon: x * c for mon, x in self.terms.items()}
        return p

    def __mul__(self, other):
        out = NCPoly(self.field)
        terms = {}
        z = self.field.zero()
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mon = m1 + m2
                s = terms.get(mon, z) + c1 * c2
                if s:
                    terms[mon] = s
                else:
                    terms.pop(mon, None)
        out.terms = terms
        return out

    def max_length(self):
        return max((len(m) for m in self.terms), default=0)

    def is_length_homogeneous(self):
        lengths = {len(m) for m in self.terms}
        return len(lengths) <= 1

    def substitute(self, table):
        """Replace generator i by the polynomial table[i] (or keep it when
        absent); the workhorse of generator elimination."""
        out = NCPoly.one(self.field).scale(0)
        for mon, c in self.terms.items():
            acc = NCPoly.one(self.field)
            for g in mon:
                factor = table.get(g)
                if factor is None:
                    factor = NCPoly.monomial(self.field, (g,))
                acc = acc * factor
            out = out + acc.scale(c)
        return out

    def rename(self, index_map):
        p = NCPoly(self.field)
        p.terms = {
            tuple(index_map[g] for g in mon): c for mon, c in self.terms.items()
        }
        return p

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def pretty(self, names):
        if not self.terms:
            return "0"
        bits = []
        for mon, c in sorted(
            self.terms.items(), key=lambda kv: (-len(kv[0]), kv[0])
        ):
            word = "*".join(names[g] for g in mon) if mon else "1"
            coef = str(c)
            if coef == "1" and mon:
                term = word
            elif coef == "-1" and mon:
                term = "-" + word
            elif mon:
                term = "%s*%s" % (coef, word)
            else:
                term = coef
            if bits and not term.startswith("-"):
                bits.append("+ " + term)
            elif bits:
                bits.append("- " + term[1:])
            else:
                bits.append(term)
        return " ".join(bits)

    def __repr__(self):
        return "NCPoly(%r)" % (self.terms,)


def poly_to_signed_terms(p: NCPoly, names):
    """Wire form: list of {"coef": str, "word": [names]}."""
    return [
        {"coef": p.field.to_str(c), "word": [names[g] for g in mon]}
        for mon, c in p.sorted_terms()
    ]


@dataclass
class PresentedAlgebra:
    field: object
    gens: list                      # generator names
    weights: list                   # integer weight per generator
    relations: list                 # of NCPoly

    def check_homogeneous(self):
        for rel in self.relations:
            ws = {sum(self.weights[g] for g in mon) for mon in rel.terms}
            if len(ws) > 1:
                raise ValueError("relation %s not weight-homogeneous" % rel.pretty(self.gens))


# ---------------------------------------------------------------------------
# Graded dimensions and spans

def _monomials(ngens, length):
    return list(product(range(ngens), repeat=length))


def _span_matrix(field, relations, ngens, bound, homogeneous_degree=None):
    """Matrix of all shifts m1 . r . m2 with total length <= bound (or exactly
    homogeneous_degree), over the monomial basis of length <= bound."""
    index = {}
    cols = 0
    lengths = (
        [homogeneous_degree] if homogeneous_degree is not None else range(bound + 1)
    )
    for L in lengths:
        for mon in _monomials(ngens, L):
            index[mon] = cols
            cols += 1
    rows = []
    z = field.zero()
    for rel in relations:
        deg = rel.max_length()
        for li in range(bound - deg + 1):
            for ri in range(bound - deg - li + 1):
                if homogeneous_degree is not None and li + deg + ri != bound:
                    continue
                for m1 in _monomials(ngens, li):
                    for m2 in _monomials(ngens, ri):
                        row = [z] * cols
                        ok = True
                        for mon, c in rel.terms.items():
                            full = m1 + mon + m2
                            col = index.get(full)
                            if col is None:
                                ok = False
                                break
                            row[col] = row[col] + c
                        if ok:
                            rows.append(row)
    m = MatrixExact(field, len(rows), cols)
    m.entries = rows
    return m


def graded_dim(p: PresentedAlgebra, n: int) -> int:
    """Dimension of the length-n component of the quotient; requires all
    generators of weight 1 and length-homogeneous relations."""
    if any(w != 1 for w in p.weights):
        raise ValueError("graded_dim needs all generator weights equal to 1")
    for rel in p.relations:
        if not rel.is_length_homogeneous():
            raise ValueError("graded_dim needs length-homogeneous relations")
    if n == 0:
        return 1
    g = len(p.gens)
    m = _span_matrix(p.field, p.relations, g, n, homogeneous_degree=n)
    shift_rank = rank(m) if m.rows else 0
    return g**n - shift_rank


def span_subspace(field, relations, ngens, bound) -> Subspace:
    m = _span_matrix(field, relations, ngens, bound)
    if m.rows == 0:
        total = sum(ngens**k for k in range(bound + 1))
        return Subspace.zero(field, total)
    return Subspace.from_matrix_rows(m)


def span_equal(rels_a, rels_b, ngens, bound, field=QQ) -> bool:
    """Do two relation sets generate the same two-sided span up to the given
    total length?"""
    return span_subspace(field, rels_a, ngens, bound) == span_subspace(
        field, rels_b, ngens, bound
    )


# ---------------------------------------------------------------------------
# Oriented rewriting

def deglex_key(mon):
    return (len(mon), mon)


def orient(relations):
    """Orient each relation as leading monomial -> remainder, leading = the
    degree-lexicographically largest monomial, rescaled to coefficient 1."""
    rules = []
    for rel in relations:
        if rel.is_zero():
            continue
        lead = max(rel.terms, key=deglex_key)
        c = rel.terms[lead]
        rest = NCPoly(rel.field)
        rest.terms = {m: x for m, x in rel.terms.items() if m != lead}
        rules.append((lead, rest.scale(rel.field.of(-1) / c)))
    return rules


@dataclass
class ReductionResult:
    poly: NCPoly
    passes: int
    complete: bool      # False when max_passes was hit

    @property
    def is_zero(self):
        return self.complete and self.poly.is_zero()


def rewrite_reduce(p: NCPoly, rules, max_passes=10000) -> ReductionResult:
    """Leftmost rewriting until fixpoint or the pass cap.

    A zero result certifies ideal membership; a nonzero (or capped) result is
    inconclusive, since the rule system is not assumed confluent.
    """
    passes = 0
    while passes < max_passes:
        hit = None
        for mon in sorted(p.terms, key=deglex_key, reverse=True):
            for lead, rest in rules:
                k = _find_subword(mon, lead)
                if k is not None:
                    hit = (mon, lead, rest, k)
                    break
            if hit:
                break
        if hit is None:
            return ReductionResult(p, passes, True)
        mon, lead, rest, k = hit
        c = p.terms[mon]
        left = NCPoly.monomial(p.field, mon[:k])
        right = NCPoly.monomial(p.field, mon[k + len(lead) :])
        replaced = (left * rest * right).scale(c)
        p = p - NCPoly.monomial(p.field, mon, c) + replaced
        passes += 1
    return ReductionResult(p, passes, False)


def _find_subword(mon, sub):
    n, m = len(mon), len(sub)
    if m == 0 or m > n:
        return None
    for k in range(n - m + 1):
        if mon[k : k + m] == sub:
            return k
    return None
