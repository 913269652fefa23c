"""Finitely presented strict monoidal categories and the word poset.

Object words over the alphabet r_1, ..., r_{d-1}, r_d^{+-1} are encoded as
tuples of signed integers: the letter k (1 <= k <= d) stands for r_k and the
letter -d for the formal inverse of r_d.  Only r_d is invertible.  Words are
kept in normal form (no adjacent r_d r_d^-1 pair survives).

The module also holds the generic presentation data consumed by the coend
compiler: object generators with dimensions, morphism generators with source
and target words.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field as dfield


# ---------------------------------------------------------------------------
# Words over the alphabet of U(d)

def normalize(letters, d):
    """Cancel adjacent inverse pairs to a fixpoint (stack pass, so the result
    is fully reduced in one sweep)."""
    out = []
    for k in letters:
        if k == 0:
            continue
        if not (1 <= k <= d or k == -d):
            raise ValueError("letter %r invalid: inverses only on r_%d" % (k, d))
        if out and out[-1] == -k and abs(k) == d:
            out.pop()
        else:
            out.append(k)
    return tuple(out)


def word_str(word):
    if not word:
        return "1"
    return " ".join("r%d" % k if k > 0 else "r%d^-1" % -k for k in word)


def parse_word(text, d):
    """Inverse of word_str: "r1 r2^-1 r1" -> (1, -2, 1)."""
    text = text.strip()
    if text in ("", "1"):
        return ()
    letters = []
    for tok in text.split():
        if not tok.startswith("r"):
            raise ValueError("bad letter %r" % tok)
        if tok.endswith("^-1"):
            k = int(tok[1:-3])
            letters.append(-k)
        else:
            letters.append(int(tok[1:]))
    return normalize(letters, d)


def weight_ell(word, d) -> int:
    """The grading: r_i weighs i, the inverse letter weighs -d."""
    return sum(word)


# ---------------------------------------------------------------------------
# The partial order on words

def _rewrite_steps(word, d):
    """All one-step upward rewrites (results normalized).

    Rule 1 splits a letter: r_{a+b} -> r_a r_b (a, b >= 1, a+b <= d).
    Rule 2 expands a letter c = d-a-b (or inserts, for c = 0):
    r_{d-a-b} -> r_{d-a} r_d^-1 r_{d-b}; the boundary indices are included
    (see the configuration note below).
    """
    out = set()
    n = len(word)
    for pos in range(n):
        k = word[pos]
        if k <= 1:
            continue
        for a in range(1, k):
            out.add(normalize(word[:pos] + (a, k - a) + word[pos + 1 :], d))
    # rule 2 on an existing letter c >= 1
    for pos in range(n):
        c = word[pos]
        if c < 1 or c > d - 2:
            continue
        for a in range(1, d - c):
            b = d - c - a
            repl = (d - a, -d, d - b)
            out.add(normalize(word[:pos] + repl + word[pos + 1 :], d))
    # rule 2 with c = 0: insert r_{d-a} r_d^-1 r_{d-b} with a + b = d
    if d >= 2:
        for pos in range(n + 1):
            for a in range(1, d):
                b = d - a
                repl = (d - a, -d, d - b)
                out.add(normalize(word[:pos] + repl + word[pos:], d))
    return out


def _reachable(start, d, max_len):
    """All normalized words reachable from start with length <= max_len."""
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for nxt in _rewrite_steps(w, d):
            if len(nxt) <= max_len and nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def leq(lam, mu, d) -> bool:
    """lam <= mu in the left/right-invariant order generated by
    r_{a+b} < r_a r_b and r_{d-a-b} < r_{d-a} r_d^-1 r_{d-b}."""
    lam = normalize(lam, d)
    mu = normalize(mu, d)
    if lam == mu:
        return True
    if weight_ell(lam, d) != weight_ell(mu, d):
        return False
    return mu in _reachable(lam, d, len(mu))


def interval(lam, mu, d):
    """{psi : lam <= psi <= mu}, sorted for reproducible output."""
    lam = normalize(lam, d)
    mu = normalize(mu, d)
    found = []
    for psi in _reachable(lam, d, len(mu)):
        if leq(psi, mu, d):
            found.append(psi)
    return sorted(found, key=lambda w: (len(w), w))


# ---------------------------------------------------------------------------
# Elementary maps in and out of a word

@dataclass(frozen=True)
class ElementaryMap:
    """A generator whiskered by identity words on both sides."""

    family: str          # "phi" or "theta"
    i: int
    j: int
    left: tuple          # word to the left of the replaced letters
    right: tuple         # word to the right
    other: tuple         # the other endpoint (source for phi, target for theta)


def elementary_maps(word, d, direction):
    """One-step whiskered generators touching `word`.

    direction="into": decompositions word = w1 (r_a r_b) w2 give a whiskered
    phi_{a,b} from w1 r_{a+b} w2 (a + b <= d).
    direction="outof": decompositions word = w1 (r_a r_d^-1 r_b) w2 give a
    whiskered theta_{a,b} to normalize(w1 r_{a+b-d} w2), a + b >= d.
    """
    word = normalize(word, d)
    out = []
    if direction == "into":
        for pos in range(len(word) - 1):
            a, b = word[pos], word[pos + 1]
            if a >= 1 and b >= 1 and a + b <= d:
                other = normalize(word[:pos] + (a + b,) + word[pos + 2 :], d)
                out.append(
                    ElementaryMap("phi", a, b, word[:pos], word[pos + 2 :], other)
                )
    elif direction == "outof":
        for pos in range(len(word) - 2):
            a, m, b = word[pos], word[pos + 1], word[pos + 2]
            if a >= 1 and m == -d and b >= 1 and a + b >= d:
                mid = (a + b - d,) if a + b > d else ()
                other = normalize(word[:pos] + mid + word[pos + 3 :], d)
                out.append(
                    ElementaryMap("theta", a, b, word[:pos], word[pos + 3 :], other)
                )
    else:
        raise ValueError("direction must be 'into' or 'outof'")
    return out


# ---------------------------------------------------------------------------
# Presented monoidal categories (generic data for the coend compiler)

@dataclass(frozen=True)
class ObjGen:
    name: str
    invertible: bool = False
    weight: int = 1


@dataclass(frozen=True)
class MorGen:
    """A morphism generator between object words.

    Words here are tuples of (generator name, exponent) pairs; exponent -1 is
    only allowed on invertible generators.
    """

    name: str
    source: tuple
    target: tuple
    family: str = ""


@dataclass
class PresentedMonoidalCategory:
    objects: list                      # of ObjGen
    morphisms: list                    # of MorGen
    relations: list = dfield(default_factory=list)  # documentation only

    def object(self, name):
        for g in self.objects:
            if g.name == name:
                return g
        raise KeyError(name)

    def check_words(self):
        inv = {g.name for g in self.objects if g.invertible}
        names = {g.name for g in self.objects}
        for m in self.morphisms:
            for word in (m.source, m.target):
                for name, exp in word:
                    if name not in names:
                        raise ValueError("unknown object %r in %s" % (name, m.name))
                    if exp == -1 and name not in inv:
                        raise ValueError(
                            "inverse on non-invertible generator %r" % name
                        )
                    if exp not in (1, -1):
                        raise ValueError("exponents must be +-1")


def _rword(letters):
    """int-letter word -> generic (name, exp) word."""
    return tuple(
        ("r%d" % k, 1) if k > 0 else ("r%d" % -k, -1) for k in letters
    )


def build_category(kind, d=2, a=1) -> PresentedMonoidalCategory:
    """The presented categories used throughout.

    kind="C": r_1, r_2 with the single inclusion r_2 -> r_1 r_1.
    kind="D": r_1..r_{d-1}, r_d^{+-1}; inclusions r_i -> r_1^i (2 <= i <= d)
              and one duality morphism r_a r_d^-1 r_{d-a} -> 1.
    kind="U": objects as for D; phi_{a,b}: r_{a+b} -> r_a r_b for a+b <= d
              and theta_{a,b}: r_a r_d^-1 r_b -> r_{a+b-d} for a+b >= d.
    kind="U_up_plus": r_1..r_d (no inverse); the phi generators only.
    kind="TL": one object v with cup 1 -> vv and cap vv -> 1.
    """
    if kind == "C":
        return PresentedMonoidalCategory(
            objects=[ObjGen("r1", weight=1), ObjGen("r2", weight=2)],
            morphisms=[
                MorGen("incl2", _rword((2,)), _rword((1, 1)), family="inclusion")
            ],
        )
    if kind == "D":
        if d < 2 or not (1 <= a <= d - 1):
            raise ValueError("need d >= 2 and 1 <= a <= d-1")
        objs = [ObjGen("r%d" % i, weight=i) for i in range(1, d)] + [
            ObjGen("r%d" % d, True, weight=d)
        ]
        mors = [
            MorGen(
                "incl%d" % i,
                _rword((i,)),
                _rword(tuple([1] * i)),
                family="inclusion",
            )
            for i in range(2, d + 1)
        ]
        mors.append(
            MorGen(
                "pair%d_%d" % (a, d - a),
                _rword((a, -d, d - a)),
                (),
                family="pairing",
            )
        )
        return PresentedMonoidalCategory(objects=objs, morphisms=mors)
    if kind == "U" or kind == "U_up_plus":
        if d < 2:
            raise ValueError("need d >= 2")
        if kind == "U":
            objs = [ObjGen("r%d" % i, weight=i) for i in range(1, d)] + [
                ObjGen("r%d" % d, True, weight=d)
            ]
        else:
            objs = [ObjGen("r%d" % i, weight=i) for i in range(1, d + 1)]
        mors = []
        for i in range(1, d):
            for j in range(1, d - i + 1):
                mors.append(
                    MorGen(
                        "phi%d_%d" % (i, j),
                        _rword((i + j,)),
                        _rword((i, j)),
                        family="phi",
                    )
                )
        if kind == "U":
            for i in range(1, d + 1):
                for j in range(max(1, d - i), d + 1):
                    mid = (i + j - d,) if i + j > d else ()
                    mors.append(
                        MorGen(
                            "theta%d_%d" % (i, j),
                            _rword((i, -d, j)),
                            _rword(mid),
                            family="theta",
                        )
                    )
        return PresentedMonoidalCategory(objects=objs, morphisms=mors)
    if kind == "TL":
        # the diagram category has no ell-grading: cup and cap do not
        # preserve letter weight, so v carries weight 0
        return PresentedMonoidalCategory(
            objects=[ObjGen("v", weight=0)],
            morphisms=[
                MorGen("cup", (), (("v", 1), ("v", 1)), family="cup"),
                MorGen("cap", (("v", 1), ("v", 1)), (), family="cap"),
            ],
        )
    raise ValueError("unknown category kind %r" % kind)
