"""Welded invariants: linking matrix, Wirtinger presentation, coloring counts,
and the one-variable Alexander polynomial.

All of these are invariant under the welded Reidemeister moves (the linking
matrix only off the diagonal), which is exactly what makes them usable as
soundness oracles for the move engine.  Arcs are maximal cyclic runs of a
component broken only at Under passages: Over passages do not interrupt an
arc, which is what makes every invariant below blind to OC moves.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .correspondence import _require_code
from .laurent import LaurentPolynomial, determinant, polynomial_gcd
from .model import GaussCode, OVER, UNDER


@dataclass(frozen=True)
class LinkingMatrix:
    """entries[i][j], i != j: sum of signs of crossings passing over component
    i and under component j.  The diagonal collects self-crossing signs; it is
    reported for diagnostics but is *not* move-invariant (R1 changes it)."""

    entries: tuple

    def off_diagonal(self):
        n = len(self.entries)
        return tuple(
            tuple(self.entries[i][j] if i != j else 0 for j in range(n))
            for i in range(n)
        )

    def diagonal(self):
        return tuple(row[i] for i, row in enumerate(self.entries))


def linking_matrix(code: GaussCode) -> LinkingMatrix:
    _require_code(code)
    n = len(code.components)
    where = {}
    for i, _, p in code.passages():
        where[(p.crossing, p.role)] = i
    entries = [[0] * n for _ in range(n)]
    for c, s in code.crossings().items():
        i = where[(c, OVER)]
        j = where[(c, UNDER)]
        entries[i][j] += s
    return LinkingMatrix(tuple(tuple(row) for row in entries))


@dataclass(frozen=True)
class WirtingerRelation:
    """The conjugation relation at one crossing: ``out = over * in * over**-1``
    for a positive crossing, conjugation by the inverse for a negative one.
    Arcs are numbered by the presentation's arc order."""

    crossing: int
    sign: int
    over_arc: int
    in_arc: int
    out_arc: int

    def word(self):
        """The relator as a list of (generator, exponent) letters."""
        o, x, y = self.over_arc, self.in_arc, self.out_arc
        if self.sign == 1:
            return [(o, 1), (x, 1), (o, -1), (y, -1)]
        return [(o, -1), (x, 1), (o, 1), (y, -1)]


@dataclass(frozen=True)
class WirtingerPresentation:
    generator_count: int
    relations: tuple
    # arc_of[(component, position)] = generator index carrying that passage,
    # for Over passages; Under passages split arcs and are not carried.


def wirtinger(code: GaussCode) -> WirtingerPresentation:
    """Arcs as generators, one conjugation relation per crossing.

    A component with no Under passage contributes a single free generator
    (this covers both crossing-free circles and over-only loops).
    """
    _require_code(code)
    arc_of = {}  # (component, position) -> arc index of the passage's strand
    incoming = {}  # crossing -> arc entering its Under passage
    outgoing = {}  # crossing -> arc leaving its Under passage
    n_arcs = 0
    for ci, comp in enumerate(code.components):
        under_positions = [i for i, p in enumerate(comp) if p.role == UNDER]
        if not under_positions:
            for i in range(len(comp)):
                arc_of[(ci, i)] = n_arcs
            n_arcs += 1
            continue
        first = n_arcs
        arcs_here = len(under_positions)
        # arc k starts right after under_positions[k] and ends at the next one
        for k, start in enumerate(under_positions):
            arc = first + k
            end = under_positions[(k + 1) % arcs_here]
            outgoing[comp[start].crossing] = arc
            incoming[comp[end].crossing] = arc
            pos = (start + 1) % len(comp)
            while pos != end:
                arc_of[(ci, pos)] = arc
                pos = (pos + 1) % len(comp)
        n_arcs += arcs_here
    over_arc = {}
    for ci, i, p in ((ci, i, p) for ci, comp in enumerate(code.components) for i, p in enumerate(comp)):
        if p.role == OVER:
            over_arc[p.crossing] = arc_of[(ci, i)]
    relations = []
    for c in sorted(code.crossings()):
        sign = code.crossings()[c]
        relations.append(
            WirtingerRelation(c, sign, over_arc[c], incoming[c], outgoing[c])
        )
    return WirtingerPresentation(n_arcs, tuple(relations))


def fox_colorings(code: GaussCode, p: int) -> int:
    """Number of arc labelings in Z_p with out = 2*over - in (mod p) at every
    crossing.

    The relations are linear over Z_p, so the count is p ** (arcs - rank) of
    the relation matrix, by Gaussian elimination mod p (p prime).
    """
    _require_code(code)
    if p < 2:
        raise ValueError("modulus must be at least 2")
    pres = wirtinger(code)
    n = pres.generator_count
    rows = []
    for rel in pres.relations:
        row = [0] * n
        row[rel.over_arc] = (row[rel.over_arc] + 2) % p
        row[rel.in_arc] = (row[rel.in_arc] - 1) % p
        row[rel.out_arc] = (row[rel.out_arc] - 1) % p
        if any(row):
            rows.append(row)
    rank = 0
    for col in range(n):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [(a - f * b) % p for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return p ** (n - rank)


class InvalidGroupTable(ValueError):
    pass


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by its multiplication table of element indices;
    element 0 need not be the identity."""

    table: tuple

    @property
    def order(self):
        return len(self.table)

    def mul(self, a, b):
        return self.table[a][b]

    def validate(self):
        n = self.order
        elements = range(n)
        for row in self.table:
            if len(row) != n or any(x < 0 or x >= n for x in row):
                raise InvalidGroupTable("table is not %d x %d over 0..%d" % (n, n, n - 1))
        identity = None
        for e in elements:
            if all(self.mul(e, a) == a and self.mul(a, e) == a for a in elements):
                identity = e
                break
        if identity is None:
            raise InvalidGroupTable("no identity element")
        for a in elements:
            if not any(self.mul(a, b) == identity for b in elements):
                raise InvalidGroupTable("element %d has no inverse" % a)
        for a in elements:
            for b in elements:
                for c in elements:
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                        raise InvalidGroupTable(
                            "associativity fails at (%d, %d, %d)" % (a, b, c)
                        )
        return identity


def parse_group_table(text: str) -> FiniteGroup:
    """Text format: first token is the order n, then n*n element indices."""
    tokens = text.split()
    if not tokens:
        raise InvalidGroupTable("empty group table")
    n = int(tokens[0])
    body = [int(t) for t in tokens[1:]]
    if len(body) != n * n:
        raise InvalidGroupTable("expected %d entries, found %d" % (n * n, len(body)))
    table = tuple(tuple(body[i * n : (i + 1) * n]) for i in range(n))
    group = FiniteGroup(table)
    group.validate()
    return group


def group_colorings(code: GaussCode, group: FiniteGroup) -> int:
    """Number of homomorphisms of the Wirtinger group into ``group``, counted
    as arc labelings satisfying every conjugation relation."""
    _require_code(code)
    identity = group.validate()
    inverse = [
        next(b for b in range(group.order) if group.mul(a, b) == identity)
        for a in range(group.order)
    ]
    pres = wirtinger(code)
    by_last_arc = _relations_by_last_arc(pres)
    assignment = [None] * pres.generator_count

    def satisfied(rel):
        o = assignment[rel.over_arc]
        x = assignment[rel.in_arc]
        y = assignment[rel.out_arc]
        if rel.sign == 1:
            return group.mul(group.mul(o, x), inverse[o]) == y
        return group.mul(group.mul(inverse[o], x), o) == y

    def count(arc):
        if arc == pres.generator_count:
            return 1
        total = 0
        for value in range(group.order):
            assignment[arc] = value
            if all(satisfied(rel) for rel in by_last_arc[arc]):
                total += count(arc + 1)
        assignment[arc] = None
        return total

    return count(0)


def _relations_by_last_arc(pres):
    """Index relations by the largest arc they mention, for early checking."""
    by_last = [[] for _ in range(pres.generator_count + 1)]
    for rel in pres.relations:
        by_last[max(rel.over_arc, rel.in_arc, rel.out_arc)].append(rel)
    return by_last


def alexander(code: GaussCode) -> LaurentPolynomial:
    """Normalized one-variable Alexander polynomial via Fox calculus.

    Builds the Fox Jacobian of the Wirtinger presentation with every generator
    sent to t, deletes the last column, and takes the gcd of the maximal
    minors, normalized to lowest exponent 0 with positive leading coefficient.
    The unknot gives 1; a split underdetermined presentation gives 0.
    """
    _require_code(code)
    if not code.components:
        raise ValueError("alexander requires at least one component")
    pres = wirtinger(code)
    g = pres.generator_count
    t = LaurentPolynomial.t(1)
    t_inv = LaurentPolynomial.t(-1)
    rows = []
    for rel in pres.relations:
        row = [LaurentPolynomial.zero() for _ in range(g)]
        prefix = LaurentPolynomial.one()
        for gen, exp in rel.word():
            if exp == 1:
                row[gen] = row[gen] + prefix
                prefix = prefix * t
            else:
                row[gen] = row[gen] - prefix * t_inv
                prefix = prefix * t_inv
        rows.append(row[:-1])  # delete the last column
    k = g - 1
    if k == 0:
        return LaurentPolynomial.one()
    if len(rows) < k:
        return LaurentPolynomial.zero()
    minors = []
    for subset in combinations(range(len(rows)), k):
        minors.append(determinant([rows[i] for i in subset]))
    return polynomial_gcd(minors).normalized()


def fingerprint(code: GaussCode):
    """The move-invariant fingerprint used by search: off-diagonal linking,
    Fox coloring counts for p in {2, 3, 5, 7}, normalized Alexander."""
    return (
        linking_matrix(code).off_diagonal(),
        tuple(fox_colorings(code, p) for p in (2, 3, 5, 7)),
        alexander(code),
    )


FINGERPRINT_FIELDS = ("linking_off_diagonal", "fox_colorings_2_3_5_7", "alexander")


def fingerprint_obj(code: GaussCode):
    link, fox, alex = fingerprint(code)
    return {
        "linking_off_diagonal": [list(row) for row in link],
        "fox_colorings": {str(p): c for p, c in zip((2, 3, 5, 7), fox)},
        "alexander": str(alex),
        "linking_diagonal_noninvariant": list(linking_matrix(code).diagonal()),
    }
