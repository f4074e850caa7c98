"""Core data model: signed Gauss codes and solid ribbon torus combinatorics.

A :class:`GaussCode` records a welded link diagram modulo virtual moves as a
list of components, each a cyclic word of signed over/under passages through
classical crossings.  A :class:`SolidRibbonData` records the combinatorics of
a solid ribbon torus link: per torus, a cyclic sequence of essential crossing
preimages with a chamber of unordered contractible preimages after each, plus
a sign per singularity.

Both types are immutable; equality treats cyclic rotation of a component (or
of a torus' essential cycle) as a representation choice, not content.  The
stored rotation is preserved so that serialization can round-trip byte-exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping

OVER = "O"
UNDER = "U"

_ROLE_RANK = {UNDER: 0, OVER: 1}
_SIGN_RANK = {1: 0, -1: 1}


@dataclass(frozen=True)
class Passage:
    """One passage of a strand through a classical crossing."""

    crossing: int
    role: str  # OVER or UNDER
    sign: int  # +1 or -1

    def __post_init__(self):
        if self.role not in (OVER, UNDER):
            raise ValueError("role must be %r or %r, got %r" % (OVER, UNDER, self.role))
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1, got %r" % (self.sign,))
        if not isinstance(self.crossing, int) or self.crossing < 0:
            raise ValueError("crossing identifier must be a nonnegative integer")

    def key(self):
        """Total-order encoding: Under < Over, then crossing id, then + < -."""
        return (_ROLE_RANK[self.role], self.crossing, _SIGN_RANK[self.sign])

    def __str__(self):
        return "%s%d%s" % (self.role, self.crossing, "+" if self.sign == 1 else "-")


def _min_rotation(seq):
    """Lexicographically minimal rotation of a tuple of comparable items."""
    if len(seq) <= 1:
        return seq
    return min(tuple(seq[i:]) + tuple(seq[:i]) for i in range(len(seq)))


def _cyclic_normal(component):
    return _min_rotation(tuple(p.key() for p in component))


@dataclass(frozen=True, eq=False)
class GaussCode:
    """A welded diagram modulo virtual moves.

    ``components`` is an ordered tuple; each component is a tuple of
    :class:`Passage` read as a cyclic word (index 0 carries no meaning).
    Component order is significant; rotations are not.
    """

    components: tuple = ()

    def __post_init__(self):
        comps = tuple(tuple(c) for c in self.components)
        object.__setattr__(self, "components", comps)

    def __eq__(self, other):
        if not isinstance(other, GaussCode):
            return NotImplemented
        if len(self.components) != len(other.components):
            return False
        return all(
            _cyclic_normal(a) == _cyclic_normal(b)
            for a, b in zip(self.components, other.components)
        )

    def __hash__(self):
        return hash(tuple(_cyclic_normal(c) for c in self.components))

    def crossings(self):
        """Map crossing identifier -> sign, over all passages."""
        out = {}
        for comp in self.components:
            for p in comp:
                out.setdefault(p.crossing, p.sign)
        return out

    def crossing_count(self):
        return len(self.crossings())

    def max_crossing(self):
        ids = self.crossings()
        return max(ids) if ids else 0

    def passages(self):
        """Iterate (component index, position, passage) in storage order."""
        for i, comp in enumerate(self.components):
            for j, p in enumerate(comp):
                yield i, j, p

    def __str__(self):
        from .textio import emit_gauss_text

        return emit_gauss_text(self)


@dataclass(frozen=True, eq=False)
class Torus:
    """One solid torus' singularity combinatorics.

    Three forms:
      (a) ``essentials`` nonempty: a cyclic sequence of essential crossing ids
          with ``chambers[i]`` the unordered contractibles in the chamber after
          ``essentials[i]``;
      (b) no essentials, a single chamber of contractibles (an over-only loop);
      (c) empty (a crossing-free circle).
    """

    essentials: tuple = ()
    chambers: tuple = ()

    def __post_init__(self):
        ess = tuple(int(e) for e in self.essentials)
        cham = tuple(frozenset(int(c) for c in ch) for ch in self.chambers)
        object.__setattr__(self, "essentials", ess)
        object.__setattr__(self, "chambers", cham)

    def contractibles(self):
        out = []
        for ch in self.chambers:
            out.extend(ch)
        return out

    def is_empty(self):
        return not self.essentials and not self.chambers

    def _pairs_normal(self):
        pairs = tuple(
            (e, tuple(sorted(ch))) for e, ch in zip(self.essentials, self.chambers)
        )
        if not pairs:  # forms (b) and (c): no rotation freedom
            return tuple(tuple(sorted(ch)) for ch in self.chambers)
        return _min_rotation(pairs)

    def __eq__(self, other):
        if not isinstance(other, Torus):
            return NotImplemented
        if bool(self.essentials) != bool(other.essentials):
            return False
        return self._pairs_normal() == other._pairs_normal()

    def __hash__(self):
        return hash((bool(self.essentials), self._pairs_normal()))


@dataclass(frozen=True, eq=False)
class SolidRibbonData:
    """A solid ribbon torus link's combinatorics: tori plus a sign per crossing."""

    tori: tuple = ()
    signs: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "tori", tuple(self.tori))
        object.__setattr__(self, "signs", dict(self.signs))

    def _signs_key(self):
        return tuple(sorted(self.signs.items()))

    def __eq__(self, other):
        if not isinstance(other, SolidRibbonData):
            return NotImplemented
        return self.tori == other.tori and self._signs_key() == other._signs_key()

    def __hash__(self):
        return hash((self.tori, self._signs_key()))

    def __str__(self):
        from .textio import emit_ribbon_text

        return emit_ribbon_text(self)


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of a validation pass; violations are data, not exceptions."""

    violations: tuple = ()

    @property
    def ok(self):
        return not self.violations

    def __bool__(self):
        return self.ok


def validate_gauss_code(code: GaussCode) -> ValidationReport:
    """Check the two-occurrence and sign-agreement rules on a Gauss code.

    Every crossing id must occur exactly once with role Over and once with
    role Under across the whole code, and both occurrences must carry the
    same sign.  Empty components are fine.
    """
    violations = []
    seen = {}  # crossing -> {role: [signs]}
    for _, _, p in code.passages():
        seen.setdefault(p.crossing, {OVER: [], UNDER: []})[p.role].append(p.sign)
    for c in sorted(seen):
        overs = seen[c][OVER]
        unders = seen[c][UNDER]
        if len(overs) != 1 or len(unders) != 1:
            violations.append(
                "crossing %d: expected one Over and one Under passage, found "
                "%d Over and %d Under" % (c, len(overs), len(unders))
            )
        signs = set(overs) | set(unders)
        if len(signs) > 1:
            violations.append("sign mismatch at crossing %d" % c)
    return ValidationReport(tuple(violations))


def validate_solid_ribbon(data: SolidRibbonData) -> ValidationReport:
    """Check the essential/contractible bijection and chamber-count rules."""
    violations = []
    ess_seen = []
    con_seen = []
    for i, t in enumerate(data.tori):
        if t.essentials:
            if len(t.chambers) != len(t.essentials):
                violations.append(
                    "torus %d: %d essentials but %d chambers"
                    % (i, len(t.essentials), len(t.chambers))
                )
        else:
            if len(t.chambers) > 1:
                violations.append(
                    "torus %d: no essentials but %d chambers" % (i, len(t.chambers))
                )
            elif len(t.chambers) == 1 and not t.chambers[0]:
                violations.append("torus %d: empty chamber with no essentials" % i)
        ess_seen.extend(t.essentials)
        con_seen.extend(t.contractibles())
    for name, occurrences in (("essential", ess_seen), ("contractible", con_seen)):
        counts = {}
        for c in occurrences:
            counts[c] = counts.get(c, 0) + 1
        for c in sorted(counts):
            if counts[c] > 1:
                violations.append("duplicate %s %d" % (name, c))
    ess_set, con_set = set(ess_seen), set(con_seen)
    domain = set(data.signs)
    for c in sorted(domain - ess_set):
        violations.append("crossing %d has a sign but no essential preimage" % c)
    for c in sorted(domain - con_set):
        violations.append("crossing %d has a sign but no contractible preimage" % c)
    for c in sorted((ess_set | con_set) - domain):
        violations.append("crossing %d appears in a torus but has no sign" % c)
    for c in sorted(ess_set ^ con_set):
        violations.append(
            "crossing %d must appear exactly once as essential and once as "
            "contractible" % c
        )
    for c, s in sorted(data.signs.items()):
        if s not in (1, -1):
            violations.append("crossing %d: sign must be +1 or -1" % c)
    return ValidationReport(tuple(violations))


# ---------------------------------------------------------------------------
# Symmetry helpers.  All operations elsewhere are required to be equivariant
# under these; tests exercise that directly.


def rotate_component(code: GaussCode, index: int, shift: int) -> GaussCode:
    comps = list(code.components)
    comp = comps[index]
    if comp:
        shift %= len(comp)
        comps[index] = comp[shift:] + comp[:shift]
    return GaussCode(tuple(comps))


def permute_components(code: GaussCode, perm: Iterable[int]) -> GaussCode:
    perm = tuple(perm)
    return GaussCode(tuple(code.components[i] for i in perm))


def relabel_code(code: GaussCode, mapping: Mapping[int, int]) -> GaussCode:
    return GaussCode(
        tuple(
            tuple(Passage(mapping[p.crossing], p.role, p.sign) for p in comp)
            for comp in code.components
        )
    )


def relabel_ribbon(data: SolidRibbonData, mapping: Mapping[int, int]) -> SolidRibbonData:
    tori = tuple(
        Torus(
            tuple(mapping[e] for e in t.essentials),
            tuple(frozenset(mapping[c] for c in ch) for ch in t.chambers),
        )
        for t in data.tori
    )
    return SolidRibbonData(tori, {mapping[c]: s for c, s in data.signs.items()})


def all_relabelings(ids):
    """All bijections from ``ids`` onto 1..n, as dicts."""
    ids = sorted(ids)
    for perm in itertools.permutations(range(1, len(ids) + 1)):
        yield dict(zip(ids, perm))
