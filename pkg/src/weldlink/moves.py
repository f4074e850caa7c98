"""Welded Reidemeister moves as local rewrite rules on Gauss words.

The move table (R1, R2, R3, OC in all consistent orientations) is not written
down by hand: :func:`generate_move_table` enumerates small planar tangles with
explicit coordinates and orientation parameters, reads off each tangle's Gauss
subwords and crossing signs, and dedupes the results.  The table ships as a
golden JSON file which tests regenerate and compare byte for byte.

Pattern semantics:

* delete kinds (R1_delete, R2_delete) match cyclically adjacent passage pairs
  and remove all matched passages;
* R3 and OC match adjacency pairs and swap each pair in place;
* insert kinds (R1_insert, R2_insert) place fresh-crossing passage groups into
  chosen gaps of the cyclic words.

Adjacency is cyclic within a component; different constraints of one pattern
may bind the same or different components.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from importlib import resources

from .model import GaussCode, OVER, UNDER, Passage

TABLE_FORMAT = "weldlink/move-table"
TABLE_VERSION = 1

KINDS = ("R1_insert", "R1_delete", "R2_insert", "R2_delete", "R3", "OC")
_SIGN_CHAR = {1: "+", -1: "-", None: "*"}
_CHAR_SIGN = {"+": 1, "-": -1, "*": None}


class StaleInstanceError(ValueError):
    """The instance's bindings no longer match the code it is applied to."""


@dataclass(frozen=True)
class PassageTemplate:
    """A passage with the crossing abstracted to a variable index."""

    var: int
    role: str
    sign: int | None  # None = unconstrained

    def matches(self, passage, binding):
        if passage.role != self.role:
            return False
        if self.sign is not None and passage.sign != self.sign:
            return False
        bound = binding.get(self.var)
        return bound is None or bound == passage.crossing

    def to_obj(self):
        return [self.var, self.role, _SIGN_CHAR[self.sign]]

    @classmethod
    def from_obj(cls, obj):
        return cls(obj[0], obj[1], _CHAR_SIGN[obj[2]])


@dataclass(frozen=True)
class MovePattern:
    """An oriented local rewrite rule.

    ``pairs`` are cyclic-adjacency constraints (delete/swap kinds); ``groups``
    are insertion templates (insert kinds), one group per insertion gap.
    """

    kind: str
    variant: str
    pairs: tuple = ()
    groups: tuple = ()

    @property
    def crossing_delta(self):
        return {
            "R1_insert": 1,
            "R1_delete": -1,
            "R2_insert": 2,
            "R2_delete": -2,
            "R3": 0,
            "OC": 0,
        }[self.kind]

    def variables(self):
        out = set()
        for a, b in self.pairs:
            out.update((a.var, b.var))
        for group in self.groups:
            out.update(t.var for t in group)
        return sorted(out)

    def to_obj(self):
        obj = {"kind": self.kind, "variant": self.variant}
        if self.pairs:
            obj["pairs"] = [[a.to_obj(), b.to_obj()] for a, b in self.pairs]
        if self.groups:
            obj["groups"] = [[t.to_obj() for t in g] for g in self.groups]
        return obj

    @classmethod
    def from_obj(cls, obj):
        pairs = tuple(
            (PassageTemplate.from_obj(a), PassageTemplate.from_obj(b))
            for a, b in obj.get("pairs", ())
        )
        groups = tuple(
            tuple(PassageTemplate.from_obj(t) for t in g) for g in obj.get("groups", ())
        )
        return cls(obj["kind"], obj["variant"], pairs, groups)


@dataclass(frozen=True)
class MoveInstance:
    """A pattern bound to concrete crossings and positions on one code.

    ``sites[i] = (component, position)`` locates the first slot of adjacency
    constraint ``i``; ``gaps[i] = (component, gap)`` locates insertion group
    ``i`` (the group lands before index ``gap``); ``fresh`` maps pattern
    variables (in sorted order) to the crossing identifiers an insert creates.
    """

    pattern: MovePattern
    binding: tuple = ()  # sorted (var, crossing) pairs, delete/swap kinds
    sites: tuple = ()
    gaps: tuple = ()
    fresh: tuple = ()

    def describe(self):
        bits = ["%s/%s" % (self.pattern.kind, self.pattern.variant)]
        if self.sites:
            bits.append("at " + ",".join("c%d:%d" % s for s in self.sites))
        if self.gaps:
            bits.append("gaps " + ",".join("c%d:%d" % g for g in self.gaps))
        if self.fresh:
            bits.append("new " + ",".join(str(c) for c in self.fresh))
        return " ".join(bits)


# ---------------------------------------------------------------------------
# Planar tangle oracle.


def _det(u, v):
    return u[0] * v[1] - u[1] * v[0]


def _r1_tangles():
    """Kinks on one strand: loop chirality x which passage comes first."""
    variants = {}
    for chirality in (1, -1):  # loop turning left (+1) or right (-1)
        d_first = (1, 0)
        d_second = (0, chirality)
        for first_role in (OVER, UNDER):
            if first_role == OVER:
                sign = _det(d_first, d_second)
            else:
                sign = _det(d_second, d_first)
            word = (
                PassageTemplate(0, first_role, sign),
                PassageTemplate(0, UNDER if first_role == OVER else OVER, sign),
            )
            name = "%s%s" % (first_role, _SIGN_CHAR[sign])
            variants.setdefault(name, word)
    assert len(variants) == 4
    return variants


def _r2_tangles():
    """Two strands, one passing over the other twice, all orientations.

    Strand X crosses strand Y at A=(0,0) and B=(0,1); Y runs vertically.
    """
    variants = {}
    for over_is_x in (True, False):
        for dx in (1, -1):  # X traverses A then B iff dx == +1
            for ey in (1, -1):  # Y traverses A then B iff ey == +1
                x_dirs = {"A": (dx, 0), "B": (-dx, 0)}
                y_dirs = {"A": (0, ey), "B": (0, ey)}
                x_order = ["A", "B"] if dx == 1 else ["B", "A"]
                y_order = ["A", "B"] if ey == 1 else ["B", "A"]
                over_dirs, under_dirs = (
                    (x_dirs, y_dirs) if over_is_x else (y_dirs, x_dirs)
                )
                over_order, under_order = (
                    (x_order, y_order) if over_is_x else (y_order, x_order)
                )
                signs = {
                    p: _det(over_dirs[p], under_dirs[p]) for p in ("A", "B")
                }
                var = {over_order[0]: 0, over_order[1]: 1}
                over_pair = tuple(
                    PassageTemplate(var[p], OVER, signs[p]) for p in over_order
                )
                under_pair = tuple(
                    PassageTemplate(var[p], UNDER, signs[p]) for p in under_order
                )
                assert signs["A"] == -signs["B"]
                parallel = var[under_order[0]] == 0
                name = "%s%s" % (
                    "par" if parallel else "anti",
                    _SIGN_CHAR[over_pair[0].sign],
                )
                variants.setdefault(name, (over_pair, under_pair))
    assert len(variants) == 4
    return variants


def _r3_tangles():
    """Top strand slides across the middle/bottom crossing, all orientations.

    Before the move: B is the x-axis, M the y-axis, T the line x + y = 3.
    Crossings: T over M at (0,3) -> var 0; T over B at (3,0) -> var 1;
    M over B at the origin -> var 2.
    """
    variants = {}
    points = {0: (0, 3), 1: (3, 0), 2: (0, 0)}
    for b in (1, -1):
        for m in (1, -1):
            for t in (1, -1):
                d = {"T": (t, -t), "M": (0, m), "B": (b, 0)}
                signs = {
                    0: _det(d["T"], d["M"]),
                    1: _det(d["T"], d["B"]),
                    2: _det(d["M"], d["B"]),
                }
                # order of the two crossings met along each strand, by the
                # signed position of each crossing point along the strand
                def ordered(strand, crossings):
                    dv = d[strand]
                    return sorted(
                        crossings,
                        key=lambda c: points[c][0] * dv[0] + points[c][1] * dv[1],
                    )

                roles = {
                    "T": {0: OVER, 1: OVER},
                    "M": {0: UNDER, 2: OVER},
                    "B": {1: UNDER, 2: UNDER},
                }
                pairs = []
                for strand in ("B", "M", "T"):
                    first, second = ordered(strand, sorted(roles[strand]))
                    pairs.append(
                        (
                            PassageTemplate(first, roles[strand][first], signs[first]),
                            PassageTemplate(
                                second, roles[strand][second], signs[second]
                            ),
                        )
                    )
                name = "b%sm%st%s" % (
                    _SIGN_CHAR[b],
                    _SIGN_CHAR[m],
                    _SIGN_CHAR[t],
                )
                variants.setdefault(name, tuple(pairs))
    assert len(variants) == 8
    return variants


def generate_move_table():
    """The complete deduplicated table of oriented welded move patterns."""
    patterns = []
    r1 = _r1_tangles()
    for name in sorted(r1):
        patterns.append(MovePattern("R1_insert", name, groups=(r1[name],)))
        patterns.append(MovePattern("R1_delete", name, pairs=(r1[name],)))
    r2 = _r2_tangles()
    for name in sorted(r2):
        over_pair, under_pair = r2[name]
        patterns.append(MovePattern("R2_insert", name, groups=(over_pair, under_pair)))
        patterns.append(
            MovePattern("R2_delete", name, pairs=(over_pair, under_pair))
        )
    r3 = _r3_tangles()
    for name in sorted(r3):
        patterns.append(MovePattern("R3", name, pairs=r3[name]))
    patterns.append(
        MovePattern(
            "OC",
            "swap",
            pairs=((PassageTemplate(0, OVER, None), PassageTemplate(1, OVER, None)),),
        )
    )
    patterns.sort(key=lambda p: (KINDS.index(p.kind), p.variant))
    return patterns


def table_to_json(patterns) -> str:
    obj = {
        "format": TABLE_FORMAT,
        "version": TABLE_VERSION,
        "patterns": [p.to_obj() for p in patterns],
    }
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def table_from_json(text: str):
    obj = json.loads(text)
    if obj.get("format") != TABLE_FORMAT or obj.get("version") != TABLE_VERSION:
        raise ValueError("unrecognized move table header")
    return [MovePattern.from_obj(p) for p in obj["patterns"]]


_TABLE = None


def move_table():
    """The golden move table shipped with the package (loaded once)."""
    global _TABLE
    if _TABLE is None:
        text = (resources.files("weldlink") / "data" / "move_table.json").read_text()
        _TABLE = table_from_json(text)
    return _TABLE


# ---------------------------------------------------------------------------
# Matching and application.


def _match_pairs(code, pairs):
    """All ways to bind the adjacency constraints, as (binding, sites) pairs.

    Deterministic order: constraint sites are enumerated ascending by
    (component, position), depth first in constraint order.
    """
    results = []
    comps = code.components

    def extend(idx, binding, sites, used):
        if idx == len(pairs):
            results.append((dict(binding), tuple(sites)))
            return
        ta, tb = pairs[idx]
        for ci, comp in enumerate(comps):
            n = len(comp)
            if n < 2:
                continue
            for i in range(n):
                j = (i + 1) % n
                if (ci, i) in used or (ci, j) in used:
                    continue
                pa, pb = comp[i], comp[j]
                if not ta.matches(pa, binding):
                    continue
                trial = dict(binding)
                trial[ta.var] = pa.crossing
                if not tb.matches(pb, trial):
                    continue
                trial[tb.var] = pb.crossing
                # distinct variables must bind distinct crossings
                vals = list(trial.values())
                if len(set(vals)) != len(set(trial)):
                    continue
                extend(
                    idx + 1,
                    trial,
                    sites + [(ci, i)],
                    used | {(ci, i), (ci, j)},
                )
        return

    extend(0, {}, [], frozenset())
    return results


def _gaps(code):
    """Insertion gaps: position g inserts before index g of the cyclic word.

    A component of length n has n gaps (all equivalent to rotations of each
    other only when the word is symmetric); an empty component has one.
    """
    out = []
    for ci, comp in enumerate(code.components):
        for g in range(max(1, len(comp))):
            out.append((ci, g))
    return out


def applicable_moves(code: GaussCode, kinds=None):
    """All move instances applicable to ``code``, in deterministic order.

    ``kinds`` restricts to a subset of move kinds; insert instances use fresh
    identifiers starting at max existing + 1.
    """
    if kinds is None:
        kinds = KINDS
    kinds = set(kinds)
    instances = []
    seen_slotsets = set()
    base = code.max_crossing()
    gaps = _gaps(code)
    for pattern in move_table():
        if pattern.kind not in kinds:
            continue
        if pattern.pairs:
            for binding, sites in _match_pairs(code, pattern.pairs):
                # matches binding the same unordered slot pairs rewrite
                # identically (e.g. both rotations of a length-2 component)
                slots = frozenset(
                    frozenset(((ci, i), (ci, (i + 1) % len(code.components[ci]))))
                    for (ci, i) in sites
                )
                if (pattern.kind, slots) in seen_slotsets:
                    continue
                seen_slotsets.add((pattern.kind, slots))
                instances.append(
                    MoveInstance(
                        pattern,
                        binding=tuple(sorted(binding.items())),
                        sites=sites,
                    )
                )
        else:
            fresh = tuple(base + 1 + i for i in range(len(pattern.variables())))
            if len(pattern.groups) == 1:
                for gap in gaps:
                    instances.append(
                        MoveInstance(pattern, gaps=(gap,), fresh=fresh)
                    )
            else:
                for gap_pair in itertools.product(gaps, repeat=len(pattern.groups)):
                    instances.append(
                        MoveInstance(pattern, gaps=tuple(gap_pair), fresh=fresh)
                    )
    return instances


def _check_sites(code, inst):
    binding = dict(inst.binding)
    comps = code.components
    if len(inst.sites) != len(inst.pattern.pairs):
        raise StaleInstanceError("site count does not match pattern")
    for (ci, i), (ta, tb) in zip(inst.sites, inst.pattern.pairs):
        if ci >= len(comps):
            raise StaleInstanceError("component %d does not exist" % ci)
        comp = comps[ci]
        n = len(comp)
        if n < 2 or i >= n:
            raise StaleInstanceError("position %d out of range" % i)
        j = (i + 1) % n
        pa, pb = comp[i], comp[j]
        if not (
            ta.matches(pa, binding)
            and binding.get(ta.var, pa.crossing) == pa.crossing
            and tb.matches(pb, binding)
            and binding.get(tb.var, pb.crossing) == pb.crossing
        ):
            raise StaleInstanceError(
                "passages at component %d position %d no longer match %s"
                % (ci, i, inst.pattern.variant)
            )
    return binding


def apply_move(code: GaussCode, inst: MoveInstance) -> GaussCode:
    """Apply a bound move instance; raises :class:`StaleInstanceError` if the
    bindings no longer match ``code``."""
    kind = inst.pattern.kind
    if kind in ("R1_delete", "R2_delete"):
        _check_sites(code, inst)
        doomed = set()
        for (ci, i) in inst.sites:
            n = len(code.components[ci])
            doomed.add((ci, i))
            doomed.add((ci, (i + 1) % n))
        comps = tuple(
            tuple(p for j, p in enumerate(comp) if (ci, j) not in doomed)
            for ci, comp in enumerate(code.components)
        )
        return GaussCode(comps)
    if kind in ("R3", "OC"):
        _check_sites(code, inst)
        comps = [list(c) for c in code.components]
        for (ci, i) in inst.sites:
            n = len(comps[ci])
            j = (i + 1) % n
            comps[ci][i], comps[ci][j] = comps[ci][j], comps[ci][i]
        return GaussCode(tuple(tuple(c) for c in comps))
    # insert kinds
    existing = set(code.crossings())
    if any(c in existing for c in inst.fresh):
        raise StaleInstanceError("fresh identifiers already in use")
    variables = inst.pattern.variables()
    if len(inst.fresh) != len(variables):
        raise StaleInstanceError("fresh identifier count does not match pattern")
    var_to_id = dict(zip(variables, inst.fresh))
    if len(inst.gaps) != len(inst.pattern.groups):
        raise StaleInstanceError("gap count does not match pattern")
    comps = [list(c) for c in code.components]
    jobs = []
    for order, ((ci, g), group) in enumerate(zip(inst.gaps, inst.pattern.groups)):
        if ci >= len(comps):
            raise StaleInstanceError("component %d does not exist" % ci)
        if g >= max(1, len(comps[ci])):
            raise StaleInstanceError("gap %d out of range" % g)
        passages = [
            Passage(var_to_id[t.var], t.role, t.sign if t.sign is not None else 1)
            for t in group
        ]
        jobs.append((ci, g, order, passages))
    # insert later gaps first so earlier indices stay valid; at an equal gap,
    # later groups go in first so the earlier group ends up in front
    for ci, g, _, passages in sorted(jobs, key=lambda j: (j[0], j[1], j[2]), reverse=True):
        comps[ci][g:g] = passages
    return GaussCode(tuple(tuple(c) for c in comps))
