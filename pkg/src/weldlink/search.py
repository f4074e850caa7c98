"""Canonical forms, bounded equivalence search, and desk-scale census.

A canonical form quotients out every representation choice a Gauss code has:
crossing labels, component order, rotation of each cyclic word, and OC moves.
It is computed by explicit orbit minimization, which is exact and dependency
free but factorial in the crossing count; the census cap keeps this at desk
scale.

Equivalence search is bidirectional breadth-first search over canonical keys
using the full move table, bounded by a crossing-count and state-count budget.
Verdicts carry witnesses: a replayable path of move steps, or the name and
values of a separating invariant.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .correspondence import _require_code
from .invariants import FINGERPRINT_FIELDS, fingerprint
from .model import GaussCode, OVER, UNDER, Passage
from .moves import KINDS, apply_move, applicable_moves

CENSUS_CAP = 4


@dataclass(frozen=True)
class Budget:
    max_crossings: int = 6
    max_states: int = 1000


def _encode(code):
    return tuple(tuple(p.key() for p in comp) for comp in code.components)


def _decode(encoding):
    return GaussCode(
        tuple(
            tuple(
                Passage(c, UNDER if role == 0 else OVER, 1 if s == 0 else -1)
                for role, c, s in comp
            )
            for comp in encoding
        )
    )


def _slot_plan(comp):
    """Break a component (rotated to start at an Under passage, or all-Over)
    into under slots and maximal Over runs, in traversal order."""
    items = []
    run = []
    for p in comp:
        if p.role == UNDER:
            if run:
                items.append(("run", run))
                run = []
            items.append(("under", p))
        else:
            run.append(p)
    if run:
        items.append(("run", run))
    return items


def _min_encodings(rotated_comps):
    """All locally-minimal encodings over crossing relabelings and OC moves of
    the given rotation/permutation choice.

    Identifiers are assigned greedily in first-appearance order, which is the
    lexicographic optimum for Under slots; inside an Over run the display is
    forced up to the order in which unassigned same-sign members are numbered,
    so those ties branch.
    """
    plans = [_slot_plan(c) for c in rotated_comps]
    results = []

    def run_orderings(members, assign):
        fixed = sorted(
            ((assign[p.crossing], p) for p in members if p.crossing in assign)
        )
        free = [p for p in members if p.crossing not in assign]
        pos = sorted({p.sign for p in free}, key=lambda s: 0 if s == 1 else 1)
        groups = [[p for p in free if p.sign == s] for s in pos]
        for ordering in itertools.product(
            *(itertools.permutations(g) for g in groups)
        ):
            flat = [p for group in ordering for p in group]
            yield [p for _, p in fixed], flat

    def dfs(ci, ii, assign, next_id, acc, cur):
        if ci == len(plans):
            results.append(tuple(acc))
            return
        if ii == len(plans[ci]):
            acc.append(tuple(cur))
            dfs(ci + 1, 0, assign, next_id, acc, [])
            acc.pop()
            return
        kind, payload = plans[ci][ii]
        if kind == "under":
            p = payload
            if p.crossing not in assign:
                assign = dict(assign)
                assign[p.crossing] = next_id
                next_id += 1
            cur.append((0, assign[p.crossing], 0 if p.sign == 1 else 1))
            dfs(ci, ii + 1, assign, next_id, acc, cur)
            cur.pop()
            return
        for fixed, free in run_orderings(payload, assign):
            sub_assign = dict(assign)
            sub_next = next_id
            added = []
            for p in fixed:
                added.append((1, sub_assign[p.crossing], 0 if p.sign == 1 else 1))
            for p in free:
                sub_assign[p.crossing] = sub_next
                added.append((1, sub_next, 0 if p.sign == 1 else 1))
                sub_next += 1
            cur.extend(added)
            dfs(ci, ii + 1, sub_assign, sub_next, acc, cur)
            del cur[len(cur) - len(added) :]

    dfs(0, 0, {}, 1, [], [])
    return results


def canonical_form(code: GaussCode):
    """(representative, key): the lexicographic minimum of the OC-canonical
    form over all crossing relabelings, component permutations, and rotations.

    Idempotent and invariant under all four representation choices; equal keys
    characterize codes that differ only by those choices.  Rotations are only
    tried at Under passages (an Over-initial rotation encodes strictly larger)
    and relabelings are folded into a greedy first-appearance assignment that
    branches only on OC-tied Over runs, so the search stays polynomial for
    typical codes while computing the exact orbit minimum.
    """
    _require_code(code)
    best = None
    for perm in itertools.permutations(range(len(code.components))):
        ordered = [code.components[i] for i in perm]
        start_options = []
        for comp in ordered:
            unders = [i for i, p in enumerate(comp) if p.role == UNDER]
            start_options.append(unders if unders else [0])
        for starts in itertools.product(*start_options):
            rotated = [
                comp[s:] + comp[:s] for comp, s in zip(ordered, starts)
            ]
            for enc in _min_encodings(rotated):
                if best is None or enc < best:
                    best = enc
    return _decode(best), best


def canonical_key(code: GaussCode):
    return canonical_form(code)[1]


@dataclass(frozen=True)
class EquivalenceVerdict:
    """status 'equivalent' carries a replayable move path as a tuple of steps,
    each step a tuple of instances (an OC prefix plus one structural move)
    bound to the canonical representative current at that step; 'distinct'
    names a separating invariant; 'unknown' means budget exhausted."""

    status: str
    path: tuple = ()
    separating_invariant: str = ""
    values: tuple = ()

    @property
    def equivalent(self):
        return self.status == "equivalent"


def replay_path(code: GaussCode, path):
    """Apply a verdict's move path starting from ``code``'s canonical
    representative; returns the final canonical (representative, key).

    Each step's instances apply in sequence without re-canonicalizing;
    the code is canonicalized between steps.
    """
    rep, key = canonical_form(code)
    for step in path:
        cur = rep
        for inst in step:
            cur = apply_move(cur, inst)
        rep, key = canonical_form(cur)
    return rep, key


def _oc_orbit(rep):
    """Every OC-variant of ``rep``, mapped to an instance path reaching it."""
    paths = {rep: ()}
    queue = [rep]
    while queue:
        code = queue.pop()
        for inst in applicable_moves(code, ("OC",)):
            nxt = apply_move(code, inst)
            if nxt not in paths:
                paths[nxt] = paths[code] + (inst,)
                queue.append(nxt)
    return paths

_STRUCTURAL_KINDS = tuple(k for k in KINDS if k != "OC")


def _neighbors(rep, budget):
    """(step, child key, child representative) for every in-budget move.

    Canonical keys already quotient out OC, so an OC move alone is a self
    loop; but a structural move may only be applicable after rearranging Over
    runs.  Expanding the whole OC orbit of the representative keeps the key
    neighbor relation complete and symmetric.  Each step records the OC
    prefix followed by the structural move.
    """
    out = []
    n_crossings = rep.crossing_count()
    for variant, prefix in _oc_orbit(rep).items():
        for inst in applicable_moves(variant, _STRUCTURAL_KINDS):
            if n_crossings + inst.pattern.crossing_delta > budget.max_crossings:
                continue
            child = apply_move(variant, inst)
            crep, ckey = canonical_form(child)
            out.append((prefix + (inst,), ckey, crep))
    return out


def _separating(a, b):
    fa, fb = fingerprint(a), fingerprint(b)
    for name, va, vb in zip(FINGERPRINT_FIELDS, fa, fb):
        if va != vb:
            return name, va, vb
    return None


def equivalent_within(a: GaussCode, b: GaussCode, budget: Budget) -> EquivalenceVerdict:
    """Decide equivalence within the budget, with a witness either way.

    Invariants are tried before searching; an 'equivalent' verdict's path
    replays via :func:`replay_path` from ``a``'s representative to ``b``'s key.
    """
    _require_code(a)
    _require_code(b)
    rep_a, key_a = canonical_form(a)
    rep_b, key_b = canonical_form(b)
    if key_a == key_b:
        return EquivalenceVerdict("equivalent", ())
    sep = _separating(rep_a, rep_b)
    if sep is not None:
        name, va, vb = sep
        return EquivalenceVerdict("distinct", separating_invariant=name, values=(va, vb))
    if max(rep_a.crossing_count(), rep_b.crossing_count()) > budget.max_crossings:
        return EquivalenceVerdict("unknown")

    # bidirectional BFS; parents[side][key] = (parent key, instance from parent)
    reps = {key_a: rep_a, key_b: rep_b}
    parents = {0: {key_a: None}, 1: {key_b: None}}
    frontiers = {0: [key_a], 1: [key_b]}
    while frontiers[0] and frontiers[1]:
        if len(parents[0]) + len(parents[1]) > budget.max_states:
            return EquivalenceVerdict("unknown")
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        new_frontier = []
        for key in frontiers[side]:
            for step, ckey, crep in _neighbors(reps[key], budget):
                if ckey in parents[side]:
                    continue
                reps.setdefault(ckey, crep)
                parents[side][ckey] = (key, step)
                new_frontier.append(ckey)
                if ckey in parents[1 - side]:
                    path = _stitch(ckey, parents, reps, budget)
                    return EquivalenceVerdict("equivalent", tuple(path))
        frontiers[side] = new_frontier
        if len(parents[0]) + len(parents[1]) > budget.max_states:
            return EquivalenceVerdict("unknown")
    return EquivalenceVerdict("unknown")


def _chain(key, side_parents):
    """Keys from the side's root to ``key``, with the step into each."""
    steps = []
    while side_parents[key] is not None:
        parent, step = side_parents[key]
        steps.append((parent, step, key))
        key = parent
    steps.reverse()
    return steps


def _stitch(meet, parents, reps, budget):
    """Assemble the a-to-b step path through the meeting key.

    The b-side chain is traversed in reverse; each reversed edge is realized
    by searching the child's neighbors for a step back to its parent, which
    always exists because every structural move has an inverse in the table
    and the neighbor relation is OC-closed, hence symmetric over keys.
    """
    path = [step for _, step, _ in _chain(meet, parents[0])]
    b_steps = _chain(meet, parents[1])
    for parent, _, child in reversed(b_steps):
        for step, ckey, _ in _neighbors(reps[child], budget):
            if ckey == parent:
                path.append(step)
                break
        else:
            raise RuntimeError("no inverse move found while stitching the path")
    return path


class CensusCapError(ValueError):
    pass


def enumerate_codes(max_crossings, components, sign_choices=(1, -1)):
    """All valid Gauss codes with exactly ``components`` components and at most
    ``max_crossings`` crossings, one representative per labeling orbit.

    Crossing identifiers are normalized to first-appearance order 1..k (every
    other labeling is a relabeling of one of these); rotations and component
    order are enumerated in full, signs over ``sign_choices`` per crossing.
    """
    for k in range(max_crossings + 1):
        word = []
        for arrangement in _arrangements(k, word):
            for cut_points in itertools.combinations(range(2 * k + components - 1), components - 1):
                comps = _split(arrangement, cut_points, components)
                for signs in itertools.product(sign_choices, repeat=k):
                    sign_of = {c: s for c, s in zip(range(1, k + 1), signs)}
                    yield GaussCode(
                        tuple(
                            tuple(Passage(c, role, sign_of[c]) for role, c in comp)
                            for comp in comps
                        )
                    )


def _arrangements(k, prefix, next_new=1, remaining=None):
    """Sequences of (role, crossing) using each crossing once per role, with
    crossings introduced in increasing order (first-appearance normal form)."""
    if remaining is None:
        remaining = {}
    length = 2 * k
    if len(prefix) == length:
        yield tuple(prefix)
        return
    # introduce the next new crossing
    if next_new <= k:
        for role in (OVER, UNDER):
            other = UNDER if role == OVER else OVER
            prefix.append((role, next_new))
            remaining[next_new] = other
            yield from _arrangements(k, prefix, next_new + 1, remaining)
            del remaining[next_new]
            prefix.pop()
    # or complete an open crossing
    for c in sorted(remaining):
        role = remaining.pop(c)
        prefix.append((role, c))
        yield from _arrangements(k, prefix, next_new, remaining)
        prefix.pop()
        remaining[c] = role


def _split(arrangement, cut_points, components):
    """Split a sequence into ``components`` parts via stars-and-bars cuts:
    ``cut_points`` are bar positions in the length ``len(seq) + components - 1``
    sequence-with-bars; the remaining positions fill the parts in order."""
    seq = list(arrangement)
    parts = [[] for _ in range(components)]
    part = 0
    seq_i = 0
    for pos in range(len(seq) + components - 1):
        if pos in cut_points:
            part += 1
        else:
            parts[part].append(seq[seq_i])
            seq_i += 1
    return [tuple(p) for p in parts]


@dataclass(frozen=True)
class CensusClass:
    key: tuple
    representative: GaussCode
    fingerprint: tuple
    size: int  # number of distinct canonical keys merged into this class


def census(max_crossings, components, budget: Budget):
    """Enumerate equivalence classes of codes at desk scale.

    All valid codes up to ``max_crossings`` crossings with the given component
    count are reduced to canonical keys; classes whose representatives the
    bounded search proves equivalent are merged.  Deterministic output order
    by key.
    """
    if max_crossings > CENSUS_CAP:
        raise CensusCapError(
            "census is capped at %d crossings, got %d" % (CENSUS_CAP, max_crossings)
        )
    keys = {}
    for code in enumerate_codes(max_crossings, components):
        rep, key = canonical_form(code)
        keys.setdefault(key, rep)
    ordered = sorted(keys)
    index = {key: i for i, key in enumerate(ordered)}
    prints = {key: fingerprint(keys[key]) for key in ordered}

    parent = list(range(len(ordered)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)

    by_print = {}
    for key in ordered:
        by_print.setdefault(prints[key], []).append(key)
    for group in by_print.values():
        for ka, kb in itertools.combinations(group, 2):
            if find(index[ka]) == find(index[kb]):
                continue
            verdict = equivalent_within(keys[ka], keys[kb], budget)
            if verdict.equivalent:
                union(index[ka], index[kb])

    classes = {}
    for key in ordered:
        root = find(index[key])
        classes.setdefault(root, []).append(key)
    out = []
    for root in sorted(classes):
        members = classes[root]
        lead = min(members)
        out.append(
            CensusClass(lead, keys[lead], prints[lead], len(members))
        )
    out.sort(key=lambda c: c.key)
    return out
