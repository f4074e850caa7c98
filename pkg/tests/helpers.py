"""Shared corpus builders and independent oracles for the test suite.

Everything here is deliberately naive and independent of the package's own
search/canonicalization machinery, so it can serve as an oracle for it.
"""

from __future__ import annotations

import itertools
import random

from weldlink.model import (
    GaussCode,
    OVER,
    Passage,
    SolidRibbonData,
    Torus,
    UNDER,
    all_relabelings,
    permute_components,
    relabel_code,
    rotate_component,
)
from weldlink.search import enumerate_codes


def small_codes(max_crossings, components):
    """All valid codes, one per relabeling orbit (first-appearance labels)."""
    return list(enumerate_codes(max_crossings, components))


def _cyclic_orders(group):
    """One linear word per cyclic order of ``group`` (first element fixed)."""
    if not group:
        return [()]
    head, rest = group[0], group[1:]
    return [(head,) + p for p in itertools.permutations(rest)]


def enumerate_ribbons(n_singularities, n_tori, sign_choices=(1, -1)):
    """All valid SolidRibbonData with exactly the given counts.

    Every singularity id in 1..n appears once as an essential and once as a
    contractible; signs range over ``sign_choices`` per singularity.
    """
    ids = list(range(1, n_singularities + 1))
    out = []
    for ess_assign in itertools.product(range(n_tori), repeat=n_singularities):
        groups = [
            [c for c, g in zip(ids, ess_assign) if g == ti] for ti in range(n_tori)
        ]
        for orders in itertools.product(*[_cyclic_orders(g) for g in groups]):
            # chamber slots: one per essential; essential-free tori get one
            # optional slot realizing form (b) when nonempty, form (c) if not
            slots = []  # (torus, chamber index)
            for ti, word in enumerate(orders):
                if word:
                    slots.extend((ti, k) for k in range(len(word)))
                else:
                    slots.append((ti, 0))
            for placement in itertools.product(range(len(slots)), repeat=n_singularities):
                chambers = {}
                for c, si in zip(ids, placement):
                    chambers.setdefault(slots[si], set()).add(c)
                tori = []
                for ti, word in enumerate(orders):
                    if word:
                        tori.append(
                            Torus(
                                word,
                                tuple(
                                    frozenset(chambers.get((ti, k), ()))
                                    for k in range(len(word))
                                ),
                            )
                        )
                    elif (ti, 0) in chambers:
                        tori.append(Torus((), (frozenset(chambers[(ti, 0)]),)))
                    else:
                        tori.append(Torus((), ()))
                for signs in itertools.product(sign_choices, repeat=n_singularities):
                    out.append(
                        SolidRibbonData(tuple(tori), dict(zip(ids, signs)))
                    )
    return out


def random_code(rng, max_crossings=6, max_components=3):
    """A random valid Gauss code (arbitrary labels, rotations, signs)."""
    n_comp = rng.randint(1, max_components)
    k = rng.randint(0, max_crossings)
    labels = rng.sample(range(1, 4 * max_crossings + 1), k)
    passages = []
    for c in labels:
        s = rng.choice((1, -1))
        passages.append(Passage(c, OVER, s))
        passages.append(Passage(c, UNDER, s))
    rng.shuffle(passages)
    cuts = sorted(rng.randint(0, len(passages)) for _ in range(n_comp - 1))
    comps = []
    prev = 0
    for cut in cuts + [len(passages)]:
        comps.append(tuple(passages[prev:cut]))
        prev = cut
    return GaussCode(tuple(comps))


def brute_force_orbit_min(code):
    """Exhaustive minimum over relabelings, permutations, rotations, and OC
    swap sequences; oracle for canonical_form on tiny codes."""
    from weldlink.moves import applicable_moves, apply_move

    # close under OC moves first
    seen = {_frozen(code)}
    frontier = [code]
    variants = [code]
    while frontier:
        cur = frontier.pop()
        for inst in applicable_moves(cur, ("OC",)):
            nxt = apply_move(cur, inst)
            f = _frozen(nxt)
            if f not in seen:
                seen.add(f)
                frontier.append(nxt)
                variants.append(nxt)
    best = None
    ids = sorted(code.crossings())
    for variant in variants:
        for mapping in all_relabelings(ids):
            relabeled = relabel_code(variant, mapping)
            for perm in itertools.permutations(range(len(code.components))):
                permuted = permute_components(relabeled, perm)
                rotations = [permuted]
                for ci, comp in enumerate(permuted.components):
                    rotations = [
                        rotate_component(r, ci, s)
                        for r in rotations
                        for s in range(max(1, len(comp)))
                    ]
                for rot in rotations:
                    enc = tuple(
                        tuple(p.key() for p in comp) for comp in rot.components
                    )
                    if best is None or enc < best:
                        best = enc
    return best


def _frozen(code):
    return tuple(tuple(p.key() for p in comp) for comp in code.components)


def seeded_rng(name):
    return random.Random("weldlink:" + name)
