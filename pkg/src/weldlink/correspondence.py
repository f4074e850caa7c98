"""The Conn and Tube maps, mutually inverse conversions between the two models.

``conn_map`` turns solid ribbon torus combinatorics into a Gauss code: each
essential preimage becomes the Under passage of its crossing, followed by the
Over passages of the chamber after it; an over-only torus becomes a loop of
Over passages.  Chamber contents are unordered, so over runs are emitted
sorted ascending by crossing identifier (any fixed order differs only by OC
moves).

``tube_map`` inverts this on Gauss codes: the Under passages of a component
give the essential cycle, and the Over passages strictly between consecutive
Under passages give the chamber after the earlier one.

``oc_canonicalize`` sorts every maximal cyclic run of Over passages ascending,
which is exactly ``conn_map(tube_map(code))``.
"""

from __future__ import annotations

from .model import (
    OVER,
    UNDER,
    GaussCode,
    Passage,
    SolidRibbonData,
    Torus,
    validate_gauss_code,
    validate_solid_ribbon,
)


class InvalidInputError(ValueError):
    """Raised when an operation is handed data that fails validation."""

    def __init__(self, report):
        super().__init__("; ".join(report.violations))
        self.report = report


def _require_code(code):
    report = validate_gauss_code(code)
    if not report.ok:
        raise InvalidInputError(report)


def _require_ribbon(data):
    report = validate_solid_ribbon(data)
    if not report.ok:
        raise InvalidInputError(report)


def conn_map(data: SolidRibbonData) -> GaussCode:
    """Build the welded diagram (as a Gauss code) of a solid ribbon torus link.

    One component per torus, in torus order, starting at the stored first
    essential.  Signs are copied from the sign map.
    """
    _require_ribbon(data)
    signs = data.signs
    comps = []
    for t in data.tori:
        comp = []
        if t.essentials:
            for e, chamber in zip(t.essentials, t.chambers):
                comp.append(Passage(e, UNDER, signs[e]))
                comp.extend(Passage(c, OVER, signs[c]) for c in sorted(chamber))
        elif t.chambers:
            comp.extend(Passage(c, OVER, signs[c]) for c in sorted(t.chambers[0]))
        comps.append(tuple(comp))
    return GaussCode(tuple(comps))


def tube_map(code: GaussCode) -> SolidRibbonData:
    """Recover the solid ribbon torus combinatorics of a Gauss code."""
    _require_code(code)
    tori = []
    for comp in code.components:
        under_positions = [i for i, p in enumerate(comp) if p.role == UNDER]
        if not under_positions:
            if not comp:
                tori.append(Torus((), ()))
            else:
                tori.append(Torus((), (frozenset(p.crossing for p in comp),)))
            continue
        essentials = tuple(comp[i].crossing for i in under_positions)
        n = len(comp)
        chambers = []
        for k, i in enumerate(under_positions):
            j = under_positions[(k + 1) % len(under_positions)]
            chamber = set()
            pos = (i + 1) % n
            while pos != j:
                chamber.add(comp[pos].crossing)
                pos = (pos + 1) % n
            chambers.append(frozenset(chamber))
        tori.append(Torus(essentials, tuple(chambers)))
    return SolidRibbonData(tuple(tori), dict(code.crossings()))


def oc_canonicalize(code: GaussCode) -> GaussCode:
    """Sort each maximal cyclic run of Over passages ascending by crossing id.

    Equals ``conn_map(tube_map(code))`` and is idempotent; Under passages and
    their cyclic order are untouched.
    """
    comps = []
    for comp in code.components:
        under_positions = [i for i, p in enumerate(comp) if p.role == UNDER]
        if not under_positions:
            comps.append(tuple(sorted(comp, key=lambda p: p.crossing)))
            continue
        n = len(comp)
        out = list(comp)
        start = under_positions[0]
        run = []  # (position, passage) of the current over run
        for step in range(1, n + 1):
            pos = (start + step) % n
            p = comp[pos]
            if p.role == OVER:
                run.append((pos, p))
            else:
                for (slot, _), q in zip(
                    run, sorted((q for _, q in run), key=lambda q: q.crossing)
                ):
                    out[slot] = q
                run = []
        comps.append(tuple(out))
    return GaussCode(tuple(comps))


def oc_swap_path(code: GaussCode):
    """A witness list of single adjacent-Over swaps carrying ``code`` to its
    OC-canonical form.  Each entry is ``(component, position)``: swap the Over
    passages at ``position`` and ``position + 1`` (cyclically).

    Replayable: applying the swaps in order yields ``oc_canonicalize(code)``
    up to rotation of each component.
    """
    swaps = []
    comps = [list(c) for c in code.components]
    for ci, comp in enumerate(comps):
        n = len(comp)
        if n < 2:
            continue
        # cyclic bubble sort restricted to adjacent Over pairs
        changed = True
        while changed:
            changed = False
            for i in range(n):
                j = (i + 1) % n
                a, b = comp[i], comp[j]
                if (
                    a.role == OVER
                    and b.role == OVER
                    and a.crossing > b.crossing
                    and not _whole_component_sorted_cyclically(comp, i)
                ):
                    comp[i], comp[j] = b, a
                    swaps.append((ci, i))
                    changed = True
    return swaps


def _whole_component_sorted_cyclically(comp, i):
    """Guard against infinite cycling on all-Over components: once the linear
    list is sorted ascending, stop swapping across the wrap position."""
    if any(p.role == UNDER for p in comp):
        return False
    ids = [p.crossing for p in comp]
    return ids == sorted(ids) and i == len(comp) - 1
