"""Homotopy moves: admissibility, bounding box, and rewrite action.

Families I and II carry full semantics.  Family I exchanges two adjacent
entries whose windows in the running slice are disjoint; family II slides a
vertex through an adjacent interchanger atom (naturality).  Families III-VI
parse and serialize but never match: their rewrite action needs the
quasistrict 4-category coherence theory and is out of scope here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .kernel import (
    Diagram,
    DiagramEntry,
    GeneratorRef,
    HomotopyAtom,
    HomotopyType,
    KernelError,
    PreconditionError,
    Signature,
    apply_entry,
    interchange,
    interchange_admissible,
    parse_homotopy_type,
    slice_at,
    _interchanger_pad,
)

__all__ = [
    "HomotopyType",
    "HomotopyBoxRange",
    "parse_homotopy_type",
    "homotopy_match",
    "homotopy_box",
    "homotopy_rewrite",
    "enumerate_homotopies",
]


@dataclass(frozen=True)
class HomotopyBoxRange:
    """Inclusive first/last entry positions a move touches."""

    first: int
    last: int


# Family II configurations: LHS entry order, interchanger variant, and the
# height offset of the atom relative to the vertex (0 = the crossing swaps the
# vertex's own window, -1 = the spectator sits below it in the slice).
_FAMILY_II = {
    1: ("gen_first", 1, 0),
    2: ("atom_first", 1, 0),
    3: ("gen_first", 2, 0),
    4: ("atom_first", 2, 0),
    5: ("gen_first", 1, -1),
    6: ("atom_first", 1, -1),
    7: ("gen_first", 2, -1),
    8: ("atom_first", 2, -1),
}


def _single_entry_generator(entry: DiagramEntry, sig: Signature):
    """The generator behind ``entry`` when its rule is single-entry on both sides."""
    if not isinstance(entry.atom, GeneratorRef):
        return None
    gen = sig.generator(entry.atom.id)
    if gen.dimension < 2 or gen.source is None or gen.target is None:
        return None
    if len(gen.source.entries) != 1 or len(gen.target.entries) != 1:
        return None
    return gen


def _swap_window_ii(d: Diagram, k: int, variant: int,
                    sig: Signature) -> Optional[tuple[DiagramEntry, DiagramEntry]]:
    """The swapped window for a family II move at ``k``, or None when inadmissible.

    The replacement pair is computed from the running slice and validated by
    replaying both orders; admissibility is exactly "the constructed window
    replays to the same slice".
    """
    order, atom_variant, offset = _FAMILY_II[variant]
    if d.dimension < 3 or k < 0 or k + 1 >= len(d.entries):
        return None
    e1, e2 = d.entries[k], d.entries[k + 1]
    if order == "gen_first":
        gen_entry, atom_entry = e1, e2
    else:
        atom_entry, gen_entry = e1, e2
    gen = _single_entry_generator(gen_entry, sig)
    if gen is None:
        return None
    if not isinstance(atom_entry.atom, HomotopyAtom):
        return None
    kind = atom_entry.atom.kind
    if kind.family != "I" or kind.variant != atom_variant:
        return None
    gh, ah = gen_entry.coords[0], atom_entry.coords[0]
    if order == "gen_first":
        if ah != gh + offset:
            return None
    else:
        # the vertex follows the crossing; its height names where its input
        # landed after the swap of (ah, ah+1)
        expected_gh = ah + 1 + offset  # offset 0 -> ah+1, offset -1 -> ah
        if gh != expected_gh:
            return None
    try:
        s = slice_at(d, k, sig)
        final = apply_entry(apply_entry(s, e1, sig), e2, sig)
    except KernelError:
        return None
    pattern0 = gen.source.entries[0]
    try:
        if order == "gen_first":
            # slide the vertex up: crossing first, vertex after
            new_atom = DiagramEntry(
                HomotopyAtom(kind), (ah,) + _interchanger_pad(s, ah, atom_variant)
            )
            s2 = interchange(s, ah, atom_variant, sig)
            new_h = ah + 1 if gh == ah else ah
            moved_input = s2.entries[new_h]
            deeper = tuple(c - p for c, p in zip(moved_input.coords, pattern0.coords))
            if any(c < 0 for c in deeper):
                return None
            new_gen = DiagramEntry(gen_entry.atom, (new_h,) + deeper)
            s3 = apply_entry(s2, new_gen, sig)
            pair = (new_atom, new_gen)
        else:
            # slide the vertex down: vertex first, crossing after
            new_h = ah + 1 if gh == ah else ah
            plain_input = s.entries[new_h]
            deeper = tuple(c - p for c, p in zip(plain_input.coords, pattern0.coords))
            if any(c < 0 for c in deeper):
                return None
            new_gen = DiagramEntry(gen_entry.atom, (new_h,) + deeper)
            s2 = apply_entry(s, new_gen, sig)
            new_atom = DiagramEntry(
                HomotopyAtom(kind), (ah,) + _interchanger_pad(s2, ah, atom_variant)
            )
            s3 = apply_entry(s2, new_atom, sig)
            pair = (new_gen, new_atom)
    except KernelError:
        return None
    if s3 != final:
        return None
    return pair


def homotopy_match(d: Diagram, p: tuple[int, ...], t: HomotopyType,
                   sig: Signature) -> bool:
    """Is the move ``t`` admissible at position ``p`` (entry-list height p[0])?"""
    if not p:
        return False
    h = p[0]
    if t.family == "I":
        return interchange_admissible(d, h, t.variant, sig)
    if t.family == "II":
        return _swap_window_ii(d, h, t.variant, sig) is not None
    return False  # families III-VI: semantics out of scope


def homotopy_box(d: Diagram, p: tuple[int, ...], t: HomotopyType,
                 sig: Signature) -> HomotopyBoxRange:
    """The inclusive window of entries the move affects (always width 2 here)."""
    if not homotopy_match(d, p, t, sig):
        raise PreconditionError(f"{t.token} does not match at {list(p)}")
    return HomotopyBoxRange(p[0], p[0] + 1)


def homotopy_rewrite(d: Diagram, p: tuple[int, ...], t: HomotopyType,
                     sig: Signature) -> Diagram:
    """Act on ``d`` by the move ``t`` at ``p``; source and target slices are kept."""
    if not homotopy_match(d, p, t, sig):
        raise PreconditionError(f"{t.token} does not match at {list(p)}")
    h = p[0]
    if t.family == "I":
        return interchange(d, h, t.variant, sig)
    pair = _swap_window_ii(d, h, t.variant, sig)
    assert pair is not None
    return d.with_entries(d.entries[:h] + pair + d.entries[h + 2:])


def enumerate_homotopies(d: Diagram, sig: Signature) -> list[tuple[tuple[int, ...], HomotopyType]]:
    """Every admissible (position, type) over families I and II, lexicographic."""
    out = []
    for h in range(max(len(d.entries) - 1, 0)):
        for family, bound in (("I", 2), ("II", 8)):
            for variant in range(1, bound + 1):
                t = HomotopyType(family, variant)
                if homotopy_match(d, (h,), t, sig):
                    out.append(((h,), t))
    out.sort(key=lambda item: (item[0], item[1].sort_key()))
    return out
