import random

import pytest

from weft import fixtures
from weft.homotopy import (
    HomotopyBoxRange,
    HomotopyType,
    enumerate_homotopies,
    homotopy_box,
    homotopy_match,
    homotopy_rewrite,
    parse_homotopy_type,
)
from weft.kernel import (
    ContractViolation,
    Diagram,
    DiagramEntry,
    Generator,
    GeneratorRef,
    HomotopyAtom,
    PreconditionError,
    Signature,
    equal,
    final_slice,
    slice_at,
    well_formed,
)

I1 = HomotopyType("I", 1)
I2 = HomotopyType("I", 2)


@pytest.fixture(scope="module")
def two_wire_sig():
    sig = Signature.empty()
    sig = sig.with_generator(Generator("a", 0))
    sig = sig.with_generator(
        Generator("x", 1, source=Diagram.point("a"), target=Diagram.point("a"))
    )
    x = fixtures.wire_diagram(sig, ["x"])
    for name in ("f", "g", "k"):
        sig = sig.with_generator(Generator(name, 2, source=x, target=x))
    return sig


def disjoint_pair(sig):
    xx = fixtures.wire_diagram(sig, ["x", "x"])
    return fixtures.stack(sig, xx, [("f", [0]), ("g", [1])])


def stacked_pair(sig):
    x = fixtures.wire_diagram(sig, ["x"])
    return fixtures.stack(sig, x, [("f", [0]), ("g", [0])])


class TestTypeTokens:
    def test_parse_round_trip(self):
        for token in ("I1", "I2", "II4", "III16", "VI8"):
            assert parse_homotopy_type(token).token == token

    def test_bounds_enforced(self):
        with pytest.raises(ContractViolation):
            HomotopyType("I", 3)
        with pytest.raises(ContractViolation):
            HomotopyType("VI", 9)
        with pytest.raises(ContractViolation):
            parse_homotopy_type("VII1")

    def test_every_family_parses(self):
        for fam, bound in (("I", 2), ("II", 8), ("III", 16), ("IV", 16),
                           ("V", 16), ("VI", 8)):
            for v in range(1, bound + 1):
                assert parse_homotopy_type(f"{fam}{v}").variant == v


class TestFamilyIMatch:
    def test_disjoint_vertices_interchange(self, two_wire_sig):
        assert homotopy_match(disjoint_pair(two_wire_sig), (0,), I1, two_wire_sig)

    def test_same_wire_rejected(self, two_wire_sig):
        d = stacked_pair(two_wire_sig)
        assert not homotopy_match(d, (0,), I1, two_wire_sig)
        assert not homotopy_match(d, (0,), I2, two_wire_sig)

    def test_out_of_scope_families_never_match(self, two_wire_sig):
        d = disjoint_pair(two_wire_sig)
        for fam, bound in (("III", 16), ("IV", 16), ("V", 16), ("VI", 8)):
            for v in range(1, bound + 1):
                assert not homotopy_match(d, (0,), HomotopyType(fam, v), two_wire_sig)

    def test_one_diagrams_never_interchange(self, two_wire_sig):
        wires = fixtures.wire_diagram(two_wire_sig, ["x", "x"])
        assert not homotopy_match(wires, (0,), I1, two_wire_sig)


class TestFamilyIRewrite:
    def test_swap_and_undo(self, two_wire_sig):
        d = disjoint_pair(two_wire_sig)
        swapped = homotopy_rewrite(d, (0,), I1, two_wire_sig)
        assert [(e.atom.id, e.coords) for e in swapped.entries] == [
            ("g", (1,)), ("f", (0,)),
        ]
        assert equal(homotopy_rewrite(swapped, (0,), I2, two_wire_sig), d)

    def test_entry_count_conserved(self, two_wire_sig):
        d = disjoint_pair(two_wire_sig)
        assert len(homotopy_rewrite(d, (0,), I1, two_wire_sig).entries) == len(d.entries)

    def test_boundaries_preserved(self, two_wire_sig):
        d = disjoint_pair(two_wire_sig)
        out = homotopy_rewrite(d, (0,), I1, two_wire_sig)
        assert equal(slice_at(out, 0, two_wire_sig), slice_at(d, 0, two_wire_sig))
        assert equal(final_slice(out, two_wire_sig), final_slice(d, two_wire_sig))

    def test_precondition_error(self, two_wire_sig):
        with pytest.raises(PreconditionError):
            homotopy_rewrite(stacked_pair(two_wire_sig), (0,), I1, two_wire_sig)

    def test_zero_width_windows_both_directions(self, worked_sig):
        # v3 consumes e2, v2 recreates it: both interchanger directions apply
        e1 = fixtures.wire_diagram(worked_sig, ["e1", "e2"])
        d = fixtures.stack(worked_sig, e1, [("v3", [1]), ("v2", [1])])
        assert well_formed(d, worked_sig)
        assert homotopy_match(d, (0,), I1, worked_sig)
        assert homotopy_match(d, (0,), I2, worked_sig)
        up = homotopy_rewrite(d, (0,), I1, worked_sig)
        assert equal(homotopy_rewrite(up, (0,), I2, worked_sig), d)
        down = homotopy_rewrite(d, (0,), I2, worked_sig)
        assert equal(homotopy_rewrite(down, (0,), I1, worked_sig), d)

    def test_compensation_reindexes_past_wide_vertex(self, zigzag_sig):
        # a split below, a unary vertex above-right: the vertex crosses the
        # split's extra output wire when they interchange
        x3 = fixtures.wire_diagram(zigzag_sig, ["x", "x", "x"])
        d = fixtures.stack(zigzag_sig, x3, [("s", [0]), ("f", [2])])
        assert well_formed(d, zigzag_sig)
        swapped = homotopy_rewrite(d, (0,), I1, zigzag_sig)
        assert [(e.atom.id, e.coords) for e in swapped.entries] == [
            ("f", (1,)), ("s", (0,)),
        ]
        assert well_formed(swapped, zigzag_sig)
        assert equal(homotopy_rewrite(swapped, (0,), I2, zigzag_sig), d)


class TestHomotopyBox:
    def test_family_one_window(self, two_wire_sig):
        d = disjoint_pair(two_wire_sig)
        assert homotopy_box(d, (0,), I1, two_wire_sig) == HomotopyBoxRange(0, 1)

    def test_window_placement_mid_chain(self, two_wire_sig):
        xx = fixtures.wire_diagram(two_wire_sig, ["x", "x"])
        cells = [("f", [0]), ("f", [0]), ("f", [0]), ("g", [1]), ("f", [0]), ("f", [0])]
        d = fixtures.stack(two_wire_sig, xx, cells)
        assert homotopy_match(d, (3,), I2, two_wire_sig)
        assert homotopy_box(d, (3,), I2, two_wire_sig) == HomotopyBoxRange(3, 4)

    def test_box_requires_match(self, two_wire_sig):
        with pytest.raises(PreconditionError):
            homotopy_box(stacked_pair(two_wire_sig), (0,), I1, two_wire_sig)


def random_two_diagram(sig, rng, max_entries=6):
    """A random well-formed 2-diagram over the zigzag signature."""
    from weft.kernel import apply_entry

    width = rng.randint(1, 4)
    src = fixtures.wire_diagram(sig, ["x"] * width)
    entries = []
    s = src
    for _ in range(rng.randint(0, max_entries)):
        options = []
        wires = len(s.entries)
        for name, need in (("m", 2), ("s", 1), ("f", 1)):
            for pos in range(0, wires - need + 1):
                options.append((name, pos))
        if not options:
            break
        name, pos = rng.choice(options)
        entry = DiagramEntry(GeneratorRef(name), (pos,))
        entries.append(entry)
        s = apply_entry(s, entry, sig)
    return Diagram(2, src, tuple(entries))


class TestInvolution:
    def test_randomized_family_one(self, zigzag_sig):
        rng = random.Random(7)
        checked = 0
        while checked < 200:
            d = random_two_diagram(zigzag_sig, rng)
            moves = [(p, t) for p, t in enumerate_homotopies(d, zigzag_sig)
                     if t.family == "I"]
            if not moves:
                continue
            p, t = rng.choice(moves)
            out = homotopy_rewrite(d, p, t, zigzag_sig)
            assert well_formed(out, zigzag_sig)
            inverse = I2 if t.variant == 1 else I1
            back = homotopy_rewrite(out, p, inverse, zigzag_sig)
            assert equal(back, d)
            checked += 1


class TestEnumerate:
    def test_single_entry_diagram_empty(self, two_wire_sig):
        x = fixtures.wire_diagram(two_wire_sig, ["x"])
        d = fixtures.stack(two_wire_sig, x, [("f", [0])])
        assert enumerate_homotopies(d, two_wire_sig) == []

    def test_agrees_with_full_scan(self, two_wire_sig, worked_sig, corpus):
        for d, sig in [(disjoint_pair(two_wire_sig), two_wire_sig),
                       (corpus["D1"], worked_sig), (corpus["D2"], worked_sig),
                       (corpus["D3"], worked_sig), (corpus["D4"], worked_sig)]:
            got = enumerate_homotopies(d, sig)
            brute = []
            for h in range(len(d.entries)):
                for fam, bound in (("I", 2), ("II", 8)):
                    for v in range(1, bound + 1):
                        t = HomotopyType(fam, v)
                        if homotopy_match(d, (h,), t, sig):
                            brute.append(((h,), t))
            assert got == sorted(brute, key=lambda it: (it[0], it[1].sort_key()))

    def test_disjoint_pair_has_the_upward_reading(self, two_wire_sig):
        moves = enumerate_homotopies(disjoint_pair(two_wire_sig), two_wire_sig)
        assert ((0,), I1) in moves


# --- family II -------------------------------------------------------------


@pytest.fixture(scope="module")
def three_sig(two_wire_sig):
    x = fixtures.wire_diagram(two_wire_sig, ["x"])
    f_cell = fixtures.stack(two_wire_sig, x, [("f", [0])])
    g_cell = fixtures.stack(two_wire_sig, x, [("g", [0])])
    k_cell = fixtures.stack(two_wire_sig, x, [("k", [0])])
    sig = two_wire_sig.with_generator(
        Generator("alpha", 3, source=f_cell, target=g_cell)
    )
    return sig.with_generator(Generator("kappa", 3, source=k_cell, target=k_cell))


def three_diagram(sig, slice_cells, entries):
    xx = fixtures.wire_diagram(sig, ["x", "x"])
    s0 = fixtures.stack(sig, xx, slice_cells)
    built = []
    for atom, coords in entries:
        if isinstance(atom, str):
            built.append(DiagramEntry(GeneratorRef(atom), tuple(coords)))
        else:
            built.append(DiagramEntry(HomotopyAtom(atom), tuple(coords)))
    return Diagram(3, s0, tuple(built))


class TestFamilyII:
    def test_vertex_below_crossing_slides_up(self, three_sig):
        d = three_diagram(
            three_sig,
            [("f", [0]), ("k", [1])],
            [("alpha", (0, 0)), (I1, (0, 0))],
        )
        assert well_formed(d, three_sig)
        assert homotopy_match(d, (0,), HomotopyType("II", 1), three_sig)
        out = homotopy_rewrite(d, (0,), HomotopyType("II", 1), three_sig)
        assert isinstance(out.entries[0].atom, HomotopyAtom)
        assert out.entries[1] == DiagramEntry(GeneratorRef("alpha"), (1, 0))
        assert well_formed(out, three_sig)
        assert equal(final_slice(out, three_sig), final_slice(d, three_sig))
        # the reverse move undoes it
        assert homotopy_match(out, (0,), HomotopyType("II", 2), three_sig)
        assert equal(homotopy_rewrite(out, (0,), HomotopyType("II", 2), three_sig), d)

    def test_left_passing_variant_pair(self, three_sig):
        d = three_diagram(
            three_sig,
            [("f", [1]), ("k", [0])],
            [("alpha", (0, 1)), (I2, (0, 0))],
        )
        assert well_formed(d, three_sig)
        assert homotopy_match(d, (0,), HomotopyType("II", 3), three_sig)
        out = homotopy_rewrite(d, (0,), HomotopyType("II", 3), three_sig)
        assert well_formed(out, three_sig)
        assert equal(homotopy_rewrite(out, (0,), HomotopyType("II", 4), three_sig), d)

    def test_spectator_below_variant_pair(self, three_sig):
        d = three_diagram(
            three_sig,
            [("k", [1]), ("f", [0])],
            [("alpha", (1, 0)), (I2, (0, 0))],
        )
        assert well_formed(d, three_sig)
        assert homotopy_match(d, (0,), HomotopyType("II", 7), three_sig)
        out = homotopy_rewrite(d, (0,), HomotopyType("II", 7), three_sig)
        assert well_formed(out, three_sig)
        assert equal(homotopy_rewrite(out, (0,), HomotopyType("II", 8), three_sig), d)

    def test_entry_count_delta_zero(self, three_sig):
        d = three_diagram(
            three_sig,
            [("f", [0]), ("k", [1])],
            [("alpha", (0, 0)), (I1, (0, 0))],
        )
        out = homotopy_rewrite(d, (0,), HomotopyType("II", 1), three_sig)
        assert len(out.entries) == len(d.entries)

    def test_box_covers_vertex_and_interchanger(self, three_sig):
        d = three_diagram(
            three_sig,
            [("f", [0]), ("k", [1])],
            [("alpha", (0, 0)), (I1, (0, 0))],
        )
        assert homotopy_box(d, (0,), HomotopyType("II", 1), three_sig) == \
            HomotopyBoxRange(0, 1)

    def test_wrong_alignment_rejected(self, three_sig):
        # crossing one height above the vertex's window: no pictured config
        d = three_diagram(
            three_sig,
            [("f", [0]), ("k", [1]), ("k", [2])],
            [("alpha", (0, 0)), (I1, (1, 1))],
        )
        if well_formed(d, three_sig):
            for v in range(1, 9):
                assert not homotopy_match(d, (0,), HomotopyType("II", v), three_sig)

    def test_four_entry_pattern_window(self, three_sig):
        # the move window inside a larger diagram stays width 2
        d = three_diagram(
            three_sig,
            [("f", [0]), ("k", [1])],
            [("kappa", (1, 1)), ("alpha", (0, 0)), (I1, (0, 0)), ("kappa", (0, 1))],
        )
        assert well_formed(d, three_sig)
        assert homotopy_match(d, (1,), HomotopyType("II", 1), three_sig)
        assert homotopy_box(d, (1,), HomotopyType("II", 1), three_sig) == \
            HomotopyBoxRange(1, 2)
