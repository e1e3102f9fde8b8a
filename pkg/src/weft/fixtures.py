"""Worked diagram corpora used by the tests, docs and shipped workspaces."""

from __future__ import annotations

from .kernel import (
    Diagram,
    DiagramEntry,
    Generator,
    GeneratorRef,
    Signature,
)


def wire_diagram(sig: Signature, wires: list[str], at: str | None = None) -> Diagram:
    """A 1-diagram composing the named 1-cells left to right.

    ``at`` names the leftmost region; it defaults to the first wire's source
    region and is required for the empty composite.
    """
    if not wires:
        if at is None:
            raise ValueError("empty wire list needs an explicit region")
        return Diagram(1, Diagram.point(at))
    first = sig.generator(wires[0])
    region = at if at is not None else first.source.source
    entries = []
    for w in wires:
        sig.generator(w)  # fail fast on unknown wires
        entries.append(DiagramEntry(GeneratorRef(w), ()))
    return Diagram(1, Diagram.point(region), tuple(entries))


def stack(sig: Signature, source: Diagram, cells: list[tuple[str, list[int]]]) -> Diagram:
    """A 2-diagram applying the named 2-cells bottom to top at given positions."""
    entries = tuple(
        DiagramEntry(GeneratorRef(name), tuple(coords)) for name, coords in cells
    )
    return Diagram(2, source, entries)


def worked_signature() -> Signature:
    """The two-region/two-wire/five-vertex signature behind the D1..D4 corpus.

    Regions r1, r2; wires e1: r1->r2 and e2: r2->r2; vertices
    v1: [e1] -> [e1, e2], v2: [] -> [e2], v3: [e2] -> [] plus two spares.
    """
    sig = Signature.empty()
    sig = sig.with_generator(Generator("r1", 0, name="r1"))
    sig = sig.with_generator(Generator("r2", 0, name="r2"))
    sig = sig.with_generator(
        Generator("e1", 1, name="e1", source=Diagram.point("r1"), target=Diagram.point("r2"))
    )
    sig = sig.with_generator(
        Generator("e2", 1, name="e2", source=Diagram.point("r2"), target=Diagram.point("r2"))
    )
    e1 = wire_diagram(sig, ["e1"])
    e1_e2 = wire_diagram(sig, ["e1", "e2"])
    e2_at_r2 = wire_diagram(sig, ["e2"])
    empty_r2 = wire_diagram(sig, [], at="r2")
    sig = sig.with_generator(Generator("v1", 2, name="v1", source=e1, target=e1_e2))
    sig = sig.with_generator(Generator("v2", 2, name="v2", source=empty_r2, target=e2_at_r2))
    sig = sig.with_generator(Generator("v3", 2, name="v3", source=e2_at_r2, target=empty_r2))
    sig = sig.with_generator(Generator("v4", 2, name="v4", source=e2_at_r2, target=e2_at_r2))
    sig = sig.with_generator(Generator("v5", 2, name="v5", source=e1, target=e1))
    return sig


def worked_diagrams(sig: Signature) -> dict[str, Diagram]:
    """D1..D4: same vertices, composed in different orders."""
    e1 = wire_diagram(sig, ["e1"])
    return {
        "D1": stack(sig, e1, [("v1", [0]), ("v3", [1]), ("v2", [1])]),
        "D2": stack(sig, e1, [("v1", [0]), ("v2", [2]), ("v3", [1])]),
        "D3": stack(sig, e1, [("v2", [1]), ("v1", [0]), ("v3", [1])]),
        "D4": stack(sig, e1, [("v1", [0]), ("v2", [1]), ("v3", [2])]),
    }


def merge_signature() -> Signature:
    """One region, one wire, a binary merge vertex: the enumeration figure."""
    sig = Signature.empty()
    sig = sig.with_generator(Generator("a", 0, name="a"))
    sig = sig.with_generator(
        Generator("x", 1, name="x", source=Diagram.point("a"), target=Diagram.point("a"))
    )
    xx = wire_diagram(sig, ["x", "x"])
    x = wire_diagram(sig, ["x"])
    sig = sig.with_generator(Generator("m", 2, name="m", source=xx, target=x))
    return sig


def merge_match_pair(sig: Signature) -> tuple[Diagram, Diagram]:
    """(haystack, needle): two stacked merges against a single merge."""
    xxx = wire_diagram(sig, ["x", "x", "x"])
    xx = wire_diagram(sig, ["x", "x"])
    hay = stack(sig, xxx, [("m", [0]), ("m", [0])])
    needle = stack(sig, xx, [("m", [0])])
    return hay, needle


def zigzag_signature() -> Signature:
    """Region, wire, split/merge and a unary vertex: the rewrite figure."""
    sig = Signature.empty()
    sig = sig.with_generator(Generator("a", 0, name="a"))
    sig = sig.with_generator(
        Generator("x", 1, name="x", source=Diagram.point("a"), target=Diagram.point("a"))
    )
    x = wire_diagram(sig, ["x"])
    xx = wire_diagram(sig, ["x", "x"])
    sig = sig.with_generator(Generator("m", 2, name="m", source=xx, target=x))
    sig = sig.with_generator(Generator("s", 2, name="s", source=x, target=xx))
    sig = sig.with_generator(Generator("f", 2, name="f", source=x, target=x))
    return sig


def rewrite_figure(sig: Signature) -> dict[str, Diagram]:
    """The worked rewrite: split-then-merge window replaced by merge-then-split."""
    xx = wire_diagram(sig, ["x", "x"])
    xxxx = wire_diagram(sig, ["x", "x", "x", "x"])
    psi = stack(sig, xx, [("s", [0]), ("m", [1])])
    psi_prime = stack(sig, xx, [("m", [0]), ("s", [0])])
    delta = stack(sig, xxxx, [("f", [1]), ("m", [0]), ("s", [0]), ("m", [1])])
    result = stack(sig, xxxx, [("f", [1]), ("m", [0]), ("m", [0]), ("s", [0])])
    return {"psi": psi, "psi_prime": psi_prime, "delta": delta, "result": result}


def snake_signature() -> Signature:
    """Two 0-cells, an equivalence pair of wires, invertible cup/cap, and the
    eight invertibility witnesses."""
    sig = Signature.empty()
    sig = sig.with_generator(Generator("A", 0, name="A"))
    sig = sig.with_generator(Generator("B", 0, name="B"))
    sig = sig.with_generator(
        Generator("F", 1, name="F", source=Diagram.point("A"), target=Diagram.point("B"))
    )
    sig = sig.with_generator(
        Generator("G", 1, name="G", source=Diagram.point("B"), target=Diagram.point("A"))
    )
    empty_a = wire_diagram(sig, [], at="A")
    empty_b = wire_diagram(sig, [], at="B")
    fg = wire_diagram(sig, ["F", "G"])
    gf = wire_diagram(sig, ["G", "F"])
    sig = sig.with_generator(
        Generator("cup", 2, name="cup", source=empty_b, target=gf, invertible=True)
    )
    sig = sig.with_generator(
        Generator("cap", 2, name="cap", source=fg, target=empty_a, invertible=True)
    )
    sig = sig.with_generator(
        Generator("cup_i", 2, name="cup†", source=gf, target=empty_b, invertible=True)
    )
    sig = sig.with_generator(
        Generator("cap_i", 2, name="cap†", source=empty_a, target=fg, invertible=True)
    )
    id_fg = Diagram(2, fg)
    id_gf = Diagram(2, gf)
    id_a = Diagram(2, empty_a)
    id_b = Diagram(2, empty_b)
    cap_capi = stack(sig, fg, [("cap", [0]), ("cap_i", [0])])
    capi_cap = stack(sig, empty_a, [("cap_i", [0]), ("cap", [0])])
    cup_cupi = stack(sig, empty_b, [("cup", [0]), ("cup_i", [0])])
    cupi_cup = stack(sig, gf, [("cup_i", [0]), ("cup", [0])])
    for name, src, tgt in (
        ("pi1", cap_capi, id_fg), ("pi2", id_fg, cap_capi),
        ("pi3", capi_cap, id_a), ("pi4", id_a, capi_cap),
        ("pi5", cup_cupi, id_b), ("pi6", id_b, cup_cupi),
        ("pi7", cupi_cup, id_gf), ("pi8", id_gf, cupi_cup),
    ):
        sig = sig.with_generator(
            Generator(name, 3, name="π" + name[2:], source=src, target=tgt)
        )
    return sig


def snake_diagrams(sig: Signature) -> tuple[Diagram, Diagram]:
    """The snake statement: the composite-cup zigzag and the straight wire."""
    f = wire_diagram(sig, ["F"])
    zigzag = stack(
        sig, f,
        [("cup", [1]), ("cap_i", [2]), ("cup_i", [1]), ("cap", [0])],
    )
    straight = Diagram(2, f)
    return zigzag, straight


def frobenius_signature() -> Signature:
    """Monoid + comonoid on one wire with unit, counit and Frobenius laws."""
    sig = Signature.empty()
    sig = sig.with_generator(Generator("star", 0, name="⋆"))
    sig = sig.with_generator(
        Generator("X", 1, name="X", source=Diagram.point("star"),
                  target=Diagram.point("star"))
    )
    x = wire_diagram(sig, ["X"])
    xx = wire_diagram(sig, ["X", "X"])
    empty = wire_diagram(sig, [], at="star")
    sig = sig.with_generator(Generator("mul", 2, name="m", source=xx, target=x))
    sig = sig.with_generator(Generator("unit", 2, name="u", source=empty, target=x))
    sig = sig.with_generator(Generator("comul", 2, name="d", source=x, target=xx))
    sig = sig.with_generator(Generator("counit", 2, name="e", source=x, target=empty))
    id_x = Diagram(2, x)
    mul_comul = stack(sig, xx, [("mul", [0]), ("comul", [0])])
    for name, src in (
        ("unit_l", stack(sig, x, [("unit", [0]), ("mul", [0])])),
        ("unit_r", stack(sig, x, [("unit", [1]), ("mul", [0])])),
        ("counit_l", stack(sig, x, [("comul", [0]), ("counit", [0])])),
        ("counit_r", stack(sig, x, [("comul", [0]), ("counit", [1])])),
    ):
        sig = sig.with_generator(
            Generator(name, 3, name=name, source=src, target=id_x, invertible=True)
        )
    frob_l = stack(sig, xx, [("comul", [0]), ("mul", [1])])
    frob_r = stack(sig, xx, [("comul", [1]), ("mul", [0])])
    sig = sig.with_generator(
        Generator("frob_l", 3, name="frob_l", source=frob_l, target=mul_comul,
                  invertible=True)
    )
    sig = sig.with_generator(
        Generator("frob_r", 3, name="frob_r", source=frob_r, target=mul_comul,
                  invertible=True)
    )
    return sig


def frobenius_diagrams(sig: Signature) -> tuple[Diagram, Diagram]:
    """Associativity: multiply-left-first versus multiply-right-first."""
    xxx = wire_diagram(sig, ["X", "X", "X"])
    left = stack(sig, xxx, [("mul", [0]), ("mul", [0])])
    right = stack(sig, xxx, [("mul", [1]), ("mul", [0])])
    return left, right


def attach_figure(sig: Signature) -> dict[str, Diagram]:
    """The worked same-dimension attachment (zigzag onto the top boundary)."""
    xx = wire_diagram(sig, ["x", "x"])
    wires6 = wire_diagram(sig, ["x"] * 6)
    dprime = stack(sig, xx, [("m", [0]), ("s", [0])])
    delta = stack(sig, wires6, [("f", [0]), ("m", [1]), ("s", [4]), ("m", [3])])
    result = stack(
        sig, wires6,
        [("f", [0]), ("m", [1]), ("s", [4]), ("m", [3]), ("m", [2]), ("s", [2])],
    )
    return {"dprime": dprime, "delta": delta, "result": result}
