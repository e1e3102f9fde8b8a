"""Core value types and algorithms for globular diagram rewriting.

A diagram of dimension n is a source diagram of dimension n-1 together with
an ordered list of cell applications; each application carries an atom (a
generator of the ambient signature, or an interchanger atom) and a coordinate
list, top dimension first, locating where the atom's source pattern sits in
the running slice.  Dimension 0 bottoms out at a single 0-generator id, which
keeps region labels recoverable for diagrams with empty entry lists.

All values are immutable after construction; every operation is a pure
function of its inputs.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field, replace
from typing import Iterator, Literal, Optional, Union

Boundary = Literal["s", "t"]

DEFAULT_PROMOTION_LIMIT = 10_000

_PALETTE = (
    "#2980b9", "#c0392b", "#27ae60", "#8e44ad", "#d35400",
    "#16a085", "#f39c12", "#2c3e50", "#7f8c8d", "#e84393",
)


class KernelError(Exception):
    """Base class for kernel failures."""


class ContractViolation(KernelError):
    """Operands violate an operation's contract (e.g. dimension mismatch)."""


class RangeError(KernelError):
    """An index or window falls outside the diagram."""


class DanglingReference(KernelError):
    """An atom names a generator the signature does not contain."""


class InvalidRewrite(KernelError):
    """The rewrite window does not match the source pattern."""


class IllTypedRule(KernelError):
    """Rewrite source and target do not share their boundaries."""


class AttachmentError(KernelError):
    """No valid attachment at the requested boundary and coordinates."""


class AmbiguousMatch(KernelError):
    """Several candidate embeddings exist and none was chosen."""

    def __init__(self, message: str, candidates):
        super().__init__(message)
        self.candidates = list(candidates)


class UnsupportedMove(KernelError):
    """Homotopy families whose rewrite semantics are out of scope."""


class PreconditionError(KernelError):
    """A homotopy operation was invoked where its match predicate is false."""


class MatchTruncated(UserWarning):
    """Empty-pattern promotion hit the configured cap; results were truncated."""


# ---------------------------------------------------------------------------
# homotopy move types


FAMILIES = ("I", "II", "III", "IV", "V", "VI")
FAMILY_BOUNDS = {"I": 2, "II": 8, "III": 16, "IV": 16, "V": 16, "VI": 8}


@dataclass(frozen=True)
class HomotopyType:
    """A move family (I-VI) plus a variant index within the family."""

    family: str
    variant: int

    def __post_init__(self):
        if self.family not in FAMILY_BOUNDS:
            raise ContractViolation(f"unknown homotopy family {self.family!r}")
        bound = FAMILY_BOUNDS[self.family]
        if not 1 <= self.variant <= bound:
            raise ContractViolation(
                f"variant {self.variant} outside family {self.family} bound {bound}"
            )

    @property
    def token(self) -> str:
        return f"{self.family}{self.variant}"

    def sort_key(self) -> tuple[int, int]:
        return (FAMILIES.index(self.family), self.variant)

    def __str__(self) -> str:
        return self.token


def parse_homotopy_type(token: str) -> HomotopyType:
    """Parse a serial token such as ``"I1"`` or ``"VI8"``."""
    family = token.rstrip("0123456789")
    digits = token[len(family):]
    if family not in FAMILY_BOUNDS or not digits:
        raise ContractViolation(f"bad homotopy type token {token!r}")
    return HomotopyType(family, int(digits))


# ---------------------------------------------------------------------------
# atoms, entries, diagrams


@dataclass(frozen=True)
class GeneratorRef:
    id: str


@dataclass(frozen=True)
class HomotopyAtom:
    kind: HomotopyType


CellAtom = Union[GeneratorRef, HomotopyAtom]


@dataclass(frozen=True)
class DiagramEntry:
    atom: CellAtom
    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))

    def shifted(self, offset: tuple[int, ...]) -> "DiagramEntry":
        return DiagramEntry(self.atom, _shift(self.coords, offset))


def _shift(coords: tuple[int, ...], offset: tuple[int, ...]) -> tuple[int, ...]:
    if len(coords) != len(offset):
        raise ContractViolation("coordinate/offset rank mismatch")
    return tuple(c + o for c, o in zip(coords, offset))


@dataclass(frozen=True)
class Diagram:
    """An n-diagram: a source (n-1)-diagram plus ordered cell applications.

    For dimension 0 the ``source`` field holds the 0-generator id and the
    entry list is empty.
    """

    dimension: int
    source: Union["Diagram", str]
    entries: tuple[DiagramEntry, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if self.dimension < 0:
            raise ContractViolation("negative dimension")
        if self.dimension == 0:
            if not isinstance(self.source, str):
                raise ContractViolation("0-diagram source must be a 0-generator id")
            if self.entries:
                raise ContractViolation("0-diagram with entries")
        else:
            if not isinstance(self.source, Diagram):
                raise ContractViolation("source must be a diagram for dimension >= 1")
            if self.source.dimension != self.dimension - 1:
                raise ContractViolation("source dimension must be one lower")
            for e in self.entries:
                if len(e.coords) != self.dimension - 1:
                    raise ContractViolation(
                        f"entry coords rank {len(e.coords)} in a {self.dimension}-diagram"
                    )

    @staticmethod
    def point(generator_id: str) -> "Diagram":
        return Diagram(0, generator_id)

    def with_entries(self, entries) -> "Diagram":
        return Diagram(self.dimension, self.source, tuple(entries))


@dataclass(frozen=True)
class Embedding:
    """Coordinates of one subdiagram occurrence, top dimension first."""

    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))

    @property
    def depth(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coords)

    @staticmethod
    def zeros(depth: int) -> "Embedding":
        return Embedding((0,) * depth)


Shape = tuple[int, tuple[int, ...]]


# ---------------------------------------------------------------------------
# signatures


@dataclass(frozen=True)
class Generator:
    id: str
    dimension: int
    name: str = ""
    color: str = ""
    source: Optional[Diagram] = None
    target: Optional[Diagram] = None
    invertible: bool = False

    @property
    def display_name(self) -> str:
        return self.name or self.id


@dataclass(frozen=True)
class Signature:
    """Dimension-stratified tower of generators.

    Levels keep creation order; canonical serialization sorts them.  The
    restriction to levels below n is itself a valid signature, which is what
    boundary validation runs against.
    """

    levels: tuple[tuple[Generator, ...], ...] = ()
    _index: dict = field(default_factory=dict, compare=False, repr=False, init=False)

    def __post_init__(self):
        index = {}
        for level in self.levels:
            for gen in level:
                if gen.id in index:
                    raise ContractViolation(f"duplicate generator id {gen.id!r}")
                index[gen.id] = gen
        object.__setattr__(self, "_index", index)

    @staticmethod
    def empty() -> "Signature":
        return Signature()

    @property
    def max_dimension(self) -> int:
        return len(self.levels) - 1

    def generators(self) -> Iterator[Generator]:
        for level in self.levels:
            yield from level

    def __contains__(self, generator_id: str) -> bool:
        return generator_id in self._index

    def generator(self, generator_id: str) -> Generator:
        try:
            return self._index[generator_id]
        except KeyError:
            raise DanglingReference(f"unknown generator {generator_id!r}") from None

    def level(self, dimension: int) -> tuple[Generator, ...]:
        if dimension >= len(self.levels):
            return ()
        return self.levels[dimension]

    def restrict(self, dimension: int) -> "Signature":
        """The sub-signature of all generators of dimension < ``dimension``."""
        return Signature(self.levels[:dimension])

    def with_generator(self, gen: Generator) -> "Signature":
        if gen.id in self._index:
            raise ContractViolation(f"generator id {gen.id!r} already in use")
        if gen.dimension < 0:
            raise ContractViolation("negative generator dimension")
        if gen.dimension == 0:
            if gen.source is not None or gen.target is not None:
                raise ContractViolation("0-cells carry no boundaries")
        else:
            if gen.source is None or gen.target is None:
                raise ContractViolation(f"{gen.dimension}-cell {gen.id!r} needs boundaries")
            lower = self.restrict(gen.dimension)
            for side, d in (("source", gen.source), ("target", gen.target)):
                if d.dimension != gen.dimension - 1:
                    raise ContractViolation(
                        f"{side} of {gen.id!r} has dimension {d.dimension}, "
                        f"expected {gen.dimension - 1}"
                    )
                report = well_formed(d, lower)
                if not report:
                    raise ContractViolation(
                        f"{side} of {gen.id!r} is not well formed: {report.reason}"
                    )
            if gen.dimension >= 2:
                # globularity: boundaries of the boundaries agree
                if not equal(gen.source.source, gen.target.source):
                    raise ContractViolation(f"globularity violated for {gen.id!r} (sources)")
                if not equal(final_slice(gen.source, lower), final_slice(gen.target, lower)):
                    raise ContractViolation(f"globularity violated for {gen.id!r} (targets)")
        if not gen.color:
            gen = replace(gen, color=_PALETTE[len(self._index) % len(_PALETTE)])
        levels = list(self.levels)
        while len(levels) <= gen.dimension:
            levels.append(())
        levels[gen.dimension] = levels[gen.dimension] + (gen,)
        return Signature(tuple(levels))

    def without_generator(self, generator_id: str) -> "Signature":
        """Remove a generator; refused while any other generator references it."""
        victim = self.generator(generator_id)
        for gen in self.generators():
            if gen.id == generator_id:
                continue
            for d in (gen.source, gen.target):
                if d is not None and references(d, generator_id):
                    raise ContractViolation(
                        f"cannot delete {generator_id!r}: referenced by {gen.id!r}"
                    )
        levels = list(self.levels)
        levels[victim.dimension] = tuple(
            g for g in levels[victim.dimension] if g.id != generator_id
        )
        while levels and not levels[-1]:
            levels.pop()
        return Signature(tuple(levels))


def references(d: Diagram, generator_id: str) -> bool:
    """True when the diagram mentions the generator anywhere."""
    if d.dimension == 0:
        return d.source == generator_id
    for e in d.entries:
        if isinstance(e.atom, GeneratorRef) and e.atom.id == generator_id:
            return True
    return references(d.source, generator_id)


# ---------------------------------------------------------------------------
# entry application (the single step slicing and well-formedness run on)


def _entry_arity(entry: DiagramEntry, dim: int, sig: Signature) -> tuple[int, int]:
    """Window sizes of an entry's action in its slice's top dimension."""
    if isinstance(entry.atom, GeneratorRef):
        gen = sig.generator(entry.atom.id)
        if gen.dimension <= 1:
            return (0, 0)
        return (len(gen.source.entries), len(gen.target.entries))
    if entry.atom.kind.family == "I":
        return (2, 2)
    raise UnsupportedMove(
        f"homotopy family {entry.atom.kind.family} entries require the quasistrict "
        "4-category coherence theory; not implemented"
    )


def interchange_admissible(s: Diagram, h: int, variant: int, sig: Signature) -> bool:
    """Can entries ``h`` and ``h+1`` of ``s`` swap by the Type I move ``variant``?

    Variant 1 needs the upper entry to act strictly beyond the lower entry's
    output window; variant 2 is the mirror (strictly before its input window).
    """
    if s.dimension < 2:
        return False
    if h < 0 or h + 1 >= len(s.entries):
        return False
    lower, upper = s.entries[h], s.entries[h + 1]
    try:
        s_lo, t_lo = _entry_arity(lower, s.dimension, sig)
        s_up, t_up = _entry_arity(upper, s.dimension, sig)
    except KernelError:
        return False
    a, b = lower.coords[0], upper.coords[0]
    if variant == 1:
        return b >= a + t_lo
    return b + s_up <= a


def interchange(s: Diagram, h: int, variant: int, sig: Signature) -> Diagram:
    """Swap entries ``h`` and ``h+1`` with the Type I coordinate compensation."""
    if not interchange_admissible(s, h, variant, sig):
        raise PreconditionError(f"I{variant} not admissible at height {h}")
    lower, upper = s.entries[h], s.entries[h + 1]
    s_lo, t_lo = _entry_arity(lower, s.dimension, sig)
    s_up, t_up = _entry_arity(upper, s.dimension, sig)
    if variant == 1:
        moved = DiagramEntry(
            upper.atom, (upper.coords[0] - t_lo + s_lo,) + upper.coords[1:]
        )
        pair = (moved, lower)
    else:
        moved = DiagramEntry(
            lower.atom, (lower.coords[0] + t_up - s_up,) + lower.coords[1:]
        )
        pair = (upper, moved)
    return s.with_entries(s.entries[:h] + pair + s.entries[h + 2:])


def _interchanger_pad(s: Diagram, h: int, variant: int) -> tuple[int, ...]:
    """Deeper coordinates carried by an interchanger atom entry.

    These are the coordinates of the participant acting lower in the slice
    (variant 1: the list-lower entry; variant 2: the list-upper one), so
    window offsets propagate through rewrites like any other entry.
    """
    ref = s.entries[h] if variant == 1 else s.entries[h + 1]
    return ref.coords


def apply_entry(s: Diagram, entry: DiagramEntry, sig: Signature) -> Diagram:
    """Rewrite the running slice ``s`` by one entry of the diagram above it.

    Raises when the entry's pattern does not occur at its coordinates; slicing
    and the well-formedness walk are both built on this.
    """
    atom = entry.atom
    if isinstance(atom, GeneratorRef):
        gen = sig.generator(atom.id)
        if gen.dimension != s.dimension + 1:
            raise ContractViolation(
                f"atom {atom.id!r} of dimension {gen.dimension} applied to a "
                f"{s.dimension}-slice"
            )
        if s.dimension == 0:
            if s.source != gen.source.source:
                raise InvalidRewrite(
                    f"{atom.id!r} expects region {gen.source.source!r}, slice is {s.source!r}"
                )
            return gen.target
        window = extract(s, Embedding(entry.coords), shape_of(gen.source), sig)
        if window != gen.source:
            raise InvalidRewrite(
                f"source of {atom.id!r} does not occur at {list(entry.coords)}"
            )
        h = entry.coords[0]
        deeper = entry.coords[1:]
        new_entries = (
            s.entries[:h]
            + tuple(e.shifted(deeper) for e in gen.target.entries)
            + s.entries[h + len(gen.source.entries):]
        )
        return s.with_entries(new_entries)
    # interchanger atom
    kind = atom.kind
    if kind.family != "I":
        raise UnsupportedMove(
            f"homotopy family {kind.family} entries require the quasistrict "
            "4-category coherence theory; not implemented"
        )
    h = entry.coords[0]
    if not interchange_admissible(s, h, kind.variant, sig):
        raise InvalidRewrite(f"interchanger {kind.token} not admissible at height {h}")
    if entry.coords[1:] != _interchanger_pad(s, h, kind.variant):
        raise InvalidRewrite(
            f"interchanger {kind.token} deeper coordinates disagree with the slice"
        )
    return interchange(s, h, kind.variant, sig)


# ---------------------------------------------------------------------------
# the six algorithms


def equal(a: Diagram, b: Diagram) -> bool:
    """Structural identity of two diagrams of the same dimension."""
    if not isinstance(a, Diagram) or not isinstance(b, Diagram):
        raise ContractViolation("equal expects diagrams")
    if a.dimension != b.dimension:
        raise ContractViolation(
            f"equal on dimensions {a.dimension} and {b.dimension}"
        )
    return a == b


def identity(d: Diagram) -> Diagram:
    """The identity (n+1)-diagram on ``d``: same content, empty entry list."""
    return Diagram(d.dimension + 1, d)


def slice_at(d: Diagram, k: int, sig: Signature) -> Diagram:
    """The (n-1)-diagram after the first ``k`` entries rewrite the source."""
    if d.dimension < 1:
        raise ContractViolation("slice of a 0-diagram")
    if not 0 <= k <= len(d.entries):
        raise RangeError(f"slice index {k} outside 0..{len(d.entries)}")
    s = d.source
    for entry in d.entries[:k]:
        s = apply_entry(s, entry, sig)
    return s


def final_slice(d: Diagram, sig: Signature) -> Diagram:
    return slice_at(d, len(d.entries), sig)


def shape_of(d: Diagram) -> Shape:
    """Window shape of a diagram: entry count plus boundary extents per depth."""
    extents = []
    cur = d.source
    while isinstance(cur, Diagram):
        extents.append(len(cur.entries))
        cur = cur.source
    return (len(d.entries), tuple(extents))


def extract(d: Diagram, e: Embedding, shape: Shape, sig: Signature) -> Diagram:
    """The subdiagram in the window addressed by ``e``, re-based to its origin."""
    height_count, extents = shape
    if d.dimension == 0:
        if e.coords or height_count:
            raise RangeError("0-diagrams admit only the empty window")
        return d
    if len(e.coords) != d.dimension:
        raise RangeError(
            f"embedding depth {len(e.coords)} for a {d.dimension}-diagram"
        )
    h = e.coords[0]
    if h < 0 or h + height_count > len(d.entries):
        raise RangeError("window exceeds the diagram")
    deeper = e.coords[1:]
    sub_source = extract(
        slice_at(d, h, sig),
        Embedding(deeper),
        (extents[0] if extents else 0, extents[1:]),
        sig,
    )
    window = []
    for entry in d.entries[h : h + height_count]:
        coords = tuple(c - o for c, o in zip(entry.coords, deeper))
        if any(c < 0 for c in coords):
            raise RangeError("window entries escape the boundary extent")
        window.append(DiagramEntry(entry.atom, coords))
    return Diagram(d.dimension, sub_source, tuple(window))


def occurs_at(d: Diagram, pattern: Diagram, e: Embedding, sig: Signature) -> bool:
    """Does ``pattern`` occur in ``d`` exactly at the window ``e``?"""
    try:
        return extract(d, e, shape_of(pattern), sig) == pattern
    except KernelError:
        return False


def match(haystack: Diagram, needle: Diagram, sig: Signature, *,
          promotion_limit: int = DEFAULT_PROMOTION_LIMIT) -> list[Embedding]:
    """Every embedding of ``needle`` as a subdiagram of ``haystack``.

    Results are in lexicographic coordinate order.  For needles with empty
    entry lists every source embedding is promoted at every height; the number
    of promotions is capped at ``promotion_limit`` (a MatchTruncated warning
    reports the cut).
    """
    if haystack.dimension != needle.dimension:
        raise ContractViolation("match on diagrams of different dimensions")
    if haystack.dimension == 0:
        return [Embedding(())] if haystack.source == needle.source else []
    out: list[Embedding] = []
    if needle.entries:
        first = needle.entries[0]
        s = haystack.source
        top = len(haystack.entries) - len(needle.entries)
        for h in range(0, top + 1):
            emb = _match_here(haystack, needle, h, s, first, sig)
            if emb is not None:
                out.append(emb)
            if h < top:
                s = apply_entry(s, haystack.entries[h], sig)
        return out
    s = haystack.source
    budget = promotion_limit
    truncated = False
    for h in range(0, len(haystack.entries) + 1):
        subs = match(s, needle.source, sig, promotion_limit=promotion_limit)
        for sub in subs:
            if budget == 0:
                truncated = True
                break
            out.append(Embedding((h,) + sub.coords))
            budget -= 1
        if truncated or h == len(haystack.entries):
            break
        s = apply_entry(s, haystack.entries[h], sig)
    if truncated:
        warnings.warn(
            f"match: empty-pattern promotion capped at {promotion_limit}",
            MatchTruncated,
        )
    return out


def _match_here(haystack: Diagram, needle: Diagram, h: int, s: Diagram,
                first: DiagramEntry, sig: Signature) -> Optional[Embedding]:
    """The unique candidate embedding with the needle's first entry at height h."""
    cand = haystack.entries[h]
    if cand.atom != first.atom:
        return None
    off = tuple(c - p for c, p in zip(cand.coords, first.coords))
    if any(o < 0 for o in off):
        return None
    for j in range(1, len(needle.entries)):
        other = haystack.entries[h + j]
        pat = needle.entries[j]
        if other.atom != pat.atom or other.coords != _shift(pat.coords, off):
            return None
    if not occurs_at(s, needle.source, Embedding(off), sig):
        return None
    return Embedding((h,) + off)


def rewrite(d: Diagram, psi: Diagram, psi_prime: Diagram, c: Embedding,
            sig: Signature) -> Diagram:
    """Replace the occurrence of ``psi`` at ``c`` with ``psi_prime``.

    The rule must be globular (equal sources and equal targets), so entries
    after the window keep their coordinates.
    """
    if not (d.dimension == psi.dimension == psi_prime.dimension):
        raise ContractViolation("rewrite operands must share a dimension")
    if d.dimension == 0:
        if d != psi:
            raise InvalidRewrite("0-diagram rewrite source mismatch")
        return psi_prime
    if not equal(psi.source, psi_prime.source):
        raise IllTypedRule("rewrite rule sides have different sources")
    if not equal(final_slice(psi, sig), final_slice(psi_prime, sig)):
        raise IllTypedRule("rewrite rule sides have different targets")
    if not occurs_at(d, psi, c, sig):
        raise InvalidRewrite(f"pattern does not occur at {list(c.coords)}")
    h = c.coords[0]
    deeper = c.coords[1:]
    new_entries = (
        d.entries[:h]
        + tuple(e.shifted(deeper) for e in psi_prime.entries)
        + d.entries[h + len(psi.entries):]
    )
    return d.with_entries(new_entries)


def _splice_source(s: Diagram, window: Diagram, repl: Diagram, c: Embedding,
                   sig: Signature) -> Diagram:
    """Replace the occurrence of ``window`` at ``c`` in ``s`` by ``repl``.

    Unlike ``rewrite`` this allows the sides to have different boundaries; it
    is only used for source adjustment during attachment, where the change is
    absorbed by the attached entries.
    """
    if s.dimension == 0:
        if s != window:
            raise AttachmentError("boundary region mismatch")
        return repl
    if not occurs_at(s, window, c, sig):
        raise AttachmentError(f"boundary does not occur at {list(c.coords)}")
    h = c.coords[0]
    deeper = c.coords[1:]
    new_entries = (
        s.entries[:h]
        + tuple(e.shifted(deeper) for e in repl.entries)
        + s.entries[h + len(window.entries):]
    )
    return s.with_entries(new_entries)


def attach(d: Diagram, dprime: Diagram, p: Boundary, c: Embedding,
           sig: Signature) -> Diagram:
    """Compose ``dprime`` onto a boundary of ``d``.

    Equal dimensions: ``t`` appends the entries (dprime's source embeds in
    d's target at ``c``), ``s`` prepends them and rewrites the source.  Lower
    dimensions whisker: the source is attached recursively and the entry
    coordinates gain the offset created at the boundary; the flag then picks
    the end of the lower dimension (``s`` = after, ``t`` = before, following
    the convention of the worked attachment examples).
    """
    if p not in ("s", "t"):
        raise ContractViolation(f"boundary flag must be 's' or 't', got {p!r}")
    n, k = d.dimension, dprime.dimension
    if k > n:
        raise AttachmentError(
            f"cannot attach a {k}-diagram to a {n}-diagram"
        )
    if k == n:
        return _attach_same(d, dprime, p, c, sig)
    flipped: Boundary = "t" if p == "s" else "s"
    if d.source.dimension == k:
        new_source = _attach_same(d.source, dprime, flipped, c, sig)
    else:
        new_source = attach(d.source, dprime, p, c, sig)
    idx = (n - 1) - k
    if flipped == "s":
        m = len(dprime.entries)
        entries = tuple(
            DiagramEntry(e.atom, e.coords[:idx] + (e.coords[idx] + m,) + e.coords[idx + 1:])
            for e in d.entries
        )
    else:
        entries = d.entries
    return Diagram(n, new_source, entries)


def _attach_same(d: Diagram, dprime: Diagram, p: Boundary, c: Embedding,
                 sig: Signature) -> Diagram:
    if d.dimension == 0:
        if d != dprime:
            raise AttachmentError("0-diagram attachment endpoints differ")
        return d
    if p == "t":
        target = final_slice(d, sig)
        if not occurs_at(target, dprime.source, c, sig):
            raise AttachmentError(
                f"attached source does not occur in the target at {list(c.coords)}"
            )
        new_entries = d.entries + tuple(e.shifted(c.coords) for e in dprime.entries)
        return Diagram(d.dimension, d.source, new_entries)
    dpt = final_slice(dprime, sig)
    new_source = _splice_source(d.source, dpt, dprime.source, c, sig)
    new_entries = tuple(e.shifted(c.coords) for e in dprime.entries) + d.entries
    return Diagram(d.dimension, new_source, new_entries)


def attachments(d: Diagram, dprime: Diagram, sig: Signature) -> list[tuple[Boundary, Embedding]]:
    """All (boundary, embedding) pairs at which ``dprime`` can attach to ``d``."""
    n, k = d.dimension, dprime.dimension
    if k > n:
        return []
    sites: list[tuple[Boundary, Embedding]] = []
    if k == n:
        if n == 0:
            if d == dprime:
                sites.extend([("s", Embedding(())), ("t", Embedding(()))])
            return sites
        for e in match(final_slice(d, sig), dprime.source, sig):
            sites.append(("t", e))
        for e in match(d.source, final_slice(dprime, sig), sig):
            sites.append(("s", e))
        return sites
    base = d.source
    while base.dimension > k:
        base = base.source
    if k == 0:
        if base == dprime:
            sites.extend([("s", Embedding(())), ("t", Embedding(()))])
        return sites
    for e in match(final_slice(base, sig), dprime.source, sig):
        sites.append(("s", e))
    for e in match(base.source, final_slice(dprime, sig), sig):
        sites.append(("t", e))
    return sites


@dataclass(frozen=True)
class WellFormedReport:
    ok: bool
    height: Optional[int] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def well_formed(d: Diagram, sig: Signature) -> WellFormedReport:
    """Walk the entry list checking each pattern occurs at its coordinates.

    Unresolvable generator references raise DanglingReference; any other
    failure is reported with the first offending height.
    """
    if d.dimension == 0:
        gen = sig.generator(d.source)  # raises DanglingReference when absent
        if gen.dimension != 0:
            return WellFormedReport(False, None, f"{d.source!r} is not a 0-cell")
        return WellFormedReport(True)
    sub = well_formed(d.source, sig)
    if not sub:
        return WellFormedReport(False, None, f"source: {sub.reason}")
    s = d.source
    for h, entry in enumerate(d.entries):
        if isinstance(entry.atom, GeneratorRef):
            sig.generator(entry.atom.id)  # surface dangling references as errors
        try:
            s = apply_entry(s, entry, sig)
        except DanglingReference:
            raise
        except KernelError as err:
            return WellFormedReport(False, h, str(err))
    return WellFormedReport(True)


def singleton(gen: Generator) -> Diagram:
    """The one-entry diagram presenting a generator on its own source."""
    if gen.dimension == 0:
        return Diagram.point(gen.id)
    coords = (0,) * (gen.dimension - 1)
    return Diagram(
        gen.dimension, gen.source, (DiagramEntry(GeneratorRef(gen.id), coords),)
    )
