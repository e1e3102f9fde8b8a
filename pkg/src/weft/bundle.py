"""Workspace serialization: canonical JSON inside an LZ4 frame (.gwb).

The schema is fixed (docs/format.md is the normative copy): top-level keys
{version, signature, diagram, traces, metadata}; generators as {id,
dimension, name, color, source, target, invertible}; diagrams as {dimension,
source, entries:[{atom, coords}]} with atoms {"gen": id} or {"hom": token};
a 0-diagram's source is its 0-generator id.  Canonical form sorts object
keys, sorts generators by (dimension, id), sorts traces by name, and emits no
insignificant whitespace, so structurally equal workspaces serialize to
identical bytes.  Uncompressed JSON is also accepted on import, sniffed by
the leading byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Optional

from . import lz4f
from .kernel import (
    Diagram,
    DiagramEntry,
    Embedding,
    Generator,
    GeneratorRef,
    HomotopyAtom,
    KernelError,
    Signature,
    parse_homotopy_type,
    well_formed,
)
from .trace import AttachStep, HomotopyStep, ProofTrace, RewriteStep, replay

FORMAT_VERSION = 1
FILE_EXTENSION = ".gwb"


class BundleError(Exception):
    """Base class for import/export failures."""


class ContainerError(BundleError):
    """The LZ4 container is corrupt."""


class ParseError(BundleError):
    """The payload is not valid JSON or not the documented schema."""


class ValidationError(BundleError):
    """The decoded workspace fails semantic validation."""


class VersionError(ValidationError):
    """The file's format version is newer than this build supports."""


@dataclass(frozen=True)
class Metadata:
    title: str = ""
    author: str = ""
    created: Optional[str] = None
    modified: Optional[str] = None


@dataclass(frozen=True)
class NamedTrace:
    name: str
    trace: ProofTrace


@dataclass(frozen=True)
class Workspace:
    signature: Signature = field(default_factory=Signature.empty)
    current: Optional[Diagram] = None
    traces: tuple[NamedTrace, ...] = ()
    metadata: Metadata = field(default_factory=Metadata)
    format_version: int = FORMAT_VERSION

    @staticmethod
    def empty() -> "Workspace":
        return Workspace()

    def trace(self, name: str) -> ProofTrace:
        for nt in self.traces:
            if nt.name == name:
                return nt.trace
        raise KeyError(name)

    def trace_names(self) -> list[str]:
        return [nt.name for nt in self.traces]

    def with_trace(self, name: str, trace: ProofTrace) -> "Workspace":
        kept = tuple(nt for nt in self.traces if nt.name != name)
        return replace(self, traces=kept + (NamedTrace(name, trace),))


# --- encoding ---------------------------------------------------------------


def diagram_to_obj(d: Diagram) -> dict:
    if d.dimension == 0:
        return {"dimension": 0, "source": d.source, "entries": []}
    return {
        "dimension": d.dimension,
        "source": diagram_to_obj(d.source),
        "entries": [
            {
                "atom": {"gen": e.atom.id} if isinstance(e.atom, GeneratorRef)
                else {"hom": e.atom.kind.token},
                "coords": list(e.coords),
            }
            for e in d.entries
        ],
    }


def generator_to_obj(g: Generator) -> dict:
    return {
        "id": g.id,
        "dimension": g.dimension,
        "name": g.name,
        "color": g.color,
        "source": None if g.source is None else diagram_to_obj(g.source),
        "target": None if g.target is None else diagram_to_obj(g.target),
        "invertible": g.invertible,
    }


def _step_to_obj(step) -> dict:
    if isinstance(step, RewriteStep):
        return {"rewrite": {
            "generator": step.generator_id,
            "direction": step.direction,
            "embedding": list(step.embedding.coords),
        }}
    if isinstance(step, AttachStep):
        return {"attach": {
            "generator": step.generator_id,
            "boundary": step.boundary,
            "embedding": list(step.embedding.coords),
        }}
    return {"homotopy": {"at": list(step.position), "type": step.kind.token}}


def trace_to_obj(name: str, t: ProofTrace) -> dict:
    return {
        "name": name,
        "initial": diagram_to_obj(t.initial),
        "steps": [_step_to_obj(s) for s in t.steps],
        "goal": None if t.goal is None else diagram_to_obj(t.goal),
    }


def workspace_to_obj(w: Workspace) -> dict:
    gens = sorted(w.signature.generators(), key=lambda g: (g.dimension, g.id))
    return {
        "version": w.format_version,
        "signature": [generator_to_obj(g) for g in gens],
        "diagram": None if w.current is None else diagram_to_obj(w.current),
        "traces": [trace_to_obj(nt.name, nt.trace)
                   for nt in sorted(w.traces, key=lambda nt: nt.name)],
        "metadata": {
            "title": w.metadata.title,
            "author": w.metadata.author,
            "created": w.metadata.created,
            "modified": w.metadata.modified,
        },
    }


def canonical_json(obj) -> bytes:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"),
                      ensure_ascii=False).encode("utf-8")


# --- decoding ---------------------------------------------------------------


def _expect(cond: bool, what: str):
    if not cond:
        raise ParseError(f"malformed workspace: {what}")


def diagram_from_obj(obj) -> Diagram:
    _expect(isinstance(obj, dict) and "dimension" in obj, "diagram object")
    dim = obj["dimension"]
    _expect(isinstance(dim, int) and dim >= 0, "diagram dimension")
    if dim == 0:
        _expect(isinstance(obj.get("source"), str), "0-diagram source id")
        _expect(not obj.get("entries"), "0-diagram entries")
        return Diagram.point(obj["source"])
    source = diagram_from_obj(obj.get("source"))
    entries = []
    for e in obj.get("entries", []):
        _expect(isinstance(e, dict) and "atom" in e and "coords" in e, "entry")
        atom_obj = e["atom"]
        if "gen" in atom_obj:
            atom = GeneratorRef(atom_obj["gen"])
        elif "hom" in atom_obj:
            try:
                atom = HomotopyAtom(parse_homotopy_type(atom_obj["hom"]))
            except KernelError as err:
                raise ParseError(str(err)) from err
        else:
            raise ParseError("entry atom must be {'gen': id} or {'hom': token}")
        coords = e["coords"]
        _expect(isinstance(coords, list) and all(isinstance(c, int) for c in coords),
                "entry coords")
        entries.append(DiagramEntry(atom, tuple(coords)))
    try:
        return Diagram(dim, source, tuple(entries))
    except KernelError as err:
        raise ParseError(str(err)) from err


def _step_from_obj(obj):
    _expect(isinstance(obj, dict) and len(obj) == 1, "step object")
    (kind, body), = obj.items()
    if kind == "rewrite":
        direction = body.get("direction", "forward")
        _expect(direction in ("forward", "inverse"), "rewrite direction")
        return RewriteStep(body["generator"], direction,
                           Embedding(tuple(body["embedding"])))
    if kind == "attach":
        _expect(body.get("boundary") in ("s", "t"), "attach boundary")
        return AttachStep(body["generator"], body["boundary"],
                          Embedding(tuple(body["embedding"])))
    if kind == "homotopy":
        try:
            t = parse_homotopy_type(body["type"])
        except KernelError as err:
            raise ParseError(str(err)) from err
        return HomotopyStep(tuple(body["at"]), t)
    raise ParseError(f"unknown step kind {kind!r}")


def signature_from_obj(obj) -> Signature:
    _expect(isinstance(obj, list), "signature list")
    sig = Signature.empty()
    gens = []
    for g in obj:
        _expect(isinstance(g, dict) and "id" in g and "dimension" in g, "generator")
        gens.append(g)
    gens.sort(key=lambda g: g["dimension"])  # lower cells first; stable otherwise
    for g in gens:
        source = g.get("source")
        target = g.get("target")
        try:
            sig = sig.with_generator(Generator(
                id=g["id"],
                dimension=g["dimension"],
                name=g.get("name", ""),
                color=g.get("color", ""),
                source=None if source is None else diagram_from_obj(source),
                target=None if target is None else diagram_from_obj(target),
                invertible=bool(g.get("invertible", False)),
            ))
        except KernelError as err:
            raise ValidationError(f"generator {g['id']!r}: {err}") from err
    return sig


def workspace_from_obj(obj) -> Workspace:
    _expect(isinstance(obj, dict), "top-level object")
    version = obj.get("version")
    _expect(isinstance(version, int), "version field")
    if version > FORMAT_VERSION:
        raise VersionError(
            f"file format version {version} is newer than supported ({FORMAT_VERSION})"
        )
    sig = signature_from_obj(obj.get("signature", []))
    current = None
    if obj.get("diagram") is not None:
        current = diagram_from_obj(obj["diagram"])
        try:
            report = well_formed(current, sig)
        except KernelError as err:
            raise ValidationError(f"workspace diagram: {err}") from err
        if not report:
            raise ValidationError(f"workspace diagram: {report.reason} "
                                  f"(height {report.height})")
    traces = []
    for tobj in obj.get("traces", []):
        _expect(isinstance(tobj, dict) and "name" in tobj, "trace object")
        name = tobj["name"]
        initial = diagram_from_obj(tobj["initial"])
        steps = tuple(_step_from_obj(s) for s in tobj.get("steps", []))
        goal = None
        if tobj.get("goal") is not None:
            goal = diagram_from_obj(tobj["goal"])
        trace = ProofTrace(initial, steps, goal)
        try:
            report = well_formed(initial, sig)
            if not report:
                raise ValidationError(f"trace {name!r} initial diagram: {report.reason}")
            replay(trace, sig)
        except KernelError as err:
            raise ValidationError(f"trace {name!r} does not replay: {err}") from err
        traces.append(NamedTrace(name, trace))
    meta = obj.get("metadata", {})
    _expect(isinstance(meta, dict), "metadata object")
    metadata = Metadata(
        title=meta.get("title", ""),
        author=meta.get("author", ""),
        created=meta.get("created"),
        modified=meta.get("modified"),
    )
    return Workspace(sig, current, tuple(traces), metadata, version)


# --- the container ----------------------------------------------------------


def validate_workspace(w: Workspace) -> None:
    """Raise ValidationError at the first failing component."""
    if w.current is not None:
        report = well_formed(w.current, w.signature)
        if not report:
            raise ValidationError(
                f"workspace diagram: {report.reason} (height {report.height})"
            )
    for nt in w.traces:
        try:
            replay(nt.trace, w.signature)
        except KernelError as err:
            raise ValidationError(f"trace {nt.name!r} does not replay: {err}") from err


def export_workspace(w: Workspace) -> bytes:
    """Canonical JSON compressed as an LZ4 frame; equal workspaces, equal bytes."""
    validate_workspace(w)
    return lz4f.compress(canonical_json(workspace_to_obj(w)))


def import_workspace(data: bytes) -> Workspace:
    """Decompress, parse and fully validate; failures leave no partial state."""
    if not data:
        raise ContainerError("empty input")
    if data[0] == 0x04:  # LZ4 frame magic starts 0x04 0x22 0x4D 0x18
        try:
            payload = lz4f.decompress(data)
        except lz4f.LZ4Error as err:
            raise ContainerError(str(err)) from err
    else:
        payload = data
    try:
        obj = json.loads(payload.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as err:
        raise ParseError(f"payload is not valid JSON: {err}") from err
    return workspace_from_obj(obj)


# --- structural comparison (levels are order-insensitive) -------------------


def signature_equal(a: Signature, b: Signature) -> bool:
    if len(a.levels) != len(b.levels):
        return False
    for la, lb in zip(a.levels, b.levels):
        if sorted(la, key=lambda g: g.id) != sorted(lb, key=lambda g: g.id):
            return False
    return True


def workspace_equal(a: Workspace, b: Workspace) -> bool:
    if a.format_version != b.format_version or a.metadata != b.metadata:
        return False
    if not signature_equal(a.signature, b.signature):
        return False
    if (a.current is None) != (b.current is None):
        return False
    if a.current is not None and a.current != b.current:
        return False
    return sorted(a.traces, key=lambda nt: nt.name) == \
        sorted(b.traces, key=lambda nt: nt.name)
