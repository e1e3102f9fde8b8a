import json

import pytest

from weft import bundle, fixtures, lz4f
from weft.bundle import (
    ContainerError,
    Metadata,
    NamedTrace,
    ParseError,
    ValidationError,
    VersionError,
    Workspace,
    export_workspace,
    import_workspace,
    workspace_equal,
)
from weft.kernel import Diagram, Embedding, Generator, Signature
from weft.trace import HomotopyStep, ProofTrace, RewriteStep
from weft.homotopy import HomotopyType


def sample_workspace():
    sig = fixtures.worked_signature()
    corpus = fixtures.worked_diagrams(sig)
    meta = Metadata(title="worked corpus", author="weft",
                    created="2024-01-01T00:00:00Z", modified="2024-01-01T00:00:00Z")
    trace = ProofTrace(corpus["D1"], (HomotopyStep((1,), HomotopyType("I", 2)),))
    return Workspace(sig, corpus["D1"], (NamedTrace("swap", trace),), meta)


class TestRoundTrip:
    def test_import_export_identity(self):
        w = sample_workspace()
        data = export_workspace(w)
        back = import_workspace(data)
        assert workspace_equal(w, back)

    def test_export_import_export_stable(self):
        w = sample_workspace()
        data = export_workspace(w)
        assert export_workspace(import_workspace(data)) == data

    def test_empty_workspace(self):
        data = export_workspace(Workspace.empty())
        assert workspace_equal(import_workspace(data), Workspace.empty())

    def test_uncompressed_json_accepted(self):
        w = sample_workspace()
        payload = bundle.canonical_json(bundle.workspace_to_obj(w))
        assert payload[0:1] == b"{"
        assert workspace_equal(import_workspace(payload), w)


class TestDeterminism:
    def test_insertion_order_irrelevant(self):
        def build(order):
            sig = Signature.empty()
            for gid in order:
                sig = sig.with_generator(Generator(gid, 0, name=gid, color="#123456"))
            return Workspace(signature=sig)

        a = build(["p", "q", "r"])
        b = build(["r", "p", "q"])
        assert export_workspace(a) == export_workspace(b)

    def test_trace_order_irrelevant(self):
        sig = fixtures.worked_signature()
        corpus = fixtures.worked_diagrams(sig)
        t1 = NamedTrace("one", ProofTrace(corpus["D1"]))
        t2 = NamedTrace("two", ProofTrace(corpus["D2"]))
        a = Workspace(sig, None, (t1, t2))
        b = Workspace(sig, None, (t2, t1))
        assert export_workspace(a) == export_workspace(b)

    def test_payload_is_canonical_json(self):
        data = export_workspace(sample_workspace())
        payload = lz4f.decompress(data)
        obj = json.loads(payload)
        assert bundle.canonical_json(obj) == payload


class TestValidation:
    def test_version_gate(self):
        obj = bundle.workspace_to_obj(Workspace.empty())
        obj["version"] = 99
        with pytest.raises(VersionError):
            import_workspace(bundle.canonical_json(obj))

    def test_dangling_reference_rejected(self):
        w = sample_workspace()
        obj = bundle.workspace_to_obj(w)
        obj["signature"] = [g for g in obj["signature"] if g["id"] != "v2"]
        with pytest.raises((ValidationError, ParseError)):
            import_workspace(bundle.canonical_json(obj))

    def test_corrupt_container(self):
        data = bytearray(export_workspace(sample_workspace()))
        data[10] ^= 0xFF
        with pytest.raises(ContainerError):
            import_workspace(bytes(data))

    def test_malformed_json(self):
        with pytest.raises(ParseError):
            import_workspace(b"{not json")

    def test_bad_trace_rejected(self):
        w = sample_workspace()
        obj = bundle.workspace_to_obj(w)
        obj["traces"][0]["steps"] = [
            {"rewrite": {"generator": "v1", "direction": "forward", "embedding": [9, 9]}}
        ]
        with pytest.raises(ValidationError):
            import_workspace(bundle.canonical_json(obj))

    def test_ill_formed_diagram_rejected(self):
        w = sample_workspace()
        obj = bundle.workspace_to_obj(w)
        obj["diagram"]["entries"][0]["coords"] = [7]
        with pytest.raises(ValidationError):
            import_workspace(bundle.canonical_json(obj))

    def test_export_validates_first(self):
        sig = fixtures.worked_signature()
        corpus = fixtures.worked_diagrams(sig)
        broken = corpus["D1"].with_entries(
            corpus["D1"].entries[:1]
            + (corpus["D1"].entries[1].shifted((7,)),)
        )
        with pytest.raises(ValidationError):
            export_workspace(Workspace(sig, broken))

    def test_inverse_step_requires_invertible(self):
        sig = fixtures.worked_signature()
        corpus = fixtures.worked_diagrams(sig)
        trace = ProofTrace(
            corpus["D1"].source,
            (RewriteStep("v1", "inverse", Embedding((0, 0))),),
        )
        w = Workspace(sig, None, (NamedTrace("bad", trace),))
        with pytest.raises(ValidationError):
            export_workspace(w)


class TestGolden:
    def test_empty_workspace_golden_bytes(self, tmp_path):
        import pathlib

        golden_path = pathlib.Path(__file__).parent / "data" / "empty.gwb"
        data = export_workspace(Workspace.empty())
        assert golden_path.exists(), "golden file missing; regenerate tests/data"
        assert data == golden_path.read_bytes()
