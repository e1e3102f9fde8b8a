"""Replayable proof traces.

A trace is an initial diagram plus an ordered list of steps; each step either
rewrites by a signature cell one dimension up, attaches a cell, or applies a
homotopy move.  Replaying a trace of n-diagram steps walks the same data a
composite (n+1)-diagram would encode, which is why traces are the persisted
proof objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from . import homotopy
from .kernel import (
    Boundary,
    ContractViolation,
    Diagram,
    Embedding,
    HomotopyType,
    KernelError,
    Signature,
    attach,
    equal,
    rewrite,
    singleton,
)

Direction = str  # "forward" | "inverse"


@dataclass(frozen=True)
class RewriteStep:
    generator_id: str
    direction: Direction
    embedding: Embedding


@dataclass(frozen=True)
class AttachStep:
    generator_id: str
    boundary: Boundary
    embedding: Embedding


@dataclass(frozen=True)
class HomotopyStep:
    position: tuple[int, ...]
    kind: HomotopyType

    def __post_init__(self):
        object.__setattr__(self, "position", tuple(self.position))


Step = Union[RewriteStep, AttachStep, HomotopyStep]


class ReplayError(KernelError):
    """A step's precondition failed on the running diagram."""

    def __init__(self, index: int, step: Step, reason: str):
        super().__init__(f"step {index} failed: {reason}")
        self.index = index
        self.step = step
        self.reason = reason


@dataclass(frozen=True)
class ProofTrace:
    initial: Diagram
    steps: tuple[Step, ...] = ()
    goal: Optional[Diagram] = None

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))

    def __len__(self) -> int:
        return len(self.steps)


def apply_step(d: Diagram, step: Step, sig: Signature) -> Diagram:
    if isinstance(step, RewriteStep):
        gen = sig.generator(step.generator_id)
        if gen.dimension != d.dimension + 1:
            raise ContractViolation(
                f"rewrite by {gen.id!r} needs a cell of dimension {d.dimension + 1}"
            )
        if step.direction == "forward":
            psi, psi_prime = gen.source, gen.target
        elif step.direction == "inverse":
            if not gen.invertible:
                raise ContractViolation(f"{gen.id!r} is not marked invertible")
            psi, psi_prime = gen.target, gen.source
        else:
            raise ContractViolation(f"bad direction {step.direction!r}")
        return rewrite(d, psi, psi_prime, step.embedding, sig)
    if isinstance(step, AttachStep):
        gen = sig.generator(step.generator_id)
        return attach(d, singleton(gen), step.boundary, step.embedding, sig)
    if isinstance(step, HomotopyStep):
        if not homotopy.homotopy_match(d, step.position, step.kind, sig):
            raise ContractViolation(
                f"homotopy {step.kind.token} does not match at {list(step.position)}"
            )
        return homotopy.homotopy_rewrite(d, step.position, step.kind, sig)
    raise ContractViolation(f"unknown step {step!r}")


def replay(trace: ProofTrace, sig: Signature) -> Diagram:
    """Run every step; raises ReplayError at the first failing step."""
    d = trace.initial
    for i, step in enumerate(trace.steps):
        try:
            d = apply_step(d, step, sig)
        except ReplayError:
            raise
        except KernelError as err:
            raise ReplayError(i, step, str(err)) from err
    return d


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    steps: int
    final: Optional[Diagram] = None
    failed_index: Optional[int] = None
    reason: str = ""


def check(trace: ProofTrace, sig: Signature) -> CheckResult:
    """Replay and, when a goal is declared, compare the final diagram to it."""
    try:
        final = replay(trace, sig)
    except ReplayError as err:
        return CheckResult(False, len(trace.steps), None, err.index, err.reason)
    if trace.goal is not None and not equal(final, trace.goal):
        return CheckResult(
            False, len(trace.steps), final, None,
            "final diagram does not equal the declared goal",
        )
    return CheckResult(True, len(trace.steps), final)
