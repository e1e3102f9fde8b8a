"""Derive the shipped proof traces mechanically with the kernel.

Searches the rewrite/interchange move graph for the snake-equation proof and
the Frobenius-implies-associativity proof, then prints the step lists that
fixtures.py freezes.  Run once during development:

    python3 tools/derive_traces.py
"""

from __future__ import annotations

import heapq
import sys

sys.path.insert(0, "src")

from weft import fixtures
from weft.homotopy import enumerate_homotopies, homotopy_rewrite
from weft.kernel import match, rewrite
from weft.trace import AttachStep, HomotopyStep, ProofTrace, RewriteStep, replay


def moves(d, sig, cells, cap):
    out = []
    for gid in cells:
        g = sig.generator(gid)
        for e in match(d, g.source, sig):
            nd = rewrite(d, g.source, g.target, e, sig)
            if len(nd.entries) <= cap:
                out.append((RewriteStep(gid, "forward", e), nd))
        if g.invertible:
            for e in match(d, g.target, sig):
                nd = rewrite(d, g.target, g.source, e, sig)
                if len(nd.entries) <= cap:
                    out.append((RewriteStep(gid, "inverse", e), nd))
    for p, t in enumerate_homotopies(d, sig):
        out.append((HomotopyStep(p, t), homotopy_rewrite(d, p, t, sig)))
    return out


def search(initial, goal, sig, cells, budget, cap):
    """Uniform-cost search; returns {depth_of_goal: path} for the first hit."""
    start = initial
    frontier = [(0, 0, start)]
    seen = {start: (0, None, None)}
    tie = 0
    while frontier:
        depth, _, d = heapq.heappop(frontier)
        if seen[d][0] < depth:
            continue
        if d == goal:
            path = []
            cur = d
            while seen[cur][1] is not None:
                _, parent, step = seen[cur]
                path.append(step)
                cur = parent
            return list(reversed(path))
        if depth == budget:
            continue
        for step, nd in moves(d, sig, cells, cap):
            if nd not in seen or seen[nd][0] > depth + 1:
                seen[nd] = (depth + 1, d, step)
                tie += 1
                heapq.heappush(frontier, (depth + 1, tie, nd))
    return None


def show(path):
    for i, step in enumerate(path):
        if isinstance(step, RewriteStep):
            print(f"  {i:2d}. rewrite {step.generator_id} {step.direction} "
                  f"@ {list(step.embedding.coords)}")
        elif isinstance(step, HomotopyStep):
            print(f"  {i:2d}. homotopy {step.kind.token} @ {list(step.position)}")
        else:
            print(f"  {i:2d}. attach {step}")


def main():
    sig = fixtures.snake_signature()
    zigzag, straight = fixtures.snake_diagrams(sig)
    cells = ["pi1", "pi2", "pi3", "pi4", "pi5", "pi6", "pi7", "pi8"]
    path = search(zigzag, straight, sig, cells, budget=14, cap=8)
    if path is None:
        print("snake: no path within budget")
    else:
        print(f"snake: {len(path)} steps")
        show(path)
        final = replay(ProofTrace(zigzag, tuple(path)), sig)
        assert final == straight

    sig = fixtures.frobenius_signature()
    left, right = fixtures.frobenius_diagrams(sig)
    cells = ["unit_l", "unit_r", "counit_l", "counit_r", "frob_l", "frob_r"]
    path = search(left, right, sig, cells, budget=12, cap=7)
    if path is None:
        print("frobenius: no path within budget")
    else:
        print(f"frobenius: {len(path)} steps")
        show(path)
        final = replay(ProofTrace(left, tuple(path)), sig)
        assert final == right


if __name__ == "__main__":
    main()
