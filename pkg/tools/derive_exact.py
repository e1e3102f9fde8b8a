"""Find the exact-length proof traces the shipped fixtures freeze.

The snake proof mirrors the displayed chain: two invertibility-pair
insertions, interchanger slides, four pair contractions; 14 steps.  The
Frobenius associativity proof spends two counit-law applications, four
Frobenius applications and six slides; 12 steps.  Both searches demand a
simple path (no diagram revisited), so no step is do-undo filler.

    python3 tools/derive_exact.py
"""

from __future__ import annotations

import sys
import time
from collections import deque

sys.path.insert(0, "src")

from weft import fixtures
from weft.homotopy import enumerate_homotopies, homotopy_rewrite
from weft.kernel import match, rewrite
from weft.trace import HomotopyStep, ProofTrace, RewriteStep, replay


def rewrite_moves(d, sig, cells, cap):
    out = []
    for gid, direction in cells:
        g = sig.generator(gid)
        src, tgt = (g.source, g.target) if direction == "forward" \
            else (g.target, g.source)
        for e in match(d, src, sig):
            nd = rewrite(d, src, tgt, e, sig)
            if len(nd.entries) <= cap:
                out.append((RewriteStep(gid, direction, e), nd))
    return out


def homotopy_moves(d, sig):
    return [(HomotopyStep(p, t), homotopy_rewrite(d, p, t, sig))
            for p, t in enumerate_homotopies(d, sig)]


def distances(goal, sig, cells, cap, radius):
    dist = {goal: 0}
    queue = deque([goal])
    while queue:
        d = queue.popleft()
        if dist[d] == radius:
            continue
        for _, nd in rewrite_moves(d, sig, cells, cap) + homotopy_moves(d, sig):
            if nd not in dist:
                dist[nd] = dist[d] + 1
                queue.append(nd)
    print(f"  (space within {radius} of goal: {len(dist)} diagrams)")
    return dist


def search_exact(start, goal, sig, groups, cap, deadline):
    """DFS for a simple path using exactly the budgeted move groups.

    ``groups``: list of (cells, budget) where cells is a list of
    (generator, direction) pairs, or the token "~" for interchangers.
    """
    total = sum(b for _, b in groups)
    all_cells = sorted({cd for cells, _ in groups if cells != "~" for cd in cells})
    radius = min(total, 9)
    dist = distances(goal, sig, all_cells, cap, radius)
    path = []
    seen = {start}

    def dfs(d, budgets):
        remaining = sum(budgets)
        if time.time() > deadline:
            raise TimeoutError
        if d in dist:
            if dist[d] > remaining:
                return False
        elif remaining < radius:
            return False
        if remaining == 0:
            return d == goal
        for gi, (cells, _) in enumerate(groups):
            if budgets[gi] == 0:
                continue
            if cells == "~":
                options = homotopy_moves(d, sig)
            else:
                options = rewrite_moves(d, sig, cells, cap)
            nb = budgets[:gi] + (budgets[gi] - 1,) + budgets[gi + 1:]
            for step, nd in options:
                if nd in seen:
                    continue
                seen.add(nd)
                path.append(step)
                if dfs(nd, nb):
                    return True
                path.pop()
                seen.remove(nd)
        return False

    sys.setrecursionlimit(10000)
    try:
        if dfs(start, tuple(b for _, b in groups)):
            return list(path)
    except TimeoutError:
        print("  (timed out)")
    return None


def show(path):
    for step in path:
        if isinstance(step, RewriteStep):
            print(f"        (\"{step.generator_id}\", \"{step.direction}\", "
                  f"{list(step.embedding.coords)}),")
        else:
            print(f"        (\"{step.kind.token}\", {list(step.position)}),")


def main():
    sig = fixtures.snake_signature()
    zigzag, straight = fixtures.snake_diagrams(sig)
    inserts = [(g, "forward") for g in ("pi2", "pi4", "pi6", "pi8")]
    removes = [(g, "forward") for g in ("pi1", "pi3", "pi5", "pi7")]
    path = search_exact(
        zigzag, straight, sig,
        groups=[(inserts, 2), (removes, 4), ("~", 8)],
        cap=8, deadline=time.time() + 240,
    )
    if path is None:
        print("snake: no exact-14 simple path with this budget")
    else:
        print(f"snake: {len(path)} steps")
        show(path)
        assert replay(ProofTrace(zigzag, tuple(path)), sig) == straight

    sig = fixtures.frobenius_signature()
    left, right = fixtures.frobenius_diagrams(sig)
    laws = [(g, d) for g in ("unit_l", "unit_r", "counit_l", "counit_r")
            for d in ("forward", "inverse")]
    frobs = [(g, d) for g in ("frob_l", "frob_r") for d in ("forward", "inverse")]
    path = search_exact(
        left, right, sig,
        groups=[(laws, 2), (frobs, 4), ("~", 6)],
        cap=8, deadline=time.time() + 240,
    )
    if path is None:
        print("frobenius: no exact-12 simple path with this budget")
    else:
        print(f"frobenius: {len(path)} steps")
        show(path)
        assert replay(ProofTrace(left, tuple(path)), sig) == right


if __name__ == "__main__":
    main()
