#!/usr/bin/env python3
"""Regenerates data/catalog.json.

Every entry is produced by an explicit construction (difference sets,
McFarland) or by a seeded randomized exact-cover search, checked here, and
re-verified by the C++ loader on every load.
"""
import itertools
import json
import random
import sys
from pathlib import Path


def verify(n, blocks):
    k = len(blocks[0])
    assert all(len(b) == k and len(set(b)) == k for b in blocks)
    rep = [0] * n
    pairs = {}
    for b in blocks:
        for x in b:
            rep[x] += 1
        for x, y in itertools.combinations(sorted(b), 2):
            pairs[(x, y)] = pairs.get((x, y), 0) + 1
    assert len(set(rep)) == 1
    counts = set(pairs.get(p, 0) for p in itertools.combinations(range(n), 2))
    assert len(counts) == 1 and 0 not in counts
    return [len(blocks), n, rep[0], k, counts.pop()]


def develop(v, bases):
    return [sorted((x + s) % v for x in base) for base in bases for s in range(v)]


def develop_group(elements, add, base):
    index = {e: i for i, e in enumerate(elements)}
    return [sorted(index[add(x, g)] for x in base) for g in elements]


def mcfarland_45():
    # E_9 x Z_5: the four lines through the origin of GF(3)^2, line i
    # attached to Z_5 coordinate i.
    lines = [[(t * a % 3, t * b % 3) for t in range(3)] for (a, b) in [(1, 0), (0, 1), (1, 1), (1, 2)]]
    base = [(p[0], p[1], i) for i, line in enumerate(lines) for p in line]
    elements = [(a, b, c) for a in range(3) for b in range(3) for c in range(5)]
    add = lambda x, g: ((x[0] + g[0]) % 3, (x[1] + g[1]) % 3, (x[2] + g[2]) % 5)
    return develop_group(elements, add, base)


def random_triple_system(n, lam, seed, restarts=20000):
    rng = random.Random(seed)
    for _ in range(restarts):
        need = {p: lam for p in itertools.combinations(range(n), 2)}
        blocks = []
        stuck = False
        while any(need.values()):
            a, b = min(p for p, c in need.items() if c)
            options = [c for c in range(n) if c not in (a, b)
                       and need[tuple(sorted((a, c)))] and need[tuple(sorted((b, c)))]]
            if not options:
                stuck = True
                break
            c = rng.choice(options)
            block = sorted((a, b, c))
            for p in itertools.combinations(block, 2):
                need[p] -= 1
            blocks.append(block)
        if not stuck:
            return blocks
    return None


def main():
    out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "data" / "catalog.json"
    entries = []

    def add(name, source, n, blocks):
        blocks = sorted(sorted(b) for b in blocks)
        params = verify(n, blocks)
        entries.append({"name": name, "source": source, "params": params,
                        "ground_size": n, "blocks": blocks})
        print(name, params, file=sys.stderr)

    z2 = list(range(16))
    add("biplane-16", "difference set {0,1,2,4,8,15} in (Z_2)^4",
        16, develop_group(z2, lambda x, g: x ^ g, [0, 1, 2, 4, 8, 15]))
    add("biplane-37", "cyclic difference set of biquadratic residues mod 37",
        37, develop(37, [[1, 7, 9, 10, 12, 16, 26, 33, 34]]))

    add("threefold-symmetric-45", "McFarland difference set in (Z_3)^2 x Z_5", 45, mcfarland_45())

    for n, lam in [(12, 2), (16, 2), (18, 2), (11, 3), (17, 3)]:
        blocks = random_triple_system(n, lam, seed=1000 * lam + n)
        add(f"triple-system-{n}-{lam}", "seeded randomized exact-cover search", n, blocks)

    doc = {"format": "kgeo-catalog", "version": 1, "entries": entries}
    text = json.dumps(doc, indent=1)
    # keep blocks on one line each
    import re
    text = re.sub(r"\[\s*(-?\d+(?:,\s*-?\d+)*)\s*\]",
                  lambda m: "[" + ", ".join(x.strip() for x in m.group(1).split(",")) + "]", text)
    out.write_text(text + "\n")


if __name__ == "__main__":
    main()
