"""Randomized oracle-equivalence sweep with a dispatch-branch tally.

Every addition is cross-checked against the independent Cantor arithmetic;
the tally shows how often each branch of the coordinate law fires.

Usage: python scripts/branch_coverage.py [pairs] [p]
"""
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from g2div.cantor import cantor_add, from_mumford, to_mumford
from g2div.curves import CanonicalCurve
from g2div.divisors import MumfordDivisor, mumford_from_points, negate
from g2div.fields import GF
from g2div.grouplaw import add_traced, double_traced


def random_divisor(curve, rng):
    F = curve.field
    q = F.order()
    pts = []
    while len(pts) < 2:
        x = F.element(rng.randrange(q))
        roots = F.sqrt(curve.p_at(x))
        if roots and all(x != p[0] for p in pts):
            pts.append((x, roots[rng.randrange(len(roots))]))
    return mumford_from_points(curve, pts[0], pts[1])


def main():
    pairs = int(sys.argv[1]) if len(sys.argv) > 1 else 5000
    p = int(sys.argv[2]) if len(sys.argv) > 2 else 1009
    curve = CanonicalCurve(GF(p), (1, 2, 3, 4, 5))
    rng = random.Random(0)
    tags = {}
    t0 = time.time()
    for i in range(pairs):
        P, Q = random_divisor(curve, rng), random_divisor(curve, rng)
        got, tag = add_traced(P, Q, curve)
        expect = to_mumford(cantor_add(from_mumford(P), from_mumford(Q), curve))
        assert got == expect, (P, Q)
        tags[tag] = tags.get(tag, 0) + 1
        if i % 5 == 0:
            dgot, dtag = double_traced(P, curve)
            assert dgot == to_mumford(cantor_add(from_mumford(P), from_mumford(P), curve))
            tags[dtag] = tags.get(dtag, 0) + 1
        if i % 50 == 0:
            got, tag = add_traced(P, negate(P), curve)
            assert got.is_neutral()
            tags[tag] = tags.get(tag, 0) + 1
            got, tag = add_traced(P, MumfordDivisor.neutral(curve.field), curve)
            tags[tag] = tags.get(tag, 0) + 1
    dt = time.time() - t0
    print(f"{pairs} pairs over F_{p} in {dt:.1f}s, all equal to the Cantor oracle")
    for tag in sorted(tags):
        print(f"  {tag:18s} {tags[tag]}")


if __name__ == "__main__":
    main()
