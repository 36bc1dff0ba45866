"""Enumerate a small Jacobian and print its order and torsion structure.

Usage: python scripts/enumerate_small_jacobian.py [p] [l2 l4 l6 l8 l10]
"""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from g2div.cantor import (
    brute_force_n_torsion,
    enumerate_jacobian,
    jacobian_order_from_zeta,
    to_mumford,
)
from g2div.curves import CanonicalCurve
from g2div.fields import GF


def main():
    args = [int(a) for a in sys.argv[1:]] or [7, 0, 0, 0, 0, 1]
    p, lam = args[0], tuple(args[1:6])
    curve = CanonicalCurve(GF(p), lam)
    els = enumerate_jacobian(curve)
    zeta = jacobian_order_from_zeta(curve)
    print(f"curve: y^2 = x^5 + {lam[0]}x^4 + {lam[1]}x^3 + {lam[2]}x^2 + {lam[3]}x + {lam[4]} over F_{p}")
    print(f"|Jac| = {len(els)} (zeta point-count formula: {zeta})")
    assert len(els) == zeta
    for n in (2, 3, 4, 5):
        tn = brute_force_n_torsion(curve, n, els)
        print(f"  exact order {n}: {len(tn)} divisors")
        for d in tn[:6]:
            print(f"    {to_mumford(d)}")


if __name__ == "__main__":
    main()
