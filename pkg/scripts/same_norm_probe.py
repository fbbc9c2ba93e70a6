"""Compare the SUM, MAX and MUSIELAK Luxemburg norms on random mixed exponents.

Prints the observed ranges of SUM/MAX and MUSIELAK/SUM and the smallest
instance where SUM and MAX differ.
"""
import argparse

import numpy as np

from varlp.exponent import Exponent
from varlp.group import build_cyclic
from varlp.modular import ModularKind
from varlp.norms import luxemburg_norm
from varlp.suites import SMALL_GROUPS, group_of, random_exponent, random_function


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = np.random.default_rng(args.seed)
    sm, ms = [], []
    for _ in range(args.trials):
        G = group_of(SMALL_GROUPS[rng.integers(len(SMALL_GROUPS))])
        p = random_exponent(rng, G)
        f = random_function(rng, G.n)
        ns, nm, nu = (luxemburg_norm(f, p, G, k).value for k in ModularKind)
        sm.append(ns / nm)
        ms.append(nu / ns)
    print(f"SUM/MAX       in [{min(sm):.6f}, {max(sm):.6f}]")
    print(f"MUSIELAK/SUM  in [{min(ms):.6f}, {max(ms):.6f}]")
    G = build_cyclic(2)
    p = Exponent(np.array([1.0, np.inf]))
    vals = {k.value: luxemburg_norm([1.0, 1.0], p, G, k).value for k in ModularKind}
    print("f = (1, 1), p = (1, inf), counting:", vals)


if __name__ == "__main__":
    main()
