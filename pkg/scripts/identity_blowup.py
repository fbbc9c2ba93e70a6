"""Norm of the identity chi_e / w(e) on the n-point circle as n grows.

The identity of the finite algebra exists for every n, but its norm is
n^{1 - 1/q} and diverges unless q = 1: no identity survives the limit.
"""
import argparse

from varlp import oracles
from varlp.algebra import find_identity
from varlp.exponent import constant
from varlp.group import build_circle


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--q", type=float, nargs="+", default=[1.0, 1.5, 2.0, 4.0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[16, 64, 256, 1024])
    args = ap.parse_args()
    print(f"{'n':>6} {'q':>5} {'norm':>14} {'closed form':>14} {'certificate':>12}")
    for n in args.sizes:
        G = build_circle(n)
        for q in args.q:
            cert = find_identity(G, constant(q, n))
            print(f"{n:>6} {q:>5g} {cert.norm:>14.8g} {oracles.identity_norm_closed_form(n, q):>14.8g} "
                  f"{str(cert.passed):>12}")


if __name__ == "__main__":
    main()
