#!/usr/bin/env python3
"""Print the stepwise insertion chains of the two bijections on the demo
inputs: each line shows the prefix object (values up to m) and its image
triple, so the block replacements can be followed by hand."""

from combi.bijections import encode_triple, phi_map, psi_map
from combi.objects import (DecoratedPermutation, SignedPermutation, encode,
                           parse)


def phi_chain(text: str):
    w = parse("decorated", text)
    for m in range(1, len(w.entries) + 1):
        prefix = DecoratedPermutation(tuple(e for e in w.entries if e[0] <= m))
        yield encode(prefix), encode_triple(phi_map(prefix))


def psi_chain(text: str):
    pi = parse("signed", text)
    for m in range(1, len(pi.word) + 1):
        prefix = SignedPermutation(tuple(v for v in pi.word if abs(v) <= m))
        yield encode(prefix), encode_triple(psi_map(prefix))


def main():
    print("phi on 3h 1h 4 2 6hc 5h")
    for enc, triple in phi_chain("3h 1h 4 2 6hc 5h"):
        print(f"  {enc:<22} -> {triple}")
    print("psi on -3 -1 4 2 -6 7 -5")
    for enc, triple in psi_chain("-3 -1 4 2 -6 7 -5"):
        print(f"  {enc:<22} -> {triple}")


if __name__ == "__main__":
    main()
