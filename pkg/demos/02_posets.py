"""
The reverse weak order as a graded poset.

Prints the rank levels of I_(3,1), counts its maximal chains and writes the
Hasse diagram as Graphviz source (render with ``dot -Tpdf``).
"""

import sys
from pathlib import Path

from complete_quadrics.muinv import rank_mu
from complete_quadrics.poset import (
    Multiplicity, build_poset, chain_lengths, maximal_chains, to_dot,
)


def main(out_dir="."):
    poset = build_poset((3, 1))
    print(f"I_{poset.mu}: {len(poset.nodes)} elements, height {poset.height}")
    for r, level in enumerate(poset.by_rank()):
        print(f"  rank {r}: {' '.join(level)}")

    doubles = sum(e.multiplicity is Multiplicity.DOUBLE for e in poset.edges)
    print(f"{len(poset.edges)} labelled covers, {doubles} of them double")
    print(f"maximal chains: {maximal_chains(poset)}")
    print(f"chain lengths: {sorted(chain_lengths(poset))} (rank of top: {rank_mu(poset.top)})")

    path = Path(out_dir) / "I_3_1.dot"
    path.write_text(to_dot(poset))
    print(f"wrote {path}")

    five = build_poset((5,))
    print(f"\nI_5: {len(five.nodes)} elements, height {five.height}, top {five.top}, "
          f"{maximal_chains(five)} maximal chains")


if __name__ == "__main__":
    main(*sys.argv[1:])
