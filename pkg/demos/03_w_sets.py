"""
W-sets of the top element against the explicit sets D_mu.

The W-set is computed from the poset alone; D_mu is written down directly.
They agree for every composition tried here.
"""

from complete_quadrics.muinv import bar_string, compositions
from complete_quadrics.perm import count_reduced_words
from complete_quadrics.poset import build_poset, d_set, d_set_mu, maximal_chains, w_set


def main():
    for n in range(1, 7):
        print(f"D_{n} ({len(d_set(n))}): {' '.join(str(w) for w in sorted(d_set(n)))}")

    print("\nmu          |W(top)|  = D_mu   chains  sum #red")
    for n in (4, 5, 6):
        for mu in compositions(n):
            poset = build_poset(mu)
            ws = w_set(poset.top, poset).elements
            dm = d_set_mu(mu)
            red = sum(count_reduced_words(w) for w in dm)
            print(f"{str(mu):<11} {len(ws):>8}  {str(ws == dm):<7} {maximal_chains(poset):>6}  {red:>8}")

    print("\nD_(4,2):", " ".join(bar_string(w, (4, 2)) for w in sorted(d_set_mu((4, 2)))))


if __name__ == "__main__":
    main()
