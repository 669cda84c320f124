"""
How the generators s_i act on mu-involutions.

Walks through the four cases of the action on a permutation cut into four
strings, then climbs from the bottom element to the top one.
"""

from complete_quadrics.monoid import act_simple, act_word, action_case
from complete_quadrics.muinv import identity_mu, parse_mu_involution, rank_mu, top_mu


def main():
    pi = parse_mu_involution("314|6|27|5")
    print(f"pi = {pi}, rank {rank_mu(pi)}")
    for i in range(1, pi.n):
        out = act_simple(i, pi)
        print(f"  s_{i}: {action_case(i, pi).name:<9} -> {out}")

    # a reduced word of the top of the W-set drives e up to the top element
    mu = (3, 1)
    e = identity_mu(mu)
    word = (1, 2, 1, 3, 2)
    pi = e
    print("\nclimbing I_3,1 with s_1 s_2 s_1 s_3 s_2 (rightmost first)")
    for i in reversed(word):
        pi = act_simple(i, pi)
        print(f"  s_{i} -> {pi}  rank {rank_mu(pi)}")
    assert pi == act_word(word, e) == top_mu(mu)


if __name__ == "__main__":
    main()
