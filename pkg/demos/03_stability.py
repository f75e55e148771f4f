"""Stability: how few vertex removals change the semitotal number.

The search tries removal sets in increasing size and reports the first one
whose residue has a different value.  Residues that are empty, have
isolated vertices, or admit no semitotal set at all are skipped under the
default policy.  Witness sets make the answers auditable.
"""

from semitotal import (
    RemovalPolicy,
    WitnessRule,
    bits_list,
    cycle,
    domination_number,
    path,
    semitotal,
    stability_witness,
    wheel,
)

RULE = WitnessRule.EXACTLY_TWO


def show(g) -> None:
    base = domination_number(g, semitotal(RULE))
    hit = stability_witness(g, RULE)
    if hit is None:
        print(f"  {g.name:<5} value {base}: no removal changes it")
        return
    k, witness = hit
    residue, _ = g.delete_vertices(witness)
    after = domination_number(residue, semitotal(RULE))
    print(f"  {g.name:<5} value {base}: remove {bits_list(witness)} -> {after}  (stability {k})")


def main() -> None:
    print("paths (note how interior removals can split the path and RAISE the value):")
    for n in range(6, 14):
        show(path(n))
    print()
    print("cycles:")
    for n in range(6, 14):
        show(cycle(n))
    print()
    print("wheels (removing one rim vertex turns the rim cycle into a path):")
    for n in range(5, 11):
        show(wheel(n))
    print()
    print("policy comparison on P_4 (vertex 1's removal isolates vertex 0):")
    for policy in RemovalPolicy:
        hit = stability_witness(path(4), RULE, policy=policy)
        print(f"  {policy.name}: stability {hit[0]}, witness {bits_list(hit[1])}")


if __name__ == "__main__":
    main()
