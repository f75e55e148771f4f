"""Domination numbers across the named families, under both witness rules.

The semitotal variant asks every member of a dominating set to have another
member within distance 2.  Reading "within" as "at most 2" or as "exactly 2"
changes the answers on several families; this script puts the two readings
side by side with the plain and total numbers.
"""

from semitotal import (
    PLAIN,
    SEMITOTAL_EXACT,
    SEMITOTAL_WITHIN,
    TOTAL,
    book,
    complete_bipartite,
    cycle,
    domination_number,
    friendship,
    path,
    petersen,
    star,
    wheel,
)

FAMILIES = [
    path(10),
    cycle(10),
    star(6),
    complete_bipartite(3, 5),
    wheel(9),
    friendship(4),
    book(3),
    petersen(),
]


def main() -> None:
    header = f"{'graph':<10} {'plain':>6} {'total':>6} {'semi<=2':>8} {'semi=2':>7}"
    print(header)
    print("-" * len(header))
    for g in FAMILIES:
        row = [
            domination_number(g, PLAIN),
            domination_number(g, TOTAL),
            domination_number(g, SEMITOTAL_WITHIN),
            domination_number(g, SEMITOTAL_EXACT),
        ]
        print(f"{g.name:<10} " + " ".join(f"{v!s:>{w}}" for v, w in zip(row, (6, 6, 8, 7))))

    print()
    print("the hub effect: any vertex adjacent to everything else can never sit")
    print("in an exact-distance-2 set, which is why stars, wheels, friendship")
    print("graphs and books jump once the rule is 'exactly 2':")
    for g in (star(6), wheel(9), friendship(4)):
        within = domination_number(g, SEMITOTAL_WITHIN)
        exact = domination_number(g, SEMITOTAL_EXACT)
        print(f"  {g.name}: {within} (within 2) vs {exact} (exactly 2)")


if __name__ == "__main__":
    main()
