"""Frozen instance corpus shared by the test suite."""

from semitotal import (
    Graph,
    cartesian,
    complete,
    complete_bipartite,
    corona,
    cycle,
    book,
    friendship,
    join,
    path,
    petersen,
    rooted_product,
    star,
    wheel,
)


def family_corpus(max_n: int = 14) -> list[Graph]:
    out: list[Graph] = []
    out += [path(n) for n in range(2, max_n + 1)]
    out += [cycle(n) for n in range(3, max_n + 1)]
    out += [complete(n) for n in range(2, max_n + 1)]
    out += [star(n) for n in range(1, max_n)]
    out += [
        complete_bipartite(m, n)
        for m in range(1, max_n)
        for n in range(m, max_n)
        if m + n <= max_n
    ]
    out += [wheel(n) for n in range(4, max_n + 1)]
    out += [friendship(n) for n in range(1, (max_n - 1) // 2 + 1)]
    out += [book(n) for n in range(1, (max_n - 2) // 2 + 1)]
    if max_n >= 10:
        out.append(petersen())
    return out


def product_corpus(max_n: int = 14) -> list[Graph]:
    factors = [path(2), path(3), path(4), cycle(3), cycle(4), cycle(5),
               complete(1), complete(2), complete(3)]
    out: list[Graph] = []
    for a in factors:
        for b in factors:
            if a.n * (1 + b.n) <= max_n:
                out.append(corona(a, b))
            if a.n * b.n <= max_n:
                out.append(cartesian(a, b))
                out.append(rooted_product(a, b, 0))
            if a.n + b.n <= max_n:
                out.append(join(a, b))
    return out


def full_corpus(max_n: int = 14) -> list[Graph]:
    return family_corpus(max_n) + product_corpus(max_n)
