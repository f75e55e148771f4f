"""Semitotal domination stability by exhaustive minimal-removal search."""

from __future__ import annotations

import enum
from itertools import combinations

from .errors import BudgetExceededError, EmptyGraphError, IsolatesError
from .graph import Graph
from .domination import Conventions, DEFAULT_CONVENTIONS, WitnessRule, domination_number, semitotal


class RemovalPolicy(enum.Enum):
    """What a removal set counts for when the residue leaves the domain.

    A residue is out of domain when it is empty, has isolated vertices, or
    has no semitotal dominating set at all under the chosen rule (possible
    under the exact-distance rule, e.g. a complete component in a residue).
    SKIP_SET drops such removal sets from consideration; COUNT_AS_CHANGED
    treats them as changing the number.
    """

    SKIP_SET = "skip"
    COUNT_AS_CHANGED = "changed"


def _residue_value(
    g: Graph,
    removed: int,
    rule: WitnessRule,
    conv: Conventions,
    cache: dict[tuple[int, tuple[int, ...]], int | None],
) -> int | None:
    residue, _ = g.delete_vertices(removed)
    if residue.n == 0 or not residue.is_isolate_free():
        return None
    key = (residue.n, residue.adj)
    if key not in cache:
        cache[key] = domination_number(residue, semitotal(rule), conv)
    return cache[key]


def _stability_search(
    g: Graph,
    rule: WitnessRule,
    conv: Conventions,
    policy: RemovalPolicy,
    budget: int,
) -> tuple[int, int] | None:
    if g.n < 2:
        raise EmptyGraphError("stability needs a graph on at least 2 vertices")
    if not g.is_isolate_free():
        raise IsolatesError("stability requires an isolate-free graph")
    if g.n > budget:
        raise BudgetExceededError(f"graph has {g.n} vertices, stability budget is {budget}")
    base = domination_number(g, semitotal(rule), conv)
    cache: dict[tuple[int, tuple[int, ...]], int | None] = {}
    for k in range(1, g.n):
        for combo in combinations(range(g.n), k):
            removed = 0
            for v in combo:
                removed |= 1 << v
            value = _residue_value(g, removed, rule, conv, cache)
            if value is None:
                if policy is RemovalPolicy.COUNT_AS_CHANGED:
                    return k, removed
                continue
            if value != base:
                return k, removed
    return None


def semitotal_stability(
    g: Graph,
    rule: WitnessRule = WitnessRule.WITHIN_TWO,
    conv: Conventions = DEFAULT_CONVENTIONS,
    policy: RemovalPolicy = RemovalPolicy.SKIP_SET,
    budget: int = 16,
) -> int | None:
    """Least k such that removing some k vertices changes the semitotal number.

    Subsets are scanned in increasing size, so by construction every smaller
    removal set either leaves the number unchanged or is handled by the
    policy.  Returns None when no removal of fewer than n vertices changes
    the number under SKIP_SET.
    """
    hit = _stability_search(g, rule, conv, policy, budget)
    return None if hit is None else hit[0]


def stability_witness(
    g: Graph,
    rule: WitnessRule = WitnessRule.WITHIN_TWO,
    conv: Conventions = DEFAULT_CONVENTIONS,
    policy: RemovalPolicy = RemovalPolicy.SKIP_SET,
    budget: int = 16,
) -> tuple[int, int] | None:
    """Minimal change-achieving removal set, lexicographically least.

    Returns (k, removal mask), or None when no removal changes the number.
    """
    return _stability_search(g, rule, conv, policy, budget)
