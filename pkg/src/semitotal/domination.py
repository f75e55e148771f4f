"""Exact domination solvers: membership tests, optimization, and counting.

Three variants are supported: plain domination (closed-neighborhood cover),
total domination (open-neighborhood cover) and semitotal domination
(dominating set in which every member has a distance witness).  Semitotal
takes the witness rule explicitly, because the two readings of "within
distance 2" (at most 2 versus exactly 2) give different values on many
families; every caller must say which one it means.
"""

from __future__ import annotations

import enum
from array import array
from dataclasses import dataclass
from itertools import combinations

from .errors import BudgetExceededError, EmptyGraphError, IsolatesError
from .graph import Graph, iter_bits
from .polynomial import CountPolynomial


class WitnessRule(enum.Enum):
    """Distance predicate a member's witness must satisfy."""

    WITHIN_TWO = "within2"
    EXACTLY_TWO = "exact2"


@dataclass(frozen=True)
class Variant:
    """Domination variant; semitotal carries its witness rule."""

    kind: str
    rule: WitnessRule | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("plain", "total", "semitotal"):
            raise ValueError(f"unknown variant kind {self.kind!r}")
        if self.kind == "semitotal" and self.rule is None:
            raise ValueError("semitotal variant needs a witness rule")
        if self.kind != "semitotal" and self.rule is not None:
            raise ValueError(f"{self.kind} variant takes no witness rule")

    def label(self) -> str:
        if self.kind == "semitotal":
            return f"semitotal[{self.rule.value}]"
        return self.kind


PLAIN = Variant("plain")
TOTAL = Variant("total")


def semitotal(rule: WitnessRule = WitnessRule.WITHIN_TWO) -> Variant:
    return Variant("semitotal", rule)


SEMITOTAL_WITHIN = semitotal(WitnessRule.WITHIN_TWO)
SEMITOTAL_EXACT = semitotal(WitnessRule.EXACTLY_TWO)


@dataclass(frozen=True)
class Conventions:
    """Value conventions applied by the number/count operations only.

    ``complete_singleton``: treat single vertices of a complete graph as
    semitotal dominating sets, so the semitotal number of a complete graph
    is 1.  The bare membership predicates never apply this.
    """

    complete_singleton: bool = True


DEFAULT_CONVENTIONS = Conventions()


# -- membership predicates ---------------------------------------------


def _require_isolate_free(g: Graph) -> None:
    if not g.is_isolate_free():
        raise IsolatesError("operation requires an isolate-free graph")


def is_dominating(g: Graph, members: int) -> bool:
    """True iff the closed neighborhoods of the members cover every vertex."""
    if g.n == 0:
        raise EmptyGraphError("domination is undefined on the empty graph")
    closed = g.closed
    cov = 0
    for v in iter_bits(members):
        cov |= closed[v]
    return cov == g.full_mask


def is_total_dominating(g: Graph, members: int) -> bool:
    """True iff every vertex (members included) has a neighbor in the set."""
    _require_isolate_free(g)
    cov = 0
    for v in iter_bits(members):
        cov |= g.adj[v]
    return cov == g.full_mask


def is_semitotal(g: Graph, members: int, rule: WitnessRule) -> bool:
    """Dominating, and every member has another member as distance witness.

    A singleton never satisfies the witness clause; the complete-graph
    convention is applied only by the number/count operations, never here.
    """
    _require_isolate_free(g)
    if not is_dominating(g, members):
        return False
    witness = _witness_masks(g, rule)
    for v in iter_bits(members):
        if not members & witness[v]:
            return False
    return True


def _witness_masks(g: Graph, rule: WitnessRule) -> tuple[int, ...]:
    if rule is WitnessRule.WITHIN_TWO:
        return g._ball2_all()
    return g._sphere2_all()


def _cover_masks(g: Graph, variant: Variant) -> tuple[int, ...]:
    return g.adj if variant.kind == "total" else g.closed


def _validate(g: Graph, variant: Variant) -> None:
    if g.n == 0:
        raise EmptyGraphError("domination numbers are undefined on the empty graph")
    if variant.kind != "plain":
        _require_isolate_free(g)


def _gate_applies(g: Graph, variant: Variant, conv: Conventions) -> bool:
    # Checked before the isolate-free precondition so that complete graphs,
    # K_1 included, get the conventional value 1 (the corona sharpness
    # checks need a semitotal number for K_1).
    return (
        variant.kind == "semitotal"
        and conv.complete_singleton
        and g.n >= 1
        and g.is_complete()
    )


def _feasible_members(g: Graph, variant: Variant) -> list[int]:
    """Vertices that can belong to some valid set (witnessable, for semitotal)."""
    if variant.kind != "semitotal":
        return list(range(g.n))
    witness = _witness_masks(g, variant.rule)
    return [v for v in range(g.n) if witness[v]]


def _is_valid(g: Graph, variant: Variant, members: int) -> bool:
    cover = _cover_masks(g, variant)
    cov = 0
    for v in iter_bits(members):
        cov |= cover[v]
    if cov != g.full_mask:
        return False
    if variant.kind == "semitotal":
        witness = _witness_masks(g, variant.rule)
        for v in iter_bits(members):
            if not members & witness[v]:
                return False
    return True


# -- exact optimization -------------------------------------------------


def brute_force_number(
    g: Graph,
    variant: Variant,
    conv: Conventions = DEFAULT_CONVENTIONS,
    budget: int = 22,
) -> int | None:
    """Minimum size by enumerating subsets in increasing cardinality.

    The oracle the branch-and-bound solver is checked against.  Returns None
    when no valid set of any size exists (possible under the exact-distance
    witness rule).
    """
    if g.n > budget:
        raise BudgetExceededError(f"graph has {g.n} vertices, oracle budget is {budget}")
    if g.n == 0:
        raise EmptyGraphError("domination numbers are undefined on the empty graph")
    if _gate_applies(g, variant, conv):
        return 1
    _validate(g, variant)
    pool = _feasible_members(g, variant)
    for k in range(1, len(pool) + 1):
        for combo in combinations(pool, k):
            m = 0
            for v in combo:
                m |= 1 << v
            if _is_valid(g, variant, m):
                return k
    return None


def domination_number(
    g: Graph,
    variant: Variant,
    conv: Conventions = DEFAULT_CONVENTIONS,
) -> int | None:
    """Minimum size of a valid set by iterative-deepening branch and bound.

    Branches on the lowest-index uncovered vertex, over the vertices able to
    cover it; once coverage is complete, branches on witness candidates for
    the lowest-index member still lacking one.  Deterministic by
    construction.  Returns None when no valid set exists.
    """
    if g.n == 0:
        raise EmptyGraphError("domination numbers are undefined on the empty graph")
    if _gate_applies(g, variant, conv):
        return 1
    _validate(g, variant)

    cover = _cover_masks(g, variant)
    witness = _witness_masks(g, variant.rule) if variant.kind == "semitotal" else None
    full = g.full_mask
    if witness is None:
        allowed = full
    else:
        allowed = 0
        for v in range(g.n):
            if witness[v]:
                allowed |= 1 << v
    max_cover = max((cover[v].bit_count() for v in iter_bits(allowed)), default=0)
    if max_cover == 0:
        return None

    def search(chosen: int, covered: int, banned: int, budget: int) -> int | None:
        uncovered = full & ~covered
        if uncovered:
            if budget == 0 or uncovered.bit_count() > budget * max_cover:
                return None
            u = (uncovered & -uncovered).bit_length() - 1
            cands = cover[u] & allowed & ~banned
            ban = banned
            for w in iter_bits(cands):
                hit = search(chosen | 1 << w, covered | cover[w], ban, budget - 1)
                if hit is not None:
                    return hit
                ban |= 1 << w
            return None
        if witness is None:
            return chosen.bit_count()
        missing = 0
        for v in iter_bits(chosen):
            if not chosen & witness[v]:
                missing = 1 << v
                break
        if not missing:
            return chosen.bit_count()
        if budget == 0:
            return None
        v = missing.bit_length() - 1
        cands = witness[v] & allowed & ~chosen & ~banned
        ban = banned
        for w in iter_bits(cands):
            hit = search(chosen | 1 << w, covered | cover[w], ban, budget - 1)
            if hit is not None:
                return hit
            ban |= 1 << w
        return None

    limit = allowed.bit_count()
    for k in range(1, limit + 1):
        hit = search(0, 0, 0, k)
        if hit is not None:
            return hit
    return None


def minimum_sets(
    g: Graph,
    variant: Variant,
    conv: Conventions = DEFAULT_CONVENTIONS,
    limit: int = 16,
) -> list[int]:
    """Up to ``limit`` optimal sets as bit masks, in lexicographic vertex order."""
    if g.n == 0:
        raise EmptyGraphError("domination numbers are undefined on the empty graph")
    if _gate_applies(g, variant, conv):
        return [1 << v for v in range(min(limit, g.n))]
    _validate(g, variant)
    opt = domination_number(g, variant, conv)
    if opt is None:
        return []
    out = []
    for combo in combinations(_feasible_members(g, variant), opt):
        m = 0
        for v in combo:
            m |= 1 << v
        if _is_valid(g, variant, m):
            out.append(m)
            if len(out) >= limit:
                break
    return out


# -- exhaustive counting -------------------------------------------------


def count_by_size(
    g: Graph,
    variant: Variant,
    conv: Conventions = DEFAULT_CONVENTIONS,
    budget: int = 24,
) -> CountPolynomial:
    """Number of valid sets of every cardinality, by full 2^n enumeration.

    Pure enumeration with word-parallel feasibility tests; no closed form is
    ever consulted, so the result can serve as the oracle for the counting
    claims.  The complete-graph convention adds the singletons as valid sets.
    """
    if g.n == 0:
        raise EmptyGraphError("counting is undefined on the empty graph")
    gated = _gate_applies(g, variant, conv)
    if not gated:
        _validate(g, variant)
    if g.n > budget:
        raise BudgetExceededError(f"graph has {g.n} vertices, counting budget is {budget}")

    n = g.n
    full = g.full_mask
    cover = _cover_masks(g, variant)
    witness = _witness_masks(g, variant.rule) if variant.kind == "semitotal" else None
    coeffs = [0] * (n + 1)

    covered = array("Q", [0]) * (1 << n)
    for m in range(1, 1 << n):
        low = m & -m
        v = low.bit_length() - 1
        cov = covered[m ^ low] | cover[v]
        covered[m] = cov
        if cov != full:
            continue
        if witness is not None:
            rest = m
            ok = True
            while rest:
                b = rest & -rest
                if not m & witness[b.bit_length() - 1]:
                    ok = False
                    break
                rest ^= b
            if not ok:
                continue
        coeffs[m.bit_count()] += 1

    if gated:
        coeffs[1] += n
    return CountPolynomial(coeffs)
