"""Bipartite matching through the order-theoretic route.

A bipartite graph is read as a height-two poset (reflexive closure of the
left-to-right edges).  When every left subset has enough neighbors, the right
part is a maximum antichain, the chain-cover solver yields |R| disjoint
chains, and the two-element chains among them are a left-perfect matching.
The set-family form (systems of distinct representatives) reduces to the same
machinery over a tagged vertex namespace.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import AbstractSet, Iterable, Mapping

from .core import ElementId, FinitePoset, build_poset, id_key, sorted_ids
from .dilworth import disjointify_cover, perles_chain_cover
from .errors import InstanceTooLarge, NotASubsetOfLeft, ValidationError
from .oracle import DEFAULT_ORACLE_CAP

# Hall's condition quantifies over all 2^|L| left subsets.
DEFAULT_SUBSET_CAP = 20

Matching = frozenset[tuple[ElementId, ElementId]]
SetFamily = Mapping[ElementId, AbstractSet[ElementId]]
SdrAssignment = dict[ElementId, ElementId]


@dataclass(frozen=True)
class BipartiteGraph:
    """Two disjoint, non-empty vertex parts with left-to-right edges."""

    left: tuple[ElementId, ...]
    right: tuple[ElementId, ...]
    edges: frozenset[tuple[ElementId, ElementId]]

    def __post_init__(self) -> None:
        object.__setattr__(self, "_left_set", frozenset(self.left))
        object.__setattr__(self, "_right_set", frozenset(self.right))

    @property
    def left_set(self) -> frozenset[ElementId]:
        return self._left_set  # type: ignore[attr-defined]

    @property
    def right_set(self) -> frozenset[ElementId]:
        return self._right_set  # type: ignore[attr-defined]


@dataclass(frozen=True)
class Violation:
    """A witness that Hall's condition fails: |N(members)| = |members| - deficiency."""

    members: frozenset[ElementId]
    deficiency: int


def build_bigraph(
    left: Iterable[ElementId],
    right: Iterable[ElementId],
    edges: Iterable[tuple[ElementId, ElementId]],
) -> BipartiteGraph:
    """Validate vertex parts and edges into a :class:`BipartiteGraph`."""
    lefts = sorted_ids(left)
    rights = sorted_ids(right)
    if not lefts or not rights:
        raise ValidationError("both vertex parts must be non-empty")
    lset, rset = set(lefts), set(rights)
    if len(lset) != len(lefts) or len(rset) != len(rights):
        raise ValidationError("duplicate vertex id within a part")
    overlap = lset & rset
    if overlap:
        raise ValidationError(f"left and right parts overlap on {sorted_ids(overlap)!r}")
    edge_set = set()
    for edge in edges:
        try:
            u, v = edge
        except (TypeError, ValueError):
            raise ValidationError(f"edge {edge!r} is not a pair") from None
        if u not in lset:
            raise ValidationError(f"edge source {u!r} is not a left vertex")
        if v not in rset:
            raise ValidationError(f"edge target {v!r} is not a right vertex")
        edge_set.add((u, v))
    return BipartiteGraph(lefts, rights, frozenset(edge_set))


def neighborhood(G: BipartiteGraph, S: AbstractSet[ElementId]) -> frozenset[ElementId]:
    """Right vertices adjacent to some vertex of S."""
    if not S <= G.left_set:
        raise NotASubsetOfLeft(f"{sorted_ids(set(S) - G.left_set)!r} not in left part")
    return frozenset(v for (u, v) in G.edges if u in S)


def hall_condition(G: BipartiteGraph, cap: int = DEFAULT_SUBSET_CAP) -> Violation | None:
    """None when every left subset S has |N(S)| >= |S|; otherwise the
    smallest violating subset (lexicographically first among those)."""
    n = len(G.left)
    if n > cap:
        raise InstanceTooLarge(f"hall_condition: |L| is {n}, cap is {cap}")
    index = {u: i for i, u in enumerate(G.left)}
    nbr = [0] * n
    rindex = {v: j for j, v in enumerate(G.right)}
    for (u, v) in G.edges:
        nbr[index[u]] |= 1 << rindex[v]
    for k in range(1, n + 1):
        for combo in combinations(range(n), k):
            seen = 0
            for i in combo:
                seen |= nbr[i]
            found = bin(seen).count("1")
            if found < k:
                return Violation(frozenset(G.left[i] for i in combo), k - found)
    return None


def graph_to_poset(G: BipartiteGraph) -> FinitePoset:
    """The height-two poset whose order is the reflexive closure of the edges
    (transitive and antisymmetric for free, as edges only run left to right)."""
    return build_poset(G.left + G.right, G.edges)


def verify_matching(G: BipartiteGraph, M: Iterable[tuple[ElementId, ElementId]], require_L_perfect: bool) -> bool:
    """Check pairs are edges, endpoints are disjoint, and (optionally) every
    left vertex is matched."""
    pairs = set(M)
    if not pairs <= G.edges:
        return False
    lefts = [u for (u, _) in pairs]
    rights = [v for (_, v) in pairs]
    if len(set(lefts)) != len(pairs) or len(set(rights)) != len(pairs):
        return False
    if require_L_perfect and set(lefts) != G.left_set:
        return False
    return True


def find_L_perfect_matching(
    G: BipartiteGraph,
    *,
    subset_cap: int = DEFAULT_SUBSET_CAP,
    oracle_cap: int = DEFAULT_ORACLE_CAP,
) -> Matching | Violation:
    """A matching covering every left vertex, or the Hall violation that rules
    one out.

    Construction: chain-cover the graph poset (the cover size is |R|), make
    the cover disjoint, and read the two-element chains as matched pairs."""
    bad = hall_condition(G, subset_cap)
    if bad is not None:
        return bad
    P = graph_to_poset(G)
    if len(P) > oracle_cap:
        raise InstanceTooLarge(
            f"find_L_perfect_matching: poset has {len(P)} elements, cap is {oracle_cap}"
        )
    cert = perles_chain_cover(P, oracle_cap)
    assert cert.width == len(G.right), "right part must be a maximum antichain"
    cover = disjointify_cover(P, cert.cover, cap=oracle_cap)
    pairs = set()
    for chain in cover:
        if len(chain) == 2:
            a, b = chain
            pairs.add((a, b) if a in G.left_set else (b, a))
    matching: Matching = frozenset(pairs)
    assert verify_matching(G, matching, require_L_perfect=True)
    return matching


def find_sdr(
    family: SetFamily,
    *,
    subset_cap: int = DEFAULT_SUBSET_CAP,
    oracle_cap: int = DEFAULT_ORACLE_CAP,
) -> SdrAssignment | Violation:
    """One distinct representative per member set, or a violating subfamily
    whose union is smaller than it.

    Member names and ground elements live in different namespaces, so both are
    retagged onto index-coded vertices before running the graph matcher."""
    names = sorted(family, key=id_key)
    if not names:
        return {}
    empty = [nm for nm in names if not family[nm]]
    if empty:
        # The lexicographically first singleton violation; nothing to match.
        return Violation(frozenset({empty[0]}), 1)
    ground = sorted({x for s in family.values() for x in s}, key=id_key)
    lwidth = len(str(len(names) - 1))
    rwidth = len(str(len(ground) - 1))
    ltag = {nm: f"m{i:0{lwidth}d}" for i, nm in enumerate(names)}
    rtag = {x: f"g{j:0{rwidth}d}" for j, x in enumerate(ground)}
    lback = {tag: nm for nm, tag in ltag.items()}
    rback = {tag: x for x, tag in rtag.items()}
    G = build_bigraph(
        ltag.values(),
        rtag.values(),
        ((ltag[nm], rtag[x]) for nm in names for x in family[nm]),
    )
    result = find_L_perfect_matching(G, subset_cap=subset_cap, oracle_cap=oracle_cap)
    if isinstance(result, Violation):
        return Violation(frozenset(lback[t] for t in result.members), result.deficiency)
    return {lback[u]: rback[v] for (u, v) in result}
