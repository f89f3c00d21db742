"""Minimal balanced subsets (matroid circuits) of a support's sign vectors.

Each support label contributes the sign vector ((-1)^{s_1}, ..., (-1)^{s_n}).
A circuit is a minimal linearly dependent subset of those vectors; it carries
a unique integer relation z with sum_j z_j v_j = 0. Circuits whose relation
can be chosen strictly positive put the origin inside the convex hull of
their members and generate scaling-invariant monomials of pure degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import InternalError
from .states import Support, weight_vector
from .symmetry import DiagonalSymmetryGroup, solve_symmetry_group

ORIGIN_IN_CONVEX_HULL = "origin_in_convex_hull"
ORIGIN_IN_AFFINE_HULL_ONLY = "origin_in_affine_hull_only"


@dataclass(frozen=True)
class BalancedCircuit:
    """A circuit of the support's sign-vector configuration.

    member_labels follow support order; relation is the unique integer
    dependency (gcd 1, first entry positive) aligned with member_labels.
    d_order is the plain signed sum of the relation.
    """

    member_labels: tuple[str, ...]
    relation: tuple[int, ...]
    positive: bool
    d_order: int


@dataclass(frozen=True)
class CircuitCatalog:
    support: Support
    circuits: tuple[BalancedCircuit, ...]
    semistable: bool


def _normalize_relation(coeffs: list[int]) -> tuple[int, ...]:
    g = gcd(*coeffs)
    out = [c // g for c in coeffs]
    lead = next(c for c in out if c)
    if lead < 0:
        out = [-c for c in out]
    return tuple(out)


def enumerate_circuits(support: Support) -> CircuitCatalog:
    """All circuits of the support's sign vectors, in lexicographic member order.

    Depth-first search over independent subsets in index order: every circuit
    is the unique dependency created when its largest member joins the
    independent set of its other members, so recursing only on independent
    subsets finds each circuit at least once. Exact integer elimination with
    tracked combination coefficients yields the relation directly.
    """
    vectors = [weight_vector(label) for label in support.labels]
    L = len(vectors)
    found: dict[tuple[int, ...], tuple[int, ...]] = {}

    def reduce(vec: list[int], comb: list[int], echelon) -> tuple[list[int], list[int]]:
        for evec, ecomb, p in echelon:
            if vec[p]:
                a, b = evec[p], vec[p]
                vec = [a * x - b * y for x, y in zip(vec, evec)]
                comb = [a * x - b * y for x, y in zip(comb, ecomb)]
                g = gcd(*vec, *comb)
                if g > 1:
                    vec = [x // g for x in vec]
                    comb = [x // g for x in comb]
        return vec, comb

    def extend(start: int, echelon) -> None:
        for j in range(start, L):
            base_comb = [1 if i == j else 0 for i in range(L)]
            vec, comb = reduce(list(vectors[j]), base_comb, echelon)
            if any(vec):
                pivot = next(i for i, x in enumerate(vec) if x)
                extend(j + 1, echelon + [(vec, comb, pivot)])
            else:
                members = tuple(i for i, c in enumerate(comb) if c)
                if members not in found:
                    found[members] = _normalize_relation([comb[i] for i in members])

    extend(0, [])

    circuits = []
    for members in sorted(found):
        relation = found[members]
        positive = all(z > 0 for z in relation)
        circuits.append(
            BalancedCircuit(
                member_labels=tuple(support.labels[i] for i in members),
                relation=relation,
                positive=positive,
                d_order=sum(relation),
            )
        )
    for c in circuits:
        if len(c.member_labels) > support.n + 1:
            raise InternalError("circuit larger than n+1 members")
    return CircuitCatalog(
        support=support,
        circuits=tuple(circuits),
        semistable=any(c.positive for c in circuits),
    )


def polytope_classification(circuit: BalancedCircuit) -> str:
    """Convex-hull position of the origin relative to the circuit members.

    A strictly positive relation exhibits the origin as a convex combination;
    otherwise only the affine hull is reported.
    """
    return ORIGIN_IN_CONVEX_HULL if circuit.positive else ORIGIN_IN_AFFINE_HULL_ONLY


def circuits_defining_group(
    support: Support,
) -> dict[BalancedCircuit, DiagonalSymmetryGroup]:
    """Symmetry group solved from each circuit's own members, for circuits
    with nonzero d_order. Every such group contains the full support's group."""
    catalog = enumerate_circuits(support)
    out: dict[BalancedCircuit, DiagonalSymmetryGroup] = {}
    for circuit in catalog.circuits:
        if circuit.d_order == 0:
            continue
        out[circuit] = solve_symmetry_group(Support.from_labels(circuit.member_labels))
    return out
