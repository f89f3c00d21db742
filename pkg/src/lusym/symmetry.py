"""Locally diagonal symmetry groups of a support, solved exactly.

The group of diagonal elements diag(phi_1..phi_n, theta) fixing every basis
label of a support is the solution set of an integer linear system modulo full
turns. Solving the system by Smith normal form yields the continuous torus
part, the finite invariant factors, and exact rational generators.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionError, InputError, InternalError
from .exactlinalg import (
    IntMatrix,
    lattice_member,
    normalize_int_vector,
    rational_kernel,
    rational_rank,
    smith_normal_form,
)
from .states import PhaseVector, Support, weight_vector

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class WeightMatrix:
    """Sign matrix of a support: one row ((-1)^{s_1}, ..., (-1)^{s_n}, 1) per label."""

    support: Support
    matrix: IntMatrix


def build_weight_matrix(support: Support) -> WeightMatrix:
    rows = [weight_vector(label) + (1,) for label in support.labels]
    return WeightMatrix(support=support, matrix=IntMatrix(rows))


@dataclass(frozen=True)
class DiagonalSymmetryGroup:
    """Closed subgroup of the diagonal torus in (phi_1..phi_n, theta) coordinates.

    The group is (torus part) x (finite part): real multiples of the integer
    torus_basis directions, plus the finite cyclic factors generated by the
    rational finite_generators, all taken modulo whole turns.
    """

    n: int
    torus_rank: int
    torus_basis: tuple[tuple[int, ...], ...]
    finite_factors: tuple[int, ...]
    finite_generators: tuple[PhaseVector, ...]

    def __post_init__(self) -> None:
        if len(self.torus_basis) != self.torus_rank:
            raise InternalError("torus basis size disagrees with torus rank")
        if len(self.finite_factors) != len(self.finite_generators):
            raise InternalError("finite factors and generators out of step")
        for vec in self.torus_basis:
            if len(vec) != self.n + 1:
                raise DimensionError("torus basis vectors must have n+1 entries")

    @property
    def theta_continuous(self) -> bool:
        return any(vec[-1] != 0 for vec in self.torus_basis)

    @property
    def finite_order(self) -> int:
        order = 1
        for d in self.finite_factors:
            order *= d
        return order

    @property
    def is_finite(self) -> bool:
        return self.torus_rank == 0

    @classmethod
    def trivial(cls, n: int) -> "DiagonalSymmetryGroup":
        return cls(n=n, torus_rank=0, torus_basis=(), finite_factors=(), finite_generators=())

    @classmethod
    def full_torus(cls, n: int) -> "DiagonalSymmetryGroup":
        basis = tuple(
            tuple(1 if i == j else 0 for j in range(n + 1)) for i in range(n + 1)
        )
        return cls(n=n, torus_rank=n + 1, torus_basis=basis, finite_factors=(), finite_generators=())


def _lex_normalized_generator(g: PhaseVector) -> PhaseVector:
    """Pick the lexicographically smaller of a generator and its inverse.

    Both generate the same cyclic factor; fixing the choice makes solver
    output deterministic across runs.
    """
    fwd = g.reduced()
    inv = g.inverse()
    return fwd if fwd.as_tuple() <= inv.as_tuple() else inv


def solve_symmetry_group(support: Support) -> DiagonalSymmetryGroup:
    """Solve the phase-fixing system of a support.

    With M the (n+1)-column sign matrix, the group is {x : M x = 0 mod 1}.
    Writing u M v = d in Smith form, the kernel columns of v span the torus
    part and each invariant factor d_i > 1 contributes a finite cyclic factor
    generated by (column i of v) / d_i.
    """
    wm = build_weight_matrix(support)
    dec = smith_normal_form(wm.matrix)
    n1 = support.n + 1
    factors_all = dec.invariant_factors
    r = len(factors_all)

    torus_basis = tuple(
        normalize_int_vector(dec.v.column(j)) for j in range(r, n1)
    )
    finite_factors = []
    finite_generators = []
    for j, d in enumerate(factors_all):
        if d <= 1:
            continue
        col = dec.v.column(j)
        vec = [Fraction(x, d) for x in col]
        gen = _lex_normalized_generator(PhaseVector(tuple(vec[:-1]), vec[-1]))
        finite_factors.append(d)
        finite_generators.append(gen)

    group = DiagonalSymmetryGroup(
        n=support.n,
        torus_rank=n1 - r,
        torus_basis=torus_basis,
        finite_factors=tuple(finite_factors),
        finite_generators=tuple(finite_generators),
    )
    _check_solution(wm, group)
    return group


def _check_solution(wm: WeightMatrix, group: DiagonalSymmetryGroup) -> None:
    # torus directions must annihilate every row exactly; finite generators
    # must move every label by a whole number of turns
    for vec in group.torus_basis:
        for row in wm.matrix.row_tuples():
            if sum(a * b for a, b in zip(row, vec)) != 0:
                raise InternalError("torus direction fails the phase condition")
    for gen in group.finite_generators:
        for label in wm.support.labels:
            if gen.phase_turn(label).denominator != 1:
                raise InternalError("finite generator fails the phase condition")


def _annihilator_rows(group: DiagonalSymmetryGroup) -> IntMatrix | None:
    """Integer rows spanning {c : c . b = 0 for every torus basis vector b}.

    None means the annihilator is zero (the torus part is everything).
    """
    n1 = group.n + 1
    if group.torus_rank == 0:
        return IntMatrix.identity(n1)
    if group.torus_rank == n1:
        return None
    basis = rational_kernel(IntMatrix(list(group.torus_basis)))
    return IntMatrix(basis)


def group_member(group: DiagonalSymmetryGroup, element: PhaseVector) -> bool:
    """Exact membership of a rational phase element in the group."""
    if element.n != group.n:
        raise DimensionError(f"element on {element.n} qubits, group on {group.n}")
    ann = _annihilator_rows(group)
    if ann is None:
        return True
    target = ann.mul_vector(element.as_tuple())
    columns: list[tuple[Fraction, ...]] = []
    for gen in group.finite_generators:
        columns.append(ann.mul_vector(gen.as_tuple()))
    for k in range(group.n + 1):
        columns.append(tuple(Fraction(x) for x in ann.column(k)))
    dens = [f.denominator for f in target]
    for col in columns:
        dens.extend(f.denominator for f in col)
    scale = math.lcm(*dens)
    basis = IntMatrix.from_columns([[int(f * scale) for f in col] for col in columns])
    return lattice_member(basis, [int(f * scale) for f in target])


def _torus_span_contains(group: DiagonalSymmetryGroup, direction: tuple[int, ...]) -> bool:
    if len(direction) != group.n + 1:
        raise DimensionError("direction must have n+1 entries")
    if all(x == 0 for x in direction):
        return True
    if group.torus_rank == 0:
        return False
    base = IntMatrix(list(group.torus_basis))
    extended = IntMatrix(list(group.torus_basis) + [list(direction)])
    return rational_rank(base) == rational_rank(extended)


def group_contains(h1: DiagonalSymmetryGroup, h2: DiagonalSymmetryGroup) -> bool:
    """Is h2 a subgroup of h1? Decided from the group descriptions alone."""
    if h1.n != h2.n:
        raise DimensionError(f"groups on different qubit counts: {h1.n} vs {h2.n}")
    for direction in h2.torus_basis:
        if not _torus_span_contains(h1, direction):
            return False
    for gen in h2.finite_generators:
        if not group_member(h1, gen):
            return False
    return True


def groups_equal(h1: DiagonalSymmetryGroup, h2: DiagonalSymmetryGroup) -> bool:
    return group_contains(h1, h2) and group_contains(h2, h1)


def is_maximal_diagonal_group(support: Support, group: DiagonalSymmetryGroup) -> bool:
    """Does `group` equal the full diagonal symmetry group of `support`?"""
    if group.n != support.n:
        raise DimensionError("support and group qubit counts differ")
    return groups_equal(group, solve_symmetry_group(support))


@dataclass(frozen=True)
class QubitActionProfile:
    """Which qubits the whole group acts on only by +-1.

    trivial[k-1] is True when every generator keeps phi_k in {0, 1/2} turns.
    witnesses[k-1] holds a pair of support labels differing only at position k
    when one exists; such a pair forces triviality at k.
    """

    trivial: tuple[bool, ...]
    witnesses: tuple[tuple[str, str] | None, ...]


def qubit_action_profile(support: Support, group: DiagonalSymmetryGroup) -> QubitActionProfile:
    if group.n != support.n:
        raise DimensionError("support and group qubit counts differ")
    n = support.n
    trivial = []
    witnesses: list[tuple[str, str] | None] = []
    label_set = set(support.labels)
    for k in range(n):
        torus_fixed = all(vec[k] == 0 for vec in group.torus_basis)
        gens_half = all(gen.phis[k] % 1 in (0, HALF) for gen in group.finite_generators)
        is_trivial = torus_fixed and gens_half
        witness = None
        for label in support.labels:
            flipped = label[:k] + ("1" if label[k] == "0" else "0") + label[k + 1 :]
            if flipped in label_set:
                witness = (label, flipped) if label < flipped else (flipped, label)
                break
        if witness is not None and not is_trivial:
            raise InternalError(
                f"labels {witness} differ only at qubit {k + 1} yet the solved group "
                "moves that qubit by more than a sign"
            )
        trivial.append(is_trivial)
        witnesses.append(witness)
    return QubitActionProfile(trivial=tuple(trivial), witnesses=tuple(witnesses))


def random_element(
    group: DiagonalSymmetryGroup, rng: random.Random, denominator: int = 2**16
) -> PhaseVector:
    """A random exact-rational element: random integer powers of the finite
    generators plus a random rational point of the torus part."""
    n1 = group.n + 1
    total = [Fraction(0)] * n1
    for vec in group.torus_basis:
        s = Fraction(rng.randrange(denominator), denominator)
        for i, x in enumerate(vec):
            total[i] += s * x
    for d, gen in zip(group.finite_factors, group.finite_generators):
        a = rng.randrange(d)
        for i, x in enumerate(gen.as_tuple()):
            total[i] += a * x
    total = [x % 1 for x in total]
    return PhaseVector(tuple(total[:-1]), total[-1])
