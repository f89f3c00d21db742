"""Normalizer structure: spin-flip masks stabilizing the support and the
phase condition they must satisfy, plus per-qubit balance defects.

The normalizer of the maximal diagonal group inside the locally diagonalizable
symmetries is the full diagonal torus extended by a finite group of bit-flip
masks. A mask survives when flipping it maps the support onto itself and
conjugation (negating the masked phis) maps the solved group onto itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionError, InternalError
from .states import PureState, Support, label_int, xor_labels
from .symmetry import (
    DiagonalSymmetryGroup,
    QubitActionProfile,
    _torus_span_contains,
    group_member,
    qubit_action_profile,
    solve_symmetry_group,
)


@dataclass(frozen=True)
class FlipGroup:
    """A group of bit-flip masks under XOR, with a GF(2) generating set."""

    masks: tuple[str, ...]
    generators: tuple[str, ...]

    @property
    def n(self) -> int:
        return len(self.masks[0])

    def __len__(self) -> int:
        return len(self.masks)

    def __contains__(self, mask: str) -> bool:
        return mask in set(self.masks)


def _gf2_generators(masks: list[str]) -> tuple[str, ...]:
    n = len(masks[0])
    basis: list[int] = []
    gens: list[str] = []
    for mask in sorted(masks, key=label_int):
        x = label_int(mask)
        y = x
        for b in basis:
            y = min(y, y ^ b)
        if y:
            basis.append(y)
            gens.append(mask)
    return tuple(gens)


def _as_flip_group(masks: list[str]) -> FlipGroup:
    ordered = tuple(sorted(set(masks), key=label_int))
    mask_set = set(ordered)
    for x in ordered:
        for y in ordered:
            if xor_labels(x, y) not in mask_set:
                raise InternalError(f"flip masks not closed under xor: {x} ^ {y}")
    return FlipGroup(masks=ordered, generators=_gf2_generators(list(ordered)))


def support_stabilizer_masks(support: Support) -> FlipGroup:
    """All masks t with support XOR t = support, as a group.

    Candidates are the XOR differences against one fixed label: any stabilizing
    mask must send that label somewhere inside the support.
    """
    label_set = set(support.labels)
    base = support.labels[0]
    kept = []
    for other in support.labels:
        mask = xor_labels(base, other)
        if all(xor_labels(lab, mask) in label_set for lab in support.labels):
            kept.append(mask)
    return _as_flip_group(kept)


def phase_condition_filter(
    support: Support,
    group: DiagonalSymmetryGroup,
    candidates: FlipGroup,
) -> FlipGroup:
    """Masks whose conjugation maps the solved group onto itself.

    Conjugating a diagonal element by bit flips at the masked positions
    negates the corresponding phis and keeps theta. Membership of every
    conjugated generator is decided exactly (torus span and lattice checks),
    and since conjugation is an involution, generator containment already
    forces equality of the groups.
    """
    if group.n != support.n:
        raise DimensionError("support and group qubit counts differ")
    kept = []
    for mask in candidates.masks:
        flips = [i for i, ch in enumerate(mask) if ch == "1"]
        ok = True
        for direction in group.torus_basis:
            conj = list(direction)
            for i in flips:
                conj[i] = -conj[i]
            if not _torus_span_contains(group, tuple(conj)):
                ok = False
                break
        if ok:
            for gen in group.finite_generators:
                if not group_member(group, gen.negated_on(mask)):
                    ok = False
                    break
        if ok:
            kept.append(mask)
    return _as_flip_group(kept)


@dataclass(frozen=True)
class NormalizerDescription:
    """Diagonal torus times spin-flip group, with the non-triviality flag.

    torus is always the full diagonal group, recorded symbolically; flips are
    the masks that stabilize the support and pass the phase condition.
    assumption_ok is False when the solved group acts only by signs on some
    qubit, in which case the normalizer may be strictly larger than described.
    """

    torus: DiagonalSymmetryGroup
    flips: FlipGroup
    assumption_ok: bool
    profile: QubitActionProfile


def compute_normalizer(support: Support) -> NormalizerDescription:
    group = solve_symmetry_group(support)
    profile = qubit_action_profile(support, group)
    candidates = support_stabilizer_masks(support)
    flips = phase_condition_filter(support, group, candidates)
    return NormalizerDescription(
        torus=DiagonalSymmetryGroup.full_torus(support.n),
        flips=flips,
        assumption_ok=not any(profile.trivial),
        profile=profile,
    )


@dataclass(frozen=True)
class DefectPolynomial:
    """Per-qubit balance defect: sum of |c|^2 over labels with bit k = 0 minus
    the same sum over bit k = 1. Zero exactly when qubit k's reduced state is
    maximally mixed."""

    qubit: int
    zero_labels: tuple[str, ...]
    one_labels: tuple[str, ...]

    def evaluate(self, psi: PureState) -> float:
        plus = sum(abs(psi.amplitude(lab)) ** 2 for lab in self.zero_labels)
        minus = sum(abs(psi.amplitude(lab)) ** 2 for lab in self.one_labels)
        return plus - minus


def balance_defect_polynomials(support: Support) -> list[DefectPolynomial]:
    out = []
    for k in range(1, support.n + 1):
        zero = tuple(lab for lab in support.labels if lab[k - 1] == "0")
        one = tuple(lab for lab in support.labels if lab[k - 1] == "1")
        out.append(DefectPolynomial(qubit=k, zero_labels=zero, one_labels=one))
    return out
