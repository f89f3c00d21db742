"""Sparse n-qubit pure states in the computational basis.

Basis labels are bit strings whose leftmost character is qubit 1. Phases are
exact rationals measured in turns (one turn = 2*pi radians), so phase-fixing
conditions and group membership stay decidable; floating point appears only
when amplitudes are actually multiplied out.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

import numpy as np

from .errors import DimensionError, InputError

# Amplitudes smaller than this are rejected outright: a label either belongs to
# the support or it does not, and silently dropping near-zeros would change the
# combinatorics behind the caller's back.
AMPLITUDE_FLOOR = 1e-12

NORM_TOL = 1e-9


def validate_label(label: str, n: int | None = None) -> str:
    if not isinstance(label, str) or not label:
        raise InputError(f"basis label must be a nonempty bit string, got {label!r}")
    if any(ch not in "01" for ch in label):
        raise InputError(f"basis label may contain only 0 and 1, got {label!r}")
    if n is not None and len(label) != n:
        raise DimensionError(f"label {label!r} has {len(label)} bits, expected {n}")
    return label


def label_int(label: str) -> int:
    return int(label, 2)


def xor_labels(a: str, b: str) -> str:
    if len(a) != len(b):
        raise DimensionError(f"cannot xor labels of lengths {len(a)} and {len(b)}")
    return "".join("1" if x != y else "0" for x, y in zip(a, b))


def weight_vector(label: str) -> tuple[int, ...]:
    """Signs ((-1)^{s_1}, ..., (-1)^{s_n}) for a basis label s."""
    validate_label(label)
    return tuple(1 if ch == "0" else -1 for ch in label)


@dataclass(frozen=True)
class Support:
    """A nonempty set of equal-length basis labels, stored sorted by value."""

    n: int
    labels: tuple[str, ...]

    @classmethod
    def from_labels(cls, labels: Iterable[str]) -> "Support":
        lst = list(labels)
        if not lst:
            raise InputError("support must contain at least one label")
        for lab in lst:
            validate_label(lab)
        if len({len(lab) for lab in lst}) != 1:
            raise DimensionError("support labels must all have the same length")
        n = len(lst[0])
        if len(set(lst)) != len(lst):
            raise InputError("support labels must be distinct")
        return cls(n=n, labels=tuple(sorted(lst, key=label_int)))

    def __iter__(self):
        return iter(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __contains__(self, label: str) -> bool:
        return label in set(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)


@dataclass(frozen=True, eq=True)
class PureState:
    """Sparse pure state: mapping from basis labels to complex amplitudes."""

    n: int
    amplitudes: Mapping[str, complex]

    @classmethod
    def from_amplitudes(cls, amps: Mapping[str, complex]) -> "PureState":
        if not amps:
            raise InputError("state must have at least one amplitude")
        items = dict(amps)
        lengths = {len(lab) for lab in items}
        for lab in items:
            validate_label(lab)
        if len(lengths) != 1:
            raise DimensionError("state labels must all have the same length")
        n = lengths.pop()
        clean: dict[str, complex] = {}
        for lab in sorted(items, key=label_int):
            c = complex(items[lab])
            if abs(c) < AMPLITUDE_FLOOR:
                raise InputError(
                    f"amplitude for {lab!r} has magnitude {abs(c):.3e}, below the "
                    f"{AMPLITUDE_FLOOR:.0e} floor; drop the label explicitly instead"
                )
            clean[lab] = c
        return cls(n=n, amplitudes=clean)

    def support(self) -> Support:
        return Support.from_labels(self.amplitudes.keys())

    def amplitude(self, label: str) -> complex:
        return complex(self.amplitudes.get(label, 0.0))

    def norm(self) -> float:
        return math.sqrt(sum(abs(c) ** 2 for c in self.amplitudes.values()))

    def is_normalized(self, tol: float = NORM_TOL) -> bool:
        return abs(self.norm() - 1.0) <= tol

    def scaled(self, factor: complex) -> "PureState":
        if abs(factor) == 0.0:
            raise InputError("cannot scale a state by zero")
        return PureState(self.n, {lab: factor * c for lab, c in self.amplitudes.items()})


@dataclass(frozen=True)
class PhaseVector:
    """A diagonal phase element: per-qubit turns phi_1..phi_n plus a global turn theta.

    The unitary it denotes multiplies the amplitude of label s by
    exp(2*pi*i * (sum_k phi_k * (-1)^{s_k} + theta)). All entries are exact
    Fractions of a turn.
    """

    phis: tuple[Fraction, ...]
    theta: Fraction

    @property
    def n(self) -> int:
        return len(self.phis)

    @classmethod
    def make(cls, phis: Iterable[Fraction | int], theta: Fraction | int) -> "PhaseVector":
        return cls(tuple(Fraction(p) for p in phis), Fraction(theta))

    def as_tuple(self) -> tuple[Fraction, ...]:
        return self.phis + (self.theta,)

    def phase_turn(self, label: str) -> Fraction:
        """Exact phase in turns contributed to the given basis label."""
        validate_label(label, self.n)
        total = self.theta
        for phi, sign in zip(self.phis, weight_vector(label)):
            total += phi * sign
        return total

    def reduced(self) -> "PhaseVector":
        return PhaseVector(tuple(p % 1 for p in self.phis), self.theta % 1)

    def compose(self, other: "PhaseVector") -> "PhaseVector":
        if other.n != self.n:
            raise DimensionError("cannot compose phase elements on different qubit counts")
        return PhaseVector(
            tuple((a + b) % 1 for a, b in zip(self.phis, other.phis)),
            (self.theta + other.theta) % 1,
        )

    def inverse(self) -> "PhaseVector":
        return PhaseVector(tuple((-p) % 1 for p in self.phis), (-self.theta) % 1)

    def negated_on(self, mask: str) -> "PhaseVector":
        """Conjugated element under bit flips at the masked qubits: those phis
        change sign, theta is unchanged."""
        validate_label(mask, self.n)
        return PhaseVector(
            tuple((-p) % 1 if m == "1" else p % 1 for p, m in zip(self.phis, mask)),
            self.theta % 1,
        )


def apply_phase_element(g: PhaseVector, psi: PureState) -> PureState:
    """Apply a diagonal phase element to a state; norm-preserving by construction."""
    if g.n != psi.n:
        raise DimensionError(f"phase element is on {g.n} qubits, state on {psi.n}")
    out = {}
    for label, c in psi.amplitudes.items():
        turn = g.phase_turn(label) % 1
        out[label] = c * cmath.exp(2j * math.pi * float(turn))
    return PureState(psi.n, out)


def reduced_density_matrix(psi: PureState, k: int) -> np.ndarray:
    """Single-qubit reduced density matrix of qubit k (1-based), as a 2x2 array.

    The state must be normalized; an unnormalized state is reported as an
    error rather than silently renormalized.
    """
    if not 1 <= k <= psi.n:
        raise InputError(f"qubit index {k} out of range 1..{psi.n}")
    if not psi.is_normalized():
        raise InputError(
            f"state norm is {psi.norm():.12f}, not 1 within {NORM_TOL:.0e}; normalize first"
        )
    rho = np.zeros((2, 2), dtype=complex)
    groups: dict[str, dict[int, complex]] = {}
    for label, c in psi.amplitudes.items():
        rest = label[: k - 1] + label[k:]
        groups.setdefault(rest, {})[int(label[k - 1])] = c
    for part in groups.values():
        for b1, c1 in part.items():
            for b2, c2 in part.items():
                rho[b1, b2] += c1 * c2.conjugate()
    return rho
