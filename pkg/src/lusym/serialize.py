"""Canonical JSON serialization for states, groups, and analysis reports.

All writers go through canonical_dumps (sorted keys, fixed indentation), so a
given object always produces byte-identical output. Floats use Python repr,
the shortest representation that round-trips exactly.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from typing import Any, Mapping

from . import __version__
from .analysis import AnalysisReport, SymmetryVerification
from .circuits import BalancedCircuit, CircuitCatalog
from .errors import InputError
from .invariants import FlipRejection, InvariantMonomial, InvariantSum
from .normalizer import FlipGroup, NormalizerDescription
from .states import PhaseVector, PureState, Support
from .symmetry import DiagonalSymmetryGroup, QubitActionProfile

TOOL_NAME = "lusym"


def canonical_dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InputError(message)


# ---------------------------------------------------------------- states

def state_to_dict(psi: PureState) -> dict:
    return {
        "n": psi.n,
        "amplitudes": {
            lab: [c.real, c.imag] for lab, c in sorted(psi.amplitudes.items())
        },
    }


def state_from_dict(data: Mapping) -> PureState:
    _require(isinstance(data, Mapping), "state must be a JSON object")
    _require("n" in data, "state is missing field 'n'")
    _require("amplitudes" in data, "state is missing field 'amplitudes'")
    n = data["n"]
    _require(isinstance(n, int) and n >= 1, f"field 'n' must be a positive integer, got {n!r}")
    amps = data["amplitudes"]
    _require(isinstance(amps, Mapping) and len(amps) > 0, "field 'amplitudes' must be a nonempty object")
    out = {}
    for lab, pair in amps.items():
        _require(
            isinstance(pair, (list, tuple)) and len(pair) == 2,
            f"amplitude for {lab!r} must be a [re, im] pair",
        )
        re, im = pair
        _require(
            isinstance(re, (int, float)) and isinstance(im, (int, float)),
            f"amplitude for {lab!r} must hold numbers",
        )
        _require(len(lab) == n, f"label {lab!r} does not have n={n} bits")
        out[lab] = complex(re, im)
    return PureState.from_amplitudes(out)


def state_hash(psi: PureState) -> str:
    digest = hashlib.sha256(canonical_dumps(state_to_dict(psi)).encode()).hexdigest()
    return f"sha256:{digest}"


def dump_state(psi: PureState) -> str:
    return canonical_dumps(state_to_dict(psi))


def load_state(text: str) -> PureState:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return state_from_dict(data)


# ---------------------------------------------------------------- angles and groups

def fraction_to_dict(f: Fraction) -> dict:
    return {"num": f.numerator, "den": f.denominator}


def fraction_from_dict(data: Mapping) -> Fraction:
    _require(isinstance(data, Mapping), "angle must be an object with 'num' and 'den'")
    _require("num" in data and "den" in data, "angle needs fields 'num' and 'den'")
    num, den = data["num"], data["den"]
    _require(isinstance(num, int) and isinstance(den, int), "angle fields must be integers")
    _require(den >= 1, f"angle denominator must be >= 1, got {den}")
    return Fraction(num, den)


def phase_vector_to_dict(g: PhaseVector) -> dict:
    return {
        "phis": [fraction_to_dict(p % 1) for p in g.phis],
        "theta": fraction_to_dict(g.theta % 1),
    }


def phase_vector_from_dict(data: Mapping) -> PhaseVector:
    _require(isinstance(data, Mapping), "phase element must be an object")
    _require("phis" in data and "theta" in data, "phase element needs 'phis' and 'theta'")
    phis = data["phis"]
    _require(isinstance(phis, list) and phis, "'phis' must be a nonempty list")
    return PhaseVector(
        tuple(fraction_from_dict(p) for p in phis),
        fraction_from_dict(data["theta"]),
    )


def group_to_dict(group: DiagonalSymmetryGroup) -> dict:
    return {
        "n": group.n,
        "torus_basis": [list(vec) for vec in group.torus_basis],
        "finite": [
            {"order": d, "generator": phase_vector_to_dict(g)}
            for d, g in zip(group.finite_factors, group.finite_generators)
        ],
    }


def group_from_dict(data: Mapping) -> DiagonalSymmetryGroup:
    _require(isinstance(data, Mapping), "group must be a JSON object")
    for field in ("n", "torus_basis", "finite"):
        _require(field in data, f"group is missing field {field!r}")
    n = data["n"]
    _require(isinstance(n, int) and n >= 1, "group field 'n' must be a positive integer")
    basis = []
    for vec in data["torus_basis"]:
        _require(
            isinstance(vec, list) and len(vec) == n + 1 and all(isinstance(x, int) for x in vec),
            "torus basis vectors must be integer lists of length n+1",
        )
        basis.append(tuple(vec))
    factors = []
    gens = []
    for item in data["finite"]:
        _require(isinstance(item, Mapping) and "order" in item and "generator" in item,
                 "finite entries need 'order' and 'generator'")
        order = item["order"]
        _require(isinstance(order, int) and order >= 2, f"finite order must be >= 2, got {order!r}")
        gen = phase_vector_from_dict(item["generator"])
        _require(gen.n == n, "finite generator qubit count does not match n")
        for x in gen.as_tuple():
            _require(
                (order * x) % 1 == 0,
                f"generator entry {x} times order {order} is not a whole number of turns",
            )
        factors.append(order)
        gens.append(gen)
    return DiagonalSymmetryGroup(
        n=n,
        torus_rank=len(basis),
        torus_basis=tuple(basis),
        finite_factors=tuple(factors),
        finite_generators=tuple(gens),
    )


def dump_group(group: DiagonalSymmetryGroup) -> str:
    return canonical_dumps(group_to_dict(group))


def load_group(text: str) -> DiagonalSymmetryGroup:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return group_from_dict(data)


# ---------------------------------------------------------------- report pieces

def _complex_pair(c: complex) -> list[float]:
    return [c.real, c.imag]


def circuit_to_dict(c: BalancedCircuit, polytope: str | None = None) -> dict:
    out = {
        "members": list(c.member_labels),
        "relation": list(c.relation),
        "positive": c.positive,
        "d_order": c.d_order,
    }
    if polytope is not None:
        out["polytope"] = polytope
    return out


def catalog_to_dict(catalog: CircuitCatalog) -> dict:
    from .circuits import polytope_classification

    return {
        "support": list(catalog.support.labels),
        "n": catalog.support.n,
        "circuits": [
            circuit_to_dict(c, polytope_classification(c)) for c in catalog.circuits
        ],
        "semistable": catalog.semistable,
    }


def monomial_to_dict(m: InvariantMonomial) -> dict:
    return {
        "terms": [[label, p, q] for label, p, q in m.terms],
        "bidegree": [m.bidegree.a, m.bidegree.b],
    }


def invariant_sum_to_dict(s: InvariantSum) -> dict:
    return {
        "monomials": [monomial_to_dict(m) for m in s.monomials],
        "flip_group": list(s.flip_group),
        "bidegree": [s.bidegree.a, s.bidegree.b],
    }


def flip_rejection_to_dict(r: FlipRejection) -> dict:
    return {
        "mask": r.mask,
        "bidegree": [r.bidegree.a, r.bidegree.b],
        "reason": r.reason,
    }


def flip_group_to_dict(fg: FlipGroup) -> dict:
    return {"masks": list(fg.masks), "generators": list(fg.generators)}


def profile_to_dict(profile: QubitActionProfile) -> dict:
    return {
        "trivial": list(profile.trivial),
        "witnesses": [list(w) if w else None for w in profile.witnesses],
    }


def normalizer_to_dict(desc: NormalizerDescription) -> dict:
    return {
        "torus": "full_diagonal",
        "torus_group": group_to_dict(desc.torus),
        "flips": flip_group_to_dict(desc.flips),
        "assumption_ok": desc.assumption_ok,
    }


def verification_to_dict(v: SymmetryVerification) -> dict:
    return {
        "passed": v.passed,
        "max_deviation": v.max_deviation,
        "tol": v.tol,
        "samples": v.samples,
        "seed": v.seed,
        "checks": [
            {"kind": c.kind, "index": c.index, "deviation": c.deviation} for c in v.checks
        ],
    }


def report_to_dict(report: AnalysisReport) -> dict:
    group_block = group_to_dict(report.group)
    return {
        "tool": {"name": TOOL_NAME, "version": __version__},
        "input": {
            "n": report.state.n,
            "hash": state_hash(report.state),
            "norm": report.state.norm(),
            "tolerance": report.tol,
            "seed": report.seed,
        },
        "support": list(report.support.labels),
        "group": group_block,
        "group_flags": {
            "torus_rank": report.group.torus_rank,
            "theta_continuous": report.theta_continuous,
            "finite_order": report.group.finite_order,
        },
        "qubit_profile": profile_to_dict(report.profile),
        "circuits": [
            circuit_to_dict(c, p)
            for c, p in zip(report.catalog.circuits, report.polytopes)
        ],
        "semistable": report.semistable,
        "monomials": [
            dict(monomial_to_dict(m), sl_type=(m.bidegree.a == 0 or m.bidegree.b == 0),
                 value=_complex_pair(v))
            for m, v in zip(report.monomials, report.monomial_values)
        ],
        "sl_generator": {
            "holds": report.sl_report.holds,
            "degree": report.sl_report.degree,
            "reason": report.sl_report.reason,
        },
        "normalizer": normalizer_to_dict(report.normalizer),
        "defects": [
            {"qubit": d.qubit, "value": v, "vanishes": abs(v) < 1e-9}
            for d, v in zip(report.defects, report.defect_values)
        ],
        "flags": {
            "generic": report.generic,
            "theta_continuous": report.theta_continuous,
            "semistable": report.semistable,
            "larger_symmetry_possible": report.larger_symmetry_possible,
        },
        "verification": verification_to_dict(report.verification),
    }


def dump_report(report: AnalysisReport) -> str:
    return canonical_dumps(report_to_dict(report))
