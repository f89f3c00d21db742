"""Command-line interface.

Exit codes: 0 success, 2 input or validation error (including a failed
verification), 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .analysis import DEFAULT_SAMPLES, DEFAULT_TOL, analyze, compare_strata, verify_symmetry
from .circuits import enumerate_circuits
from .errors import InputError, InternalError
from .fixtures import fixture_names, fixture_state
from .invariants import (
    FlipRejection,
    abs_square_generators,
    evaluate,
    is_sl_type,
    monomial_from_circuit,
    symmetrize_over_flips,
)
from .normalizer import balance_defect_polynomials, compute_normalizer
from .serialize import (
    canonical_dumps,
    catalog_to_dict,
    dump_report,
    flip_rejection_to_dict,
    invariant_sum_to_dict,
    load_group,
    load_state,
    monomial_to_dict,
    normalizer_to_dict,
    state_hash,
    verification_to_dict,
)
from .states import PureState, Support
from .symmetry import solve_symmetry_group


def _read_text(path: str) -> str:
    p = Path(path)
    if not p.exists():
        raise InputError(f"no such file: {path}")
    return p.read_text()


def _state_from_args(args: argparse.Namespace) -> PureState:
    if getattr(args, "input", None):
        return load_state(_read_text(args.input))
    if getattr(args, "fixture", None):
        return fixture_state(args.fixture)
    raise InputError("need --input FILE or --fixture NAME")


def _support_from_args(args: argparse.Namespace) -> tuple[Support, PureState | None]:
    if getattr(args, "support", None):
        labels = [part.strip() for part in args.support.split(",") if part.strip()]
        return Support.from_labels(labels), None
    psi = _state_from_args(args)
    return psi.support(), psi


def _add_source_options(parser: argparse.ArgumentParser, with_support: bool) -> None:
    parser.add_argument("--input", metavar="FILE", help="state JSON file")
    parser.add_argument(
        "--fixture", metavar="NAME", help=f"named fixture ({', '.join(fixture_names())})"
    )
    if with_support:
        parser.add_argument(
            "--support", metavar="LABELS", help="comma-separated basis labels, e.g. 00,11"
        )


def _add_format_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true", help="machine-readable output")
    group.add_argument("--text", action="store_true", help="human-readable output (default)")


def cmd_analyze(args: argparse.Namespace) -> int:
    psi = _state_from_args(args)
    report = analyze(psi, tol=args.tolerance, samples=args.samples, seed=args.seed)
    if args.json:
        sys.stdout.write(dump_report(report))
        return 0
    print(f"state: n={psi.n}, support size {len(report.support)}, {state_hash(psi)}")
    print(f"support: {', '.join(report.support.labels)}")
    g = report.group
    print(f"group: torus rank {g.torus_rank}, finite order {g.finite_order}, "
          f"theta {'continuous' if g.theta_continuous else 'discrete'}")
    for vec in g.torus_basis:
        print(f"  torus direction {list(vec)}")
    for d, gen in zip(g.finite_factors, g.finite_generators):
        print(f"  finite generator of order {d}: phis {[str(p) for p in gen.phis]}, theta {gen.theta}")
    trivial = [str(k + 1) for k, t in enumerate(report.profile.trivial) if t]
    print(f"qubits acted on only by signs: {', '.join(trivial) if trivial else 'none'}")
    print(f"circuits ({len(report.catalog.circuits)}), semistable: {report.semistable}")
    for c, val, pol in zip(report.catalog.circuits, report.monomial_values, report.polytopes):
        print(f"  members {list(c.member_labels)} relation {list(c.relation)} "
              f"d={c.d_order} {pol} value {val:.6g}")
    print(f"single SL generator: {report.sl_report.holds} ({report.sl_report.reason})")
    print(f"normalizer flips: {', '.join(report.normalizer.flips.masks)} "
          f"(assumption_ok={report.normalizer.assumption_ok})")
    for d, v in zip(report.defects, report.defect_values):
        print(f"  defect qubit {d.qubit}: {v:.6g}")
    print(f"flags: generic={report.generic}, larger_symmetry_possible={report.larger_symmetry_possible}")
    v = report.verification
    print(f"verification: passed={v.passed}, max deviation {v.max_deviation:.3g} (tol {v.tol:g})")
    return 0


def cmd_circuits(args: argparse.Namespace) -> int:
    support, _ = _support_from_args(args)
    catalog = enumerate_circuits(support)
    if args.json:
        sys.stdout.write(canonical_dumps(catalog_to_dict(catalog)))
        return 0
    print(f"support: {', '.join(support.labels)} (n={support.n})")
    if not catalog.circuits:
        print("no circuits")
    for c in catalog.circuits:
        kind = "positive" if c.positive else "mixed"
        print(f"  {list(c.member_labels)} relation {list(c.relation)} ({kind}, d={c.d_order})")
    print(f"semistable: {catalog.semistable}")
    return 0


def cmd_invariants(args: argparse.Namespace) -> int:
    support, psi = _support_from_args(args)
    catalog = enumerate_circuits(support)
    desc = compute_normalizer(support)
    blocks = []
    for circuit in catalog.circuits:
        mono = monomial_from_circuit(circuit)
        block = {
            "monomial": monomial_to_dict(mono),
            "sl_type": is_sl_type(mono),
            "circuit_members": list(circuit.member_labels),
        }
        if psi is not None:
            val = evaluate(mono, psi)
            block["value"] = [val.real, val.imag]
        lifted = symmetrize_over_flips(mono, list(desc.flips.masks))
        if isinstance(lifted, FlipRejection):
            block["flip_sum"] = {"admitted": False, "rejection": flip_rejection_to_dict(lifted)}
        else:
            entry = {"admitted": True, "sum": invariant_sum_to_dict(lifted)}
            if psi is not None:
                sval = evaluate(lifted, psi)
                entry["value"] = [sval.real, sval.imag]
            block["flip_sum"] = entry
        blocks.append(block)
    payload = {
        "support": list(support.labels),
        "n": support.n,
        "abs_square_generators": [
            monomial_to_dict(m) for m in abs_square_generators(support)
        ],
        "circuit_monomials": blocks,
        "flip_masks": list(desc.flips.masks),
    }
    if psi is not None:
        payload["defects"] = [
            {"qubit": d.qubit, "value": d.evaluate(psi)}
            for d in balance_defect_polynomials(support)
        ]
    if args.json:
        sys.stdout.write(canonical_dumps(payload))
        return 0
    print(f"support: {', '.join(support.labels)} (n={support.n})")
    print(f"|c|^2 generators: {len(support.labels)} (bidegree (1,1) each)")
    for block in blocks:
        m = block["monomial"]
        line = f"  bidegree {tuple(m['bidegree'])} terms {m['terms']}"
        if "value" in block:
            line += f" value {complex(*block['value']):.6g}"
        print(line)
        fs = block["flip_sum"]
        if fs["admitted"]:
            print(f"    flip sum over {len(fs['sum']['flip_group'])} masks: admitted")
        else:
            print(f"    flip sum rejected: {fs['rejection']['reason']}")
    return 0


def cmd_normalizer(args: argparse.Namespace) -> int:
    support, _ = _support_from_args(args)
    desc = compute_normalizer(support)
    if args.json:
        payload = dict(normalizer_to_dict(desc), support=list(support.labels), n=support.n)
        sys.stdout.write(canonical_dumps(payload))
        return 0
    print(f"support: {', '.join(support.labels)} (n={support.n})")
    print("torus: full diagonal group (all phis and theta free)")
    print(f"flip masks: {', '.join(desc.flips.masks)}")
    print(f"flip generators: {', '.join(desc.flips.generators) if desc.flips.generators else 'none'}")
    if not desc.assumption_ok:
        trivial = [str(k + 1) for k, t in enumerate(desc.profile.trivial) if t]
        print(f"warning: group acts only by signs on qubit(s) {', '.join(trivial)}; "
              "the true normalizer may be larger")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    psi = _state_from_args(args)
    if args.group:
        group = load_group(_read_text(args.group))
    elif args.from_support:
        group = solve_symmetry_group(psi.support())
    else:
        raise InputError("need --group FILE or --from-support")
    result = verify_symmetry(psi, group, samples=args.samples, tol=args.tolerance, seed=args.seed)
    if args.json:
        sys.stdout.write(canonical_dumps(verification_to_dict(result)))
    else:
        print(f"checked {len(result.checks)} group elements; "
              f"max deviation {result.max_deviation:.3g} (tol {result.tol:g})")
        print("PASS" if result.passed else "FAIL")
    if not result.passed:
        print(
            f"verification failed: deviation {result.max_deviation:.3g} "
            f"exceeds tolerance {result.tol:g}",
            file=sys.stderr,
        )
        return 2
    return 0


def cmd_compare(args: argparse.Namespace) -> int:
    sup_a = Support.from_labels([p.strip() for p in args.support_a.split(",") if p.strip()])
    sup_b = Support.from_labels([p.strip() for p in args.support_b.split(",") if p.strip()])
    verdict = compare_strata(sup_a, sup_b)
    if args.json:
        sys.stdout.write(canonical_dumps({
            "support_a": list(sup_a.labels),
            "support_b": list(sup_b.labels),
            "verdict": verdict,
        }))
    else:
        print(verdict)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lusym",
        description="Diagonal local-unitary symmetry groups and invariants of sparse qubit states",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full report for a state")
    _add_source_options(p, with_support=False)
    _add_format_options(p)
    p.add_argument("--tolerance", type=float, default=DEFAULT_TOL)
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("circuits", help="balanced circuits of a support")
    _add_source_options(p, with_support=True)
    _add_format_options(p)
    p.set_defaults(func=cmd_circuits)

    p = sub.add_parser("invariants", help="invariant monomials and flip sums")
    _add_source_options(p, with_support=True)
    _add_format_options(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("normalizer", help="normalizer flips and torus")
    _add_source_options(p, with_support=True)
    _add_format_options(p)
    p.set_defaults(func=cmd_normalizer)

    p = sub.add_parser("verify", help="check that a group fixes a state")
    _add_source_options(p, with_support=False)
    _add_format_options(p)
    p.add_argument("--group", metavar="FILE", help="group JSON file")
    p.add_argument("--from-support", action="store_true",
                   help="solve the group from the state's own support")
    p.add_argument("--tolerance", type=float, default=DEFAULT_TOL)
    p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("compare", help="closure order of two supports' strata")
    p.add_argument("--support-a", required=True, metavar="LABELS")
    p.add_argument("--support-b", required=True, metavar="LABELS")
    _add_format_options(p)
    p.set_defaults(func=cmd_compare)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
