"""Command-line surface: property reports, exports, and theorem verification.

Exit codes: 0 on success, 1 when any theorem line fails, 2 on usage or
input errors.  Output is byte-deterministic given identical inputs and
flags.
"""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import canonical as canon
from . import congruence as cong
from . import constructions as cons
from . import core_label as core
from . import io as fio
from .errors import LatticeError, NotCongruenceUniform
from .lattice import Lattice, try_lattice


# -- reporting -------------------------------------------------------------------


@dataclass
class Report:
    """Per-lattice record of properties and theorem pass/fail lines."""

    name: str
    n: int
    covers: int
    properties: dict = field(default_factory=dict)
    theorems: list = field(default_factory=list)  # (name, passed, detail)

    def record(self, name: str, passed: bool, detail: str = "") -> None:
        self.theorems.append((name, bool(passed), detail))

    @property
    def failures(self) -> list:
        return [t for t in self.theorems if not t[1]]

    def property_line(self) -> str:
        parts = " ".join(f"{k}={_fmt(v)}" for k, v in self.properties.items())
        return f"{self.name} n={self.n} covers={self.covers} {parts}"

    def render(self, verbose: bool = False) -> str:
        lines = [self.property_line()]
        passed = sum(1 for t in self.theorems if t[1])
        if self.theorems:
            lines.append(f"  theorems: {passed}/{len(self.theorems)} PASS")
        for name, ok, detail in self.theorems:
            if not ok:
                lines.append(f"  THEOREM {name}: FAIL {detail}")
            elif verbose:
                lines.append(f"  THEOREM {name}: PASS")
        return "\n".join(lines)


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "-"
    return str(value)


def _distributivity_routes(lat: Lattice) -> tuple[bool, bool, bool]:
    by_law = lat.is_distributive()
    by_sublattice = (
        lat.find_sublattice("N5") is None and lat.find_sublattice("M3") is None
    )
    ideal = cons.ideal_lattice(lat.join_irreducible_poset())
    by_representation = lat.poset.isomorphism_to(ideal.poset) is not None
    return by_law, by_sublattice, by_representation


def run_checks(lat: Lattice, name: str, oracle_cap: int = 7) -> Report:
    """Run every supported theorem check on one lattice.

    The brute-force oracle comparisons scan all subsets and are only run
    for lattices with at most oracle_cap elements.
    """
    report = Report(name, lat.n, len(lat.covers))
    props = report.properties

    by_law, by_sub, by_rep = _distributivity_routes(lat)
    distributive = by_law
    report.record(
        "distributivity_routes_agree",
        by_law == by_sub == by_rep,
        f"law={by_law} sublattice={by_sub} representation={by_rep}",
    )
    uniform = cong.is_congruence_uniform(lat)
    props["distributive"] = distributive
    props["semidistributive"] = lat.is_semidistributive()
    props["congruence_uniform"] = bool(uniform)
    props["graded"] = lat.is_graded()

    report.record(
        "distributive_implies_graded", not distributive or props["graded"]
    )
    report.record(
        "distributive_implies_congruence_uniform",
        not distributive or bool(uniform),
        uniform.reason or "",
    )
    report.record(
        "congruence_uniform_implies_semidistributive",
        not uniform or props["semidistributive"],
    )

    if not uniform:
        return report

    try:
        labels = canon.cover_label_table(lat)
        report.record("cover_labels_well_defined", True)
    except LatticeError as exc:
        report.record("cover_labels_well_defined", False, str(exc))
        return report

    reps = [canon.canonical_join_rep(lat, x) for x in range(lat.n)]
    report.record(
        "canonical_rep_joins_back",
        all(lat.join_set(reps[x]) == x for x in range(lat.n)),
    )
    report.record(
        "canonical_rep_is_antichain",
        all(
            not (lat.leq[a, b] or lat.leq[b, a])
            for rep in reps
            for a in rep
            for b in rep
            if a != b
        ),
    )
    if lat.n <= oracle_cap:
        mismatches = [
            x
            for x in range(lat.n)
            if canon.canonical_join_rep_oracle(lat, x) != reps[x]
        ]
        report.record(
            "canonical_rep_matches_oracle",
            not mismatches,
            f"elements {mismatches}" if mismatches else "",
        )

    try:
        complex_ = canon.canonical_join_complex(lat)
        report.record("complex_subset_closed", True)
    except LatticeError as exc:
        report.record("complex_subset_closed", False, str(exc))
        return report
    props["f_vector"] = ",".join(str(c) for c in complex_.f_vector())
    report.record("complex_is_flag", complex_.is_flag())

    psi = core.all_core_labels(lat)
    report.record(
        "core_labels_contain_canonical",
        all(reps[x] <= psi[x] for x in range(lat.n)),
    )
    report.record(
        "boolean_core_iff_labels_equal",
        all(
            (psi[x] == reps[x]) == core.core_is_boolean(lat, x)
            for x in range(lat.n)
        ),
    )
    defect = core.boolean_defect(lat)
    props["boolean_defect"] = defect
    report.record(
        "boolean_defect_zero_iff_distributive",
        (defect == 0) == distributive,
        f"bdef={defect}",
    )

    try:
        clo = core.core_label_order(lat)
        report.record("psi_injective", True)
    except LatticeError as exc:
        report.record("psi_injective", False, str(exc))
        return report

    face = canon.face_poset(complex_)
    iso = clo.poset.isomorphism_to(face) is not None
    report.record(
        "clo_face_poset_iso_iff_distributive",
        iso == distributive,
        f"iso={iso} distributive={distributive}",
    )

    intersection = core.has_intersection_property(lat)
    meet_semi = core.clo_is_meet_semilattice(clo.poset)
    is_lat = core.clo_is_lattice(clo.poset)
    props["clo_meet_semilattice"] = meet_semi
    props["clo_lattice"] = is_lat
    report.record(
        "intersection_iff_meet_semilattice",
        bool(intersection) == meet_semi,
        f"witness={intersection.witness}" if not intersection else "",
    )
    report.record(
        "clo_lattice_iff_trivial_top_nucleus",
        is_lat == (core.nucleus(lat, lat.top) == lat.bottom),
    )

    if distributive:
        report.record(
            "distributive_labelings_coincide",
            all(
                canon.ideal_label(lat, cover) == labels[cover]
                for cover in lat.covers
            ),
        )
        below = [cons.irreducibles_below(lat, x) for x in range(lat.n)]
        report.record(
            "distributive_canonical_is_ideal_difference",
            all(
                reps[x] == below[x] - below[core.nucleus(lat, x)]
                for x in range(lat.n)
            ),
        )
        report.record("distributive_has_intersection_property", bool(intersection))
        k = lat.n.bit_length() - 1
        is_boolean = (
            lat.n == 1 << k
            and lat.poset.isomorphism_to(cons.boolean_lattice(k).poset)
            is not None
        )
        report.record(
            "clo_lattice_iff_boolean",
            is_lat == is_boolean,
            f"clo_lattice={is_lat} boolean={is_boolean}",
        )
    return report


# -- commands ----------------------------------------------------------------------


def _load_lattice(path: str) -> Lattice:
    return try_lattice(fio.load_poset(path))


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_check(args) -> int:
    lat = _load_lattice(args.file)
    report = run_checks(lat, Path(args.file).name, oracle_cap=args.oracle_cap)
    print(report.render(verbose=args.verbose))
    return 1 if report.failures else 0


def _require_uniform(lat: Lattice) -> None:
    cert = cong.is_congruence_uniform(lat)
    if not cert:
        raise NotCongruenceUniform(cert.reason or "input is not congruence uniform")


def cmd_clo(args) -> int:
    lat = _load_lattice(args.file)
    _require_uniform(lat)
    clo = core.core_label_order(lat)
    complex_ = canon.canonical_join_complex(lat)
    iso = clo.poset.isomorphism_to(canon.face_poset(complex_)) is not None
    _emit(fio.format_core_label_order(clo), args.out)
    print(f"core label order isomorphic to face poset: {_fmt(iso)}")
    return 0


def cmd_canonical(args) -> int:
    lat = _load_lattice(args.file)
    _require_uniform(lat)
    complex_ = canon.canonical_join_complex(lat)
    clo = core.core_label_order(lat)
    iso = clo.poset.isomorphism_to(canon.face_poset(complex_)) is not None
    _emit(fio.format_complex(complex_), args.out)
    print(f"f-vector: {complex_.f_vector()}")
    print(f"core label order isomorphic to face poset: {_fmt(iso)}")
    return 0


def _verify_census(args) -> int:
    failures = 0
    out = []
    distributive_classes: list[Lattice] = []
    for n in range(1, args.nmax + 1):
        batch = list(cons.enumerate_lattices(n, size_cap=max(args.nmax, 8)))
        uniform = 0
        for k, lat in enumerate(batch):
            report = run_checks(lat, f"n{n}#{k}", oracle_cap=args.oracle_cap)
            if report.properties.get("congruence_uniform"):
                uniform += 1
            if report.properties.get("distributive"):
                distributive_classes.append(lat)
            failures += len(report.failures)
            out.append(report.render(verbose=args.verbose))
        out.append(
            f"census n={n}: {len(batch)} lattices, {uniform} congruence uniform"
        )

    reachable = cons.principal_filter_closure(args.nmax)
    reached = [lat for size in sorted(reachable) for lat in reachable[size]]
    all_reached_distributive = all(lat.is_distributive() for lat in reached)
    matched = all(
        any(
            lat.n == r.n and lat.poset.isomorphism_to(r.poset) is not None
            for r in reached
        )
        for lat in distributive_classes
    )
    ok = all_reached_distributive and matched
    failures += 0 if ok else 1
    out.append(
        f"THEOREM filter_doubling_reaches_exactly_distributive: "
        f"{'PASS' if ok else 'FAIL'}"
    )
    out.append(f"verify: {failures} failing theorem lines")
    _emit("\n".join(out) + "\n", args.out)
    return 1 if failures else 0


def _verify_scripts(args) -> int:
    rng = random.Random(args.seed)
    failures = 0
    out = []
    for i in range(args.count):
        steps = cons.random_interval_script(rng, rng.randint(1, args.max_steps))
        built = cons.build_from_script(steps)
        cert = cong.is_congruence_uniform(built.lattice)
        if not cert:
            failures += 1
            out.append(
                f"script#{i}: THEOREM interval_doubling_is_uniform: FAIL "
                f"{cert.reason}"
            )
        report = run_checks(built.lattice, f"script#{i}", oracle_cap=args.oracle_cap)
        failures += len(report.failures)
        if args.verbose or report.failures:
            out.append(report.render(verbose=args.verbose))
    for i in range(args.count):
        steps = cons.random_filter_script(rng, rng.randint(1, args.max_steps))
        built = cons.build_from_script(steps)
        if not built.lattice.is_distributive():
            failures += 1
            out.append(
                f"filter-script#{i}: THEOREM filter_doubling_is_distributive: FAIL"
            )
    out.append(f"verify: {args.count} interval and {args.count} filter scripts")
    out.append(f"verify: {failures} failing theorem lines")
    _emit("\n".join(out) + "\n", args.out)
    return 1 if failures else 0


def cmd_verify(args) -> int:
    if args.mode == "census":
        return _verify_census(args)
    return _verify_scripts(args)


def cmd_export_dot(args) -> int:
    lat = _load_lattice(args.file)
    if args.what == "hasse":
        labels = None
        if cong.is_congruence_uniform(lat):
            labels = canon.cover_label_table(lat)
        _emit(fio.dot_hasse(lat, labels), args.out)
    elif args.what == "clo":
        _require_uniform(lat)
        clo = core.core_label_order(lat)
        names = [
            "{" + ",".join(str(v) for v in sorted(s)) + "}" for s in clo.label_sets
        ]
        _emit(fio.dot_poset(clo.poset, names), args.out)
    else:
        _require_uniform(lat)
        _emit(fio.dot_complex(canon.canonical_join_complex(lat)), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="finlat",
        description="Finite-lattice property reports and theorem verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", help="write primary output to this file")
        p.add_argument("--verbose", action="store_true", help="print PASS lines too")
        p.add_argument(
            "--oracle-cap",
            type=int,
            default=7,
            dest="oracle_cap",
            help="largest size for brute-force oracle comparisons (default 7)",
        )

    p = sub.add_parser("check", help="property report for one lattice file")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("clo", help="export the core label order of a lattice file")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_clo)

    p = sub.add_parser("canonical", help="export the canonical join complex")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_canonical)

    p = sub.add_parser("verify", help="run the theorem battery over a census")
    p.add_argument("--nmax", type=int, default=7, help="largest census size (<= 8)")
    p.add_argument("--mode", choices=["census", "scripts"], default="census")
    p.add_argument("--seed", type=int, default=0, help="seed for scripts mode")
    p.add_argument("--count", type=int, default=100, help="scripts per kind")
    p.add_argument("--max-steps", type=int, default=6, dest="max_steps")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export-dot", help="emit DOT diagrams")
    p.add_argument("file")
    p.add_argument("--what", choices=["hasse", "clo", "complex"], default="hasse")
    common(p)
    p.set_defaults(func=cmd_export_dot)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "nmax", 0) and args.command == "verify" and args.nmax > 8:
        parser.error("--nmax must be at most 8")
    try:
        return args.func(args)
    except (LatticeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
