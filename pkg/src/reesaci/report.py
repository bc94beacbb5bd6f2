"""End-to-end analysis of one instance, suites of instances and the JSON report format."""

from __future__ import annotations

import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional

from .algebra import Binomial
from .groebner import (
    Caps,
    CapExceeded,
    buchberger,
    colon_by_monomial,
    defining_ideal_oracle,
    eliminate,
    find_bad_spair,
    groebner,
    is_groebner,
    membership,
    reduced_basis,
    saturate,
)
from .homology import LatticeCapExceeded, betti_table, depth
from .instance import (
    InstanceError,
    InstanceSpec,
    elimination_equation,
    filtration,
    gamma0,
    gamma3,
    pair_form,
    predicted_minimal,
    rees_grading,
    validate_instance,
)
from .monomial import (
    ReductionError,
    base_ideal,
    hilbert,
    initial_ideal,
    is_extended_from_base,
    minimalize,
    monomial_colon,
    reduction_number,
    socle_and_degrees,
    t_power_ideal,
)

EXIT_OK, EXIT_CLAIM_FAILED, EXIT_INVALID, EXIT_CAPPED = 0, 2, 3, 4

STAGES = ("basis", "minimality", "filtration", "depth-chain", "homology", "saturation", "numbers")

# checks that may legitimately be absent without counting as capped
OPTIONAL_CHECKS = {"multiplicity"}


@dataclass
class Options:
    caps: Caps = field(default_factory=Caps.from_env)
    skip: frozenset = frozenset()
    timings: bool = False


@dataclass
class AnalysisReport:
    instance: dict
    basis: dict = field(default_factory=dict)
    filtration: dict = field(default_factory=dict)
    homology: dict = field(default_factory=dict)
    numbers: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)
    diagnostics: dict = field(default_factory=lambda: {"capsHit": [], "warnings": []})
    timings: dict = field(default_factory=dict)

    @property
    def failed(self) -> list:
        return sorted(k for k, v in self.checks.items() if v is False)

    @property
    def capped(self) -> bool:
        return bool(self.diagnostics["capsHit"])

    @property
    def exit_code(self) -> int:
        if self.failed:
            return EXIT_CLAIM_FAILED
        if self.capped:
            return EXIT_CAPPED
        return EXIT_OK

    def to_dict(self, with_timings: bool = False) -> dict:
        out = {
            "instance": self.instance,
            "basis": self.basis,
            "filtration": self.filtration,
            "homology": self.homology,
            "numbers": self.numbers,
            "checks": self.checks,
            "diagnostics": self.diagnostics,
        }
        if with_timings:
            out["timings"] = {k: round(v, 4) for k, v in self.timings.items()}
        return out

    def to_json(self, with_timings: bool = False) -> str:
        return json.dumps(self.to_dict(with_timings), sort_keys=True, indent=2)


def _xdeg(spec: InstanceSpec, f: Binomial) -> int:
    return sum(f.lead[spec.m:])


def redundant_members(members, order, caps: Caps) -> list:
    """Indices ``k`` such that ``members[k]`` lies in the ideal of the others."""
    out = []
    for k, f in enumerate(members):
        others = members[:k] + members[k + 1:]
        if membership(f, groebner(others, order, caps)):
            out.append(k)
    return out


def minimal_generators(members, order, caps: Caps) -> list:
    """Drop redundant members one at a time (valid for graded ideals)."""
    gens = list(members)
    changed = True
    while changed:
        changed = False
        for k in reversed(range(len(gens))):
            others = gens[:k] + gens[k + 1:]
            if membership(gens[k], groebner(others, order, caps)):
                gens = others
                changed = True
                break
    return gens


def saturation_exponent_bound(spec: InstanceSpec) -> int:
    m, s = spec.m, spec.bsum
    return -((m - 1) * (s - 1) // -m)


class _Stage:
    def __init__(self, report: AnalysisReport, name: str, opts: Options):
        self.report, self.name, self.opts = report, name, opts

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        self.report.timings[self.name] = time.perf_counter() - self.start
        if exc_type in (CapExceeded, LatticeCapExceeded, ReductionError):
            self.report.diagnostics["capsHit"].append(f"{self.name}: {exc}")
            return True
        return False


def analyze(spec: InstanceSpec, options: Optional[Options] = None) -> AnalysisReport:
    opts = options or Options()
    caps = opts.caps
    m, order, layout = spec.m, spec.order, spec.layout
    rep = AnalysisReport(instance={
        "m": m, "a": list(spec.a), "b": list(spec.b),
        "equiGenerated": spec.equi_generated, "bGcd": spec.b_gcd,
    })
    checks = rep.checks
    equi_gcd1 = spec.equi_generated and spec.b_gcd == 1
    structured = spec.bsum <= spec.amin
    g0 = gamma0(spec)

    # planned checks start as absent; stages fill them in
    planned = {
        "basis": ["basis_shape"] + (["oracle_equivalence", "gamma03_groebner"] if structured else []),
        "minimality": ["minimality"],
        "filtration": ["filtration_groebner", "filtration_extended"],
        "homology": ["sym_algebra_cm", "almost_cohen_macaulay"],
        "depth-chain": ["depth_chain"],
        "saturation": ["saturation_identity"]
        + (["saturation_bound", "saturation_at_bsum"] if spec.equi_generated else []),
        "numbers": ["reduction_number", "fiber_principal", "elimination_equation_present", "multiplicity"]
        + (["relation_type"] if "minimality" not in opts.skip else []) if equi_gcd1 else [],
    }
    needs = {"depth-chain": ("filtration", "homology")}
    for stage, names in planned.items():
        if stage in opts.skip or any(dep in opts.skip for dep in needs.get(stage, ())):
            continue
        for name in names:
            checks[name] = None

    Gamma = None
    with _Stage(rep, "basis", opts):
        oracle = defining_ideal_oracle(spec, caps)
        Gamma = list(oracle.members)
        rep.basis.update({
            "reducedSize": len(Gamma),
            "maxXtildeDegree": max(_xdeg(spec, f) for f in Gamma),
            "members": [f.format(layout) for f in Gamma],
        })
        shape = all(f in Gamma for f in g0) and all(
            f in g0.members or pair_form(spec, f) is not None for f in Gamma)
        rep.basis["shapeOk"] = shape
        checks["basis_shape"] = shape
        if structured:
            g03 = list(g0) + list(gamma3(spec))
            checks["gamma03_groebner"] = is_groebner(g03, order)
            checks["oracle_equivalence"] = reduced_basis(buchberger(g03, order, caps)).members == oracle.members

    if Gamma is None:
        return _finish(rep)

    if "minimality" not in opts.skip:
        with _Stage(rep, "minimality", opts):
            redundant = redundant_members(Gamma, order, caps)
            minimal = not redundant
            predicted = predicted_minimal(spec)
            mingens = Gamma if minimal else minimal_generators(Gamma, order, caps)
            rep.basis.update({"minimal": minimal, "minimalPredicted": predicted})
            rep.numbers["relType"] = max(_xdeg(spec, f) for f in mingens)
            checks["minimality"] = minimal == predicted

    chain = None
    if "filtration" not in opts.skip:
        with _Stage(rep, "filtration", opts):
            chain = filtration(spec, Gamma)
            steps = []
            gb_ok = find_bad_spair(chain[0].theta, order) is None
            ext_ok = True
            prev = minimalize((g.lead for g in chain[0].theta), spec.nvars)
            steps.append({"j": 0, "c": None, "colonExtended": None})
            for step in chain[1:]:
                theta = step.theta
                ok = find_bad_spair(theta, order, start=len(theta) - 1, coprime_criterion=True) is None
                gb_ok &= ok
                colon = monomial_colon(prev, theta[-1].lead)
                extended = is_extended_from_base(colon, spec.t_block)
                ext_ok &= extended
                steps.append({"j": step.j, "c": list(step.c), "colonExtended": extended})
                prev = minimalize((g.lead for g in theta), spec.nvars)
            rep.filtration = {"length": len(chain) - 1, "steps": steps}
            checks["filtration_groebner"] = gb_ok
            checks["filtration_extended"] = ext_ok
            if prev != initial_ideal(Gamma, spec.nvars):
                rep.diagnostics["warnings"].append("last filtration step does not reach ini(L)")
                checks["filtration_groebner"] = False

    if "homology" not in opts.skip:
        with _Stage(rep, "homology", opts):
            ini_h0 = initial_ideal(g0, spec.nvars)
            ini_l = initial_ideal(Gamma, spec.nvars)
            b0 = betti_table(ini_h0, cap=max(24, len(ini_h0)))
            bl = betti_table(ini_l)
            rep.homology = {
                "depthIniH0": b0.depth, "dimIniH0": b0.dim,
                "depthIniL": bl.depth, "dimIniL": bl.dim,
                "bettiIniL": {str(i): n for i, n in bl.totals.items()},
                "symCM": b0.depth == b0.dim == m + 1,
                "acm": bl.depth >= m,
            }
            checks["sym_algebra_cm"] = rep.homology["symCM"]
            checks["almost_cohen_macaulay"] = bl.depth >= m and bl.dim == m + 1
        if chain is not None and "depth-chain" not in opts.skip:
            with _Stage(rep, "depth-chain", opts):
                depths = [depth(minimalize((g.lead for g in step.theta), spec.nvars)) for step in chain]
                for rec, d in zip(rep.filtration["steps"], depths):
                    rec["depth"] = d
                checks["depth_chain"] = depths[0] == m + 1 and all(d >= m for d in depths)

    if "saturation" not in opts.skip:
        with _Stage(rep, "saturation", opts):
            sat = saturate(list(g0), spec.t_block, order, grading=rees_grading(spec), caps=caps)
            checks["saturation_identity"] = sat.members == tuple(Gamma)
            if spec.equi_generated:
                bound = saturation_exponent_bound(spec)
                rep.numbers["saturationExponentBound"] = bound
                colons = {}
                for ell in range(spec.bsum + 1):
                    mono = (ell,) * m + (0,) * (m + 1)
                    colons[ell] = colon_by_monomial(list(g0), mono, order, caps).members == tuple(Gamma)
                observed = min((ell for ell, eq in colons.items() if eq), default=None)
                rep.numbers["saturationExponentObserved"] = observed
                checks["saturation_bound"] = colons[bound]
                checks["saturation_at_bsum"] = colons[spec.bsum]

    if "numbers" not in opts.skip:
        with _Stage(rep, "numbers", opts):
            ini_l = initial_ideal(Gamma, spec.nvars)
            hd = hilbert(ini_l)
            rep.numbers["multiplicityComputed"] = hd.multiplicity
            if spec.equi_generated:
                soc = socle_and_degrees(spec)
                rep.numbers["socleDegree"] = soc.socle_degree
                rep.numbers["secondaryEliminationDegree"] = soc.secondary_elimination_degree
                J = t_power_ideal(m, [spec.bsum] * m)
                red = reduction_number(base_ideal(spec), J, cap=spec.bsum + 2, caps=caps)
                rep.numbers["reductionNumber"] = red
            if equi_gcd1:
                formula = sum(spec.bsum ** j for j in range(m))
                rep.numbers["multiplicityFormula"] = formula
                if hd.multiplicity != formula:
                    rep.diagnostics["warnings"].append(
                        f"multiplicity {hd.multiplicity} differs from formula {formula}")
                checks["multiplicity"] = hd.multiplicity == formula
                fiber = eliminate(Gamma, spec.t_block, order, caps)
                eq = elimination_equation(spec)
                expected = Binomial(eq.lead[m:], eq.trail[m:])
                principal = fiber == [expected]
                rep.numbers["fiberPrincipal"] = principal
                rep.numbers["fiberGenerators"] = len(fiber)
                rep.numbers["eliminationEquationPresent"] = eq in Gamma
                if principal:
                    rep.numbers["fiberDim"] = m
                    rep.numbers["fiberReg"] = spec.bsum - 1
                checks["fiber_principal"] = principal
                checks["elimination_equation_present"] = eq in Gamma
                checks["reduction_number"] = rep.numbers["reductionNumber"] == spec.bsum - 1
                if "relType" in rep.numbers:
                    checks["relation_type"] = rep.numbers["relType"] == spec.bsum

    return _finish(rep)


def _finish(rep: AnalysisReport) -> AnalysisReport:
    # a planned check left undecided by a capped stage is a cap failure
    pending = [k for k, v in rep.checks.items() if v is None and k not in OPTIONAL_CHECKS]
    if pending and not rep.capped:
        rep.diagnostics["warnings"].append(f"checks not run: {', '.join(sorted(pending))}")
    rep.diagnostics["warnings"].sort()
    return rep


def default_suite(max_a: int = 5, m: int = 3) -> list:
    """All valid instances with ``a_i <= max_a``."""
    out = []
    for a in itertools.product(range(1, max_a + 1), repeat=m):
        for b in itertools.product(*(range(x) for x in a)):
            if sum(1 for x in b if x) >= 2:
                out.append({"m": m, "a": list(a), "b": list(b)})
    return out


def load_suite(path) -> list:
    data = json.loads(Path(path).read_text())
    if isinstance(data, dict):
        data = data.get("instances")
    if not isinstance(data, list):
        raise ValueError("suite file must hold a list of instances or {\"instances\": [...]}")
    return data


def _options_for(entry: dict, base: Options) -> Options:
    caps = base.caps.override(entry["caps"]) if entry.get("caps") else base.caps
    skip = set(base.skip)
    for name, enabled in (entry.get("checks") or {}).items():
        if name not in STAGES:
            raise ValueError(f"unknown stage {name!r}")
        if not enabled:
            skip.add(name)
    return Options(caps=caps, skip=frozenset(skip), timings=base.timings)


def run_instance(entry: dict, base: Optional[Options] = None) -> dict:
    """Analyze one suite entry; validation errors become an ``invalid`` record."""
    base = base or Options()
    try:
        a, b = entry["a"], entry["b"]
        spec = validate_instance(entry.get("m", len(a)), a, b, permissive=entry.get("permissive", False))
        opts = _options_for(entry, base)
    except (InstanceError, KeyError, TypeError, ValueError) as exc:
        return {"status": "invalid", "input": entry, "error": str(exc), "exitCode": EXIT_INVALID}
    rep = analyze(spec, opts)
    status = {EXIT_OK: "passed", EXIT_CLAIM_FAILED: "failed", EXIT_CAPPED: "capped"}[rep.exit_code]
    return {"status": status, "report": rep.to_dict(base.timings), "exitCode": rep.exit_code}


def suite_exit_code(results: Iterable[dict]) -> int:
    codes = {r["exitCode"] for r in results}
    for code in (EXIT_CLAIM_FAILED, EXIT_INVALID, EXIT_CAPPED):
        if code in codes:
            return code
    return EXIT_OK


def run_suite(entries: list, options: Optional[Options] = None, jobs: int = 1) -> tuple:
    """Analyze every entry; returns ``(summary, results)`` in input order."""
    options = options or Options()
    if jobs > 1 and len(entries) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_instance, entries, itertools.repeat(options), chunksize=4))
    else:
        results = [run_instance(e, options) for e in entries]
    counts = {s: sum(1 for r in results if r["status"] == s) for s in ("passed", "failed", "capped", "invalid")}
    summary = {"instances": len(results), **counts, "exitCode": suite_exit_code(results)}
    return summary, results
