"""Scenario handling and report assembly for the command-line verbs.

Every ``cmd_*`` function is pure: it takes a :class:`Scenario` and returns a
JSON-ready dict. Any key named ``"pass"`` is a check; a report passes when all
of them are true.
"""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass, replace
from fractions import Fraction
from typing import Any, Sequence

from . import errors, oracle
from .higgs import (
    HiggsPencil,
    arrangement_pencil,
    certify,
    hodge_numbers_v1,
    hodge_numbers_w1,
    structural_upper_bound,
    wedge_power_higgs,
)
from .jacobian import (
    ArrangementParams,
    ModuliPoint,
    cross_check_details,
    default_point,
    graded_piece,
    higgs_matrix,
    relation_matrix,
    source_piece,
    target_piece,
    validate_params,
    validate_point,
    vandermonde_source_basis,
)
from .linalg import Matrix, as_rational, rank
from .sampling import sample_directions

SPEC_VERSION = "1"
DEFAULT_SWEEP = ((4, 2), (6, 2), (6, 3), (8, 2), (8, 4), (9, 3))


@dataclass(frozen=True)
class Scenario:
    m: int
    r: int
    point: tuple[Fraction, ...] | None = None
    lam: tuple[Fraction, ...] | None = None
    seed: int = 0
    trials: int = 20
    bound: int = 100

    @classmethod
    def from_mapping(cls, data: dict) -> "Scenario":
        known = {"m", "r", "point", "lambda", "seed", "trials", "bound"}
        extra = set(data) - known
        if extra:
            raise errors.InvalidInput(f"unknown scenario fields: {sorted(extra)}")
        if "m" not in data or "r" not in data:
            raise errors.InvalidInput("scenario needs both m and r")
        return cls(
            m=data["m"],
            r=data["r"],
            point=parse_vector(data["point"]) if data.get("point") is not None else None,
            lam=parse_vector(data["lambda"]) if data.get("lambda") is not None else None,
            seed=int(data.get("seed", 0)),
            trials=int(data.get("trials", 20)),
            bound=int(data.get("bound", 100)),
        )

    def resolve(self) -> tuple[ArrangementParams, ModuliPoint]:
        params = validate_params(self.m, self.r)
        point = default_point(params) if self.point is None else validate_point(params, self.point)
        if self.trials < 0:
            raise errors.InvalidInput(f"trials must be >= 0 (got {self.trials})")
        if self.bound < 1:
            raise errors.InvalidInput(f"bound must be >= 1 (got {self.bound})")
        return params, point

    def echo(self) -> dict:
        out = asdict(self)
        out["point"] = vec(self.point) if self.point is not None else None
        out["lambda"] = vec(self.lam) if self.lam is not None else None
        del out["lam"]
        return out


def parse_vector(value) -> tuple[Fraction, ...]:
    """Accepts '2,3,-1/2' or a list of ints / rational strings."""
    if isinstance(value, str):
        items = [s.strip() for s in value.split(",") if s.strip()]
    else:
        items = list(value)
    try:
        return tuple(as_rational(x) for x in items)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise errors.InvalidInput(f"cannot parse rational vector {value!r}: {exc}") from None


def q(x: Fraction | int) -> str:
    return str(Fraction(x))


def vec(v: Sequence) -> list[str]:
    return [q(x) for x in v]


def mat(M: Matrix) -> list[list[str]]:
    return [[q(x) for x in row] for row in M.to_lists()]


def all_pass(report: Any) -> bool:
    if isinstance(report, dict):
        return all(
            (v is True) if k == "pass" else all_pass(v) for k, v in report.items()
        )
    if isinstance(report, list):
        return all(all_pass(x) for x in report)
    return True


def _finish(report: dict) -> dict:
    report["pass"] = True
    report["pass"] = all_pass(report)
    return report


class _Stopwatch:
    def __init__(self):
        self.stages: dict[str, float] = {}

    @contextmanager
    def stage(self, name: str):
        t0 = time.perf_counter()
        yield
        self.stages[name] = round(time.perf_counter() - t0, 4)


def _header(command: str, scenario: Scenario, params: ArrangementParams, point: ModuliPoint) -> dict:
    return {
        "spec_version": SPEC_VERSION,
        "command": command,
        "scenario": scenario.echo(),
        "params": {"m": params.m, "r": params.r, "n": params.n, "m_over_r_minus_1": params.k_minus_1},
        "point": vec(point.a),
    }


def _hodge_section(params: ArrangementParams) -> dict:
    h10, h01 = hodge_numbers_w1(params)
    v1 = hodge_numbers_v1(params)
    zero = HiggsPencil(params.n, params.k_minus_1, (Matrix.zeros(params.k_minus_1, params.n),))
    grade_dims = wedge_power_higgs(zero).grade_dims()
    return {
        "w1": {"h10": h10, "h01": h01},
        "v1": list(v1.h),
        "wedge_grade_dims": grade_dims,
        "pass": (h10, h01) == (params.n, params.k_minus_1) and grade_dims == list(v1.h),
    }


def _piece_section(piece, expected: int) -> dict:
    return {
        "bidegree": list(piece.bidegree),
        "ambient_size": len(piece.ambient),
        "ideal_generators": piece.ideal_rows.rows,
        "ideal_rank": piece.ideal_rank,
        "dim": piece.dim,
        "expected": expected,
        "quotient_basis": [str(b) for b in piece.quotient_basis],
        "pass": piece.dim == expected,
    }


def _jacobian_section(params: ArrangementParams, point: ModuliPoint) -> dict:
    src = source_piece(params, point)
    tgt = target_piece(params, point)
    rel = relation_matrix(params, point)
    try:
        basis = vandermonde_source_basis(params, point)
        independent = True
    except errors.DependentBasis:
        basis, independent = [], False
    rel_rank = rank(rel)
    return {
        "source": _piece_section(src, params.n),
        "target": _piece_section(tgt, params.k_minus_1),
        "vandermonde_basis": {"monomials": [str(b) for b in basis], "pass": independent},
        "relation_matrix": {
            "shape": [rel.rows, rel.cols],
            "rank": rel_rank,
            "expected_rank": params.n - 1,
            "target_dim_from_relations": params.m - 3 - rel_rank,
            "pass": rel_rank == params.n - 1 and params.m - 3 - rel_rank == tgt.dim,
        },
    }


def cmd_hodge_numbers(scenario: Scenario) -> dict:
    params, point = scenario.resolve()
    report = _header("hodge-numbers", scenario, params, point)
    report["hodge"] = _hodge_section(params)
    report["structural_upper_bound"] = structural_upper_bound(params)
    return _finish(report)


def cmd_jacobian_dims(scenario: Scenario) -> dict:
    params, point = scenario.resolve()
    report = _header("jacobian-dims", scenario, params, point)
    report["jacobian"] = _jacobian_section(params, point)
    return _finish(report)


def _higgs_entry(params, point, lam) -> dict:
    h = higgs_matrix(params, point, lam)
    cc = cross_check_details(params, point, lam)
    return {
        "lambda": vec(h.lam),
        "matrix": mat(h.matrix),
        "rank": h.rank,
        "surjective": h.surjective,
        "cross_check": cc.agree,
    }


def cmd_higgs(scenario: Scenario) -> dict:
    """Explicit lambda: matrix, rank, surjectivity, cross-check. Otherwise seeded trials."""
    params, point = scenario.resolve()
    report = _header("higgs", scenario, params, point)
    if scenario.lam is not None:
        entry = _higgs_entry(params, point, scenario.lam)
        entry["pass"] = entry["cross_check"]
        report["higgs"] = entry
    else:
        trials = [
            _higgs_entry(params, point, lam)
            for lam in sample_directions(scenario.seed, scenario.trials, scenario.bound, params.m - 3)
        ]
        report["higgs"] = {
            "mode": "sampled",
            "trials": trials,
            "surjective_count": sum(t["surjective"] for t in trials),
            "cross_check_count": sum(t["cross_check"] for t in trials),
            "pass": all(t["surjective"] and t["cross_check"] for t in trials),
        }
    return _finish(report)


def _oracle_entry(params: ArrangementParams, point: ModuliPoint, p: int, q_: int) -> dict:
    piece = graded_piece(params, point, p, q_)
    indep = oracle.invariant_dimension(params.m, params.r, point.a, p, q_)
    entry = {
        "bidegree": [p, q_],
        "pipeline": {"ambient": len(piece.ambient), "ideal_rank": piece.ideal_rank, "dim": piece.dim},
        "independent": indep,
    }
    dims = [piece.dim, indep["dim"]]
    if (p, q_) == params.target_bidegree:
        rel_route = params.m - 3 - oracle.relation_rank(point.a, params.n)
        entry["relation_route"] = rel_route
        dims.append(rel_route)
    entry["agree"] = len(set(dims)) == 1
    entry["pass"] = entry["agree"]
    return entry


def cmd_oracle(scenario: Scenario, p: int | None = None, q_: int | None = None) -> dict:
    params, point = scenario.resolve()
    report = _header("oracle", scenario, params, point)
    if (p is None) != (q_ is None):
        raise errors.InvalidInput("give both --p and --q, or neither")
    if p is not None and (p < 0 or q_ < 0):
        raise errors.InvalidInput("bidegree entries must be >= 0")
    pairs = [(p, q_)] if p is not None else [params.source_bidegree, params.target_bidegree]
    report["oracle"] = [_oracle_entry(params, point, *bd) for bd in pairs]
    return _finish(report)


def _certificate_section(params, point, directions) -> dict:
    cert = certify(params, wedge_power_higgs(arrangement_pencil(params, point)), directions)
    return {
        "length": cert.length,
        "upper_bound": cert.upper_bound,
        "complete": cert.complete,
        "direction": vec(cert.direction) if cert.direction is not None else None,
        "witness": mat(cert.witness) if cert.witness is not None else None,
        "upper_reason": cert.upper_reason,
        "trials_used": cert.trials_used,
        "diagonal_lengths": list(cert.diagonal_lengths),
        "pass": cert.complete and cert.length == params.k_minus_1,
    }


def cmd_verify(scenario: Scenario, timings: bool = False) -> dict:
    """Full pipeline: Hodge numbers, Jacobian pieces, Higgs trials, certificate, oracle."""
    params, point = scenario.resolve()
    clock = _Stopwatch()
    report = _header("verify", scenario, params, point)
    with clock.stage("hodge"):
        report["hodge"] = _hodge_section(params)
    with clock.stage("jacobian"):
        report["jacobian"] = _jacobian_section(params, point)
    lams = (
        [scenario.lam]
        if scenario.lam is not None
        else sample_directions(scenario.seed, scenario.trials, scenario.bound, params.m - 3)
    )
    with clock.stage("higgs"):
        entries = [_higgs_entry(params, point, lam) for lam in lams]
        report["higgs"] = {
            "ranks": [e["rank"] for e in entries],
            "surjective": [e["surjective"] for e in entries],
            "cross_check": [e["cross_check"] for e in entries],
            "pass": all(e["surjective"] and e["cross_check"] for e in entries),
        }
    with clock.stage("certificate"):
        report["certificate"] = _certificate_section(params, point, lams)
    with clock.stage("oracle"):
        entries = [_oracle_entry(params, point, *bd) for bd in (params.source_bidegree, params.target_bidegree)]
        report["oracle"] = {"source": entries[0], "target": entries[1]}
    report["length"] = report["certificate"]["length"]
    if timings:
        report["timings"] = clock.stages
    return _finish(report)


def _verify_job(args: tuple[Scenario, bool]) -> dict:
    return cmd_verify(*args)


def cmd_sweep(
    base: Scenario,
    pairs: Sequence[tuple[int, int]] = DEFAULT_SWEEP,
    jobs: int = 1,
    timings: bool = False,
) -> dict:
    """verify over several (m, r); the point and lambda are per-scenario defaults."""
    scenarios = [replace(base, m=m, r=r, point=None, lam=None) for m, r in pairs]
    for s in scenarios:
        s.resolve()
    if jobs > 1 and len(scenarios) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=min(jobs, len(scenarios))) as pool:
            results = list(pool.map(_verify_job, [(s, timings) for s in scenarios]))
    else:
        results = [cmd_verify(s, timings) for s in scenarios]
    report = {
        "spec_version": SPEC_VERSION,
        "command": "sweep",
        "pairs": [list(p) for p in pairs],
        "lengths": [r["length"] for r in results],
        "expected_lengths": [m // r - 1 for m, r in pairs],
        "results": results,
    }
    report["lengths_match"] = {"pass": report["lengths"] == report["expected_lengths"]}
    return _finish(report)


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2) + "\n"


def render_table(report: Any, prefix: str = "") -> str:
    lines: list[str] = []

    def walk(node, path):
        if isinstance(node, dict):
            for k, v in node.items():
                walk(v, f"{path}.{k}" if path else k)
        elif isinstance(node, list) and node and isinstance(node[0], (dict, list)) and not _is_matrix(node):
            for i, v in enumerate(node):
                walk(v, f"{path}[{i}]")
        else:
            lines.append(f"{path:<48} {_short(node)}")

    walk(report, prefix)
    return "\n".join(lines) + "\n"


def _is_matrix(node) -> bool:
    return all(isinstance(r, list) and all(isinstance(x, (str, int)) for x in r) for r in node)


def _short(node) -> str:
    if isinstance(node, list):
        return json.dumps(node, separators=(",", ":"))
    if node is None:
        return "-"
    return str(node)
