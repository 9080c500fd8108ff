"""Stratum registry, moduli-class assembly, and verification reports.

Every registered stratum is stored as expression-language source (see
``data/strata.json``) so each formula stays readable and auditable.  The
assembly layer sums the strata per target, checks the result against the
pinned reference tables, and reports structural properties (palindromic,
effective, constant term 1, degree = expected dimension).

The conic-locus consistency report rebuilds the pinned Omega(2,6) class
bottom-up from its sub-strata and records every intermediate class, the
projective-bundle exact divisions, and the difference against the pinned
value.  Equality and inequality are both recorded, never patched: the
sub-stratum bookkeeping is knowingly ambiguous (see README) and the main
verification path never depends on it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .atoms import omega_locus, projective
from .dsl import VarietyExpr, eval_expr, parse
from .motive import ZERO, DivisionNotExact, MotiveClass

TARGETS = ("m11", "m21", "m31", "m41", "m51", "m52")

#: moduli dimension by target (degree d and pairing give dim = d^2 + 1)
DIMENSION = {"m11": 2, "m21": 5, "m31": 10, "m41": 17, "m51": 26, "m52": 26}

#: reference coefficient tables the assemblies must reproduce exactly
EXPECTED_TABLE = {
    "m11": (1, 1, 1),
    "m21": (1, 1, 1, 1, 1, 1),
    # derived: class of the universal cubic (P^8-bundle over the plane)
    "m31": (1, 2, 3, 3, 3, 3, 3, 3, 3, 2, 1),
    "m41": (1, 2, 6, 10, 14, 15, 16, 16, 16, 16, 16, 16, 15, 14, 10, 6, 2, 1),
    "m51": (1, 2, 6, 13, 26, 45, 68, 87, 100, 107, 111, 112, 113,
            113, 113, 112, 111, 107, 100, 87, 68, 45, 26, 13, 6, 2, 1),
}
EXPECTED_TABLE["m52"] = EXPECTED_TABLE["m51"]

EXPECTED_EULER = {"m11": 3, "m21": 6, "m31": 27, "m41": 192, "m51": 1695, "m52": 1695}


@dataclass(frozen=True)
class StratumSpec:
    """A registered stratum: identifier, provenance note, formula source,
    and (when known in closed form) the expected class."""

    id: str
    paper_ref: str
    expr: str
    expected: MotiveClass | None = None

    def parsed(self) -> VarietyExpr:
        return parse(self.expr)

    def value(self) -> MotiveClass:
        return eval_expr(self.parsed())


@lru_cache(maxsize=1)
def _load_registry() -> tuple[StratumSpec, ...]:
    raw = json.loads(
        resources.files("motivecount").joinpath("data/strata.json").read_text())
    specs = []
    for entry in raw:
        expected = entry.get("expected")
        specs.append(StratumSpec(
            id=entry["id"],
            paper_ref=entry["paper_ref"],
            expr=entry["expr"],
            expected=MotiveClass(expected) if expected is not None else None,
        ))
    return tuple(specs)


def registry() -> tuple[StratumSpec, ...]:
    """The moduli strata (everything except the omega26 sub-strata)."""
    return tuple(s for s in _load_registry() if not s.id.startswith("omega26."))


def omega26_parts() -> tuple[StratumSpec, ...]:
    """Sub-strata feeding the conic-locus consistency report."""
    return tuple(s for s in _load_registry() if s.id.startswith("omega26."))


def strata_for(target: str) -> tuple[StratumSpec, ...]:
    if target not in TARGETS:
        raise KeyError(f"unknown target {target!r}")
    if "." not in target and any(s.id == target for s in registry()):
        return tuple(s for s in registry() if s.id == target)
    return tuple(s for s in registry() if s.id.startswith(target + "."))


# -- verification -------------------------------------------------------------

@dataclass(frozen=True)
class ReportFlags:
    table_match: bool
    euler_match: bool
    palindromic: bool
    degree_matches_dimension: bool
    nonnegative: bool

    @property
    def all_pass(self) -> bool:
        return (self.table_match and self.euler_match and self.palindromic
                and self.degree_matches_dimension and self.nonnegative)

    def as_dict(self) -> dict:
        return {
            "table_match": self.table_match,
            "euler_match": self.euler_match,
            "palindromic": self.palindromic,
            "degree_matches_dimension": self.degree_matches_dimension,
            "nonnegative": self.nonnegative,
        }


@dataclass(frozen=True)
class VerificationReport:
    target: str
    strata: tuple[tuple[str, MotiveClass], ...]
    assembled: MotiveClass
    expected: MotiveClass
    euler_assembled: int
    flags: ReportFlags

    @property
    def passed(self) -> bool:
        return self.flags.all_pass


def assemble(target: str) -> VerificationReport:
    """Sum the registered strata of a target and verify the result."""
    specs = strata_for(target)
    classes = tuple((s.id, s.value()) for s in specs)
    assembled = sum((c for _, c in classes), ZERO)
    expected = MotiveClass(EXPECTED_TABLE[target])
    flags = ReportFlags(
        table_match=assembled == expected,
        euler_match=assembled.euler() == EXPECTED_EULER[target],
        palindromic=assembled.is_palindromic(),
        degree_matches_dimension=assembled.degree == DIMENSION[target],
        nonnegative=assembled.is_effective(),
    )
    return VerificationReport(
        target=target,
        strata=classes,
        assembled=assembled,
        expected=expected,
        euler_assembled=assembled.euler(),
        flags=flags,
    )


# -- conic-locus consistency ---------------------------------------------------

@dataclass(frozen=True)
class DivisionOutcome:
    """Result of dividing a relative-Hilbert-scheme class by its P^n fiber."""

    n: int
    numerator: MotiveClass
    exact: bool
    quotient: MotiveClass | None
    detail: str = ""


@dataclass(frozen=True)
class ConsistencyReport:
    parts: tuple[tuple[str, MotiveClass], ...]
    divisions: tuple[DivisionOutcome, ...]
    assembled: MotiveClass
    stated: MotiveClass
    difference: MotiveClass
    matches: bool


def omega26_assembled() -> tuple[MotiveClass, ConsistencyReport]:
    """Rebuild the conic-locus class from its sub-strata.

    The union of the coverings splits over the conic type: integral conics
    contribute a P^6-bundle; double lines contribute the S-strata times the
    space of lines; crossing lines contribute the branch-asymmetric strata
    times ordered distinct line pairs plus the branch-symmetric strata
    times unordered distinct line pairs.  For each conic-system dimension n
    the total is a P^n-bundle over its image, so the image class is an
    exact quotient.  The assembled class is the sum of the three quotients
    and is reported next to the pinned value, equal or not.
    """
    parts = {s.id.removeprefix("omega26."): s.value() for s in omega26_parts()}
    ordered = tuple((s.id, parts[s.id.removeprefix("omega26.")]) for s in omega26_parts())
    p2 = projective(2)
    ordered_pairs = p2 * p2 - p2
    unordered_pairs = p2.sym_power(2) - p2

    divisions = []
    assembled = ZERO
    for n in range(3):
        nonreduced = sum(
            (cls for name, cls in parts.items()
             if name.startswith("S") and name.endswith(f"_{n}")), ZERO)
        rn = (parts[f"Hx{n}"] * ordered_pairs
              + parts[f"Hs{n}"] * unordered_pairs
              + nonreduced * p2)
        if n == 0:
            rn = rn + parts["integral"]
        try:
            quotient = rn.exact_div(projective(n))
            divisions.append(DivisionOutcome(n, rn, True, quotient))
            assembled = assembled + quotient
        except DivisionNotExact as exc:
            divisions.append(DivisionOutcome(n, rn, False, None, str(exc)))

    stated = omega_locus(2, 6)
    difference = assembled - stated
    report = ConsistencyReport(
        parts=ordered,
        divisions=tuple(divisions),
        assembled=assembled,
        stated=stated,
        difference=difference,
        matches=difference == ZERO,
    )
    return assembled, report


@dataclass(frozen=True)
class VerificationSuite:
    reports: tuple[VerificationReport, ...]
    omega26: ConsistencyReport

    @property
    def passed(self) -> bool:
        """Hard criteria only; the consistency comparison is informational."""
        return all(r.passed for r in self.reports)


def verify_all() -> VerificationSuite:
    """Assemble and verify every target, plus the conic-locus diagnostic."""
    reports = tuple(assemble(t) for t in TARGETS)
    _, consistency = omega26_assembled()
    return VerificationSuite(reports=reports, omega26=consistency)


# -- renderings ----------------------------------------------------------------

def betti_rows(cls: MotiveClass) -> list[tuple[int, int]]:
    """Rows (i, b_2i) of the Betti table of a class."""
    return list(enumerate(cls.coeffs))


def betti_markdown(cls: MotiveClass) -> str:
    lines = ["| i | b_2i |", "|---:|---:|"]
    lines += [f"| {i} | {b} |" for i, b in betti_rows(cls)]
    return "\n".join(lines) + "\n"


def betti_csv(cls: MotiveClass) -> str:
    lines = ["i,b_2i"] + [f"{i},{b}" for i, b in betti_rows(cls)]
    return "\n".join(lines) + "\n"


def report_to_dict(report: VerificationReport) -> dict:
    return {
        "target": report.target,
        "strata": [{"id": sid, "class": list(cls.coeffs)} for sid, cls in report.strata],
        "assembled": list(report.assembled.coeffs),
        "expected": list(report.expected.coeffs),
        "euler_assembled": report.euler_assembled,
        "flags": report.flags.as_dict(),
        "pass": report.passed,
    }


def consistency_to_dict(report: ConsistencyReport) -> dict:
    return {
        "parts": [
            {"id": sid, "class": list(cls.coeffs), "euler": cls.euler()}
            for sid, cls in report.parts
        ],
        "bundles": [
            {
                "n": d.n,
                "total_class": list(d.numerator.coeffs),
                "total_euler": d.numerator.euler(),
                "division_exact": d.exact,
                "base_class": list(d.quotient.coeffs) if d.quotient is not None else None,
                "base_euler": d.quotient.euler() if d.quotient is not None else None,
                "detail": d.detail,
            }
            for d in report.divisions
        ],
        "assembled": list(report.assembled.coeffs),
        "assembled_euler": report.assembled.euler(),
        "stated": list(report.stated.coeffs),
        "stated_euler": report.stated.euler(),
        "difference": list(report.difference.coeffs),
        "matches_stated": report.matches,
    }


def suite_to_dict(suite: VerificationSuite) -> dict:
    return {
        "schema": 1,
        "reports": [report_to_dict(r) for r in suite.reports],
        "omega26_consistency": consistency_to_dict(suite.omega26),
        "pass": suite.passed,
    }


def registry_to_json() -> str:
    """Serialize the full registry in its exchange format."""
    entries = []
    for s in _load_registry():
        entry = {"id": s.id, "paper_ref": s.paper_ref, "expr": s.expr}
        if s.expected is not None:
            entry["expected"] = list(s.expected.coeffs)
        entries.append(entry)
    return json.dumps(entries, indent=2) + "\n"


def report_markdown(report: VerificationReport) -> str:
    lines = [f"# {report.target}", ""]
    lines.append(f"Euler number: {report.euler_assembled}")
    lines.append(f"Degree: {report.assembled.degree}")
    flag_text = ", ".join(f"{k}={'pass' if v else 'FAIL'}"
                          for k, v in report.flags.as_dict().items())
    lines.append(f"Checks: {flag_text}")
    lines.append("")
    lines.append(betti_markdown(report.assembled))
    return "\n".join(lines)


def report_text(report: VerificationReport) -> str:
    status = "pass" if report.passed else "FAIL"
    lines = [f"{report.target}: {status}"]
    for sid, cls in report.strata:
        lines.append(f"  {sid}: {cls}")
    lines.append(f"  assembled: {report.assembled}")
    lines.append(f"  euler: {report.euler_assembled}")
    for k, v in report.flags.as_dict().items():
        lines.append(f"  {k}: {'pass' if v else 'FAIL'}")
    return "\n".join(lines) + "\n"
