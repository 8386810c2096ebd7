"""Check reports with a stable JSON shape.

Every law checker produces a Report: suite and law names, how many cases ran,
how many failed, and the first counterexample (as plain JSON data) if any.
Serialization is sorted and minimal so identical runs are byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class Report:
    suite: str
    law: str
    cases: int = 0
    failures: int = 0
    first_counterexample: object = None
    notes: tuple = ()

    @property
    def passed(self):
        return self.failures == 0

    def to_dict(self):
        return {
            "suite": self.suite,
            "law": self.law,
            "cases": self.cases,
            "failures": self.failures,
            "first_counterexample": self.first_counterexample,
            "notes": list(self.notes),
            "passed": self.passed,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))


def run_law(suite, law, cases, predicate, describe, notes=()):
    """Evaluate predicate over an iterable of cases and collect a Report."""
    report = Report(suite=suite, law=law, notes=tuple(notes))
    for case in cases:
        report.cases += 1
        if not predicate(case):
            report.failures += 1
            if report.first_counterexample is None:
                report.first_counterexample = describe(case)
    return report


def skipped_report(suite, law, reason):
    return Report(suite=suite, law=law, cases=0, failures=0,
                  notes=(reason,))


@dataclass(frozen=True)
class CheckConfig:
    """How to drive a sampled or exhaustive law check."""

    exhaustive: bool = False
    trials: int = 200
    seed: int = 0

    def indices(self):
        return range(self.trials)


def describe_value(v):
    """Plain-JSON rendering of subspaces, relations, matrices, and scalars."""
    from .matrices import Matrix, format_matrix
    from .relations import LinearRelation
    from .subspaces import Subspace, subspace_to_json

    if isinstance(v, Subspace):
        return subspace_to_json(v)
    if isinstance(v, LinearRelation):
        from .relations import relation_to_json
        return relation_to_json(v)
    if isinstance(v, Matrix):
        return format_matrix(v)
    if isinstance(v, (list, tuple)):
        return [describe_value(a) for a in v]
    if isinstance(v, dict):
        return {k: describe_value(a) for k, a in sorted(v.items())}
    if v is None or isinstance(v, (bool, int, str)):
        return v
    return str(v)
