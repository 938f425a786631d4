"""Plain-text rendering of analysis reports and summaries."""

import pandas as pd

from regsym.models.branches import BranchSet
from regsym.models.growth import OracleReport
from regsym.models.report import AnalysisReport
from regsym.models.verdict import ConditionReport, SeparationReport


def format_complex(value: complex, digits: int = 10) -> str:
    """Short human readable complex number."""
    if not value.imag:
        return f"{value.real:.{digits}g}"
    if not value.real:
        return f"{value.imag:.{digits}g}i"
    sign = "+" if value.imag >= 0 else "-"
    return f"{value.real:.{digits}g}{sign}{abs(value.imag):.{digits}g}i"


def branch_table(branches: BranchSet) -> pd.DataFrame:
    """One row per series term, with the residual certificate of its branch."""
    certificates = {certificate.branch: certificate for certificate in branches.residual_certificates}
    rows = []
    for index, branch in enumerate(branches.branches):
        certificate = certificates.get(index)
        for term in branch.terms:
            rows.append(
                {
                    "branch": index,
                    "exponent": str(term.exponent),
                    "coefficient": format_complex(term.coefficient),
                    "p": branch.ramification,
                    "truncation": "exact" if branch.is_terminating else str(branch.truncation_exponent),
                    "residual": "" if certificate is None else f"{certificate.slope:.3g}",
                    "passed": "" if certificate is None else certificate.passed,
                }
            )
        if not branch.terms:
            rows.append({"branch": index, "exponent": "", "coefficient": "0", "p": branch.ramification})
    return pd.DataFrame(rows).fillna("")


def _separation_lines(report: SeparationReport) -> list[str]:
    lines = [f"  separation at {report.direction.value}: {'holds' if report.separated else 'fails'}"]
    for pair in report.failing():
        lines.append(f"    pair ({pair.j}, {pair.k}) at slope {format_complex(pair.slope)} is not separated")
    if report.borderline:
        lines.append(f"    borderline slopes on branches {list(report.borderline)}")
    return lines


def _condition_lines(report: ConditionReport) -> list[str]:
    lines = [f"  growth condition: {'holds' if report.holds else 'fails'}"]
    for entry in report.entries:
        if entry.witness_exponent is None:
            detail = "no imaginary term"
        else:
            detail = f"first imaginary term {format_complex(entry.witness_coefficient)} x^({entry.witness_exponent})"
        lines.append(f"    {entry.direction.value} branch {entry.branch}: {entry.status.value} ({detail})")
    return lines


def _oracle_lines(report: OracleReport) -> list[str]:
    lines = [f"oracle: {report.status.value}"]
    for observation in report.observations:
        if observation.growth is None:
            lines.append(f"  {observation.direction.value} {observation.source}: {observation.note}")
            continue
        growth = observation.growth
        lines.append(
            f"  {observation.direction.value} {observation.source}: {growth.label.value} "
            f"(log-log slope {growth.slope:.4g}, rms {growth.rms:.2g})"
        )
    if report.max_log_difference is not None:
        lines.append(f"  witness vs integration: max |log|u|| difference {report.max_log_difference:.3g}")
    lines.extend(f"  {note}" for note in report.notes)
    return lines


def render_report(report: AnalysisReport) -> str:
    """
    Render an analysis report as text.

    Parameters
    ----------
    report : AnalysisReport
        The report to render; the verdict line matches the JSON form.
    """
    verdict = report.verdict
    path = verdict.path.value if verdict.path else "none"
    lines = [
        f"input:          {report.input} ({report.quantization.value} quantization)",
        f"weyl symbol:    {report.weyl_symbol}",
    ]
    if report.normalized is not None:
        lines.append(f"normalized:     {report.normalized} (shear {report.shear})")
    if report.classification is not None:
        lines.append(f"class:          {report.classification.symbol_class.value}")
    lines.append(f"decision:       {verdict.decision.value} via {path}")
    for branches in report.branches:
        lines.append("")
        lines.append(
            f"branches at {branches.direction.value} (depth {branches.depth}, ramification {branches.ramification})"
        )
        table = branch_table(branches)
        lines.extend("  " + line for line in table.to_string(index=False).splitlines())
        if branches.unseparated:
            lines.append(f"  unseparated at depth: {[list(group) for group in branches.unseparated]}")
    if verdict.separation or verdict.condition is not None:
        lines.append("")
        for separation in verdict.separation:
            lines.extend(_separation_lines(separation))
        if verdict.condition is not None:
            lines.extend(_condition_lines(verdict.condition))
    if verdict.diagnostics:
        lines.append("")
        lines.append("diagnostics:")
        lines.extend(f"  - {note}" for note in verdict.diagnostics)
    if report.oracle is not None:
        lines.append("")
        lines.extend(_oracle_lines(report.oracle))
    lines.append("")
    tolerances = ", ".join(f"{name}={value:g}" for name, value in report.tolerances.model_dump().items())
    lines.append(f"tolerances:     {tolerances}")
    lines.append(f"time:           {report.seconds:.3f} s")
    return "\n".join(lines)
