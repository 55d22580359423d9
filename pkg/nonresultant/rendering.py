"""Plain-text renderings of results, spectral pages and census reports."""

from typing import List, Optional

from nonresultant.algebra import unreduce
from nonresultant.models.forms import PolySystem
from nonresultant.models.groups import GradedGroup
from nonresultant.models.page import SpectralPage
from nonresultant.models.report import ComponentReport
from nonresultant.models.results import RealCohomologyResult
from nonresultant.utils.constants import PageKind

EMPTY_CELL = "·"
EMPTY_COMPLEMENT = "complement is empty"


def render_graded(g: GradedGroup, symbol: str = "Z", reduced: bool = True) -> List[str]:
    """One line per nonzero group, e.g. ``H~^1 = Z^4``; a single ``0`` line if there is none."""
    prefix = "H~" if reduced else "H"
    lines = [f"{prefix}^{dim} = {group.render(symbol)}" for dim, group in g.items()]
    return lines or [f"{prefix}^* = 0"]


def render_real(result: RealCohomologyResult, unreduced: bool = False) -> str:
    """Text table of a real integer result."""
    if result.complement_empty:
        return f"{result.profile}: {EMPTY_COMPLEMENT}"
    lines = [f"profile {result.profile}"]
    lines += render_graded(result.reduced)
    if unreduced:
        lines += render_graded(unreduce(result.reduced), reduced=False)
    lines.append(f"components: {result.component_count}")
    return "\n".join(lines)


def render_rational(title: str, g: Optional[GradedGroup], unreduced: bool = False) -> str:
    """Text table of a rational result; None stands for the empty complement."""
    if g is None:
        return f"{title}: {EMPTY_COMPLEMENT}"
    lines = [title]
    lines += render_graded(g, symbol="Q")
    if unreduced:
        lines += render_graded(unreduce(g), symbol="Q", reduced=False)
    return "\n".join(lines)


def render_page(page: SpectralPage) -> str:
    """
    Render a page as a grid: columns p ascending, rows q descending.

    Cells are ``Z``, ``Z^r``, ``Z/2`` (``Q`` for rational pages) or ``·``.
    """
    symbol = "Z" if page.kind == PageKind.REAL else "Q"
    header = f"E^{page.leaf_label} ({page.kind.value}, ambient dimension {page.ambient_dim})"
    if not page.entries:
        return f"{header}\n(no entries)"
    ps = range(1, max(p for p, _ in page.entries) + 1)
    qs = range(max(q for _, q in page.entries), min(q for _, q in page.entries) - 1, -1)
    cells = {
        position: group.render(symbol) for position, group in page.entries.items()
    }
    width = max([len(c) for c in cells.values()] + [len(str(p)) for p in ps] + [1])
    label_width = max(len(str(q)) for q in qs)

    lines = [header]
    for q in qs:
        row = [cells.get((p, q), EMPTY_CELL).rjust(width) for p in ps]
        lines.append(f"{str(q).rjust(label_width)} | " + " ".join(row))
    lines.append(" " * label_width + "-+-" + "-" * ((width + 1) * len(ps) - 1))
    lines.append(" " * label_width + "   " + " ".join(str(p).rjust(width) for p in ps))
    return "\n".join(lines)


def render_system(system: PolySystem) -> str:
    """The forms of a system, one per line."""
    return "\n".join(f"f{i} = {form}" for i, form in enumerate(system.forms, start=1))


def render_report(report: ComponentReport) -> str:
    """Summary of a census report."""
    lines = [
        f"profile {report.profile}, invariant {report.invariant_kind.value}",
        f"samples: {report.accepted_samples} accepted, {report.rejected_samples} rejected "
        f"(seed {report.seed}, bound {report.bound}, {report.workers} workers)",
    ]
    for value in report.realized_values:
        count = report.observed.get(value, 0)
        check = "verified" if report.witness_verified.get(value) else "NOT verified"
        lines.append(f"  value {value:>3}: {count} samples, witness {check}")
    if report.illegal_values:
        lines.append(f"illegal values observed: {list(report.illegal_values)}")
    if not report.witnesses_complete:
        lines.append("witnesses: incomplete or not verified")
    lines.append(
        f"sampled classes: {len(report.observed_values)}, predicted b0: {report.predicted_b0} -> "
        + ("OK" if report.passed else "MISMATCH")
    )
    return "\n".join(lines)
