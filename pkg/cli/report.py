"""
Plain-text reports for the command line: certificate tables, search results and family
summaries. Machine-readable output goes to files; these strings go to stdout.
"""

from typing import Dict, Iterable, List, Sequence

from core.certificates import Certificate, Status, summarize
from core.enumeration import SearchResult
from core.families import FamilyInstance

MARKS = {
    Status.PASS: 'ok',
    Status.FAIL: 'FAIL',
    Status.REPORTED: 'note',
}


def format_q(q: float, digits: int) -> str:
    return f"{q:.{digits}f}"


def certificate_line(certificate: Certificate, width: int = 44) -> str:
    failing = sum(1 for e in certificate.evidence if not e.ok)
    detail = f"{len(certificate.evidence)} records"
    if failing:
        detail += f", {failing} outside tolerance"
    return (f"[{MARKS[certificate.status]:>4}] {certificate.claim_id:<{width}} "
            f"{certificate.status.value:<8} {detail}")


def certificate_report(certificates: Sequence[Certificate], suite: str, elapsed: float) -> str:
    """Per-claim table followed by the status totals."""
    width = max([len(c.claim_id) for c in certificates] + [20])
    lines = [f"Suite {suite}: {len(certificates)} certificates in {elapsed:.1f} seconds", ""]
    lines.extend(certificate_line(c, width) for c in certificates)
    counts = summarize(certificates)
    lines.append("")
    lines.append(f"PASS: {counts['PASS']:,}  FAIL: {counts['FAIL']:,}  REPORTED: {counts['REPORTED']:,}")
    failed = [c for c in certificates if c.failed]
    if failed:
        lines.append("")
        lines.append("Failed claims:")
        for certificate in failed:
            lines.extend(_failing_records(certificate))
    return "\n".join(lines)


def _failing_records(certificate: Certificate, limit: int = 5) -> List[str]:
    lines = [f"  {certificate.claim_id} ({certificate.paper_anchor})"]
    records = [e for e in certificate.evidence if not e.ok]
    for evidence in records[:limit]:
        lines.append(f"    • {evidence.label} {evidence.inputs}: {evidence.values}")
    if len(records) > limit:
        lines.append(f"    • ... {len(records) - limit} more")
    return lines


def search_report(result: SearchResult, digits: int) -> str:
    lines = [
        f"m = {result.m}, filter = {result.filter.value}, n <= {result.max_n}",
        f"Classes searched: {result.graph_count:,}",
    ]
    if result.max_q is None:
        lines.append("No graph passes the filter")
    else:
        lines.append(f"max q = {format_q(result.max_q, digits)}")
        lines.append("argmax:")
        lines.extend(f"  {graph6}" for graph6 in result.argmax)
    lines.append(f"Disconnected classes: {result.disconnected_count:,}"
                 + (" (one attains the maximum)" if result.disconnected_attains_max else ""))
    lines.append(f"Runtime: {result.runtime_ms} ms")
    return "\n".join(lines)


def family_summary(instance: FamilyInstance) -> str:
    g = instance.graph
    return (f"{instance.id.value} k={instance.k}: n={g.n}, m={g.m}, "
            f"Δ={max(g.degrees, default=0)}")


def settings_report(settings: Dict[str, Dict[str, object]]) -> str:
    lines = []
    for category, values in settings.items():
        lines.append(f"[{category}]")
        lines.extend(f"  {key} = {value}" for key, value in values.items())
    return "\n".join(lines)


def issues_report(issues: Dict[str, Iterable[str]]) -> str:
    lines = []
    for kind in ('errors', 'warnings'):
        for message in issues.get(kind, ()):
            lines.append(f"{kind[:-1]}: {message}")
    return "\n".join(lines) if lines else "Configuration is valid"
