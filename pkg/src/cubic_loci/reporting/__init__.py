"""Reports, verification against published values, and query payloads."""

from cubic_loci.reporting.builder import GENERATED_BY, build_report, build_row, run_report
from cubic_loci.reporting.queries import (
    brauer_payload,
    classify_payload,
    families_payload,
    overlattices_payload,
    shortvec_payload,
)
from cubic_loci.reporting.render import (
    REPORT_FORMATS,
    ReportFormat,
    dumps_json,
    render,
    render_csv,
    render_json,
    render_markdown,
)
from cubic_loci.reporting.schemas import (
    CURRENT_REPORT_SCHEMA_VERSION,
    CheckResult,
    IntersectionReport,
    ReportRow,
    VerificationSummary,
)
from cubic_loci.reporting.verification import run_verify, verify_family

__all__ = [
    "CURRENT_REPORT_SCHEMA_VERSION",
    "GENERATED_BY",
    "REPORT_FORMATS",
    "CheckResult",
    "IntersectionReport",
    "ReportFormat",
    "ReportRow",
    "VerificationSummary",
    "brauer_payload",
    "build_report",
    "build_row",
    "classify_payload",
    "dumps_json",
    "families_payload",
    "overlattices_payload",
    "render",
    "render_csv",
    "render_json",
    "render_markdown",
    "run_report",
    "run_verify",
    "shortvec_payload",
    "verify_family",
]
