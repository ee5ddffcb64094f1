"""Export the cubic-loci intersection report JSON Schema."""

from __future__ import annotations

import json
from pathlib import Path

from cubic_loci.reporting.schemas import CURRENT_REPORT_SCHEMA_VERSION, IntersectionReport


def main() -> None:
    """Write the JSON Schema for :class:`IntersectionReport` to the repository root."""

    schema = IntersectionReport.model_json_schema()
    output_path = Path(__file__).resolve().parent.parent / (
        f"report_schema_v{CURRENT_REPORT_SCHEMA_VERSION}.json"
    )
    output_path.write_text(json.dumps(schema, indent=2) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
