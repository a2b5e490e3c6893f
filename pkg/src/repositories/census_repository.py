import csv
import io
import json
from typing import Sequence

from src.schemas.census_schemas import CensusRow, Disagreement

CENSUS_FIELDS = (
    "n",
    "pattern",
    "labeled_count_pattern",
    "labeled_count_oracle",
    "labeled_total",
    "unlabeled_count",
    "unlabeled_total",
    "agree",
    "wall_time_ms",
)


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


class CensusRepository:
    """Serializes census rows; every format is deterministic for identical rows."""

    def to_csv(self, rows: Sequence[CensusRow]) -> str:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(CENSUS_FIELDS)
        for row in rows:
            data = row.model_dump()
            writer.writerow([_cell(data[field]) for field in CENSUS_FIELDS])
        return buffer.getvalue()

    def to_json(self, rows: Sequence[CensusRow], disagreements: Sequence[Disagreement] = ()) -> str:
        payload = {"rows": [{field: row.model_dump()[field] for field in CENSUS_FIELDS} for row in rows]}
        if disagreements:
            payload["disagreements"] = [d.model_dump() for d in disagreements]
        return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"

    def to_text(self, rows: Sequence[CensusRow]) -> str:
        header = f"{'n':>2} {'p':>6} {'padrão':>8} {'oráculo':>8} {'total':>6} {'classes':>8} acordo"
        lines = [header]
        for row in rows:
            lines.append(
                f"{row.n:>2} {row.pattern:>6} {_cell(row.labeled_count_pattern) or '-':>8} "
                f"{_cell(row.labeled_count_oracle) or '-':>8} {row.labeled_total:>6} "
                f"{(_cell(row.unlabeled_count) or '-') + '/' + str(row.unlabeled_total):>8} "
                f"{_cell(row.agree) or '-'}"
            )
        return "\n".join(lines) + "\n"
