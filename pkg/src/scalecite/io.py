"""Publication-record files: flat CSV rows and JSON profile arrays.

CSV header is ``author_id,year,coauthors,citations`` with one row per
(author, paper); an empty year means unknown. JSON is an array of
``{"id", "group", "publications": [{"citations", "coauthors", "year"}]}``.
Writers are deterministic, so ``write(read(path))`` reproduces files that
were produced by the writers byte for byte.
"""

from __future__ import annotations

import csv
import io
import json
from importlib import resources
from pathlib import Path
from typing import Iterable, Union

from .model import AuthorProfile, Cohort, Publication, ValidationError, validate_cohort, validate_profile

CSV_FIELDS = ("author_id", "year", "coauthors", "citations")
FORMATS = ("csv", "json")

PathLike = Union[str, Path]


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class NoRecords(ValueError):
    pass


def detect_format(path: PathLike) -> str:
    return "json" if str(path).lower().endswith(".json") else "csv"


def _int_field(row: dict, name: str, line: int, optional: bool = False):
    raw = (row.get(name) or "").strip()
    if raw == "":
        if optional:
            return None
        raise ParseError(f"missing {name}", line)
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"{name} is not an integer: {raw!r}", line) from None


def parse_csv(text: str, source: str = "<csv>") -> Cohort:
    reader = csv.DictReader(io.StringIO(text))
    if reader.fieldnames is None:
        raise NoRecords(f"{source}: no records")
    missing = [f for f in CSV_FIELDS if f not in reader.fieldnames]
    if missing:
        raise ParseError(f"header lacks column(s) {', '.join(missing)}", 1)

    grouped: dict[str, list[Publication]] = {}
    for row in reader:
        line = reader.line_num
        if None in row or any(v is None for v in row.values()):
            raise ParseError("wrong number of fields", line)
        author = row["author_id"].strip()
        if not author:
            raise ParseError("empty author_id", line)
        pub = Publication(
            citations=_int_field(row, "citations", line),
            coauthors=_int_field(row, "coauthors", line),
            year=_int_field(row, "year", line, optional=True),
        )
        try:
            validate_profile(AuthorProfile(author, (pub,)))
        except ValidationError as exc:
            raise type(exc)(f"line {line}: {exc}") from None
        grouped.setdefault(author, []).append(pub)

    if not grouped:
        raise NoRecords(f"{source}: no records")
    cohort = Cohort(tuple(AuthorProfile(a, tuple(p)) for a, p in grouped.items()), f"ingested {source}")
    return validate_cohort(cohort)


def parse_json(text: str, source: str = "<json>") -> Cohort:
    if not text.strip():
        raise NoRecords(f"{source}: no records")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno) from None
    if not isinstance(data, list):
        raise ParseError("top level must be an array of profiles")
    if not data:
        raise NoRecords(f"{source}: no records")

    members = []
    for k, obj in enumerate(data):
        try:
            pubs = tuple(
                Publication(int(p["citations"]), int(p["coauthors"]), None if p.get("year") is None else int(p["year"]))
                for p in obj.get("publications", [])
            )
            members.append(AuthorProfile(str(obj["id"]), pubs, obj.get("group")))
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise ParseError(f"profile #{k}: malformed entry ({exc})") from None
    return validate_cohort(Cohort(tuple(members), f"ingested {source}"))


def ingest(path: PathLike, format: str | None = None) -> Cohort:
    path = Path(path)
    fmt = format or detect_format(path)
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    text = path.read_text(encoding="utf-8")
    return parse_csv(text, str(path)) if fmt == "csv" else parse_json(text, str(path))


def to_csv(cohort: Cohort) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for m in cohort.members:
        for p in m.publications:
            writer.writerow((m.id, "" if p.year is None else p.year, p.coauthors, p.citations))
    return buf.getvalue()


def to_json(cohort: Cohort) -> str:
    data = [
        {
            "id": m.id,
            "group": m.group,
            "publications": [{"citations": p.citations, "coauthors": p.coauthors, "year": p.year} for p in m.publications],
        }
        for m in cohort.members
    ]
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def emit(cohort: Cohort, path: PathLike, format: str | None = None) -> None:
    path = Path(path)
    fmt = format or detect_format(path)
    text = to_csv(cohort) if fmt == "csv" else to_json(cohort)
    path.write_text(text, encoding="utf-8")


def scatter_rows(cohort: Cohort) -> Iterable[tuple]:
    for m in cohort.members:
        for p in m.publications:
            yield m.id, p.coauthors, p.citations, int(p.citations == 0)


def emit_scatter(cohort: Cohort, path: PathLike) -> int:
    """Write plot-ready (author_id, coauthors, citations, zero_citations) rows.

    ``zero_citations`` flags rows that cannot sit on a log-log axis.
    Returns the number of data rows written.
    """
    rows = list(scatter_rows(cohort))
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(("author_id", "coauthors", "citations", "zero_citations"))
        writer.writerows(rows)
    return len(rows)


def bundled_path(name: str = "model_stats.csv") -> Path:
    return Path(str(resources.files("scalecite") / "data" / name))


def load_model_stats(format: str = "csv") -> Cohort:
    """The bundled foundation-model authorship sample (17 single-paper profiles)."""
    return ingest(bundled_path(f"model_stats.{format}"), format)
