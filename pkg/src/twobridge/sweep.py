"""Full verification sweep: enumerate, check, persist.

Work is split into crossing-number bands (odd entry sums) and, inside a
band, into one task per leading entry.  Tasks are pure, so rows can be
computed by any number of workers and still come out byte-identical:
every band is sorted by (crossings, p, q_star, cf) before it is written.

With a checkpoint directory, each finished band is committed atomically
(write temp, rename); a rerun reuses committed bands after verifying
that the sweep parameters match.
"""

from __future__ import annotations

import csv
import io
import json
import os
import tempfile
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import obstruction, rational_cf
from .conway import MemoStore
from .enumeration import KnotCensus, presentations_with_sum
from .errors import CheckpointCorrupt, InvalidInput
from .obstruction import ObstructionRecord, Verdict

CSV_COLUMNS = [
    "crossings", "p", "q", "cf", "a2", "a4", "det", "genus", "v3",
    "lhs", "rhs", "equal", "excluded_torus", "complexity",
    "quotient", "quotient_num", "quotient_den",
    "s_k", "s_k_num", "s_k_den",
]


@dataclass(frozen=True)
class SweepConfig:
    max_crossings: int
    output_path: str
    worker_count: int = 1
    memo_cap_bytes: int | None = None
    checkpoint_dir: str | None = None
    dedup_mode: str = "presentations"

    def __post_init__(self) -> None:
        if self.max_crossings < 3:
            raise InvalidInput("max_crossings must be >= 3")
        if self.worker_count < 1:
            raise InvalidInput("worker_count must be >= 1")
        if self.dedup_mode not in ("presentations", "canonical"):
            raise InvalidInput(f"unknown dedup_mode {self.dedup_mode!r}")


@dataclass
class SweepReport:
    census: KnotCensus
    equality_count: int
    elapsed: float
    peak_memo_entries: int


def _format_fraction(value: Fraction | None) -> tuple[str, str, str]:
    """(12-significant-digit decimal, exact numerator, exact denominator)."""
    if value is None:
        return "", "", ""
    return f"{float(value):.12g}", str(value.numerator), str(value.denominator)


def record_to_row(rec: ObstructionRecord) -> list[str]:
    q_dec, q_num, q_den = _format_fraction(rec.quotient)
    s_dec, s_num, s_den = _format_fraction(rec.s_k)
    return [
        str(sum(rec.cf)), str(rec.p), str(rec.q),
        rational_cf.format_cf(rec.cf),
        str(rec.inv.a2), str(rec.inv.a4), str(rec.inv.det),
        str(rec.inv.genus), str(rec.inv.v3),
        str(rec.lhs), str(rec.rhs),
        "true" if rec.verdict is Verdict.OBSTRUCTION_INCONCLUSIVE else "false",
        "true" if rec.verdict is Verdict.EXCLUDED_TORUS else "false",
        str(rec.complexity),
        q_dec, q_num, q_den, s_dec, s_num, s_den,
    ]


def _sort_key(rec: ObstructionRecord) -> tuple:
    return (sum(rec.cf), rec.p, rec.key.q_star, rec.cf)


# Per-process memo, shared across the tasks a worker executes.
_worker_memo: MemoStore | None = None


def _init_worker(memo_cap_bytes: int | None) -> None:
    global _worker_memo
    _worker_memo = MemoStore.with_byte_cap(memo_cap_bytes)


def _task_rows(band_sum: int, leading: int,
               memo: MemoStore) -> list[tuple[tuple, list[str], str]]:
    """(sort_key, row, dedup_key) for one (band sum, leading entry) partition."""
    rows = []
    for word in presentations_with_sum(band_sum, leading=leading):
        rec = obstruction.check(word, memo)
        rows.append((_sort_key(rec), record_to_row(rec), f"{rec.key.p}/{rec.key.q_star}"))
    return rows


def _run_task(args: tuple[int, int]) -> tuple[list[tuple[tuple, list[str], str]], int]:
    band_sum, leading = args
    memo = _worker_memo if _worker_memo is not None else MemoStore()
    return _task_rows(band_sum, leading, memo), memo.peak_entries


def _compute_band(config: SweepConfig, band_sum: int,
                  executor: ProcessPoolExecutor | None,
                  memo: MemoStore) -> tuple[list[list[str]], int]:
    """All final CSV rows of one band, sorted and deduplicated."""
    tasks = [(band_sum, leading) for leading in range(1, band_sum + 1)]
    if executor is None:
        results = [(_task_rows(s, lead, memo), memo.peak_entries) for s, lead in tasks]
    else:
        results = list(executor.map(_run_task, tasks))
    triples = [t for rows, _ in results for t in rows]
    peak = max(peak for _, peak in results)
    triples.sort(key=lambda t: t[0])
    rows = []
    seen_keys: set[str] = set()
    for _, row, dedup_key in triples:
        if config.dedup_mode == "canonical":
            if dedup_key in seen_keys:
                continue
            seen_keys.add(dedup_key)
        rows.append(row)
    return rows, peak


def _row_text(rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _parse_rows(text: str) -> list[list[str]]:
    return list(csv.reader(io.StringIO(text)))


def _checkpoint_paths(config: SweepConfig, band_sum: int) -> tuple[str, str]:
    assert config.checkpoint_dir is not None
    return (os.path.join(config.checkpoint_dir, "config.json"),
            os.path.join(config.checkpoint_dir, f"band_{band_sum:02d}.csv"))


def _load_or_compute_band(config: SweepConfig, band_sum: int,
                          executor: ProcessPoolExecutor | None,
                          memo: MemoStore) -> tuple[list[list[str]], int]:
    if config.checkpoint_dir is None:
        return _compute_band(config, band_sum, executor, memo)
    _, band_path = _checkpoint_paths(config, band_sum)
    if os.path.exists(band_path):
        with open(band_path, encoding="utf-8", newline="") as fh:
            return _parse_rows(fh.read()), 0
    rows, peak = _compute_band(config, band_sum, executor, memo)
    fd, tmp = tempfile.mkstemp(dir=config.checkpoint_dir, suffix=".tmp")
    with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
        fh.write(_row_text(rows))
    os.replace(tmp, band_path)
    return rows, peak


def _prepare_checkpoint(config: SweepConfig) -> None:
    os.makedirs(config.checkpoint_dir, exist_ok=True)
    meta_path = os.path.join(config.checkpoint_dir, "config.json")
    meta = {"max_crossings": config.max_crossings, "dedup_mode": config.dedup_mode}
    if os.path.exists(meta_path):
        with open(meta_path, encoding="utf-8") as fh:
            try:
                existing = json.load(fh)
            except json.JSONDecodeError as exc:
                raise CheckpointCorrupt(f"unreadable {meta_path}") from exc
        if {k: existing.get(k) for k in meta} != meta:
            raise CheckpointCorrupt(
                f"checkpoint at {config.checkpoint_dir} was written for {existing}, "
                f"refusing to resume with {meta}")
    else:
        with open(meta_path, "w", encoding="utf-8") as fh:
            json.dump(meta, fh)


def run_sweep(config: SweepConfig) -> SweepReport:
    """Run the sweep, write the CSV, and summarize the verdicts."""
    start = time.monotonic()
    if config.checkpoint_dir is not None:
        _prepare_checkpoint(config)
    executor = None
    if config.worker_count > 1:
        executor = ProcessPoolExecutor(
            max_workers=config.worker_count,
            initializer=_init_worker,
            initargs=(config.memo_cap_bytes,))
    memo = MemoStore.with_byte_cap(config.memo_cap_bytes)
    census = KnotCensus()
    equality_count = 0
    peak_entries = 0
    try:
        out_dir = os.path.dirname(os.path.abspath(config.output_path))
        fd, tmp = tempfile.mkstemp(dir=out_dir, suffix=".csv.tmp")
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as out:
            out.write(",".join(CSV_COLUMNS) + "\n")
            for band_sum in range(3, config.max_crossings + 1, 2):
                rows, peak = _load_or_compute_band(config, band_sum, executor, memo)
                peak_entries = max(peak_entries, peak, memo.peak_entries)
                keys = set()
                for row in rows:
                    p, q = int(row[1]), int(row[2])
                    keys.add(rational_cf.canonical_key(p, q))
                    if row[11] == "true" and row[12] == "false":
                        equality_count += 1
                census.presentations_per_crossing[band_sum] = len(rows)
                census.canonical_per_crossing[band_sum] = len(keys)
                out.write(_row_text(rows))
        os.replace(tmp, config.output_path)
    finally:
        if executor is not None:
            executor.shutdown()
    return SweepReport(
        census=census,
        equality_count=equality_count,
        elapsed=time.monotonic() - start,
        peak_memo_entries=peak_entries,
    )


# ------------------------------------------------------------- plot data

PLOT_FILES = {
    "complexity_vs_quotient.csv": ("complexity", "quotient"),
    "q_vs_sk.csv": ("q", "s_k"),
    "p_vs_q_sk.csv": ("p", "q", "s_k"),
    "complexity_vs_difference.csv": ("complexity", "difference"),
    "minpq_vs_difference.csv": ("min_pq", "difference"),
    "q_vs_difference.csv": ("q", "difference"),
    "q_vs_quotient.csv": ("q", "quotient"),
}


def emit_plot_data(results_csv: str, out_dir: str) -> list[str]:
    """Derive one small CSV per figure from a sweep results file.

    Rows whose quotient is undefined (rhs = 0) are dropped from the
    quotient- and s_k-based files.
    """
    os.makedirs(out_dir, exist_ok=True)
    with open(results_csv, encoding="utf-8", newline="") as fh:
        reader = csv.DictReader(fh)
        records = list(reader)
    derived = []
    for row in records:
        # Plot coordinates use the canonical key (p, q*) so that every
        # presentation of a knot lands on the same point.
        p, q = int(row["p"]), int(row["q"])
        q_star = rational_cf.canonical_key(p, q).q_star
        derived.append({
            "complexity": row["complexity"],
            "p": row["p"],
            "q": str(q_star),
            "min_pq": str(min(p, q_star)),
            "difference": str(int(row["lhs"]) - int(row["rhs"])),
            "quotient": row["quotient"],
            "s_k": row["s_k"],
        })
    written = []
    for name, columns in PLOT_FILES.items():
        path = os.path.join(out_dir, name)
        with open(path, "w", encoding="utf-8", newline="") as fh:
            writer = csv.writer(fh, lineterminator="\n")
            writer.writerow(columns)
            for row in derived:
                values = [row[c] for c in columns]
                if any(v == "" for v in values):
                    continue
                writer.writerow(values)
        written.append(path)
    return written
