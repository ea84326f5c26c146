"""Emitters for the five reference tables in text, CSV, and JSON formats.

Every emitter computes its rows from scratch (nothing is read from
``reference``); the frozen data there exists so tests can diff these
emitters against known-good values.  Partition-indexed tables list rows
in reverse-lexicographic order on the decreasing part lists and say so
in their headers.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Any, Callable

from .characters import a_character, braid_character
from .measures import splitting_coefficients
from .partitions import class_data, format_partition, partitions
from .specht import IrrepDecomposition, decompose

TABLE_NAMES = ("measures", "betti", "a-dims", "h1-decomp", "a2-decomp")

#: Largest n each emitter accepts, keeping worst-case runtime around a second.
TABLE_LIMITS = {
    "measures": 12,
    "betti": 12,
    "a-dims": 12,
    "h1-decomp": 9,
    "a2-decomp": 9,
}

FORMATS = ("text", "csv", "json")


def _rat_str(x: Fraction) -> str:
    return str(x)


def _json_number(x: Fraction) -> Any:
    """Integers as JSON ints, other rationals as "p/q" strings."""
    if x.denominator == 1:
        return int(x)
    return str(x)


def _render_csv(header: list[str], rows: list[list[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _render_text(title: str, header: list[str], rows: list[list[Any]]) -> str:
    cells = [header] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = [f"# {title}"]
    for r, row in enumerate(cells):
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
        if r == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _measures_table(n: int) -> tuple[str, list[str], list[list[Any]], dict]:
    title = (
        f"splitting measure coefficients for n={n} "
        "(rows in reverse-lex partition order)"
    )
    width = n if n >= 2 else 1
    header = ["partition", "class_size", "centralizer_order"] + [
        f"alpha_{k}" for k in range(width)
    ]
    rows: list[list[Any]] = []
    json_rows: list[dict] = []
    for lam in partitions(n):
        cls = class_data(lam)
        alpha = splitting_coefficients(lam).alpha
        rows.append(
            [format_partition(lam), cls.class_size, cls.centralizer_order]
            + [_rat_str(a) for a in alpha]
        )
        json_rows.append(
            {
                "partition": format_partition(lam),
                "class_size": cls.class_size,
                "centralizer_order": cls.centralizer_order,
                "alpha": [_rat_str(a) for a in alpha],
            }
        )
    payload = {
        "table": "measures",
        "n": n,
        "order": "reverse-lex",
        "rows": json_rows,
    }
    return title, header, rows, payload


def _triangle_table(
    name: str, value: Callable[[int, int], int], max_n: int
) -> tuple[str, list[str], list[list[Any]], dict]:
    what = "cohomology dimensions" if name == "betti" else "graded piece dimensions"
    title = f"{what} for n=1..{max_n}, columns k=0..n-1"
    header = ["n"] + [f"k={k}" for k in range(max_n)]
    rows: list[list[Any]] = []
    json_rows: list[dict] = []
    for n in range(1, max_n + 1):
        values = [value(n, k) for k in range(n)]
        rows.append([n] + values + [""] * (max_n - n))
        json_rows.append({"n": n, "values": values})
    payload = {"table": name, "max_n": max_n, "rows": json_rows}
    return title, header, rows, payload


def _decomp_cell(dec: IrrepDecomposition) -> str:
    return str(dec)


def _decomp_terms_json(dec: IrrepDecomposition) -> list[dict]:
    return [
        {"partition": format_partition(mu), "multiplicity": m}
        for mu, m in dec.terms
    ]


def _h1_decomp_table(max_n: int) -> tuple[str, list[str], list[list[Any]], dict]:
    title = (
        f"irreducible decompositions of the k=1 characters for n=2..{max_n} "
        "(labels in reverse-lex order)"
    )
    header = ["n", "dim_h1", "h1", "dim_a1", "a1"]
    rows: list[list[Any]] = []
    json_rows: list[dict] = []
    for n in range(2, max_n + 1):
        dh = decompose(braid_character(n, 1))
        da = decompose(a_character(n, 1))
        rows.append(
            [n, dh.dimension, _decomp_cell(dh), da.dimension, _decomp_cell(da)]
        )
        json_rows.append(
            {
                "n": n,
                "h1": {
                    "dimension": dh.dimension,
                    "terms": _decomp_terms_json(dh),
                },
                "a1": {
                    "dimension": da.dimension,
                    "terms": _decomp_terms_json(da),
                },
            }
        )
    payload = {"table": "h1-decomp", "max_n": max_n, "rows": json_rows}
    return title, header, rows, payload


def _a2_decomp_table(max_n: int) -> tuple[str, list[str], list[list[Any]], dict]:
    title = (
        f"irreducible decompositions of the k=2 graded pieces for n=3..{max_n} "
        "(labels in reverse-lex order)"
    )
    header = ["n", "dim_a2", "a2"]
    rows: list[list[Any]] = []
    json_rows: list[dict] = []
    for n in range(3, max_n + 1):
        da = decompose(a_character(n, 2))
        rows.append([n, da.dimension, _decomp_cell(da)])
        json_rows.append(
            {
                "n": n,
                "dimension": da.dimension,
                "terms": _decomp_terms_json(da),
            }
        )
    payload = {"table": "a2-decomp", "max_n": max_n, "rows": json_rows}
    return title, header, rows, payload


def emit_table(name: str, n: int | None = None, fmt: str = "text") -> str:
    """Render one of the five reference tables.

    ``n`` selects the single row set for ``measures`` (default 4) and the
    largest row for the other tables (defaults: 9).  Formats: ``text``
    (aligned columns), ``csv``, ``json``.

    >>> print(emit_table("betti", n=3, fmt="csv"), end="")
    n,k=0,k=1,k=2
    1,1,,
    2,1,1,
    3,1,3,2
    """
    if name not in TABLE_NAMES:
        raise ValueError(f"unknown table {name!r}; expected one of {TABLE_NAMES}")
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    limit = TABLE_LIMITS[name]
    if n is None:
        n = 4 if name == "measures" else min(limit, 9)
    lo = 1 if name != "measures" else 1
    if not lo <= n <= limit:
        raise ValueError(f"table {name!r} supports n between {lo} and {limit}, got {n}")

    if name == "measures":
        title, header, rows, payload = _measures_table(n)
    elif name == "betti":
        title, header, rows, payload = _triangle_table(
            "betti", lambda m, k: braid_character(m, k)((1,) * m), n
        )
    elif name == "a-dims":
        title, header, rows, payload = _triangle_table(
            "a-dims", lambda m, k: a_character(m, k)((1,) * m), n
        )
    elif name == "h1-decomp":
        if n < 2:
            raise ValueError("h1-decomp needs n >= 2")
        title, header, rows, payload = _h1_decomp_table(n)
    else:
        if n < 3:
            raise ValueError("a2-decomp needs n >= 3")
        title, header, rows, payload = _a2_decomp_table(n)

    if fmt == "text":
        return _render_text(title, header, rows)
    if fmt == "csv":
        return _render_csv(header, rows)
    return json.dumps(payload, indent=2) + "\n"
