"""Render the built-in reference tables to stdout or to files.

Examples:
    python3 scripts/emit_tables.py
    python3 scripts/emit_tables.py measures --n 5 --format csv
    python3 scripts/emit_tables.py --all --format json --out-dir build/tables
"""

import argparse
import sys
from pathlib import Path

from braidchar.tables import FORMATS, TABLE_NAMES, emit_table


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("names", nargs="*", metavar="name",
                        help=f"tables to emit, from: {', '.join(TABLE_NAMES)}"
                        " (default: all)")
    parser.add_argument("--all", action="store_true", help="emit every table")
    parser.add_argument("--n", type=int, default=None,
                        help="row count / degree bound passed to the emitter")
    parser.add_argument("--format", choices=FORMATS, default="text")
    parser.add_argument("--out-dir", type=Path, default=None,
                        help="write one file per table instead of printing")
    args = parser.parse_args(argv)

    names = list(TABLE_NAMES) if (args.all or not args.names) else args.names
    unknown = [name for name in names if name not in TABLE_NAMES]
    if unknown:
        parser.error(f"unknown table(s): {', '.join(unknown)}")
    suffix = {"text": "txt", "csv": "csv", "json": "json"}[args.format]
    for name in names:
        text = emit_table(name, args.n, args.format)
        if args.out_dir is None:
            sys.stdout.write(text)
            sys.stdout.write("\n")
        else:
            args.out_dir.mkdir(parents=True, exist_ok=True)
            path = args.out_dir / f"{name}.{suffix}"
            path.write_text(text)
            print(f"wrote {path}")


if __name__ == "__main__":
    main()
