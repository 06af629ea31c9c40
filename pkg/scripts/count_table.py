"""Print the characteristic numbers of cubic surfaces for every n_p.

Usage: python3 scripts/count_table.py [--n 3] [--csv out.csv]
"""

import argparse
import csv
import sys
import time

from cubicchar.centers import dim_V0
from cubicchar.pipeline import CountQuery, characteristic_number


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--csv", help="also write the rows to this file")
    args = ap.parse_args(argv)

    start = time.perf_counter()
    rows = []
    for k in range(dim_V0(args.n) + 1):
        r = characteristic_number(CountQuery(args.n, k))
        corr = dict(r.corrections)
        rows.append([k, r.query.n_l, r.bezout] + [corr.get(i, "") for i in range(5)]
                    + [r.characteristic_number if r.characteristic_number is not None else "unavailable"])
    header = ["n_p", "n_l", "bezout", "B0", "B1", "B2", "B3", "B4", "count"]
    widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
    for row in [header] + rows:
        print("  ".join(str(x).rjust(w) for x, w in zip(row, widths)))
    print(f"# {time.perf_counter() - start:.2f}s", file=sys.stderr)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            csv.writer(fh).writerows([header] + rows)


if __name__ == "__main__":
    main()
