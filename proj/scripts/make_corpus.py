#!/usr/bin/env python3
"""Regenerate the bundled Gauss-code corpora under data/.

Requires the `snappy` package (which ships the Rolfsen table and the
Hoste-Thistlethwaite census). Output lines are `name<TAB>gauss_code`.

    python3 scripts/make_corpus.py            # writes data/*.tsv
"""
import argparse
import re
import pathlib
import warnings

warnings.filterwarnings("ignore")

import snappy  # noqa: E402
import spherogram  # noqa: E402


def gauss_code(link):
    """Signed-integer Gauss code of a one-component spherogram Link."""
    if len(link.link_components) != 1:
        raise ValueError("not a knot")
    labels = {}
    out = []
    for cep in link.link_components[0]:
        c = cep.crossing
        if c not in labels:
            labels[c] = len(labels) + 1
        label = labels[c]
        # spherogram numbers the under-strand entries 0 and 2
        out.append(-label if cep.strand_index % 2 == 0 else label)
    return ",".join(str(v) for v in out)


def rolfsen(max_crossings):
    rows = [("0_1", "")]
    for n in range(3, max_crossings + 1):
        i = 1
        while True:
            name = f"{n}_{i}"
            try:
                link = spherogram.Link(name)
            except Exception:
                break
            rows.append((name, gauss_code(link)))
            i += 1
    return rows


def ht_sample(min_crossings, max_crossings, count):
    """Evenly strided sample, the same number of diagrams per crossing number."""
    census = snappy.HTLinkExteriors(knots_vs_links="knots")

    def crossings_at(i):
        return int(re.match(r"K(\d+)", census[i].name()).group(1))

    def first_index(n):
        lo, hi = 0, len(census)
        while lo < hi:
            mid = (lo + hi) // 2
            if crossings_at(mid) < n:
                lo = mid + 1
            else:
                hi = mid
        return lo

    levels = list(range(min_crossings, max_crossings + 1))
    rows = []
    for j, n in enumerate(levels):
        lo, hi = first_index(n), first_index(n + 1)
        want = count // len(levels) + (1 if j < count % len(levels) else 0)
        stride = max(1, (hi - lo) // want)
        for i in range(lo, hi, stride)[:want]:
            m = census[i]
            rows.append((m.name(), gauss_code(m.link())))
    return rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data"))
    ap.add_argument("--sample", type=int, default=1000)
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    with open(out / "rolfsen_le9.tsv", "w") as f:
        f.write("# Rolfsen table diagrams, 0 to 9 crossings\n")
        for name, code in rolfsen(9):
            f.write(f"{name}\t{code}\n")

    with open(out / "ht_12_14_sample.tsv", "w") as f:
        f.write("# Hoste-Thistlethwaite census diagrams, 12 to 14 crossings, evenly strided\n")
        for name, code in ht_sample(12, 14, args.sample):
            f.write(f"{name}\t{code}\n")


if __name__ == "__main__":
    main()
