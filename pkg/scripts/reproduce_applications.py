"""Recompute both bundled applications and write their figures.

    python scripts/reproduce_applications.py [--out-dir figures]
"""
import argparse
from pathlib import Path

from fuzzybridge import assess_group, report
from fuzzybridge.charts import render_bar_chart, render_centroid_plot
from fuzzybridge.ingestion import parse_results
from fuzzybridge.reporting import to_text

DATA = Path(__file__).resolve().parents[1] / "src" / "fuzzybridge" / "data"


def load(name):
    groups = {}
    for row in parse_results((DATA / name).read_bytes(), name):
        groups.setdefault(row.group, []).append(row.percentage)
    return [assess_group(g, s) for g, s in groups.items()]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out-dir", type=Path, default=Path("figures"))
    args = ap.parse_args()
    args.out_dir.mkdir(parents=True, exist_ok=True)

    for title, name in [("Patras clubs, single event", "patras.csv"),
                        ("Men and women, tournament totals", "menwomen.csv")]:
        groups = load(name)
        print(f"== {title} ({name})")
        print(to_text(report(groups)))
        for g in groups:
            fractions = ", ".join(str(y) for y in g.membership.y)
            print(f"  {g.group_id}: membership (F..A) = ({fractions}); "
                  f"x_c = {g.centroid.x_c}, y_c = {g.centroid.y_c}")
            (args.out_dir / f"bars_{g.group_id}.svg").write_text(
                render_bar_chart(g.membership, title=f"Membership: {g.group_id}"))
        stem = Path(name).stem
        (args.out_dir / f"centroids_{stem}.svg").write_text(
            render_centroid_plot([(g.group_id, g.centroid) for g in groups]))
        print()
    print(f"figures written to {args.out_dir}/")


if __name__ == "__main__":
    main()
