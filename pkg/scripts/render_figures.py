"""Write the standard pictures of the even-slope tree into a directory.

    python scripts/render_figures.py figures/
"""
import sys
from pathlib import Path

from lenscap.render import render_svg

FIGURES = {
    "d2_gen3.svg": dict(generations=3, cap=4),
    "d2_gen3_farey.svg": dict(generations=3, cap=4, show_farey=True, farey_depth=6),
    "d2_path_8_3.svg": dict(generations=2, cap=3, highlight=(8, 3)),
    "d2_path_10_3.svg": dict(generations=3, cap=3, highlight=(10, 3), show_farey=True),
}


def main(out="figures"):
    out = Path(out)
    out.mkdir(parents=True, exist_ok=True)
    for name, opts in FIGURES.items():
        (out / name).write_text(render_svg(**opts), encoding="utf-8")
        print(out / name)


if __name__ == "__main__":
    main(*sys.argv[1:])
