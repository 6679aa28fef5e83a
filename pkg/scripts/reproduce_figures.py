"""Write DOT/JSON renderings of the structure figures and the code tree.

    python scripts/reproduce_figures.py out/
    dot -Kneato -n -Tpng out/tri4_paper.dot -o tri4.png
"""

import argparse
from pathlib import Path

from tricolor import emit
from tricolor.coloring import paper_fixture_coloring, periodic_coloring
from tricolor.prefixcode import build_tree
from tricolor.structure import AdjacencyMode, build_structure


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("outdir", type=Path)
    args = ap.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)

    s4 = build_structure(4)
    (args.outdir / "tri4_paper.dot").write_text(
        emit.structure_dot(s4, AdjacencyMode.PATH, paper_fixture_coloring(4)))
    for n in (3, 4, 6, 10):
        s = build_structure(n)
        c = periodic_coloring(s)
        (args.outdir / f"tri{n}_periodic.dot").write_text(emit.structure_dot(s, coloring=c))
        (args.outdir / f"tri{n}_periodic.json").write_text(
            emit.dumps(emit.document(s, AdjacencyMode.PATH, c, "periodic")))
    (args.outdir / "code_tree.dot").write_text(emit.tree_dot(build_tree(["0", "10", "110", "111"])))
    for f in sorted(args.outdir.iterdir()):
        print(f)


if __name__ == "__main__":
    main()
