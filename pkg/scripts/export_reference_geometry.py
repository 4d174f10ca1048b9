#!/usr/bin/env python3
"""Export the efficient-set geometry of the six reference matrices.

Writes a geometry JSON document and an OBJ mesh per matrix into out/
(default; override with -o).  The six matrices cover one representative of
each perturbation class: a triple-perturbed base and the variants obtained
by overwriting one, two or three of its entries.
"""

import argparse
from fractions import Fraction
from pathlib import Path

from effpcm import pcm_from_upper
from effpcm.export import dump_json, geometry_document, obj_mesh

BASE = {
    (1, 2): Fraction(1),
    (1, 3): Fraction(5),
    (1, 4): Fraction(7),
    (2, 3): Fraction(2),
    (2, 4): Fraction(8),
    (3, 4): Fraction(1, 3),
}

VARIANTS = {
    "triple": {},
    "double-triad": {(1, 2): Fraction(5, 2)},
    "double-one-cycle": {(2, 4): Fraction(14, 5)},
    "double-two-cycles": {(2, 4): Fraction(14, 5), (3, 4): Fraction(14, 25)},
    "simple": {(1, 2): Fraction(5, 2), (2, 4): Fraction(14, 5)},
    "consistent": {(1, 2): Fraction(5, 2), (2, 4): Fraction(14, 5), (3, 4): Fraction(7, 5)},
}


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("-o", "--outdir", default="out", type=Path)
    args = parser.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)

    for name, overrides in VARIANTS.items():
        pcm = pcm_from_upper(4, {**BASE, **overrides})
        doc = geometry_document(pcm)
        json_path = args.outdir / f"{name}.geometry.json"
        obj_path = args.outdir / f"{name}.obj"
        dump_json(doc, json_path)
        obj_path.write_text(obj_mesh(pcm), encoding="utf-8")
        print(f"{name:18s} class={doc['classification']:18s} -> {json_path}, {obj_path}")


if __name__ == "__main__":
    main()
