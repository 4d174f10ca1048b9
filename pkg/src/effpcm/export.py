"""On-disk formats: matrix/weights JSON, the geometry document, and OBJ meshes.

The matrix JSON document {"n": ..., "entries": [[str, ...], ...]} is the
single canonical representation consumed by every CLI command.  The geometry
document carries both exact rational vertex strings and their embedded float
coordinates, so re-parsing loses nothing.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .errors import BadNumeralError, NonSquareError
from .geometry import (
    SIMPLEX_CORNERS,
    EfficientSet,
    cutting_planes,
    efficient_set,
    embed,
    plane_clip_polygon,
)
from .trees import paths_of_cycle
from .pcm import (
    Pcm,
    WeightVector,
    format_rational,
    parse_pcm,
    parse_rational,
    weight_vector,
)

SCHEMA_VERSION = "1"


def matrix_document(pcm: Pcm) -> dict:
    return {"n": pcm.n, "entries": pcm.rows_as_strings()}


def pcm_from_document(doc) -> Pcm:
    if not isinstance(doc, dict) or "entries" not in doc:
        raise BadNumeralError("BadNumeral: expected a JSON object with an 'entries' grid")
    pcm = parse_pcm(doc["entries"])
    if "n" in doc and doc["n"] != pcm.n:
        raise NonSquareError(f"NonSquare: declared n={doc['n']} but grid is {pcm.n}x{pcm.n}")
    return pcm


def load_matrix(path: str | Path) -> Pcm:
    return pcm_from_document(_load_json(path))


def weights_from_document(doc) -> WeightVector:
    if not isinstance(doc, dict) or "w" not in doc or not isinstance(doc["w"], list):
        raise BadNumeralError("BadNumeral: expected a JSON object with a 'w' list")
    values = []
    for cell in doc["w"]:
        if isinstance(cell, str):
            values.append(parse_rational(cell))
        elif isinstance(cell, bool):
            raise BadNumeralError(f"BadNumeral: {cell!r} is not a weight")
        elif isinstance(cell, (int, float)):
            # JSON numbers are the float variant; only strings are exact
            values.append(float(cell))
        else:
            raise BadNumeralError(f"BadNumeral: {cell!r} is not a weight")
    return weight_vector(values)


def load_weights(path: str | Path) -> WeightVector:
    return weights_from_document(_load_json(path))


def _load_json(path: str | Path):
    text = Path(path).read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise BadNumeralError(f"BadNumeral: {path} is not valid JSON ({exc.msg})") from exc


def _coincidences_dict(effset: EfficientSet) -> dict:
    report = effset.coincidences
    return {
        "shared_vertices": [
            {"cycle_a": list(ca), "vertex_a": ia, "cycle_b": list(cb), "vertex_b": ib}
            for (ca, ia, cb, ib) in report.shared_vertices
        ],
        "collinear_edge_pairs": [
            {"cycle_a": list(ca), "edge_a": list(ea), "cycle_b": list(cb), "edge_b": list(eb)}
            for ((ca, ea), (cb, eb)) in report.collinear_edge_pairs
        ],
        "coplanar_face_pairs": [
            {"cycle_a": list(ca), "face_a": list(fa), "cycle_b": list(cb), "face_b": list(fb)}
            for ((ca, fa), (cb, fb)) in report.coplanar_face_pairs
        ],
        "point_tetrahedra": [list(c) for c in report.point_tetrahedra],
    }


def geometry_document(pcm: Pcm) -> dict:
    """The full exportable geometry of a 4x4 matrix."""
    effset = efficient_set(pcm)
    tetrahedra = []
    for tet in effset.tetrahedra:
        tetrahedra.append({
            "cycle": list(tet.cycle),
            "orientation": {
                "direction": tet.orientation.direction.value,
                "directed": list(tet.orientation.directed),
            },
            "path_trees": [
                [list(edge) for edge in path.tree().sorted_edges()]
                for path in paths_of_cycle(tet.cycle)
            ],
            "vertices_exact": [v.as_strings() for v in tet.vertices],
            "vertices_embedded": [list(embed(v).as_tuple()) for v in tet.vertices],
            "rank": tet.degenerate_rank,
        })
    planes = []
    for plane in cutting_planes(pcm):
        polygon = plane_clip_polygon(plane)
        planes.append({
            "pair": list(plane.pair),
            "value": format_rational(plane.value),
            "clip_polygon": [list(embed(point).as_tuple()) for point in polygon],
        })
    return {
        "schema_version": SCHEMA_VERSION,
        "matrix": matrix_document(pcm),
        "classification": effset.classification.tag.value,
        "tetrahedra": tetrahedra,
        "coincidences": _coincidences_dict(effset),
        "planes": planes,
        "simplex_corners": [list(corner) for corner in SIMPLEX_CORNERS],
    }


def parse_exact_vertices(doc: dict) -> list[list[tuple[Fraction, ...]]]:
    """Recover the exact tetrahedron vertices from a geometry document."""
    out = []
    for tet in doc["tetrahedra"]:
        out.append([
            tuple(parse_rational(s) for s in vertex)
            for vertex in tet["vertices_exact"]
        ])
    return out


def _embed_exact(components: Sequence[Fraction]) -> tuple[Fraction, Fraction, Fraction]:
    w1, w2, w3, _ = components
    return (w1 + w2, w1 + w3, w2 + w3)


def _oriented_faces(points: list[tuple[Fraction, Fraction, Fraction]]) -> list[tuple[int, int, int]]:
    """Outward-oriented faces of a nondegenerate tetrahedron (0-based indices).

    Orientation is decided exactly: the face normal (cross product) must
    point away from the opposite vertex.
    """
    faces = []
    for opposite in range(4):
        a, b, c = [k for k in range(4) if k != opposite]
        pa, pb, pc, pd = points[a], points[b], points[c], points[opposite]
        u = tuple(pb[i] - pa[i] for i in range(3))
        v = tuple(pc[i] - pa[i] for i in range(3))
        normal = (
            u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0],
        )
        towards = tuple(pd[i] - pa[i] for i in range(3))
        dot = sum(n * t for n, t in zip(normal, towards))
        faces.append((a, b, c) if dot < 0 else (a, c, b))
    return faces


def obj_mesh(pcm: Pcm) -> str:
    """Wavefront OBJ mesh of the efficient set's nondegenerate tetrahedra.

    Degenerate tetrahedra produce comment lines only.
    """
    effset = efficient_set(pcm)
    lines = ["# effpcm efficient-set mesh", f"# classification: {effset.classification.tag.value}"]
    vertex_count = 0
    for tet in effset.tetrahedra:
        lines.append(f"# tetrahedron cycle={','.join(map(str, tet.cycle))} rank={tet.degenerate_rank}")
        if tet.degenerate_rank < 3:
            seen = []
            for v in tet.vertices:
                point = embed(v).as_tuple()
                if point not in seen:
                    seen.append(point)
            for point in seen:
                lines.append(f"# point {point[0]!r} {point[1]!r} {point[2]!r}")
            continue
        exact_points = [_embed_exact(v.components) for v in tet.vertices]
        for point in exact_points:
            lines.append("v " + " ".join(repr(float(c)) for c in point))
        for (a, b, c) in _oriented_faces(exact_points):
            lines.append(f"f {vertex_count + a + 1} {vertex_count + b + 1} {vertex_count + c + 1}")
        vertex_count += 4
    return "\n".join(lines) + "\n"


def dump_json(doc: dict, path: str | Path) -> None:
    Path(path).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
