"""Write the bundled example files under data/ from the catalog."""

from __future__ import annotations

import argparse
from pathlib import Path

from fgtool import catalog
from fgtool.formats import serialize_structure


def files() -> dict[str, object]:
    q, left, right = catalog.diamond_split()
    out = {
        "hexagon.qv": catalog.hexagon_quiver(),
        "diamond.qv": q,
        "left.qv": left,
        "right.qv": right,
        "square.qv": catalog.square_quiver(),
        "crown.po": catalog.crown_poset(),
        "hexagon.po": catalog.hexagon_poset(),
        "triangle.sc": catalog.triangle_boundary(),
        "torus7.sc": catalog.torus7(),
        "rp2.sc": catalog.projective_plane6(),
    }
    for prefix, parts in (("example2", catalog.example2()), ("example3", catalog.example3())):
        for name, quiver in parts.items():
            out[f"{prefix}_{name}.qv"] = quiver
    return out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=Path(__file__).resolve().parent.parent / "data")
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for name, value in sorted(files().items()):
        (args.out / name).write_text(serialize_structure(value), encoding="utf-8")
        print(f"wrote {args.out / name}")


if __name__ == "__main__":
    main()
