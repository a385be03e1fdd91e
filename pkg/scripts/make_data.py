"""Regenerate the shipped example inputs under data/."""
import json
from fractions import Fraction
from pathlib import Path

from gsp4adj import lattice, modforms

BOUND = 100
ROOT = Path(__file__).resolve().parent.parent / "data"


def dump(name, payload):
    path = ROOT / name
    path.write_text(json.dumps(payload, indent=1, sort_keys=True) + "\n", encoding="utf-8")
    print("wrote", path)


def main():
    ROOT.mkdir(exist_ok=True)
    dump("delta.json", modforms.cusp_eigensystems(12, BOUND).to_eigensystem().to_json())
    dump("e12.json", modforms.eisenstein_eigensystem(12, BOUND).to_eigensystem().to_json())
    half = Fraction(1, 2)
    form = lattice.BilinearForm([[1, 0], [0, 1]])
    e = lattice.orthogonal_idempotent(form, [[1, 1]])
    assert e == [[half, half], [half, half]]
    dump("lattice_example.json", {
        "prime": 5,
        "basis": [["1", "0"], ["0", "1"]],
        "gram": [["1", "0"], ["0", "1"]],
        "alternating": False,
        "splitter": lattice.matrix_to_json(e),
    })


if __name__ == "__main__":
    main()
