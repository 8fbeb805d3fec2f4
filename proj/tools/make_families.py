#!/usr/bin/env python3
"""Writes the convergence-study fixture families under fixtures/families."""

import json
import pathlib

ROOT = pathlib.Path(__file__).resolve().parent.parent / "fixtures" / "families"


def write(path, doc):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(doc, indent=1) + "\n")


def uniform_family(p, steps=6):
    # Depth two with Omega_1 = Omega: every step is a global dyadic refinement.
    for k in range(steps):
        n = 4 * 2**k
        write(ROOT / f"uniform_p{p}" / f"step{k}.json", {
            "schema": "hbs-fixture/1",
            "name": f"uniform_p{p}_step{k}",
            "dimension": 1,
            "degrees": [p],
            "knots": [{"uniform": n}],
            "depth": 2,
            "refinement": "dyadic",
            "subdomains": [{"level": 0, "ranges": [{"lo": [0], "hi": [n]}]}],
        })


def corner_family(p=2, steps=5):
    # Fixed corner subdomains [0, 1/2]^2 and [0, 1/4]^2 on ever finer initial meshes.
    for k in range(steps):
        n = 4 * 2**k
        write(ROOT / f"corner_p{p}" / f"step{k}.json", {
            "schema": "hbs-fixture/1",
            "name": f"corner_p{p}_step{k}",
            "dimension": 2,
            "degrees": [p, p],
            "knots": [{"uniform": n}, {"uniform": n}],
            "depth": 3,
            "refinement": "dyadic",
            "subdomains": [
                {"level": 0, "boxes": [{"lo": [0, 0], "hi": [0.5, 0.5]}]},
                {"level": 1, "boxes": [{"lo": [0, 0], "hi": [0.25, 0.25]}]},
            ],
        })


if __name__ == "__main__":
    for p in (1, 2, 3):
        uniform_family(p)
    corner_family()
