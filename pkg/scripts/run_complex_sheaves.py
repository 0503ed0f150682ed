#!/usr/bin/env python3
"""Stratify the bundled example complexes with each sheaf and dump reports.

Writes JSON stratification reports and DOT Hasse diagrams to out/.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from strata.linalg import FieldSpec
from strata.serialize import dump_json, stratification_report
from strata.shapes import awning_space, pinched_torus_complex, triangle_with_strap_space
from strata.sheaves import (ConstantSheaf, LocalHomologySheaf, MaximalElementSheaf,
                            covering_delta_map, hasse_dot)
from strata.stratify import coarsest_stratification, minimal_homogeneous_stratification

OUT = Path(__file__).resolve().parents[1] / "out"


def run(name, space, sheaf, homogeneous=False):
    strat = (minimal_homogeneous_stratification(space, sheaf) if homogeneous
             else coarsest_stratification(space, sheaf))
    dm = covering_delta_map(space, sheaf)
    (OUT / f"{name}.json").write_text(dump_json(stratification_report(strat, dm)))
    (OUT / f"{name}.dot").write_text(hasse_dot(space, dm, sheaf))
    sizes = {i: len(strat.strata_labels()[i]) for i in range(strat.top_dim, -1, -1)}
    print(f"{name:34s} strata sizes {sizes}")


def main():
    OUT.mkdir(exist_ok=True)
    awning = awning_space()
    run("awning_local_homology", awning, LocalHomologySheaf(awning, FieldSpec(2)))
    run("awning_max_elements", awning, MaximalElementSheaf(awning))
    run("awning_constant", awning, ConstantSheaf(awning))

    strap = triangle_with_strap_space()
    run("strap_constant_homogeneous", strap, ConstantSheaf(strap), homogeneous=True)

    pt = pinched_torus_complex()
    run("pinched_torus_local_homology", pt["space"],
        LocalHomologySheaf(pt["space"], FieldSpec(2)))
    print("reports in", OUT)


if __name__ == "__main__":
    main()
