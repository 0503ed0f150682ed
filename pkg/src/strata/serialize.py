"""File formats: complexes, covers, point clouds, stratification reports."""

from __future__ import annotations

import csv
import json
from pathlib import Path

from .geometry import Cover, MonomialSet, Nerve, PointCloud
from .sheaves import DeltaMap, SheafOracle
from .spaces import FiniteSpace, MalformedInputError, build_from_maximal_simplices
from .stratify import Stratification


def load_complex(path: str | Path) -> FiniteSpace:
    """Read a complex from JSON {"maximal_simplices": [...]} or plain text
    (one maximal simplex per line, whitespace-separated vertex ids)."""
    text = Path(path).read_text()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        payload = json.loads(text)
        try:
            simplices = payload["maximal_simplices"]
        except (TypeError, KeyError):
            raise MalformedInputError(
                f"{path}: expected a JSON object with 'maximal_simplices'") from None
    else:
        simplices = []
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                simplices.append([int(tok) for tok in line.split()])
            except ValueError:
                raise MalformedInputError(f"{path}: bad vertex id in {line!r}") from None
    return build_from_maximal_simplices(simplices)


def load_points_csv(path: str | Path, dims: int | None = None) -> tuple[PointCloud, list[list[float]]]:
    """Point cloud from CSV, one point per row.

    Returns the cloud restricted to the first ``dims`` columns plus the full
    rows (so a later column can serve as a function value).
    """
    rows: list[list[float]] = []
    with open(path, newline="") as fh:
        for rec in csv.reader(fh):
            rec = [tok for tok in rec if tok.strip()]
            if not rec:
                continue
            try:
                rows.append([float(tok) for tok in rec])
            except ValueError:
                raise MalformedInputError(f"{path}: non-numeric row {rec!r}") from None
    if not rows:
        raise MalformedInputError(f"{path}: no points")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise MalformedInputError(f"{path}: ragged rows")
    take = width if dims is None else dims
    if take < 1 or take > width:
        raise MalformedInputError(f"{path}: asked for {take} coordinate columns "
                                  f"but rows have {width}")
    cloud = PointCloud.of([r[:take] for r in rows])
    return cloud, rows


def load_cover(path: str | Path, n_points: int) -> Cover:
    payload = json.loads(Path(path).read_text())
    try:
        sets = payload["sets"]
    except (TypeError, KeyError):
        raise MalformedInputError(f"{path}: expected a JSON object with 'sets'") from None
    return Cover.of(sets, n_points=n_points)


def load_monomials(path: str | Path, ambient_dim: int) -> MonomialSet:
    payload = json.loads(Path(path).read_text())
    exps = tuple(tuple(int(v) for v in e) for e in payload)
    return MonomialSet(exps, ambient_dim)


def _piece_sort_key(piece_labels: tuple) -> tuple:
    return tuple(sorted(piece_labels))


def _label_json(label):
    return list(label) if isinstance(label, tuple) else label


def stratification_report(strat: Stratification, dm: DeltaMap,
                          nerve: Nerve | None = None) -> dict:
    """JSON payload for a stratification and its labeled Hasse diagram."""
    space = strat.space
    strata = []
    for i in range(strat.top_dim, -1, -1):
        pieces = []
        for dim_i, mask in strat.pieces:
            if dim_i != i:
                continue
            labels = sorted(space.labels_of(mask))
            pieces.append([_label_json(lab) for lab in labels])
        pieces.sort()
        strata.append({"dim": i, "pieces": pieces})
    edges = []
    for (i, j) in space.covering_pairs:
        edges.append([_label_json(space.elements[i]), _label_json(space.elements[j]),
                      bool(dm.labels[(i, j)])])
    edges.sort(key=lambda e: (e[0], e[1]))
    payload = {"filtration_dim": strat.top_dim, "strata": strata,
               "delta_edges": edges}
    if nerve is not None:
        payload["cover_sets"] = list(nerve.set_names)
    return payload


def load_stratification(space: FiniteSpace, payload: dict
                        ) -> tuple[Stratification, DeltaMap]:
    """Rebuild a stratification and delta map from a report payload."""
    strata_by_dim: dict[int, list] = {}
    for entry in payload["strata"]:
        labels = [tuple(lab) if isinstance(lab, list) else lab
                  for piece in entry["pieces"] for lab in piece]
        strata_by_dim[entry["dim"]] = labels
    strat = Stratification.from_strata(space, strata_by_dim)
    labels = {}
    for low, high, value in payload["delta_edges"]:
        low = tuple(low) if isinstance(low, list) else low
        high = tuple(high) if isinstance(high, list) else high
        labels[(space.index(low), space.index(high))] = bool(value)
    return strat, DeltaMap(space, labels)


def dump_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def cover_report(cover: Cover) -> dict:
    return {"sets": {name: sorted(cover.sets[name]) for name in cover.names}}


def nerve_report(nerve: Nerve) -> dict:
    simplices = sorted(nerve.points_for, key=lambda s: (len(s), s))
    return {
        "cover_sets": list(nerve.set_names),
        "simplices": [list(s) for s in simplices],
    }
