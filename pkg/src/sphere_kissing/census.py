"""Systole census of the capped cylinder: classes up to free homotopy and their count."""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

from .exact import ExactLength
from .geodesics import (
    GeodesicClass,
    Kind,
    MeridianClass,
    classify,
    enumerate_short_classes,
    homotopic,
)
from .lattice import Chimney, squared_distance_on_cylinder
from .surface import SphereModel


@dataclass(frozen=True)
class CensusEntry:
    representative: GeodesicClass
    members: tuple[GeodesicClass, ...]

    @property
    def merged_meridians(self) -> tuple[int, ...]:
        return tuple(sorted(g.curve.gap for g in self.members
                            if g is not self.representative and isinstance(g.curve, MeridianClass)))


@dataclass(frozen=True)
class Census:
    n: int
    entries: tuple[CensusEntry, ...]
    systole_length: ExactLength
    belts_adjacent: int
    meridians_remaining: int
    merged: int

    @property
    def classes(self) -> tuple[GeodesicClass, ...]:
        return tuple(e.representative for e in self.entries)

    @property
    def total(self) -> int:
        return len(self.entries)

    kissing = total

    @property
    def counts(self) -> dict:
        return {
            "belts_adjacent": self.belts_adjacent,
            "meridians_remaining": self.meridians_remaining,
            "merged": self.merged,
            "total": self.total,
        }

    def to_dict(self, rows: int = 3) -> dict:
        classes = []
        for e in self.entries:
            d = e.representative.to_dict(rows)
            if e.merged_meridians:
                d["merged_meridians"] = list(e.merged_meridians)
            classes.append(d)
        return {
            "n": self.n,
            "kissing": self.total,
            "systole_length": str(self.systole_length),
            "counts": self.counts,
            "classes": classes,
        }

    def to_json(self, rows: int = 3) -> str:
        return json.dumps(self.to_dict(rows), indent=2, sort_keys=True) + "\n"


def _rank(g: GeodesicClass) -> tuple:
    # belts first so merged groups keep the belt certificate
    return (0 if g.kind is Kind.BELT else 1, g.partition, str(g.curve))


def group_by_homotopy(model: SphereModel, classes: Sequence[GeodesicClass]) -> list[list[GeodesicClass]]:
    """Union-find over pairs certified homotopic; only equal splits are candidates."""
    by_split: dict[tuple[int, ...], list[GeodesicClass]] = defaultdict(list)
    for g in classes:
        by_split[g.partition].append(g)
    groups: list[list[GeodesicClass]] = []
    for split in sorted(by_split):
        bucket = sorted(by_split[split], key=_rank)
        parent = list(range(len(bucket)))

        def find(i: int) -> int:
            while parent[i] != i:
                parent[i] = parent[parent[i]]
                i = parent[i]
            return i

        for i in range(len(bucket)):
            for j in range(i + 1, len(bucket)):
                if find(i) != find(j) and homotopic(model, bucket[i], bucket[j]):
                    parent[find(j)] = find(i)
        comps: dict[int, list[GeodesicClass]] = defaultdict(list)
        for i, g in enumerate(bucket):
            comps[find(i)].append(g)
        groups.extend(sorted(comps.values(), key=lambda c: _rank(c[0])))
    return groups


def census(model: SphereModel) -> Census:
    if not model.params.is_default:
        raise ValueError("the census is defined for the default three-row model with r = (sqrt(28) - 4)/(2 pi)")
    m = model.m
    raw = enumerate_short_classes(model, m)
    groups = group_by_homotopy(model, raw)
    entries = []
    for grp in groups:
        grp = sorted(grp, key=_rank)
        entries.append(CensusEntry(grp[0], tuple(grp)))
    entries.sort(key=lambda e: (0 if e.representative.kind is Kind.BELT else 1, e.representative.partition))
    for e in entries:
        assert e.representative.shortest_length == m
    meridians_remaining = sum(1 for e in entries if e.representative.kind is Kind.MERIDIAN)
    return Census(
        n=model.n,
        entries=tuple(entries),
        systole_length=m,
        belts_adjacent=adjacency_edge_count(model),
        meridians_remaining=meridians_remaining,
        merged=len(raw) - len(entries),
    )


def adjacency_edge_count(model: SphereModel) -> int:
    """Pairs of chimneys in the band at distance two.

    Chimneys ``d`` indices apart are at least ``2*d*h`` apart along the axis,
    so only ``d`` with ``(2*d*h)**2 <= 4`` need checking.
    """
    rows, n = model.rows, model.n
    w2 = model.m * model.m
    max_offset = 1
    while 12 * (max_offset + 1) ** 2 <= 4 * w2.rational_part():
        max_offset += 1
    count = 0
    for i in range(1, n + 1):
        for d in range(1, max_offset + 1):
            if i + d <= n and squared_distance_on_cylinder(Chimney(i), Chimney(i + d), rows) == 4:
                count += 1
    return count


def meridian_exclusion_report(model: SphereModel, result: Census | None = None) -> dict:
    """Fate of each of the n+1 gap meridians."""
    result = result if result is not None else census(model)
    merged_gaps = {gap for e in result.entries for gap in e.merged_meridians}
    counted_gaps = {e.representative.curve.gap for e in result.entries
                    if e.representative.kind is Kind.MERIDIAN}
    fate = {}
    for j in range(model.n + 1):
        g = classify(model, MeridianClass(j))
        if g.kind is Kind.CONTRACTIBLE:
            fate[j] = "contractible"
        elif g.kind is Kind.INESSENTIAL:
            fate[j] = "inessential"
        elif j in merged_gaps:
            fate[j] = "merged"
        elif j in counted_gaps:
            fate[j] = "counted"
        else:
            fate[j] = "homotopic-to-counted"
    tally = {k: sum(1 for v in fate.values() if v == k)
             for k in ("contractible", "inessential", "merged", "counted")}
    return {
        "n": model.n,
        **tally,
        "gaps": fate,
        "asserted": model.n >= 5,
    }
