"""Fan analysis over a fixed root datum, producing a JSON-ready report."""

from __future__ import annotations

from .charts import identity_point, limit_point, wonderful_coords
from .cones import (
    Fan,
    InvalidFan,
    cone_index,
    cone_is_smooth,
    face_witness,
    fan_validate,
    interior_cocharacter,
    is_proper,
    is_smooth,
    supported_in_chamber,
)
from .rootdata import RootDatum
from .serialize import rational_str

__all__ = ["analyze", "report_status"]


def _cone_entry(cone, fan, index_of, chamber_ok, rd):
    entry = {
        "rays": [list(r) for r in cone.rays],
        "index": cone_index(cone),
        "smooth": cone_is_smooth(cone),
        "hilbert_basis": [list(h) for h in cone.hilbert_basis],
        "faces": sorted(index_of[f] for f in cone.faces()),
        "gluing": [
            {
                "face_rays": [list(r) for r in f.rays],
                "witness": list(face_witness(f, cone)),
            }
            for f in cone.faces()
        ],
        "interior_cocharacter": (
            None if cone.is_zero() else list(interior_cocharacter(cone))
        ),
    }
    if chamber_ok:
        if cone.is_zero():
            base = identity_point(cone)
        else:
            base = limit_point(interior_cocharacter(cone), cone)
        entry["wonderful_coords"] = [
            rational_str(v) for v in wonderful_coords(base, rd)
        ]
    else:
        entry["wonderful_coords"] = None
    return entry


def analyze(rd: RootDatum, fan: Fan) -> dict:
    """Classification report for one fan; always returns a full schema."""
    report = {
        "root_datum": {
            "rank": rd.rank,
            "cartan_matrix": [[int(rd.cartan[i, j]) for j in range(rd.rank)] for i in range(rd.rank)],
        },
        "fan": {
            "dim": fan.dim,
            "cones": [{"rays": [list(r) for r in c.rays]} for c in fan.cones],
        },
        "valid": None,
        "violations": [],
        "chamber_supported": None,
        "cones": None,
        "smooth": None,
        "proper": None,
        "chart_count": None,
        "adjacency": None,
    }
    violations = fan_validate(fan)
    report["valid"] = not violations
    report["violations"] = violations
    if violations:
        return report

    chamber_ok = supported_in_chamber(fan, rd)
    report["chamber_supported"] = chamber_ok
    index_of = {c: k for k, c in enumerate(fan.cones)}
    report["cones"] = [
        _cone_entry(c, fan, index_of, chamber_ok, rd) for c in fan.cones
    ]
    report["smooth"] = is_smooth(fan)
    report["chart_count"] = len(fan.cones)
    adjacency = []
    for c in fan.cones:
        for f in c.faces():
            if f != c:
                adjacency.append([index_of[f], index_of[c]])
    report["adjacency"] = sorted(adjacency)
    if chamber_ok:
        try:
            report["proper"] = is_proper(fan, rd.weyl)
        except InvalidFan:
            report["proper"] = False
    else:
        report["proper"] = None
    return report


def report_status(report: dict) -> str:
    """Map a report to "ok", "invalid_fan" or "chamber_violation"."""
    if not report["valid"]:
        return "invalid_fan"
    if not report["chamber_supported"]:
        return "chamber_violation"
    return "ok"
