"""Brute-force sign-constancy scans over signature boxes and (s, t) grids."""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple, TypeVar, Union

import pandas as pd
from loguru import logger

from sahi_kernels.src.errors import InapplicableError
from sahi_kernels.src.kernel import KernelSpec, Space, c_lambda_reduced
from sahi_kernels.src.partitions import (
    Signature,
    format_signature,
    signatures_in_box,
)
from sahi_kernels.src.positivity.predicates import definite_predicate, st_to_sigma_tau

Real = Union[int, Fraction, float]
T = TypeVar("T")
R = TypeVar("R")

REGION_COLUMNS = ["s", "t", "predicate", "scan"]


class Verdict(str, Enum):
    POSITIVE = "positive-definite"
    NEGATIVE = "negative-definite"
    INDEFINITE = "indefinite"
    DEGENERATE = "degenerate"

    @property
    def is_definite(self) -> bool:
        return self in (Verdict.POSITIVE, Verdict.NEGATIVE)


@dataclass(frozen=True)
class ScanReport:
    """Outcome of a sign census of c_λ over signatures_in_box(n, −M, M)."""

    verdict: Verdict
    witness: Optional[Tuple[Signature, Signature]]
    box: Tuple[int, int]
    count: int
    census: Dict[str, int] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "verdict": self.verdict.value,
            "witness": [list(sig) for sig in self.witness] if self.witness else None,
            "box": list(self.box),
            "count": self.count,
            "census": dict(self.census),
        }

    @classmethod
    def from_dict(cls, payload: Dict[str, Any]) -> "ScanReport":
        witness = payload.get("witness")
        return cls(
            verdict=Verdict(payload["verdict"]),
            witness=(tuple(witness[0]), tuple(witness[1])) if witness else None,
            box=(int(payload["box"][0]), int(payload["box"][1])),
            count=int(payload["count"]),
            census={k: int(v) for k, v in payload.get("census", {}).items()},
        )


def ordered_map(func: Callable[[T], R], items: Sequence[T], threads: int = 1) -> List[R]:
    """map() over a thread pool; results keep input order."""

    if threads <= 1 or len(items) < 2:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(func, items))


def witness_order(signatures: Iterable[Signature]) -> List[Signature]:
    """Increasing radius max|λ_i|, then descending lexicographic order."""

    return sorted(signatures, key=lambda sig: (max((abs(p) for p in sig), default=0), [-p for p in sig]))


CENSUS_COLUMNS = ["signature", "radius", "sign", "log_abs"]


def sign_census(spec: KernelSpec, box_radius: int, threads: int = 1) -> pd.DataFrame:
    """One row per signature of the box [−M, M]ⁿ with the sign of c_lambda_reduced."""

    signatures = signatures_in_box(spec.n, -box_radius, box_radius)
    values = ordered_map(lambda sig: c_lambda_reduced(sig, spec), signatures, threads)
    rows = [
        {
            "signature": format_signature(sig),
            "radius": max(abs(p) for p in sig),
            "sign": value.sign,
            "log_abs": value.log_magnitude if value.sign else float("nan"),
        }
        for sig, value in zip(signatures, values)
    ]
    return pd.DataFrame(rows, columns=CENSUS_COLUMNS)


def scan_sign_constancy(spec: KernelSpec, box_radius: int, threads: int = 1) -> ScanReport:
    """Sign census of c_lambda_reduced over the box [−M, M]ⁿ."""

    return report_from_census(spec, sign_census(spec, box_radius, threads), box_radius)


def report_from_census(spec: KernelSpec, census_frame: pd.DataFrame, box_radius: int) -> ScanReport:
    """Verdict and minimal witness from a census built by sign_census."""

    signatures = signatures_in_box(spec.n, -box_radius, box_radius)
    signs = [int(s) for s in census_frame["sign"]]
    sign_of = dict(zip(signatures, signs))
    census = {
        "positive": sum(1 for s in signs if s > 0),
        "negative": sum(1 for s in signs if s < 0),
        "zero": sum(1 for s in signs if s == 0),
    }

    ordered = witness_order(signatures)
    reference = ordered[0]
    witness: Optional[Tuple[Signature, Signature]] = None
    if census["zero"]:
        verdict = Verdict.DEGENERATE
        witness = (reference, next(sig for sig in ordered if sign_of[sig] == 0))
    elif census["positive"] and census["negative"]:
        verdict = Verdict.INDEFINITE
        witness = (reference, next(sig for sig in ordered if sign_of[sig] != sign_of[reference]))
    elif census["positive"]:
        verdict = Verdict.POSITIVE
    else:
        verdict = Verdict.NEGATIVE

    report = ScanReport(verdict, witness, (-box_radius, box_radius), len(signatures), census)
    logger.debug(
        f"Scan {spec.to_dict()} M={box_radius}: {verdict.value} {census}, "
        f"minimal witness radius {minimal_witness_radius(report)}"
    )
    return report


def minimal_witness_radius(report: ScanReport) -> Optional[int]:
    """Radius of the witness pair; None for definite verdicts."""

    if report.witness is None:
        return None
    return max(abs(p) for sig in report.witness for p in sig)


def _grid_axis(lo: Real, hi: Real, step: Fraction, offset: Fraction) -> List[Fraction]:
    lo, hi = Fraction(lo), Fraction(hi)
    points = []
    value = lo + offset
    while value <= hi:
        points.append(value)
        value += step
    return points


def region_grid(
    space: Space,
    n: int,
    s_range: Tuple[Real, Real],
    t_range: Tuple[Real, Real],
    step: Union[int, Fraction],
    offset: Optional[Fraction] = None,
    box_radius: int = 6,
    threads: int = 1,
) -> pd.DataFrame:
    """Predicate and scan verdicts on an (s, t) grid.

    Points are lo + offset + k·step (offset defaults to step/2, which keeps the grid off
    the excluded integer and half-integer lattices for the usual dyadic steps). Cells
    where the theorem's hypotheses fail are marked "inapplicable" in both columns.
    """

    step = Fraction(step)
    offset = step / 2 if offset is None else Fraction(offset)
    points = [
        (s, t)
        for s in _grid_axis(*s_range, step, offset)
        for t in _grid_axis(*t_range, step, offset)
    ]

    def evaluate(point: Tuple[Fraction, Fraction]) -> Dict[str, Any]:
        s, t = point
        sigma, tau = st_to_sigma_tau(space, n, s, t)
        row: Dict[str, Any] = {"s": float(s), "t": float(t)}
        try:
            predicate = definite_predicate(space, n, sigma, tau)
        except InapplicableError:
            row.update(predicate="inapplicable", scan="inapplicable")
            return row
        report = scan_sign_constancy(KernelSpec(space, n, sigma, tau), box_radius)
        row["predicate"] = "definite" if predicate else "indefinite"
        row["scan"] = "definite" if report.verdict.is_definite else report.verdict.value
        return row

    rows = ordered_map(evaluate, points, threads)
    grid = pd.DataFrame(rows, columns=REGION_COLUMNS)
    disagreements = grid[grid["predicate"] != grid["scan"]]
    logger.info(
        f"Region grid {space.value} n={n}: {len(grid)} points, "
        f"{int((grid['predicate'] == 'inapplicable').sum())} inapplicable, "
        f"{len(disagreements)} disagreements"
    )
    return grid
