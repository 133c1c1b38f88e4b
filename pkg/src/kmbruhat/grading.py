"""Desk-scale verification that the affine length grades the affine Bruhat order.

For every x in a finite region and every raising one-step image y = s_a x in
W+ (roots and levels within the search bounds) this checks:

* l^a(y) > l^a(x) (strict compatibility);
* when l^a(y) = l^a(x) + 1, y is among ``upper_covers(x)``, the independent
  oracle ``is_cover`` agrees, and varying-class covers pass the shape checks;
* when l^a(y) >= l^a(x) + 2, ``is_cover`` finds an intermediate element.

Relations are enumerated within the search bounds.  When an intermediate is
not found within them, the search is retried once with the root height bound
multiplied by ``escalation``; any intermediate found is a proof, so this only
turns UNKNOWN answers into certified non-covers.

Covers are always one-step images, so this exhausts the covers of x within
the bounds.  ``is_cover`` answers that stay UNKNOWN are reported, never passed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from typing import Optional

from .affine import AffineWeyl, WPlusElt, format_element
from .bruhat import UNKNOWN, BruhatOrder, CoverCertificate, SearchBounds, tri_str
from .root_datum import RootDatum
from .tits_cone import DEFAULT_STEP_CAP, is_dominant

__all__ = ["GradingRegion", "GradingReport", "Finding", "enumerate_region", "verify_grading"]


@dataclass(frozen=True)
class GradingRegion:
    """x = pi^lam w with lam = v(lam++) for dominant lam++ with |ht| <= height cap and
    coordinates in [-box, box] (box defaults to the height cap), v minimal with
    l(v) <= word cap, and l(w) <= word cap."""

    dominant_height_cap: int
    word_length_cap: int
    box: Optional[int] = None

    @property
    def box_size(self) -> int:
        return self.dominant_height_cap if self.box is None else self.box


@dataclass(frozen=True)
class Finding:
    base: WPlusElt
    target: WPlusElt
    reflection: str
    delta: int
    reason: str

    def line(self) -> str:
        return (
            f"{format_element(self.base)} -> {format_element(self.target)} "
            f"via {self.reflection} (delta {self.delta}): {self.reason}"
        )


@dataclass
class GradingReport:
    datum: RootDatum
    region: GradingRegion
    bounds: SearchBounds
    elements: int = 0
    relations: int = 0
    certificates: list[CoverCertificate] = field(default_factory=list)
    violations: list[Finding] = field(default_factory=list)
    unknowns: list[Finding] = field(default_factory=list)
    non_covers: int = 0
    retry_root_height_bound: Optional[int] = None

    @property
    def ok(self) -> bool:
        return not self.violations

    def text(self) -> str:
        lines = [
            f"matrix: {[list(r) for r in self.datum.gcm.entries]}",
            f"region: |ht(lam++)| <= {self.region.dominant_height_cap}, "
            f"l(w) <= {self.region.word_length_cap}, box {self.region.box_size}",
            f"bounds: root height <= {self.bounds.root_height_bound}, "
            f"|level| <= {self.bounds.level_bound}",
            f"intermediate retries: root height <= {self.retry_root_height_bound}",
            f"elements: {self.elements}",
            f"one-step relations checked: {self.relations}",
            f"covers certified: {sum(c.certified for c in self.certificates)}"
            f" of {len(self.certificates)}",
            f"non-covers with an intermediate found: {self.non_covers}",
            f"violations: {len(self.violations)}",
            f"unknown: {len(self.unknowns)}",
        ]
        lines += [f"VIOLATION {f.line()}" for f in self.violations]
        lines += [f"UNKNOWN {f.line()}" for f in self.unknowns]
        return "\n".join(lines) + "\n"

    def tsv(self) -> str:
        rows = ["base\treflection\ttarget\tkind\tdelta\toracle\tshape"]
        for c in self.certificates:
            shape = "ok" if not c.shape_failures else "; ".join(c.shape_failures)
            rows.append(
                "\t".join(
                    [
                        format_element(c.base),
                        str(c.reflection),
                        format_element(c.target),
                        c.kind,
                        str(c.length_delta),
                        tri_str(c.oracle),
                        shape,
                    ]
                )
            )
        return "\n".join(rows) + "\n"


def enumerate_region(aw: AffineWeyl, region: GradingRegion) -> list[WPlusElt]:
    """Elements of the region, sorted by (l^a, text) for reproducibility."""
    W, datum = aw.W, aw.datum
    H, L, B = region.dominant_height_cap, region.word_length_cap, region.box_size
    if H < 0 or L < 0 or B < 0:
        return []
    weyl = W.elements_up_to(L)
    out = []
    for lam0 in itertools.product(range(-B, B + 1), repeat=datum.lattice_rank):
        if abs(datum.height(lam0)) > H or not is_dominant(W, lam0):
            continue
        J = {j for j, a in enumerate(datum.simple_roots) if sum(p * q for p, q in zip(lam0, a)) == 0}
        for v in weyl:
            if any(W.is_right_descent(v, j) for j in J):
                continue
            lam = v.apply(lam0)
            for w in weyl:
                out.append(aw.element(lam, w))
    out.sort(key=lambda x: (aw.affine_length(x), format_element(x)))
    return out


def verify_grading(
    datum: RootDatum,
    region: GradingRegion,
    bounds: SearchBounds = SearchBounds(),
    step_cap: int = DEFAULT_STEP_CAP,
    order: Optional[BruhatOrder] = None,
    escalation: int = 2,
) -> GradingReport:
    if order is None:
        order = BruhatOrder(AffineWeyl.from_datum(datum, step_cap), bounds)
    report = GradingReport(datum, region, order.bounds)
    wide = None
    if escalation > 1 and not order.certified:
        b = order.bounds
        wide = BruhatOrder(order.aw, replace(b, root_height_bound=b.root_height_bound * escalation))
        report.retry_root_height_bound = wide.bounds.root_height_bound
    for x in enumerate_region(order.aw, region):
        report.elements += 1
        _check_base(order, x, report, wide)
    report.certificates.sort(
        key=lambda c: (order.length(c.base), format_element(c.base), c.sort_key())
    )
    return report


def _check_base(
    order: BruhatOrder, x: WPlusElt, report: GradingReport, wide: Optional[BruhatOrder] = None
) -> None:
    lx = order.length(x)
    covers = {c.target: c for c in order.upper_covers(x)}
    report.certificates.extend(covers.values())
    for cert in covers.values():
        if cert.oracle is not True:
            report.violations.append(
                Finding(x, cert.target, str(cert.reflection), 1, f"oracle says {tri_str(cert.oracle)}")
            )
        for failure in cert.shape_failures:
            report.violations.append(Finding(x, cert.target, str(cert.reflection), 1, failure))
    for cand in order.candidates(x):
        y, delta = cand.target, cand.length - lx
        report.relations += 1
        if delta <= 0:
            report.violations.append(
                Finding(x, y, str(cand.root), delta, "raising step does not increase l^a")
            )
        elif delta == 1:
            if y not in covers:
                report.violations.append(
                    Finding(x, y, str(cand.root), delta, "cover outside the predicted level families")
                )
        else:
            verdict = order.is_cover(x, y)
            if verdict is UNKNOWN and wide is not None:
                verdict = wide.is_cover(x, y)
            if verdict is True:
                report.violations.append(
                    Finding(x, y, str(cand.root), delta, "cover with length gap >= 2")
                )
            elif verdict is UNKNOWN:
                report.unknowns.append(
                    Finding(x, y, str(cand.root), delta, "no intermediate found within bounds")
                )
            else:
                report.non_covers += 1
