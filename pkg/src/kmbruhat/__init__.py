"""Bruhat order and affine lengths on Kac-Moody affine Weyl semigroups W+ = Y+ x| W^v."""

from .affine import AffineRoot, AffineWeyl, SignedAffineRoot, WPlusElt, normalize_affine_root
from .bruhat import (
    NOT_FOUND,
    UNKNOWN,
    BruhatOrder,
    ChainReport,
    CoverCertificate,
    CoverWitness,
    Interval,
    SearchBounds,
    UpperCovers,
)
from .errors import KacMoodyError, NotInTitsCone, ParseError, RankNotTwo
from .grading import GradingRegion, GradingReport, verify_grading
from .plot import PlotSpec, render_apartment, render_tits_cone
from .root_datum import (
    GCM,
    RootDatum,
    datum_from_cartan,
    format_datum,
    load_datum,
    parse_cartan,
    parse_datum,
    validate_gcm,
)
from .roots import Root, enumerate_roots
from .tits_cone import DominanceResult, Undetermined, dominate, is_dominant
from .weyl import WeylElt, WeylGroup

__all__ = [
    "AffineRoot",
    "AffineWeyl",
    "SignedAffineRoot",
    "WPlusElt",
    "normalize_affine_root",
    "NOT_FOUND",
    "UNKNOWN",
    "BruhatOrder",
    "ChainReport",
    "CoverCertificate",
    "CoverWitness",
    "Interval",
    "SearchBounds",
    "UpperCovers",
    "KacMoodyError",
    "NotInTitsCone",
    "ParseError",
    "RankNotTwo",
    "GradingRegion",
    "GradingReport",
    "verify_grading",
    "PlotSpec",
    "render_apartment",
    "render_tits_cone",
    "GCM",
    "RootDatum",
    "datum_from_cartan",
    "format_datum",
    "load_datum",
    "parse_cartan",
    "parse_datum",
    "validate_gcm",
    "Root",
    "enumerate_roots",
    "DominanceResult",
    "Undetermined",
    "dominate",
    "is_dominant",
    "WeylElt",
    "WeylGroup",
]
