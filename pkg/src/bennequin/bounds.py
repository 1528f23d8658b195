"""Bennequin-type bounds for a diagram and a rank n.

Every field is a direct function of the Seifert statistics.  None of the
bounded quantities (slice Euler characteristic, Rasmussen invariant, extreme
quantum degrees of the sl(n) and Gornik cohomologies) is computed here; the
report only states the intervals that contain them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .diagram import BraidWord, LinkDiagram, SeifertStats, braid_to_diagram, seifert_stats
from .homfly import DEFAULT_MAX_SKEIN_CROSSINGS, mfw_degrees, state_sum_terms
from .moy import DEFAULT_MAX_DIM
from .resolution import DEFAULT_MAX_CROSSINGS

__all__ = [
    "BoundsReport",
    "bennequin_report",
    "verify_mfw",
    "verify_support",
    "SupportVerification",
    "thm2_interval",
]

Interval = tuple[int, int]

KNOT_ONLY = ("thm1", "thm3", "thm4", "ineq4", "ineq5")


def thm2_interval(stats: SeifertStats, n: int) -> Interval:
    """Window for the nonzero quantum degrees of the sl(n) cohomology of a closed braid."""
    k = n - 1
    return k * (stats.w - stats.O) - 2 * stats.c_minus, k * (stats.w + stats.O) + 2 * stats.c_plus


@dataclass(frozen=True)
class BoundsReport:
    stats: SeifertStats
    n: int
    chi_upper: int
    chi_s_upper: int
    mfw_lower: int
    mfw_upper: int
    spbi_lower: int
    kbi_lower: int
    thm2_interval: Interval
    thm3_interval: Interval
    thm4_case: str
    thm4_interval: Interval | None
    gp_min_exact: int | None
    gp_max_exact: int | None
    chi_s_exact: int | None
    thm1_box: dict | None
    normalized_thm2_family: tuple = ()
    knot_only_flags: tuple[str, ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "stats": self.stats.to_json(),
            "n": self.n,
            "classical": {
                "interval_containing_chi": {"upper": self.chi_upper},
                "interval_containing_chi_s": {"upper": self.chi_s_upper},
            },
            "mfw": {"lower": self.mfw_lower, "upper": self.mfw_upper},
            "rasmussen": {
                "interval_containing_s_minus_1": {
                    "spbi_lower": self.spbi_lower,
                    "kbi_lower": self.kbi_lower,
                },
            },
            "thm2_interval_containing_gn": list(self.thm2_interval),
            "thm3_interval_containing_gp": list(self.thm3_interval),
            "thm4": {
                "case": self.thm4_case,
                "interval_containing_gp": None if self.thm4_interval is None else list(self.thm4_interval),
                "gp_min_exact": self.gp_min_exact,
                "gp_max_exact": self.gp_max_exact,
            },
            "thm1_box": self.thm1_box,
            "chi_s_exact": self.chi_s_exact,
            "thm2_family_over_n_minus_1": [
                {"n": k, "lower": str(lo), "upper": str(hi)} for k, lo, hi in self.normalized_thm2_family
            ],
            "knot_only_flags": list(self.knot_only_flags),
        }

    def table(self) -> str:
        st = self.stats
        rows = [
            ("w, O, c+, c-", f"{st.w}, {st.O}, {st.c_plus}, {st.c_minus}"),
            ("O_>, O_<, O_>=, O_<=", f"{st.O_gt}, {st.O_lt}, {st.O_geq}, {st.O_leq}"),
            ("components", str(st.components)),
            ("chi, chi_s <=", str(self.chi_upper)),
            ("MFW a-degree window", f"[{self.mfw_lower}, {self.mfw_upper}]"),
            ("s(K)-1 >= (w-O)", str(self.spbi_lower)),
            ("s(K)-1 >= (w-O_>=+O_<)", str(self.kbi_lower)),
            (f"g_n window (n={self.n})", f"[{self.thm2_interval[0]}, {self.thm2_interval[1]}]"),
            (f"g_p window (n={self.n})", f"[{self.thm3_interval[0]}, {self.thm3_interval[1]}]"),
            ("sharper case", self.thm4_case),
        ]
        if self.thm4_interval is not None:
            rows.append(("sharper g_p window", f"[{self.thm4_interval[0]}, {self.thm4_interval[1]}]"))
        if self.gp_min_exact is not None:
            rows.append(("g_p^min exactly", str(self.gp_min_exact)))
        if self.gp_max_exact is not None:
            rows.append(("g_p^max exactly", str(self.gp_max_exact)))
        if self.chi_s_exact is not None:
            rows.append(("chi_s exactly", str(self.chi_s_exact)))
        if self.knot_only_flags:
            rows.append(("knot-only (not valid here)", ", ".join(self.knot_only_flags)))
        width = max(len(k) for k, _ in rows)
        return "\n".join(f"{k.ljust(width)}  {v}" for k, v in rows)


def bennequin_report(stats: SeifertStats, n: int, family_up_to: int | None = None) -> BoundsReport:
    if n < 2:
        raise ValueError("n must be at least 2")
    k = n - 1
    w, O = stats.w, stats.O
    knot = stats.components == 1

    gp_min = gp_max = chi_s = None
    box = None
    if stats.c_plus == 0 and stats.c_minus == 0:
        case, interval = "no crossings", None
    elif stats.c_minus == 0:
        case = "positive"
        interval = (k * (w - O), k * (w - O + 2))
        if knot:
            gp_min = k * (w - O)
            chi_s = O - w
    elif stats.c_plus == 0:
        case = "negative"
        interval = (k * (w + O - 2), k * (w + O))
        if knot:
            gp_max = k * (w + O)
            chi_s = O + w
    else:
        case = "mixed"
        interval = (k * (w - stats.O_geq + stats.O_lt), k * (w + stats.O_leq - stats.O_gt))
    if chi_s is not None:
        box = {
            "gp_max": [k * chi_s, k * (2 - chi_s)],
            "gp_min": [k * (chi_s - 2), -k * chi_s],
        }

    top = max(n, family_up_to or n)
    family = []
    for j in range(2, top + 1):
        lo, hi = thm2_interval(stats, j)
        family.append((j, Fraction(lo, j - 1), Fraction(hi, j - 1)))

    return BoundsReport(
        stats=stats,
        n=n,
        chi_upper=w + O,
        chi_s_upper=w + O,
        mfw_lower=w - O,
        mfw_upper=w + O,
        spbi_lower=w - O,
        kbi_lower=w - stats.O_geq + stats.O_lt,
        thm2_interval=thm2_interval(stats, n),
        thm3_interval=(k * (w - O), k * (w + O)),
        thm4_case=case,
        thm4_interval=interval,
        gp_min_exact=gp_min,
        gp_max_exact=gp_max,
        chi_s_exact=chi_s,
        thm1_box=box,
        normalized_thm2_family=tuple(family),
        knot_only_flags=() if knot else KNOT_ONLY,
    )


def verify_mfw(d: LinkDiagram | BraidWord, max_crossings: int = DEFAULT_MAX_SKEIN_CROSSINGS) -> bool:
    """True iff ``w - O <= min-deg_a <= max-deg_a <= w + O`` holds (both normalisations)."""
    r = mfw_degrees(d, max_crossings)
    return r.holds and r.holds_unnormalized


@dataclass(frozen=True)
class SupportVerification:
    holds: bool
    interval: Interval
    total_support: Interval | None
    details: tuple[dict, ...]

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "interval": list(self.interval),
            "total_support": None if self.total_support is None else list(self.total_support),
            "resolutions": list(self.details),
        }


def verify_support(
    b: BraidWord,
    n: int,
    max_crossings: int = DEFAULT_MAX_CROSSINGS,
    max_dim: int = DEFAULT_MAX_DIM,
) -> SupportVerification:
    """Every state-sum summand, and their total, must live in the sl(n) window."""
    stats = seifert_stats(braid_to_diagram(b))
    lo, hi = thm2_interval(stats, n)
    details = []
    ok = True
    total = None
    for res, shift, value in state_sum_terms(b, n, max_crossings=max_crossings, max_dim=max_dim):
        sup = value.support()
        inside = sup is None or (lo <= sup[0] and sup[1] <= hi)
        ok = ok and inside
        details.append(
            {
                "e_plus": res.e_plus,
                "e_minus": res.e_minus,
                "shift": shift,
                "support": None if sup is None else list(sup),
                "holds": inside,
            }
        )
        total = value if total is None else total + value
    tsup = total.support() if total is not None else None
    if tsup is not None and not (lo <= tsup[0] and tsup[1] <= hi):
        ok = False
    return SupportVerification(ok, (lo, hi), tsup, tuple(details))
