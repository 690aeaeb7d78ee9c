"""The unit interval with max-combination and a clamp at one half.

Carrier ``[0, 1]`` over the domain chain ``0 < 1``.  Focusing onto ``1``
is the identity; focusing onto ``0`` keeps values up to ``1/2`` and sends
everything above to ``1/2``.  All arithmetic is exact (``Fraction``).

``unit_interval_algebra(n)`` is the honest finite sub-algebra on the grid
``{k/n}``.  :class:`UnitIntervalAnalytic` keeps the real interval and
evaluates way-below sets and their sups in closed form as intervals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..domain_free import AnalyticAlgebra, BasisReport, DomainFreeAlgebra
from ..errors import MalformedInputError
from ..order import chain
from ..reports import ContinuityReport

HALF = Fraction(1, 2)


def focus_formula(value, x: str) -> Fraction:
    v = Fraction(value)
    if not 0 <= v <= 1:
        raise MalformedInputError(f"{value} is outside [0, 1]")
    if x == "1":
        return v
    if x == "0":
        return v if v <= HALF else HALF
    raise MalformedInputError(f"unknown domain {x!r}")


def domain_chain():
    return chain(2, ["0", "1"])


def unit_interval_algebra(n: int) -> DomainFreeAlgebra:
    if n < 2 or n % 2:
        raise MalformedInputError("grid denominator must be even and at least 2 so that 1/2 is a grid point")
    grid = [Fraction(k, n) for k in range(n + 1)]
    return DomainFreeAlgebra.from_functions(
        grid, domain_chain(), max, focus_formula, Fraction(0), str, f"unit-interval(grid={n})"
    )


@dataclass(frozen=True)
class Interval:
    """A nonempty-or-empty interval of rationals with open/closed ends."""

    lo: Fraction
    hi: Fraction
    lo_closed: bool = True
    hi_closed: bool = True

    @property
    def empty(self) -> bool:
        if self.lo > self.hi:
            return True
        return self.lo == self.hi and not (self.lo_closed and self.hi_closed)

    def sup(self) -> Fraction | None:
        return None if self.empty else self.hi

    def has_max(self) -> bool:
        return not self.empty and self.hi_closed

    def __and__(self, other: "Interval") -> "Interval":
        if self.lo > other.lo or (self.lo == other.lo and not self.lo_closed):
            lo, lc = self.lo, self.lo_closed
        else:
            lo, lc = other.lo, other.lo_closed
        if self.hi < other.hi or (self.hi == other.hi and not self.hi_closed):
            hi, hc = self.hi, self.hi_closed
        else:
            hi, hc = other.hi, other.hi_closed
        return Interval(lo, hi, lc, hc)

    def clamp_image(self) -> "Interval":
        """Image under ``t -> min(t, 1/2)``, by cases on where the interval sits."""
        if self.empty:
            return self
        if self.hi < HALF or (self.hi == HALF):
            return self
        if self.lo >= HALF:
            return Interval(HALF, HALF)
        return Interval(self.lo, HALF, self.lo_closed, True)


UNIT = Interval(Fraction(0), Fraction(1))


class UnitIntervalAnalytic(AnalyticAlgebra):
    """Closed-form evaluation over the real unit interval.

    Way-below: ``a << b`` iff ``a < b`` or ``a = b = 0``.  The set of
    approximants of ``p`` is therefore ``[0, p)`` for ``p > 0`` and
    ``{0}`` for ``p = 0``.  Fixed points of focusing onto ``0`` form
    ``[0, 1/2]``, onto ``1`` the whole interval.  Checks quantify over the
    sample points, always including grid ``1/16`` and the values 3/10 and
    7/10; the sets and sups themselves are exact.
    """

    name = "unit-interval(analytic)"

    def __init__(self, grid: int = 16, extra: Sequence = (Fraction(3, 10), Fraction(7, 10))):
        if grid < 2 or grid % 2:
            raise MalformedInputError("grid denominator must be even and at least 2")
        self.grid = grid
        self.extra = tuple(Fraction(v) for v in extra)
        self.lattice = domain_chain()

    def declared_modes(self) -> dict[str, str]:
        return {
            "complete_lattice": "closed form",
            "way_below": "closed form",
            "finite_elements": "closed form",
            "density": "sampled points, exact sups",
            "strong_density": "sampled points, exact sups",
            "compactness": "sampled points, exact refutation family",
            "theorem6": "sampled directed intervals, exact images",
        }

    def sample_points(self) -> list[Fraction]:
        pts = {Fraction(k, self.grid) for k in range(self.grid + 1)} | set(self.extra)
        return sorted(pts)

    @staticmethod
    def way_below(a, b) -> bool:
        a, b = Fraction(a), Fraction(b)
        return a < b or a == b == 0

    @staticmethod
    def approximants(p) -> Interval:
        p = Fraction(p)
        return Interval(Fraction(0), Fraction(0)) if p == 0 else Interval(Fraction(0), p, True, False)

    @staticmethod
    def fixed(x: str) -> Interval:
        return Interval(Fraction(0), HALF) if x == "0" else UNIT

    def finite_elements(self) -> tuple[str, ...]:
        # a << a forces a = 0 since a < a is impossible
        return ("0",)

    def _density_failures(self, strong: bool) -> list[tuple[str, tuple[str, ...]]]:
        out = []
        for p in self.sample_points():
            for x in self.lattice.elements if strong else ("1",):
                ws = self.approximants(p) & self.fixed(x)
                if ws.sup() != focus_formula(p, x):
                    out.append(("strong_density" if strong else "density", (str(p), x)))
        return out

    def _finite_density_failures(self) -> list[tuple[str, tuple[str, ...]]]:
        out = []
        for p in self.sample_points():
            for x in self.lattice.elements:
                # finite elements below p fixed by x: only 0
                if Fraction(0) != focus_formula(p, x):
                    out.append(("finite_strong_density", (str(p), x)))
        return out

    def _compactness_failures(self) -> list[tuple[str, tuple[str, ...]]]:
        out = []
        for p in self.sample_points():
            if p == 0:
                continue
            family = Interval(Fraction(0), p, True, False)
            # directed, sup = p, yet no member reaches p
            if family.sup() == p and not family.has_max():
                out.append(("compactness", (str(p),)))
        return out

    def classify(self) -> ContinuityReport:
        dens = self._density_failures(False)
        strong = self._density_failures(True)
        fin = self._finite_density_failures()
        cont = not dens
        s_cont = not strong
        # the only compact element is 0, so algebraicity needs every p to be 0
        algebraic = all(p == 0 for p in self.sample_points())
        failures = dens + strong + fin + ([("algebraic_lattice", ())] if not algebraic else [])
        return ContinuityReport(
            cont, s_cont, algebraic, not fin, self.finite_elements(), tuple(failures[:8]), mode="analytic"
        )

    def carrier_basis_report(self) -> BasisReport:
        dens = self._density_failures(False)
        strong = self._density_failures(True)
        comp = self._compactness_failures()
        return BasisReport(True, True, True, not dens, not strong, not comp, tuple((dens + strong + comp)[:8]))

    def theorem6(self) -> bool:
        pts = self.sample_points()
        for lo in pts:
            for hi in pts:
                if lo > hi:
                    continue
                for hc in (True, False):
                    fam = Interval(lo, hi, True, hc)
                    if fam.empty:
                        continue
                    for x in self.lattice.elements:
                        img = fam if x == "1" else fam.clamp_image()
                        if img.sup() != focus_formula(fam.sup(), x):
                            return False
        return True
