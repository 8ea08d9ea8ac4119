"""Boundary curves and finite-n inequalities for the feasible region.

Curves evaluate in double precision; exact quantities (edge counts, shadow
sizes) stay integral.  Evaluation outside a curve's stated x-interval is an
error, never an extrapolation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

from .families import ForbiddenFamily, is_cancellative, is_free
from .hypergraph import Hypergraph

REL_TOL = 1e-9
CHAIN_TOL = 1e-12


def falling_factorial(ell: int, r: int) -> int:
    """ell * (ell-1) * ... * (ell-r+1)."""
    out = 1
    for j in range(r):
        out *= ell - j
    return out


def gbinom(z: float, k: int) -> float:
    """Generalized binomial coefficient C(z, k) for real z."""
    if k < 0:
        raise ValueError("k must be non-negative")
    num = 1.0
    for j in range(k):
        num *= z - j
    return num / math.factorial(k)


def solve_shadow_parameter(shadow_size: int, r: int, n: int) -> float:
    """The real z in [r-1, max(n, r)] with C(z, r-1) = shadow_size.

    C(z, r-1) is increasing for z >= r-1, so plain bisection applies.
    """
    if shadow_size < 0:
        raise ValueError("shadow size must be non-negative")
    if n < r or r < 2:
        raise ValueError(f"need n >= r >= 2, got n={n}, r={r}")
    if shadow_size > math.comb(n, r - 1):
        raise ValueError(
            f"shadow size {shadow_size} exceeds C({n},{r - 1}) = {math.comb(n, r - 1)}"
        )
    lo, hi = float(r - 1), float(max(n, r))
    target = float(shadow_size)
    for _ in range(100):
        mid = 0.5 * (lo + hi)
        if gbinom(mid, r - 1) < target:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-12 * max(1.0, abs(hi)):
            break
    return 0.5 * (lo + hi)


def kruskal_katona_max_edges(shadow_size: int, r: int, n: int) -> float:
    """Upper bound C(z, r) on the edge count, where C(z, r-1) = shadow_size."""
    z = solve_shadow_parameter(shadow_size, r, n)
    return gbinom(z, r)


# -- closed-form curves ----------------------------------------------------


def curve_universal(x: float, r: int) -> float:
    """x^(r/(r-1)): the Kruskal-Katona bound in density form."""
    if r < 3:
        raise ValueError("universal curve defined for r >= 3")
    _check_domain(x, 0.0, 1.0, "universal")
    return x ** (r / (r - 1))


def curve_cancellative_left(x: float, r: int) -> float:
    """(x^r / r!)^(1/(r-1)): cancellative upper bound, tight on the left."""
    if r < 3:
        raise ValueError("cancellative-left curve defined for r >= 3")
    _check_domain(x, 0.0, 1.0, "cancellative-left")
    return (x**r / math.factorial(r)) ** (1.0 / (r - 1))


def curve_cancellative_right(x: float) -> float:
    """x(1-x): cancellative 3-graph upper bound, tight at (k-1)/k points."""
    _check_domain(x, 0.0, 1.0, "cancellative-right")
    return x * (1.0 - x)


def curve_prior_cancellative(x: float) -> float:
    """The earlier cancellative 3-graph bound, singular at x = 1/3."""
    if not 1.0 / 3.0 < x <= 1.0:
        raise ValueError(f"prior-cancellative curve defined on (1/3, 1], got x={x}")
    return (math.sqrt(2.0 * (1.0 - x) * x**3) + x * x - x) / (3.0 * x - 1.0)


def covering_clique_x_max(r: int, ell: int) -> float:
    """Right end of the projection interval for the covering-clique family."""
    return falling_factorial(ell, r - 1) / ell ** (r - 1)


def curve_covering_clique(x: float, r: int, ell: int) -> float:
    """(ell-r+1) * (x^r / (ell)_r)^(1/(r-1)) on [0, (ell)_{r-1}/ell^{r-1}]."""
    if not ell >= r >= 3:
        raise ValueError(f"need ell >= r >= 3, got r={r}, ell={ell}")
    _check_domain(x, 0.0, covering_clique_x_max(r, ell), "covering-clique")
    return (ell - r + 1) * (x**r / falling_factorial(ell, r)) ** (1.0 / (r - 1))


def curve_fano_lower(x: float) -> float:
    """Lower boundary from Fano-plane blow-ups, connecting (2/3, 2/9) and
    (6/7, 6/49)."""
    _check_domain(x, 2.0 / 3.0, 6.0 / 7.0, "fano-lower")
    return (
        -70.0 * math.sqrt(18.0 * x * x - 21.0 * x**3)
        + 63.0 * x
        + 60.0 * math.sqrt(18.0 - 21.0 * x)
        - 36.0
    ) / 147.0


def curve_general_k_lower(x: float, k: int) -> float:
    """Lower boundary connecting (2/3, 2/9) and ((k-1)/k, (k-1)/k^2)."""
    if k < 7 or k % 6 not in (1, 3):
        raise ValueError(f"need k >= 7 with k = 1 or 3 (mod 6), got k={k}")
    _check_domain(x, 2.0 / 3.0, (k - 1.0) / k, f"general-k:{k}")
    radicand = max(k - 1.0 - k * x, 0.0)
    return (
        2.0 * math.sqrt(3.0) * (k + 3.0) * radicand**1.5 / (3.0 * k * k * math.sqrt(k - 3.0))
        + (3.0 * k * x - 2.0 * k + 2.0) / (k * k)
    )


def _check_domain(x: float, lo: float, hi: float, name: str) -> None:
    # tiny slack so grid endpoints computed in floating point stay legal
    eps = 1e-12
    if not lo - eps <= x <= hi + eps:
        raise ValueError(f"curve {name} defined on [{lo}, {hi}], got x={x}")


@dataclass(frozen=True)
class Curve:
    """A named boundary curve with its x-domain."""

    curve_id: str
    lo: float
    hi: float
    func: Callable[[float], float]
    special_points: tuple[tuple[float, float], ...] = ()

    def __call__(self, x: float) -> float:
        return self.func(x)


def parse_curve(text: str) -> Curve:
    """Parse a curve id: universal:r | cancellative-left:r |
    cancellative-right | prior-cancellative | covering-clique:r:l+1 |
    fano-lower | general-k:k."""
    parts = text.split(":")
    kind, args = parts[0], parts[1:]
    if kind == "universal" and len(args) == 1:
        r = int(args[0])
        return Curve(text, 0.0, 1.0, lambda x: curve_universal(x, r))
    if kind == "cancellative-left" and len(args) == 1:
        r = int(args[0])
        apex = math.factorial(r - 1) / r ** (r - 2)
        return Curve(
            text,
            0.0,
            1.0,
            lambda x: curve_cancellative_left(x, r),
            ((apex, curve_cancellative_left(apex, r)),),
        )
    if kind == "cancellative-right" and not args:
        return Curve(
            text,
            0.0,
            1.0,
            curve_cancellative_right,
            ((2 / 3, 2 / 9), (6 / 7, 6 / 49), (8 / 9, 8 / 81)),
        )
    if kind == "prior-cancellative" and not args:
        return Curve(text, 1 / 3 + 1e-9, 1.0, curve_prior_cancellative)
    if kind == "covering-clique" and len(args) == 2:
        r, ell = int(args[0]), int(args[1]) - 1
        hi = covering_clique_x_max(r, ell)
        return Curve(
            text,
            0.0,
            hi,
            lambda x: curve_covering_clique(x, r, ell),
            ((hi, curve_covering_clique(hi, r, ell)),),
        )
    if kind == "fano-lower" and not args:
        return Curve(
            text, 2 / 3, 6 / 7, curve_fano_lower, ((2 / 3, 2 / 9), (6 / 7, 6 / 49))
        )
    if kind == "general-k" and len(args) == 1:
        k = int(args[0])
        return Curve(
            text,
            2 / 3,
            (k - 1) / k,
            lambda x: curve_general_k_lower(x, k),
            ((2 / 3, 2 / 9), ((k - 1) / k, (k - 1) / k**2)),
        )
    raise ValueError(f"unknown curve id {text!r}")


# -- finite-n checks -------------------------------------------------------


@dataclass(frozen=True)
class BoundReport:
    """Result of checking one inequality: value <= bound (up to tolerance)."""

    label: str
    value: float
    bound: float
    slack: float
    satisfied: bool


def _report(label: str, value: float, bound: float, tol: float = 1e-12) -> BoundReport:
    slack = bound - value
    return BoundReport(label, value, bound, slack, slack >= -tol * max(1.0, abs(bound)))


def check_cancellative_inequalities(hg: Hypergraph) -> list[BoundReport]:
    """Edge-count bounds valid for every cancellative hypergraph.

    Raises if the input is not cancellative (the bounds are not guaranteed
    otherwise).
    """
    free, witness = is_cancellative(hg)
    if not free:
        raise ValueError(f"hypergraph is not cancellative: witness {witness.edges}")
    n, r, m = hg.n, hg.r, hg.m
    shadow = hg.shadow().m
    reports = [
        _report(
            "edges <= (shadow/r)^(r/(r-1))",
            float(m),
            (shadow / r) ** (r / (r - 1)),
        )
    ]
    if r == 3 and n > 0:
        reports.append(
            _report(
                "edges <= (n^2 - 2*shadow)*shadow/(3n) + 3n^2",
                float(m),
                (n * n - 2.0 * shadow) * shadow / (3.0 * n) + 3.0 * n * n,
            )
        )
    return reports


def fisher_ryan_chain(hg: Hypergraph, ell: int) -> tuple[list[float], bool]:
    """Normalized shadow-size chain for a covering-clique-free hypergraph.

    Returns the values (|shadow_i| / C(ell, r-i))^(1/(r-i)) for
    i = r-ell, ..., r-1 and whether they are non-decreasing within relative
    tolerance 1e-12.  Raises if hg contains a covering clique on ell+1
    vertices, since the chain is not guaranteed then.
    """
    r = hg.r
    if not ell >= r >= 2:
        raise ValueError(f"need ell >= r >= 2, got ell={ell}, r={r}")
    free, witness = is_free(hg, ForbiddenFamily("covering-clique", r=r, ell=ell))
    if not free:
        raise ValueError(
            f"hypergraph contains a covering clique on {ell + 1} vertices: "
            f"core {witness.vertices}"
        )
    values = []
    for i in range(r - ell, r):
        size = hg.shadow(i).m
        values.append((size / math.comb(ell, r - i)) ** (1.0 / (r - i)))
    monotone = all(
        values[j + 1] >= values[j] * (1.0 - CHAIN_TOL) - CHAIN_TOL
        for j in range(len(values) - 1)
    )
    return values, monotone
