"""Every matching lower bound the library knows, in exact rationals.

There are two coefficient families for graphs of maximum degree at most k:

* the *general* pair (a, b) with ``alpha' >= a*(n - c) + b*m`` whenever no
  component is k-regular (a + b = 1/k);
* the *density* pair for even k with ``alpha' >= b*m - a*n`` under the same
  hypothesis (k*b - a = 1), stronger on dense graphs.

For connected graphs the additive constants improve, with exceptional
constants for k-regular graphs of a few small orders. Connected k-regular
graphs additionally have a reference bound in n alone, and subcubic graphs
a bound from the degree counts. :func:`audit_graph` evaluates everything
that applies to a given graph and reports the slack of each bound against
the true matching number.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Decimal
from fractions import Fraction
from math import lcm

from matchbound.graphs import Graph, components, degree_profile, is_k_regular
from matchbound.matching import maximum_matching


@dataclass(frozen=True)
class CoefficientSet:
    k: int
    epsilon: Fraction | None
    a: Fraction
    b: Fraction
    parity: str  # "even" | "odd"
    variant: str  # "general" | "density"


def general_coefficients(k: int) -> CoefficientSet:
    """The (a, b) pair of the component-penalized bound a*(n-c) + b*m.

    Defined through epsilon: a = epsilon/2 and b = (2 - k*epsilon)/(2k),
    so a + b = 1/k always holds.
    """
    if k < 3:
        raise ValueError(f"general coefficients need k >= 3, got {k}")
    if k % 2 == 0:
        eps = Fraction(2, k * (k + 1))
    else:
        eps = Fraction(2 * k - 2, k * (k * k - 3))
    a = eps / 2
    b = Fraction(2 - k * eps, 2 * k)
    return CoefficientSet(k, eps, a, b, "even" if k % 2 == 0 else "odd",
                          "general")


def density_coefficients(k: int) -> CoefficientSet:
    """The even-k pair (a, b) of the density bound b*m - a*n (k*b - a = 1)."""
    if k < 2 or k % 2:
        raise ValueError(f"density coefficients need even k >= 2, got {k}")
    den = k * k + k + 2
    return CoefficientSet(k, None, Fraction(k - 2, den), Fraction(k + 2, den),
                          "even", "density")


def lower_bound_general(n: int, m: int, c: int, k: int) -> Fraction:
    """a*(n - c) + b*m; valid when no component is k-regular."""
    cs = general_coefficients(k)
    return cs.a * (n - c) + cs.b * m


def lower_bound_density(n: int, m: int, k: int) -> Fraction:
    """b*m - a*n for even k; valid when no component is k-regular."""
    cs = density_coefficients(k)
    return cs.b * m - cs.a * n


def connected_lower_bounds(n: int, m: int, k: int,
                           regular_n: int | None = None
                           ) -> list[tuple[str, Fraction]]:
    """The improved bounds for a connected graph, as (name, value) pairs.

    ``regular_n`` must be passed (= n) iff the graph is k-regular; the
    handful of small regular orders swap in weaker additive constants.
    Odd k yields one bound, even k three (the strong constant, the weak
    constant that needs no exceptions, and the density form).
    """
    if k < 3:
        raise ValueError(f"connected bounds need k >= 3, got {k}")
    if regular_n is not None:
        if regular_n != n or 2 * m != n * k:
            raise ValueError(
                f"regular_n={regular_n} inconsistent with n={n}, m={m}, k={k}")
    if k % 2:
        cs = general_coefficients(k)
        return [("connected_odd", cs.a * n + cs.b * m - cs.a)]

    cs = general_coefficients(k)
    strong_const = Fraction(1, k * (k + 1))
    if regular_n == k + 1:
        strong_const = Fraction(1, k)
    elif regular_n == k + 3:
        strong_const = Fraction(3, k * (k + 1))

    ds = density_coefficients(k)
    density_const = Fraction(0)
    if regular_n == k + 1:
        density_const = Fraction(k + 2, k * k + k + 2)
    elif regular_n == k + 3:
        density_const = Fraction(4, k * k + k + 2)
    elif k == 4 and regular_n == 9:
        density_const = Fraction(2, k * k + k + 2)

    return [
        ("connected_even", cs.a * n + cs.b * m - strong_const),
        ("connected_even_weak", cs.a * n + cs.b * m - Fraction(1, k)),
        ("connected_even_density", ds.b * m - ds.a * n - density_const),
    ]


def kregular_reference_bound(n: int, k: int) -> Fraction:
    """Lower bound for a connected k-regular graph of order n."""
    if k < 2:
        raise ValueError(f"reference bound needs k >= 2, got {k}")
    if n < k + 1:
        raise ValueError(f"no k-regular graph with n={n} < k+1={k + 1}")
    if k % 2 == 0:
        return min(Fraction((k * k + 4) * n, 2 * (k * k + k + 2)),
                   Fraction(n - 1, 2))
    return Fraction((k ** 3 - k * k - 2) * n - 2 * k + 2,
                    2 * (k ** 3 - 3 * k))


def subcubic_degree_bound(n1: int, n2: int, n3: int, c: int) -> Fraction:
    """Degree-count bound for graphs of maximum degree at most 3."""
    if min(n1, n2, n3, c) < 0:
        raise ValueError("degree counts must be non-negative")
    return (Fraction(4 * n3, 9) + Fraction(n2, 3) + Fraction(2 * n1, 9)
            - Fraction(c, 9))


def scaled_bound_row(k: int) -> tuple[int, int, int, int]:
    """Integer-scaled general bound: (D, A, B, C) with D*alpha' >= A*n + B*m - C*c."""
    cs = general_coefficients(k)
    d = lcm(cs.a.denominator, cs.b.denominator)
    a_scaled = cs.a * d
    b_scaled = cs.b * d
    assert a_scaled.denominator == 1 and b_scaled.denominator == 1
    return d, int(a_scaled), int(b_scaled), int(a_scaled)


def format_decimal(x: Fraction, places: int = 5) -> str:
    """Round-half-even decimal string with a fixed number of places."""
    q = Decimal(1).scaleb(-places)
    d = (Decimal(x.numerator) / Decimal(x.denominator)).quantize(
        q, rounding=ROUND_HALF_EVEN)
    return str(d)


@dataclass(frozen=True)
class BoundEntry:
    name: str
    applicable: bool
    reason: str  # why not applicable; empty when applicable
    value: Fraction | None
    slack: Fraction | None

    @property
    def tight(self) -> bool:
        return self.applicable and self.slack == 0

    @property
    def violated(self) -> bool:
        return self.applicable and self.slack is not None and self.slack < 0


@dataclass(frozen=True)
class BoundReport:
    alpha: int
    entries: tuple[BoundEntry, ...]

    @property
    def violations(self) -> tuple[BoundEntry, ...]:
        return tuple(e for e in self.entries if e.violated)

    def entry(self, name: str) -> BoundEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)


def audit_graph(g: Graph, k: int) -> BoundReport:
    """Evaluate every bound whose hypotheses hold for g against alpha'(g).

    Applicability (connectivity, per-component regularity, parity, degree
    caps) is checked here so callers cannot apply a bound outside its
    hypotheses. Inapplicable entries carry the reason.
    """
    if k < 3:
        raise ValueError(f"audit needs k >= 3, got {k}")
    profile = degree_profile(g)
    if profile.max_degree > k:
        raise ValueError(
            f"maximum degree {profile.max_degree} exceeds k={k}")
    n = g.vertex_count
    m = g.edge_count
    parts = components(g)
    c = parts.component_count
    reg = is_k_regular(g, k)
    has_regular_component = any(reg.per_component)
    connected = c == 1
    alpha = maximum_matching(g).size

    entries: list[BoundEntry] = []

    def add(name: str, value: Fraction) -> None:
        entries.append(BoundEntry(name, True, "", value, alpha - value))

    def skip(name: str, reason: str) -> None:
        entries.append(BoundEntry(name, False, reason, None, None))

    no_regular = not has_regular_component
    if no_regular and n >= 1:
        add("general", lower_bound_general(n, m, c, k))
    else:
        skip("general",
             "k-regular component present" if not no_regular else "empty graph")

    if k % 2 == 0:
        if no_regular:
            add("density", lower_bound_density(n, m, k))
        else:
            skip("density", "k-regular component present")

    if connected:
        regular_n = n if reg.overall else None
        for name, value in connected_lower_bounds(n, m, k, regular_n):
            add(name, value)
    else:
        names = (["connected_odd"] if k % 2 else
                 ["connected_even", "connected_even_weak",
                  "connected_even_density"])
        for name in names:
            skip(name, "graph is not connected")

    if connected and reg.overall:
        add("regular_reference", kregular_reference_bound(n, k))
    else:
        skip("regular_reference", "graph is not connected and k-regular")

    if n >= 1 and profile.max_degree <= 3:
        counts = profile.degree_counts
        add("subcubic_profile",
            subcubic_degree_bound(counts.get(1, 0), counts.get(2, 0),
                                  counts.get(3, 0), c))
    else:
        skip("subcubic_profile",
             "maximum degree exceeds 3" if n >= 1 else "empty graph")

    return BoundReport(alpha, tuple(entries))
