"""Coefficientwise verification of the count-series monoid structure.

The objects checked here are products of the count generating functions:
powers of t, f, u (three-valued) or r, s (classical) multiplied together,
with the constant series 1 as identity.  Elements are represented
symbolically as exponent vectors over the generators; `Realizer` turns a
vector into an exact truncated series by multiplying out memoized
generator powers.

Every checker compares exact rational coefficients up to a truncation
order and reports the first failing index with both sides as a witness.
A deliberate tamper hook can corrupt one coefficient of one generator so
the pipeline's failure path can be exercised end to end.

Identities checked for the three-valued generators, with g the total
series and x the coefficient shift:

    3*u^k  = u^(k-1) - x*u^(k-2)
    f^k    = 2*f^(k-1)*u - f^(k-1) + x*f^(k-2)
    t^k    = (2/3)*t^(k-1)*g^2 - (2/3)*t^(k-1)*g*f + t^(k-1)*f^2 + x*t^(k-1)

The t identity works because the quadratic combination
(2/3)*g^2 - (2/3)*g*f + f^2 expands to exactly t - x, which the test
suite pins separately; multiplying by t^(k-1) and adding back x*t^(k-1)
reconstructs t^k.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .logic import CLASSICAL, KLEENE, Semantics, color_class_counts
from .series import PowerSeries, closed_form

GENERATORS = {"kleene": ("t", "f", "u"), "classical": ("r", "s")}
TOTALS = {"kleene": "g", "classical": "g2"}

Tamper = tuple[str, int, int]


def _semantics(logic: str) -> Semantics:
    return KLEENE if logic == "kleene" else CLASSICAL


@dataclass(frozen=True)
class MonoidElement:
    """A formal product of generator powers, as an exponent vector.

    `exponents` lines up with GENERATORS[logic]; the all-zero vector is
    the identity element.  Multiplication adds exponents.
    """

    logic: str
    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.logic not in GENERATORS:
            raise ValueError(f"logic must be 'kleene' or 'classical', got {self.logic!r}")
        names = GENERATORS[self.logic]
        if len(self.exponents) != len(names):
            raise ValueError(
                f"{self.logic} elements need {len(names)} exponents, "
                f"got {len(self.exponents)}"
            )
        if any(e < 0 for e in self.exponents):
            raise ValueError(f"exponents must be nonnegative, got {self.exponents}")

    @classmethod
    def identity(cls, logic: str) -> "MonoidElement":
        return cls(logic, (0,) * len(GENERATORS[logic]))

    @classmethod
    def from_powers(cls, logic: str, **powers: int) -> "MonoidElement":
        names = GENERATORS[logic]
        unknown = set(powers) - set(names)
        if unknown:
            raise ValueError(f"unknown generators for {logic}: {sorted(unknown)}")
        return cls(logic, tuple(powers.get(name, 0) for name in names))

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def is_identity(self) -> bool:
        return self.degree == 0

    def __mul__(self, other: "MonoidElement") -> "MonoidElement":
        if not isinstance(other, MonoidElement):
            return NotImplemented
        if other.logic != self.logic:
            raise ValueError(f"cannot mix {self.logic} and {other.logic} elements")
        return MonoidElement(
            self.logic, tuple(a + b for a, b in zip(self.exponents, other.exponents))
        )

    def __str__(self) -> str:
        if self.is_identity:
            return "1"
        parts = []
        for name, e in zip(GENERATORS[self.logic], self.exponents):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)


@dataclass(frozen=True)
class Witness:
    """First failing coefficient of a check: index and both exact values."""

    n: int
    lhs: Union[int, Fraction]
    rhs: Union[int, Fraction]
    context: str


@dataclass(frozen=True)
class VerificationReport:
    claim: str
    detail: str
    order: int
    verified: bool
    witness: Optional[Witness] = None

    def summary_line(self) -> str:
        status = "PASS" if self.verified else "FAIL"
        line = f"{status} {self.claim} (order {self.order}): {self.detail}"
        if self.witness is not None:
            w = self.witness
            line += f"; first failure at n={w.n}: {w.lhs} vs {w.rhs} [{w.context}]"
        return line


class Realizer:
    """Expands monoid elements into exact truncated power series.

    Generator and total series come from the closed forms; integer
    powers of each are memoized, as are fully realized elements.  The
    optional `tamper` triple (name, index, delta) adds delta to one
    coefficient of one named series, for negative-control runs.
    """

    def __init__(self, logic: str, order: int, tamper: Optional[Tamper] = None):
        if logic not in GENERATORS:
            raise ValueError(f"logic must be 'kleene' or 'classical', got {logic!r}")
        if order < 2:
            raise ValueError(f"order must be at least 2 to check anything, got {order}")
        self.logic = logic
        self.order = order
        self.semantics = _semantics(logic)
        names = GENERATORS[logic] + (TOTALS[logic],)
        self._series = {name: closed_form(name, order) for name in names}
        if tamper is not None:
            self._apply_tamper(tamper)
        self._powers: dict[str, list[PowerSeries]] = {
            name: [PowerSeries.identity(order), series]
            for name, series in self._series.items()
        }
        self._realized: dict[tuple[int, ...], PowerSeries] = {}

    def _apply_tamper(self, tamper: Tamper) -> None:
        name, index, delta = tamper
        if name not in self._series:
            raise ValueError(
                f"tamper target {name!r} is not a {self.logic} series "
                f"(have {sorted(self._series)})"
            )
        if not 0 <= index <= self.order:
            raise ValueError(f"tamper index {index} outside orders 0..{self.order}")
        series = self._series[name]
        coeffs = list(series.coeffs)
        coeffs[index] += delta
        self._series[name] = PowerSeries(coeffs)

    def series(self, name: str) -> PowerSeries:
        return self._series[name]

    def total(self) -> PowerSeries:
        return self._series[TOTALS[self.logic]]

    def power(self, name: str, k: int) -> PowerSeries:
        if k < 0:
            raise ValueError(f"powers must be nonnegative, got {k}")
        memo = self._powers[name]
        while len(memo) <= k:
            memo.append(memo[-1] * memo[1])
        return memo[k]

    def realize(self, element: MonoidElement) -> PowerSeries:
        if element.logic != self.logic:
            raise ValueError(
                f"cannot realize a {element.logic} element with a {self.logic} realizer"
            )
        cached = self._realized.get(element.exponents)
        if cached is not None:
            return cached
        result = PowerSeries.identity(self.order)
        for name, e in zip(GENERATORS[self.logic], element.exponents):
            if e:
                result = result * self.power(name, e)
        self._realized[element.exponents] = result
        return result


# --- sampling ----------------------------------------------------------------


def default_sample(
    logic: str,
    seed: int = 0,
    degree_cap: int = 5,
    random_count: int = 100,
    exponent_cap: int = 8,
) -> tuple[MonoidElement, ...]:
    """Every exponent vector of total degree <= degree_cap (identity
    included), then `random_count` seeded random vectors with each
    exponent <= exponent_cap.  Deterministic for a given seed.
    """
    names = GENERATORS[logic]
    width = len(names)
    elements = [
        MonoidElement(logic, exps)
        for exps in itertools.product(range(degree_cap + 1), repeat=width)
        if sum(exps) <= degree_cap
    ]
    rng = random.Random(seed)
    for _ in range(random_count):
        elements.append(
            MonoidElement(logic, tuple(rng.randint(0, exponent_cap) for _ in range(width)))
        )
    return tuple(elements)


def _pairs(samples: Sequence[MonoidElement]) -> list[tuple[MonoidElement, MonoidElement]]:
    rotated = list(samples[1:]) + list(samples[:1])
    return list(zip(samples, rotated))


def _triples(
    samples: Sequence[MonoidElement],
) -> list[tuple[MonoidElement, MonoidElement, MonoidElement]]:
    k = len(samples)
    return [(samples[i], samples[(i + 1) % k], samples[(i + 7) % k]) for i in range(k)]


# --- checkers ----------------------------------------------------------------


def _compare(
    lhs: PowerSeries,
    rhs: PowerSeries,
    order: int,
    context: str,
    start: int = 0,
) -> Optional[Witness]:
    for n in range(start, order + 1):
        a, b = lhs.coefficient(n), rhs.coefficient(n)
        if a != b:
            return Witness(n=n, lhs=a, rhs=b, context=context)
    return None


def verify_commutativity(
    realizer: Realizer, pairs: Iterable[tuple[MonoidElement, MonoidElement]]
) -> VerificationReport:
    """realize(a)*realize(b) equals realize(b)*realize(a), coefficientwise."""
    order = realizer.order
    count = 0
    for a, b in pairs:
        count += 1
        witness = _compare(
            realizer.realize(a) * realizer.realize(b),
            realizer.realize(b) * realizer.realize(a),
            order,
            f"({a})*({b}) vs ({b})*({a})",
        )
        if witness is not None:
            return VerificationReport(
                claim=f"commutativity[{realizer.logic}]",
                detail=f"product order changed a result among {count} pairs",
                order=order,
                verified=False,
                witness=witness,
            )
    return VerificationReport(
        claim=f"commutativity[{realizer.logic}]",
        detail=f"{count} sampled pairs multiply identically in both orders",
        order=order,
        verified=True,
    )


def verify_associativity(
    realizer: Realizer,
    triples: Iterable[tuple[MonoidElement, MonoidElement, MonoidElement]],
) -> VerificationReport:
    """(a*b)*c equals a*(b*c) on realized series, coefficientwise."""
    order = realizer.order
    count = 0
    for a, b, c in triples:
        count += 1
        ra, rb, rc = realizer.realize(a), realizer.realize(b), realizer.realize(c)
        witness = _compare(
            (ra * rb) * rc,
            ra * (rb * rc),
            order,
            f"(({a})*({b}))*({c}) vs ({a})*(({b})*({c}))",
        )
        if witness is not None:
            return VerificationReport(
                claim=f"associativity[{realizer.logic}]",
                detail=f"association order changed a result among {count} triples",
                order=order,
                verified=False,
                witness=witness,
            )
    return VerificationReport(
        claim=f"associativity[{realizer.logic}]",
        detail=f"{count} sampled triples associate identically",
        order=order,
        verified=True,
    )


def verify_bound(
    realizer: Realizer, elements: Iterable[MonoidElement]
) -> VerificationReport:
    """Every nonidentity element's coefficients are nonnegative integers
    strictly below the total series, for 2 <= n <= order.

    The identity is out of scope (its x^0 coefficient is 1) and raises
    ValueError if passed.
    """
    order = realizer.order
    total = realizer.total()
    count = 0
    for e in elements:
        if e.is_identity:
            raise ValueError("the bound claim excludes the identity element")
        count += 1
        realized = realizer.realize(e)
        for n in range(2, order + 1):
            c = realized.coefficient(n)
            g = total.coefficient(n)
            if c.denominator != 1 or c < 0 or c >= g:
                return VerificationReport(
                    claim=f"bound[{realizer.logic}]",
                    detail=f"a coefficient of {e} escapes [0, total) among {count} elements",
                    order=order,
                    verified=False,
                    witness=Witness(n=n, lhs=c, rhs=g, context=f"[x^{n}]({e}) vs total"),
                )
    return VerificationReport(
        claim=f"bound[{realizer.logic}]",
        detail=(
            f"{count} nonidentity elements stay strictly below the total "
            f"series for 2 <= n <= {order}"
        ),
        order=order,
        verified=True,
    )


def verify_power_identities(realizer: Realizer, k_max: int) -> VerificationReport:
    """The three generator-power identities for 2 <= k <= k_max.

    Three-valued only: the identities relate u, f, t and the total g.
    """
    if realizer.logic != "kleene":
        raise ValueError("power identities are stated for the three-valued generators")
    if k_max < 2:
        raise ValueError(f"k_max must be at least 2, got {k_max}")
    order = realizer.order
    f, g = realizer.series("f"), realizer.series("g")
    for k in range(2, k_max + 1):
        u_lhs = 3 * realizer.power("u", k)
        u_rhs = realizer.power("u", k - 1) - realizer.power("u", k - 2).shift()
        witness = _compare(u_lhs, u_rhs, order, f"3u^{k} vs u^{k - 1} - x*u^{k - 2}")
        if witness is None:
            f_lhs = realizer.power("f", k)
            fk1 = realizer.power("f", k - 1)
            f_rhs = 2 * (fk1 * realizer.series("u")) - fk1 + realizer.power("f", k - 2).shift()
            witness = _compare(
                f_lhs, f_rhs, order, f"f^{k} vs 2f^{k - 1}u - f^{k - 1} + x*f^{k - 2}"
            )
        if witness is None:
            tk1 = realizer.power("t", k - 1)
            t_rhs = (
                Fraction(2, 3) * (tk1 * realizer.power("g", 2))
                - Fraction(2, 3) * (tk1 * g * f)
                + tk1 * realizer.power("f", 2)
                + tk1.shift()
            )
            witness = _compare(
                realizer.power("t", k),
                t_rhs,
                order,
                f"t^{k} vs (2/3)t^{k - 1}g^2 - (2/3)t^{k - 1}gf + t^{k - 1}f^2 + x*t^{k - 1}",
            )
        if witness is not None:
            return VerificationReport(
                claim="power-identities[kleene]",
                detail=f"an identity broke at k={k}",
                order=order,
                verified=False,
                witness=witness,
            )
    return VerificationReport(
        claim="power-identities[kleene]",
        detail=f"u, f and t power identities hold exactly for 2 <= k <= {k_max}",
        order=order,
        verified=True,
    )


def verify_partitions(realizer: Realizer, color_n_max: int = 6) -> VerificationReport:
    """The count series partition the total, and the root-split color
    classes partition the classical total.

    Three-valued: t + f + u = g and g = 3u.  Classical: r + s = g2, the
    four pairwise convolutions of r and s sum to g2^2, g2^2 matches g2
    from n = 2 on, and the convolutions match the brute-force color
    classification for 2 <= n <= color_n_max.
    """
    order = realizer.order
    claim = f"partitions[{realizer.logic}]"

    def fail(detail: str, witness: Witness) -> VerificationReport:
        return VerificationReport(
            claim=claim, detail=detail, order=order, verified=False, witness=witness
        )

    if realizer.logic == "kleene":
        t, f, u = (realizer.series(name) for name in ("t", "f", "u"))
        g = realizer.total()
        witness = _compare(t + f + u, g, order, "t + f + u vs g")
        if witness is not None:
            return fail("t + f + u missed g", witness)
        witness = _compare(3 * u, g, order, "3u vs g")
        if witness is not None:
            return fail("3u missed g", witness)
        return VerificationReport(
            claim=claim,
            detail="t + f + u = g and g = 3u coefficientwise",
            order=order,
            verified=True,
        )

    r, s = realizer.series("r"), realizer.series("s")
    g2 = realizer.total()
    witness = _compare(r + s, g2, order, "r + s vs g2")
    if witness is not None:
        return fail("r + s missed g2", witness)
    quadrants = {
        (1, 1): r * r,
        (1, 0): r * s,
        (0, 1): s * r,
        (0, 0): s * s,
    }
    square = realizer.power("g2", 2)
    four_sum = quadrants[1, 1] + quadrants[1, 0] + quadrants[0, 1] + quadrants[0, 0]
    witness = _compare(four_sum, square, order, "rr + rs + sr + ss vs g2^2")
    if witness is not None:
        return fail("the four convolutions missed g2^2", witness)
    witness = _compare(square, g2, order, "g2^2 vs g2", start=2)
    if witness is not None:
        return fail("g2^2 diverged from g2 at n >= 2", witness)
    for n in range(2, min(color_n_max, order) + 1):
        classes = color_class_counts(n, realizer.semantics)
        for key, series in quadrants.items():
            expected = series.coefficient(n)
            if classes[key] != expected:
                return fail(
                    "brute-force color classes disagreed with the convolutions",
                    Witness(
                        n=n,
                        lhs=classes[key],
                        rhs=expected,
                        context=f"color class {key} at n={n}",
                    ),
                )
    return VerificationReport(
        claim=claim,
        detail=(
            "r + s = g2, the four convolutions sum to g2^2, g2^2 matches g2 "
            f"for n >= 2, and color classes agree for 2 <= n <= {min(color_n_max, order)}"
        ),
        order=order,
        verified=True,
    )


def verify_ideal_samples(
    realizer: Realizer,
    elements: Iterable[MonoidElement],
    power_cap: int = 3,
) -> VerificationReport:
    """Products of a pure generator power with sampled elements keep the
    strict bound, witnessing that multiples of a generator stay inside
    the bounded set.
    """
    order = realizer.order
    total = realizer.total()
    names = GENERATORS[realizer.logic]
    elements = tuple(elements)
    count = 0
    for name in names:
        for k in range(1, power_cap + 1):
            p = MonoidElement.from_powers(realizer.logic, **{name: k})
            for a in elements:
                count += 1
                product = realizer.realize(p * a)
                for n in range(2, order + 1):
                    c = product.coefficient(n)
                    g = total.coefficient(n)
                    if c.denominator != 1 or c < 0 or c >= g:
                        return VerificationReport(
                            claim=f"ideal-containment[{realizer.logic}]",
                            detail=f"a generator multiple escaped the bound among {count} products",
                            order=order,
                            verified=False,
                            witness=Witness(
                                n=n, lhs=c, rhs=g, context=f"[x^{n}](({p})*({a})) vs total"
                            ),
                        )
    return VerificationReport(
        claim=f"ideal-containment[{realizer.logic}]",
        detail=(
            f"{count} products of generator powers (up to {power_cap}) with sampled "
            f"elements stay strictly below the total"
        ),
        order=order,
        verified=True,
    )


def verify_substitution_bounds(
    realizer: Realizer,
    extra_cap: int = 3,
    power_cap: int = 3,
) -> VerificationReport:
    """Domination patterns between mixed and pure generator powers.

    For a, k in the sampled grid and 2 <= n <= order:

        [x^n](u^a * (u*f)^k) <= [x^n]u^k
        [x^n](u^a * (u*t)^k) <= [x^n]t^k
        [x^n](f^a * (f*t)^k) <= [x^n]t^k

    each strict whenever the right side is nonzero.  Three-valued only.
    """
    if realizer.logic != "kleene":
        raise ValueError("substitution bounds are stated for the three-valued generators")
    order = realizer.order
    families = (
        ("u", "f", "u", "[x^n](u^a*(u*f)^k) vs [x^n]u^k"),
        ("u", "t", "t", "[x^n](u^a*(u*t)^k) vs [x^n]t^k"),
        ("f", "t", "t", "[x^n](f^a*(f*t)^k) vs [x^n]t^k"),
    )
    checked = 0
    for extra_name, partner, target, pattern in families:
        for a in range(extra_cap + 1):
            for k in range(1, power_cap + 1):
                checked += 1
                lhs = realizer.realize(
                    MonoidElement.from_powers("kleene", **{extra_name: a + k, partner: k})
                )
                rhs = realizer.power(target, k)
                for n in range(2, order + 1):
                    left, right = lhs.coefficient(n), rhs.coefficient(n)
                    if left > right or (right != 0 and left >= right):
                        return VerificationReport(
                            claim="substitution-bounds[kleene]",
                            detail=f"a domination pattern broke (a={a}, k={k})",
                            order=order,
                            verified=False,
                            witness=Witness(
                                n=n,
                                lhs=left,
                                rhs=right,
                                context=f"{pattern} with a={a}, k={k}",
                            ),
                        )
    return VerificationReport(
        claim="substitution-bounds[kleene]",
        detail=(
            f"{checked} sampled (a, k) choices dominate as required, strictly "
            f"wherever the pure power is nonzero"
        ),
        order=order,
        verified=True,
    )


# --- the whole suite ---------------------------------------------------------


def run_all(
    order: int = 40,
    k_max: int = 6,
    seed: int = 0,
    tamper: Optional[Tamper] = None,
) -> list[VerificationReport]:
    """Run every verification suite for both logics and collect reports.

    A tamper triple applies to whichever logic owns the named series;
    the other logic runs clean.
    """
    reports: list[VerificationReport] = []
    for logic in ("kleene", "classical"):
        owned = set(GENERATORS[logic]) | {TOTALS[logic]}
        local_tamper = tamper if tamper is not None and tamper[0] in owned else None
        realizer = Realizer(logic, order, tamper=local_tamper)
        samples = default_sample(logic, seed=seed)
        nonidentity = [e for e in samples if not e.is_identity]
        reports.append(verify_commutativity(realizer, _pairs(samples)))
        reports.append(verify_associativity(realizer, _triples(samples)))
        reports.append(verify_bound(realizer, nonidentity))
        reports.append(verify_partitions(realizer))
        if logic == "kleene":
            reports.append(verify_power_identities(realizer, k_max))
            reports.append(verify_ideal_samples(realizer, samples[:20]))
            reports.append(verify_substitution_bounds(realizer))
    return reports
