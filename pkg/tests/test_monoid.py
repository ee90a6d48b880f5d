from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from imptables.monoid import (
    GENERATORS,
    MonoidElement,
    Realizer,
    default_sample,
    run_all,
    verify_associativity,
    verify_bound,
    verify_commutativity,
    verify_ideal_samples,
    verify_partitions,
    verify_power_identities,
    verify_substitution_bounds,
)
from imptables.series import PowerSeries, closed_form


def elements(logic, max_exponent=4):
    width = len(GENERATORS[logic])
    return st.tuples(
        *[st.integers(min_value=0, max_value=max_exponent)] * width
    ).map(lambda exps: MonoidElement(logic, exps))


@pytest.fixture(scope="module")
def kleene_realizer():
    return Realizer("kleene", 20)


@pytest.fixture(scope="module")
def classical_realizer():
    return Realizer("classical", 20)


class TestMonoidElement:
    def test_identity(self):
        i = MonoidElement.identity("kleene")
        assert i.is_identity and i.degree == 0
        assert str(i) == "1"

    def test_from_powers(self):
        e = MonoidElement.from_powers("kleene", t=2, u=1)
        assert e.exponents == (2, 0, 1)
        assert str(e) == "t^2*u"
        with pytest.raises(ValueError):
            MonoidElement.from_powers("kleene", r=1)

    def test_multiplication_adds_exponents(self):
        a = MonoidElement.from_powers("classical", r=1, s=2)
        b = MonoidElement.from_powers("classical", s=1)
        assert (a * b).exponents == (1, 3)

    def test_validation(self):
        with pytest.raises(ValueError):
            MonoidElement("kleene", (1, 2))
        with pytest.raises(ValueError):
            MonoidElement("kleene", (1, -1, 0))
        with pytest.raises(ValueError):
            MonoidElement("bogus", (1,))
        with pytest.raises(ValueError):
            MonoidElement.from_powers("kleene", t=1) * MonoidElement.from_powers(
                "classical", r=1
            )

    @given(elements("kleene"), elements("kleene"), elements("kleene"))
    def test_exponent_monoid_laws(self, a, b, c):
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        identity = MonoidElement.identity("kleene")
        assert a * identity == a


class TestRealizer:
    def test_identity_realizes_to_one(self, kleene_realizer):
        series = kleene_realizer.realize(MonoidElement.identity("kleene"))
        assert series == PowerSeries.identity(20)

    def test_uf_prefix(self, kleene_realizer):
        series = kleene_realizer.realize(MonoidElement.from_powers("kleene", u=1, f=1))
        assert tuple(series.coeffs[:4]) == (0, 0, 1, 4)

    def test_t_squared_prefix(self, kleene_realizer):
        series = kleene_realizer.realize(MonoidElement.from_powers("kleene", t=2))
        assert tuple(series.coeffs[:4]) == (0, 0, 1, 10)

    def test_realize_is_cached(self, kleene_realizer):
        e = MonoidElement.from_powers("kleene", t=1, f=1)
        assert kleene_realizer.realize(e) is kleene_realizer.realize(e)

    def test_logic_mismatch(self, kleene_realizer):
        with pytest.raises(ValueError):
            kleene_realizer.realize(MonoidElement.from_powers("classical", r=1))

    def test_generator_powers(self, kleene_realizer):
        u = kleene_realizer.series("u")
        assert kleene_realizer.power("u", 0) == PowerSeries.identity(20)
        assert kleene_realizer.power("u", 3) == u * u * u

    def test_order_floor(self):
        with pytest.raises(ValueError):
            Realizer("kleene", 1)

    @settings(max_examples=25)
    @given(elements("kleene", max_exponent=3), elements("kleene", max_exponent=3))
    def test_realize_is_a_morphism(self, a, b):
        realizer = Realizer("kleene", 10)
        assert realizer.realize(a * b) == realizer.realize(a) * realizer.realize(b)

    def test_tamper_validation(self):
        with pytest.raises(ValueError):
            Realizer("kleene", 10, tamper=("r", 1, 1))
        with pytest.raises(ValueError):
            Realizer("kleene", 10, tamper=("t", 11, 1))

    def test_tamper_shifts_one_coefficient(self):
        clean = Realizer("kleene", 10)
        bent = Realizer("kleene", 10, tamper=("t", 3, 5))
        assert bent.series("t").coefficient(3) == clean.series("t").coefficient(3) + 5
        assert bent.series("t").coefficient(4) == clean.series("t").coefficient(4)


class TestCommutativityAndAssociativity:
    def test_curated_pairs(self, kleene_realizer):
        t = MonoidElement.from_powers("kleene", t=1)
        f = MonoidElement.from_powers("kleene", f=1)
        u2 = MonoidElement.from_powers("kleene", u=2)
        t3f = MonoidElement.from_powers("kleene", t=3, f=1)
        i = MonoidElement.identity("kleene")
        report = verify_commutativity(
            kleene_realizer, [(t, f), (u2, t3f), (i, t3f)]
        )
        assert report.verified and report.witness is None

    def test_identity_pair_realizes_to_partner(self, kleene_realizer):
        a = MonoidElement.from_powers("kleene", u=2, t=1)
        i = MonoidElement.identity("kleene")
        assert kleene_realizer.realize(i) * kleene_realizer.realize(
            a
        ) == kleene_realizer.realize(a)

    def test_curated_triples(self, kleene_realizer):
        t = MonoidElement.from_powers("kleene", t=1)
        f = MonoidElement.from_powers("kleene", f=1)
        u = MonoidElement.from_powers("kleene", u=1)
        u2 = MonoidElement.from_powers("kleene", u=2)
        t3 = MonoidElement.from_powers("kleene", t=3)
        i = MonoidElement.identity("kleene")
        report = verify_associativity(
            kleene_realizer, [(t, f, u), (u2, f, t3), (i, i, t)]
        )
        assert report.verified

    def test_classical_sampled(self, classical_realizer):
        samples = default_sample("classical", seed=3, random_count=10)
        pairs = list(zip(samples, reversed(samples)))
        assert verify_commutativity(classical_realizer, pairs).verified


class TestBound:
    def test_single_generators(self, kleene_realizer):
        t = MonoidElement.from_powers("kleene", t=1)
        report = verify_bound(kleene_realizer, [t])
        assert report.verified
        # spot value behind the claim: t3 = 30 < g3 = 54
        assert kleene_realizer.realize(t).coefficient(3) == 30
        assert kleene_realizer.total().coefficient(3) == 54

    def test_high_valuation_element(self, kleene_realizer):
        e = MonoidElement.from_powers("kleene", u=3, f=2)
        assert verify_bound(kleene_realizer, [e]).verified

    def test_identity_out_of_scope(self, kleene_realizer):
        with pytest.raises(ValueError):
            verify_bound(kleene_realizer, [MonoidElement.identity("kleene")])

    def test_tampered_bound_fails(self):
        # push t3 above g3 = 54
        bent = Realizer("kleene", 10, tamper=("t", 3, 30))
        report = verify_bound(bent, [MonoidElement.from_powers("kleene", t=1)])
        assert not report.verified
        assert report.witness.n == 3
        assert report.witness.lhs == 60
        assert report.witness.rhs == 54


class TestPowerIdentities:
    def test_holds_to_k6(self):
        realizer = Realizer("kleene", 30)
        report = verify_power_identities(realizer, 6)
        assert report.verified

    def test_requires_kleene(self, classical_realizer):
        with pytest.raises(ValueError):
            verify_power_identities(classical_realizer, 3)

    def test_requires_k_at_least_two(self, kleene_realizer):
        with pytest.raises(ValueError):
            verify_power_identities(kleene_realizer, 1)

    def test_quadratic_combination_equals_t_minus_x(self):
        # (2/3)g^2 - (2/3)gf + f^2 = t - x exactly; this is why the t-power
        # identity carries the x*t^(k-1) term.
        order = 30
        t = closed_form("t", order)
        f = closed_form("f", order)
        g = closed_form("g", order)
        combo = Fraction(2, 3) * (g * g) - Fraction(2, 3) * (g * f) + f * f
        x = PowerSeries.x(order)
        assert combo == t - x
        assert combo != t
        assert combo.coefficient(1) == 0 and t.coefficient(1) == 1

    def test_tampered_identity_fails(self):
        bent = Realizer("kleene", 12, tamper=("u", 4, 1))
        report = verify_power_identities(bent, 3)
        assert not report.verified
        assert report.witness is not None


class TestPartitions:
    def test_kleene(self, kleene_realizer):
        report = verify_partitions(kleene_realizer)
        assert report.verified

    def test_classical(self, classical_realizer):
        report = verify_partitions(classical_realizer)
        assert report.verified

    def test_tampered_kleene_partition_fails(self):
        bent = Realizer("kleene", 12, tamper=("t", 3, 1))
        report = verify_partitions(bent)
        assert not report.verified
        assert report.witness.n == 3
        assert report.witness.lhs == 55
        assert report.witness.rhs == 54

    def test_tampered_classical_partition_fails(self):
        bent = Realizer("classical", 12, tamper=("g2", 5, -2))
        report = verify_partitions(bent)
        assert not report.verified
        assert report.witness.n == 5


class TestIdealAndSubstitution:
    def test_ideal_samples(self, kleene_realizer):
        samples = (
            MonoidElement.identity("kleene"),
            MonoidElement.from_powers("kleene", u=1, f=1),
            MonoidElement.from_powers("kleene", t=2, u=2),
        )
        report = verify_ideal_samples(kleene_realizer, samples)
        assert report.verified

    def test_substitution_bounds(self, kleene_realizer):
        report = verify_substitution_bounds(kleene_realizer)
        assert report.verified

    def test_substitution_requires_kleene(self, classical_realizer):
        with pytest.raises(ValueError):
            verify_substitution_bounds(classical_realizer)


class TestSampling:
    def test_sizes(self):
        kleene = default_sample("kleene", seed=0)
        classical = default_sample("classical", seed=0)
        # 56 vectors of degree <= 5 over three generators, 21 over two
        assert len(kleene) == 56 + 100
        assert len(classical) == 21 + 100
        assert all(e.degree <= 5 for e in kleene[:56])
        assert all(max(e.exponents) <= 8 for e in kleene[56:])

    def test_deterministic(self):
        assert default_sample("kleene", seed=7) == default_sample("kleene", seed=7)
        assert default_sample("kleene", seed=7) != default_sample("kleene", seed=8)


class TestRunAll:
    def test_clean_run(self):
        reports = run_all(order=12, k_max=3, seed=0)
        assert len(reports) == 11
        assert all(r.verified for r in reports)
        assert all(r.witness is None for r in reports)

    def test_tamper_hits_only_owning_logic(self):
        reports = run_all(order=12, k_max=3, seed=0, tamper=("t", 3, 1))
        failed = [r for r in reports if not r.verified]
        assert failed
        assert all("kleene" in r.claim for r in failed)
        assert all(r.verified for r in reports if "classical" in r.claim)

    def test_summary_lines(self):
        reports = run_all(order=8, k_max=2, seed=0, tamper=("s", 2, 1))
        lines = [r.summary_line() for r in reports]
        assert any(line.startswith("PASS ") for line in lines)
        failing = [line for line in lines if line.startswith("FAIL ")]
        assert failing and "first failure at n=" in failing[0]
