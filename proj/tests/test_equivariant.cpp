#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "massey/equivariant.hpp"
#include "massey/errors.hpp"
#include "oracles/random_cdga.hpp"
#include "oracles/s2_rotation.hpp"
#include "test_helpers.hpp"

using namespace massey;
using namespace testing_helpers;

namespace {

CohomologyClass cls(const RingPtr& ring, const std::string& name) {
    return ring->project(*ring->algebra()->named_element(name));
}

AlgebraPtr kodaira_thurston(int cap) {
    return build_free_cdga({{"x", 1}, {"y", 1}, {"z", 1}, {"t", 1}}, {{"z", poly({term(1, {"x", "y"})})}}, cap);
}

AlgebraPtr point() {
    TablePresentation t(0);
    t.add_basis("one", 0);
    t.fill_implied_products();
    return t.build();
}

DatumFactory tautological() {
    return [](const ExtendedModel& m, const EulerClass& chi) { return tautological_datum(m.ring(), chi); };
}

HamiltonianTransferDatum s2_datum(int cap) {
    auto c = oracle::s2::build(cap);
    auto fixed = ExtendedModel::build(c.poles, cap);
    auto e = fixed.embed(cls(fixed.base_ring(), "e"));
    auto chi = cup(Scalar(2) * e - fixed.ring()->unit(), fixed.h());
    return {compute_cohomology(c.ambient), fixed.ring(), c.restrict, c.push, EulerClass::synthetic(chi)};
}

}  // namespace

TEST_CASE("Cartan model of a trivial action") {
    auto poly_ring = ExtendedModel::build(point(), 8);
    CHECK(poly_ring.ring()->betti_numbers() == std::vector<std::size_t>{1, 0, 1, 0, 1, 0, 1, 0});
    CHECK(poly_ring.h().to_string() == "h");

    auto heis = ExtendedModel::build(heisenberg(4), 12);
    // Sum formula on [1, 2, 2, 1].
    CHECK(heis.ring()->betti_numbers() == std::vector<std::size_t>{1, 2, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3});
    CHECK_THROWS_AS(ExtendedModel::build(heisenberg(4), 3), CapOverflow);

    std::mt19937 rng(5);
    for (int i = 0; i < 10; ++i) {
        auto a = oracle::random_free_cdga(rng, 4);
        auto ext = ExtendedModel::build(a, 7);
        auto base_betti = ext.base_ring()->betti_numbers();
        for (int n = 0; n <= ext.ring()->top_degree(); ++n) {
            std::size_t expected = 0;
            for (int j = 0; 2 * j <= n; ++j) expected += base_betti[n - 2 * j];
            CHECK(ext.ring()->betti(n) == expected);
        }
    }
}

TEST_CASE("Euler classes") {
    auto model = ExtendedModel::build(heisenberg(4), 9);
    auto br = model.base_ring();
    auto xz = br->basis_class(2, 0);
    REQUIRE(xz.to_string() == "x*z");

    auto chi = euler_class(model, {{br->zero(2), 1}});
    CHECK(chi.m == 1);
    CHECK(chi.chi == model.h());
    CHECK(*chi.leading == br->unit());

    auto chi2 = euler_class(model, {{br->zero(2), 1}, {br->zero(2), 2}});
    CHECK(chi2.chi == Scalar(2) * model.h_power(2));

    auto chi3 = euler_class(model, {{xz, 2}});
    CHECK(chi3.chi == model.embed(xz) + Scalar(2) * model.h());
    CHECK(*chi3.leading == Scalar(2) * br->unit());

    CHECK_THROWS_AS(WeightedLineBundleDatum(xz, 0), ValidationError);
    CHECK_THROWS_AS(WeightedLineBundleDatum(cls(br, "x"), 1), ValidationError);
    CHECK_THROWS_AS(euler_class(ExtendedModel::build(heisenberg(4), 4),
                                {{br->zero(2), 1}, {br->zero(2), 1}}),
                    CapOverflow);
}

TEST_CASE("zero-divisor check") {
    auto model = ExtendedModel::build(heisenberg(4), 9);
    auto br = model.base_ring();
    auto xz = br->basis_class(2, 0);
    CHECK(verify_not_zero_divisor(model.ring(), euler_class(model, {{br->zero(2), 1}})).holds);
    CHECK(verify_not_zero_divisor(model.ring(), euler_class(model, {{xz, 2}})).holds);
    auto bad = verify_not_zero_divisor(model.ring(), EulerClass::synthetic(model.embed(xz)));
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.failing_degree);
    CHECK(*bad.failing_degree == 1);
    CHECK(cup(model.embed(xz), *bad.kernel_witness).is_zero());
}

TEST_CASE("h-coefficients") {
    auto model = ExtendedModel::build(heisenberg(4), 9);
    auto br = model.base_ring();
    auto xz = br->basis_class(2, 0);
    auto u = br->basis_class(2, 1);

    auto d1 = h_coefficients(model, model.embed(u));
    REQUIRE(d1.coefficients.size() == 2);
    CHECK(d1.coefficients[0] == u);
    CHECK(d1.coefficients[1].is_zero());

    auto d2 = h_coefficients(model, model.embed(xz, 3));
    REQUIRE(d2.coefficients.size() == 5);
    for (int j : {0, 1, 2, 4}) CHECK(d2.coefficients[j].is_zero());
    CHECK(d2.coefficients[3] == xz);

    auto chi = euler_class(model, {{xz, 2}});
    auto d3 = h_coefficients(model, chi.chi);
    CHECK(d3.coefficients[0] == xz);
    CHECK(d3.coefficients[1] == Scalar(2) * br->unit());

    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int n = 0; n <= model.ring()->top_degree(); ++n) {
        Vector v(model.ring()->betti(n));
        for (auto& s : v) s = coeff(rng);
        auto c = model.ring()->from_coords(n, v);
        CHECK(reconstruct(model, h_coefficients(model, c)) == c);
    }
}

TEST_CASE("transfer check on the Heisenberg model") {
    auto a = heisenberg(4);
    auto ring = compute_cohomology(a);
    auto x = cls(ring, "x"), y = cls(ring, "y");
    auto xz = ring->basis_class(2, 0);

    SUBCASE("chi = h") {
        auto rep = check_lemma_3_2(a, x, x, y, {{ring->zero(2), 1}});
        CHECK(rep.required_cap == 9);
        CHECK(rep.cap == 9);
        CHECK(rep.non_vanishing());
        const auto& model = *rep.model;
        CHECK(*rep.witness == model.embed(xz, 3));
        CHECK(rep.witness_in_product);
        CHECK(rep.argument->fires());
        CHECK(rep.argument->consistent());
        CHECK_FALSE(rep.argument->z_in_ext_ideal);
        CHECK(rep.scaled_product->indeterminacy.dim() == 0);
        CHECK(rep.scaled_product->representative->to_string() == "x*z*h^3");
        for (const auto& c : rep.scaling_chain) CHECK(c.holds());
        CHECK(rep.inclusion_containment->holds());
        CHECK(rep.retraction_containment->holds());
        CHECK(rep.witness_coefficients->coefficients[3] == model.to_base(xz));
    }
    SUBCASE("chi = xz + 2h") {
        auto rep = check_lemma_3_2(a, x, x, y, {{xz, 2}}, 12);
        CHECK(rep.non_vanishing());
        CHECK(rep.argument->consistent());
    }
    SUBCASE("m = 2 with weights (1, 1)") {
        auto rep = check_lemma_3_2(a, x, x, y, {{ring->zero(2), 1}, {ring->zero(2), 1}});
        CHECK(rep.required_cap == 15);
        CHECK(rep.non_vanishing());
        CHECK(*rep.witness == rep.model->embed(xz, 6));
    }
    SUBCASE("cap too small") {
        try {
            check_lemma_3_2(a, x, x, y, {{ring->zero(2), 1}}, 8);
            FAIL("expected CapOverflow");
        } catch (const CapOverflow& e) {
            CHECK(e.required_cap() == 9);
        }
    }
    SUBCASE("premise violated on the torus") {
        auto t = exterior_xy(3);
        auto tr = compute_cohomology(t);
        CHECK_THROWS_WITH_AS(check_lemma_3_2(t, cls(tr, "x"), cls(tr, "x"), cls(tr, "y"), {{tr->zero(2), 1}}),
                             doctest::Contains("premise violated"), PremiseViolated);
    }
}

TEST_CASE("coefficient argument fires exactly when x is outside (u, w)") {
    auto model = ExtendedModel::build(kodaira_thurston(4), 11);
    auto br = model.base_ring();
    auto t = cls(br, "t"), x = cls(br, "x");
    auto chi = euler_class(model, {{br->zero(2), 3}});

    auto xt = br->project(multiply(gen(model.base(), "x"), gen(model.base(), "t")));
    auto inside = h_coefficient_argument(model, chi, t, x, xt);
    CHECK(inside.x_in_base_ideal);
    CHECK(inside.z_in_ext_ideal);
    CHECK_FALSE(inside.fires());
    CHECK(*inside.cancellation_holds);
    CHECK(*inside.top_coefficient_identity);
    CHECK(inside.consistent());

    auto xz = br->project(multiply(gen(model.base(), "x"), gen(model.base(), "z")));
    auto yz = br->project(multiply(gen(model.base(), "y"), gen(model.base(), "z")));
    auto outside = h_coefficient_argument(model, chi, t, t, xz + yz);
    CHECK_FALSE(outside.x_in_base_ideal);
    CHECK_FALSE(outside.z_in_ext_ideal);
    CHECK(outside.fires());
    CHECK(outside.consistent());
}

TEST_CASE("transfer data") {
    SUBCASE("tautological datum is valid") {
        auto model = ExtendedModel::build(heisenberg(4), 9);
        auto br = model.base_ring();
        for (auto chi : {euler_class(model, {{br->zero(2), 1}}), euler_class(model, {{br->basis_class(2, 0), 2}})}) {
            auto v = validate_transfer_datum(tautological_datum(model.ring(), chi));
            CHECK(v.valid());
            CHECK(v.corollary_consistent);
        }
    }
    SUBCASE("push zeroed in one degree") {
        auto model = ExtendedModel::build(heisenberg(4), 9);
        auto d = tautological_datum(model.ring(), euler_class(model, {{model.base_ring()->zero(2), 1}}));
        d.push[2] = Matrix(d.push[2].rows(), d.push[2].cols());
        auto v = validate_transfer_datum(d);
        CHECK_FALSE(v.valid());
        CHECK_FALSE(v.projection_formula.passed);
        CHECK(*v.projection_formula.degree == 2);
        CHECK(v.projection_formula.witness.has_value());
        CHECK_FALSE(v.push_injective.passed);
        CHECK(v.restrict_injective.passed);
        CHECK(v.corollary_consistent);
        CHECK_THROWS_AS(check_lemma_3_1(d, model.ring()->unit(), model.ring()->unit(), model.ring()->unit()),
                        InvalidDatum);
    }
    SUBCASE("wrong shapes are reported") {
        auto model = ExtendedModel::build(heisenberg(4), 9);
        auto d = tautological_datum(model.ring(), euler_class(model, {{model.base_ring()->zero(2), 1}}));
        d.push.pop_back();
        CHECK_FALSE(validate_transfer_datum(d).shape.passed);
    }
    SUBCASE("rotation of the sphere") {
        auto d = s2_datum(14);
        auto v = validate_transfer_datum(d);
        for (const auto* c : v.checks()) CHECK_MESSAGE(c->passed, c->name << ": " << c->detail);
        CHECK(v.valid());
        // The tautological datum over the pole algebra is valid as well.
        CHECK(validate_transfer_datum(tautological_datum(d.fixed, d.chi)).valid());
    }
    SUBCASE("a single pole cannot carry the rotation") {
        auto c = oracle::s2::build(10);
        auto fixed = ExtendedModel::build(point(), 10);
        auto ambient = compute_cohomology(c.ambient);
        std::vector<Matrix> restrict, push;
        for (int n = 0; n <= 9; ++n) {
            Matrix r(fixed.ring()->betti(n), ambient->betti(n));
            for (std::size_t j = 0; j < r.cols(); ++j) r(0, j) = 1;  // h^k and tau h^{k-1} both go to h^k
            restrict.push_back(r);
        }
        for (int n = 0; n <= 7; ++n) {
            Matrix p(ambient->betti(n + 2), fixed.ring()->betti(n));
            if (p.cols()) p(1, 0) = 1;  // h^k -> tau h^k
            push.push_back(p);
        }
        HamiltonianTransferDatum d{ambient, fixed.ring(), restrict, push, EulerClass::synthetic(fixed.h())};
        auto v = validate_transfer_datum(d);
        CHECK_FALSE(v.restrict_injective.passed);
        CHECK(*v.restrict_injective.degree == 2);
        CHECK(v.projection_formula.passed);
    }
}

TEST_CASE("ambient products from transfer data") {
    SUBCASE("tautological datum reproduces the scaled product") {
        auto model = ExtendedModel::build(heisenberg(4), 9);
        auto chi = euler_class(model, {{model.base_ring()->zero(2), 1}});
        auto d = tautological_datum(model.ring(), chi);
        auto x = model.embed(cls(model.base_ring(), "x")), y = model.embed(cls(model.base_ring(), "y"));
        auto rep = check_lemma_3_1(d, x, x, y);
        CHECK(rep.verdict == TransferVerdict::NonVanishing);
        CHECK(rep.uv_pulls_back);
        CHECK(rep.vw_pulls_back);
        CHECK(rep.containment->holds());
        CHECK(rep.ambient_product->representative == rep.scaled_product->representative);
        CHECK_FALSE(rep.ambient_product->vanishes());
    }
    SUBCASE("sphere: everything vanishes, inconclusive") {
        auto d = s2_datum(14);
        auto e = cls(d.fixed, "e");
        auto h = d.fixed->project(*d.fixed->algebra()->named_element("h"));
        auto u = cup(e, h), v = cup(d.fixed->unit() - e, h);
        auto rep = check_lemma_3_1(d, u, v, u);
        CHECK(rep.verdict == TransferVerdict::Inconclusive);
        CHECK(rep.scaled_product->vanishes());
        CHECK(rep.ambient_product->vanishes());
        CHECK(rep.containment->holds());
    }
}

TEST_CASE("transfer pipeline") {
    auto a = heisenberg(4);
    auto ring = compute_cohomology(a);
    auto x = cls(ring, "x"), y = cls(ring, "y");
    auto rep = theorem_1_1_pipeline(a, x, x, y, {{ring->zero(2), 1}}, tautological());
    CHECK(rep.status == TheoremStatus::Confirmed);
    REQUIRE(rep.lemma31);
    CHECK(rep.validation->valid());

    auto t = exterior_xy(3);
    auto tr = compute_cohomology(t);
    CHECK_THROWS_AS(theorem_1_1_pipeline(t, cls(tr, "x"), cls(tr, "x"), cls(tr, "y"), {{tr->zero(2), 1}},
                                         tautological()),
                    PremiseViolated);
}

TEST_CASE("family scans") {
    auto a = heisenberg(4);
    auto x = gen(a, "x"), y = gen(a, "y");
    auto zero = a->zero(2);
    CHECK(scan_families({}).results.empty());
    CHECK(scan_families({}).work == 0);

    FamilyConfig good{"heisenberg-h", a, x, x, y, {{zero, 1}}, tautological(), std::nullopt};
    FamilyConfig twisted{"heisenberg-xz", a, x, x, y, {{multiply(x, gen(a, "z")), 2}}, tautological(), 12};
    auto torus = exterior_xy(3);
    FamilyConfig formal{"torus", torus, gen(torus, "x"), gen(torus, "x"), gen(torus, "y"), {{torus->zero(2), 1}},
                        tautological(), std::nullopt};
    auto report = scan_families({good, twisted, formal});
    REQUIRE(report.results.size() == 3);
    CHECK(report.findings() == 0);
    CHECK(report.results[0].outcome == ConfigOutcome::Consistent);
    CHECK(report.results[1].outcome == ConfigOutcome::Consistent);
    CHECK(report.results[2].outcome == ConfigOutcome::NoPremise);

    FamilyConfig corrupt = good;
    corrupt.name = "corrupt";
    corrupt.datum = [](const ExtendedModel& m, const EulerClass& chi) {
        auto d = tautological_datum(m.ring(), chi);
        d.push[3] = Matrix(d.push[3].rows(), d.push[3].cols());
        return d;
    };
    auto bad = scan_families({corrupt});
    CHECK(bad.findings() == 0);
    CHECK(bad.invalid_data() == 1);

    auto limited = scan_families({good, good, good}, 1);
    CHECK(limited.budget_exhausted);
    CHECK(limited.results.size() == 1);
    CHECK(massey_tally().disagreements == 0);
}
