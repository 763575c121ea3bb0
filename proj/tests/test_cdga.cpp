#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "massey/cdga.hpp"
#include "massey/errors.hpp"
#include "oracles/random_cdga.hpp"
#include "test_helpers.hpp"

using namespace massey;
using namespace testing_helpers;

TEST_CASE("free presentation: exterior algebra") {
    auto a = exterior_xy(4);
    CHECK(a->dims() == std::vector<std::size_t>{1, 2, 1, 0, 0});
    CHECK(a->labels(2) == std::vector<std::string>{"x*y"});
    CHECK(a->kind() == PresentationKind::Free);
}

TEST_CASE("free presentation: Heisenberg model") {
    auto a = heisenberg(3);
    CHECK(a->dims() == std::vector<std::size_t>{1, 3, 3, 1});
    CHECK(a->labels(2) == std::vector<std::string>{"x*y", "x*z", "y*z"});
    Element x = gen(a, "x"), y = gen(a, "y"), z = gen(a, "z");
    CHECK(differential(z) == multiply(x, y));
    CHECK(differential(multiply(x, z)).is_zero());
    CHECK(differential(multiply(y, z)).is_zero());
    CHECK(differential(z).to_string() == "x*y");
}

TEST_CASE("odd square in a differential is accepted as zero") {
    auto a = build_free_cdga({{"x", 1}, {"y", 1}, {"z", 1}}, {{"z", poly({term(1, {"x", "x"})})}}, 3);
    CHECK(differential(gen(a, "z")).is_zero());
}

TEST_CASE("ill-graded differential and d^2 != 0 are rejected") {
    CHECK_THROWS_AS(build_free_cdga({{"x", 1}, {"z", 1}}, {{"z", poly({term(1, {"x"})})}}, 3), ValidationError);
    CHECK_THROWS_AS(build_free_cdga({{"x", 1}}, {{"w", poly({term(1, {"x"})})}}, 3), ValidationError);
    try {
        build_free_cdga({{"t", 1}, {"a", 2}, {"b", 2}},
                        {{"t", poly({term(1, {"a"})})}, {"b", poly({term(1, {"t", "a"})})}}, 5);
        FAIL("expected d^2 failure");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("'b'") != std::string::npos);
        CHECK(std::string(e.what()).find("a^2") != std::string::npos);
    }
    CHECK_THROWS_AS(build_free_cdga({{"x", 3}}, {}, 2), CapOverflow);
    CHECK_THROWS_AS(build_free_cdga({{"x", 1}, {"x", 1}}, {}, 2), ValidationError);
}

TEST_CASE("element arithmetic") {
    auto a = heisenberg(3);
    Element x = gen(a, "x"), y = gen(a, "y"), z = gen(a, "z");
    CHECK(multiply(x, y) == -multiply(y, x));
    CHECK(multiply(x, x).is_zero());
    CHECK(multiply(a->unit(), z) == z);
    CHECK(multiply(z, a->unit()) == z);
    CHECK(bar(x) == -x);
    CHECK(bar(multiply(x, z)) == multiply(x, z));
    CHECK(bar(a->zero(1)).is_zero());
    CHECK(bar(bar(z)) == z);
    // bar(ab) = (-1)^{|a|+|b|} ab
    CHECK(bar(multiply(x, y)) == multiply(x, y));
    CHECK_THROWS_AS(multiply(multiply(x, y), multiply(x, z)), CapOverflow);
    CHECK_THROWS_AS(differential(multiply(multiply(x, y), z)), CapOverflow);
    auto other = heisenberg(3);
    CHECK_THROWS_AS(multiply(x, gen(other, "x")), DimensionMismatch);
}

TEST_CASE("table presentations") {
    SUBCASE("cohomology of S^2") {
        TablePresentation t(2);
        t.add_basis("one", 0);
        t.add_basis("s", 2);
        t.fill_implied_products();
        auto a = t.build();
        CHECK(a->dims() == std::vector<std::size_t>{1, 0, 1});
        CHECK(a->kind() == PresentationKind::Table);
    }
    SUBCASE("commutativity violation names the pair") {
        TablePresentation t(2);
        t.add_basis("one", 0);
        t.add_basis("a", 1);
        t.add_basis("b", 1);
        t.add_basis("ab", 2);
        t.set_product("a", "b", {{1, "ab"}});
        t.set_product("b", "a", {{1, "ab"}});
        t.fill_implied_products();
        try {
            t.build();
            FAIL("expected rejection");
        } catch (const ValidationError& e) {
            std::string msg = e.what();
            CHECK(msg.find("commutativity") != std::string::npos);
            CHECK(msg.find("a (degree 1)") != std::string::npos);
            CHECK(msg.find("b (degree 1)") != std::string::npos);
        }
    }
    SUBCASE("truncated polynomial ring") {
        TablePresentation t(6);
        t.add_basis("one", 0);
        t.add_basis("u", 2);
        t.add_basis("u2", 4);
        t.add_basis("u3", 6);
        t.set_product("u", "u", {{1, "u2"}});
        t.set_product("u", "u2", {{1, "u3"}});
        t.fill_implied_products();
        auto a = t.build();
        CHECK(a->dims() == std::vector<std::size_t>{1, 0, 1, 0, 1, 0, 1});
        Element u = *a->named_element("u");
        CHECK(power(u, 3) == *a->named_element("u3"));
    }
    SUBCASE("associativity violation") {
        TablePresentation t(6);
        t.add_basis("one", 0);
        t.add_basis("a", 2);
        t.add_basis("b", 2);
        t.add_basis("p", 4);
        t.add_basis("q", 6);
        t.set_product("b", "b", {{1, "p"}});
        t.set_product("a", "p", {{1, "q"}});
        t.fill_implied_products();
        CHECK_THROWS_WITH_AS(t.build(), doctest::Contains("associativity"), ValidationError);
    }
    SUBCASE("Leibniz violation") {
        TablePresentation t(2);
        t.add_basis("one", 0);
        t.add_basis("a", 1);
        t.add_basis("c", 2);
        t.set_differential("one", {{1, "a"}});
        t.fill_implied_products();
        CHECK_THROWS_AS(t.build(), ValidationError);
    }
}

TEST_CASE("polynomial extension") {
    SUBCASE("ground field gives a polynomial ring") {
        TablePresentation t(0);
        t.add_basis("one", 0);
        t.fill_implied_products();
        auto point = t.build();
        auto ext = tensor_polynomial_generator(point, "h", 8);
        CHECK(ext->dims() == std::vector<std::size_t>{1, 0, 1, 0, 1, 0, 1, 0, 1});
        CHECK(ext->labels(4) == std::vector<std::string>{"h^2"});
    }
    SUBCASE("exterior algebra on one odd generator") {
        auto ext = tensor_polynomial_generator(build_free_cdga({{"x", 1}}, {}, 1), "h", 5);
        CHECK(ext->dims() == std::vector<std::size_t>{1, 1, 1, 1, 1, 1});
        CHECK(ext->labels(5) == std::vector<std::string>{"x*h^2"});
    }
    SUBCASE("differential acts as d (x) 1 on Heisenberg") {
        auto ext = tensor_polynomial_generator(heisenberg(3), "h", 8);
        Element h = gen(ext, "h"), x = gen(ext, "x"), y = gen(ext, "y"), z = gen(ext, "z");
        CHECK(differential(multiply(z, h)) == multiply(multiply(x, y), h));
        CHECK(differential(h).is_zero());
        CHECK(multiply(h, z) == multiply(z, h));
        CHECK(!find_structure_violation(*ext).has_value());
        auto base = ext->extension_base();
        for (int n = 0; n <= ext->cap(); ++n) {
            std::size_t expected = 0;
            for (int j = 0; 2 * j <= n; ++j) expected += base->dim(n - 2 * j);
            CHECK(ext->dim(n) == expected);
        }
    }
    SUBCASE("name clash") { CHECK_THROWS_AS(tensor_polynomial_generator(heisenberg(3), "x", 6), ValidationError); }
}

TEST_CASE("extension retraction undoes the inclusion") {
    auto ext = tensor_polynomial_generator(heisenberg(3), "h", 7);
    auto inc = extension_inclusion(ext);
    auto ret = extension_retraction(ext);
    auto base = ext->extension_base();
    for (int p = 0; p <= base->cap(); ++p)
        for (std::size_t i = 0; i < base->dim(p); ++i) {
            Element a = base->basis_element(p, i);
            CHECK(ret.apply(inc.apply(a)) == a);
            for (int q = 0; p + q <= base->cap(); ++q)
                for (std::size_t j = 0; j < base->dim(q); ++j) {
                    Element b = base->basis_element(q, j);
                    CHECK(inc.apply(multiply(a, b)) == multiply(inc.apply(a), inc.apply(b)));
                }
        }
}

TEST_CASE("morphisms") {
    auto a = heisenberg(3);
    SUBCASE("identity") {
        std::map<std::string, Element> images{{"x", gen(a, "x")}, {"y", gen(a, "y")}, {"z", gen(a, "z")}};
        auto f = build_morphism(a, a, images);
        for (int n = 0; n <= 3; ++n) CHECK(f.matrix(n) == Matrix::identity(a->dim(n)));
    }
    SUBCASE("inclusion into the extension is injective") {
        auto ext = tensor_polynomial_generator(a, "h", 6);
        std::map<std::string, Element> images{{"x", gen(ext, "x")}, {"y", gen(ext, "y")}, {"z", gen(ext, "z")}};
        auto f = build_morphism(a, ext, images);
        for (int n = 0; n <= f.top_degree(); ++n) CHECK(rank(f.matrix(n)) == a->dim(n));
    }
    SUBCASE("z -> 0 fails d-commutation") {
        std::map<std::string, Element> images{{"x", gen(a, "x")}, {"y", gen(a, "y")}, {"z", a->zero(1)}};
        CHECK_THROWS_WITH_AS(build_morphism(a, a, images), doctest::Contains("generator 'z'"), ValidationError);
    }
    SUBCASE("degree mismatch and missing images") {
        std::map<std::string, Element> images{{"x", gen(a, "x")}, {"y", multiply(gen(a, "x"), gen(a, "y"))},
                                              {"z", gen(a, "z")}};
        CHECK_THROWS_AS(build_morphism(a, a, images), ValidationError);
        CHECK_THROWS_AS(build_morphism(a, a, {{"x", gen(a, "x")}}), ValidationError);
    }
    SUBCASE("basis-image morphism rejects a non-multiplicative map") {
        auto t = exterior_xy(2);
        std::vector<std::vector<Element>> images(3);
        images[0] = {t->unit()};
        images[1] = {gen(t, "x"), gen(t, "y")};
        images[2] = {t->zero(2)};
        CHECK_THROWS_WITH_AS(build_morphism_from_basis(t, t, images), doctest::Contains("multiplicative"),
                             ValidationError);
    }
}

TEST_CASE("with_cap") {
    auto a = heisenberg(3);
    CHECK(a->with_cap(6)->dims() == std::vector<std::size_t>{1, 3, 3, 1, 0, 0, 0});
    TablePresentation t(2, /*truncated=*/true);
    t.add_basis("one", 0);
    t.add_basis("u", 2);
    t.fill_implied_products();
    CHECK_THROWS_AS(t.build()->with_cap(4), CapOverflow);
    TablePresentation f(2);
    f.add_basis("one", 0);
    f.add_basis("u", 2);
    f.fill_implied_products();
    CHECK(f.build()->with_cap(4)->dims() == std::vector<std::size_t>{1, 0, 1, 0, 0});
}

TEST_CASE("random free CDGAs satisfy every structural law") {
    std::mt19937 rng(42);
    for (int i = 0; i < 25; ++i) {
        auto a = oracle::random_free_cdga(rng, 4);
        auto violation = find_structure_violation(*a);
        CHECK_MESSAGE(!violation.has_value(), *violation);
        auto ext = tensor_polynomial_generator(a, "h", 5);
        CHECK(!find_structure_violation(*ext).has_value());
    }
}
