#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include "branchlift/cover.hpp"
#include "branchlift/json_io.hpp"
#include "oracles.hpp"

using namespace branchlift;

TEST_CASE("admissibility validation names the violated clause") {
    CHECK_NOTHROW(cyclic_cover(5, {1, 1, 3}));

    try {
        cyclic_cover(2, {1, 1, 1});
        FAIL("expected NonzeroSum");
    } catch (const AdmissibilityError& e) {
        CHECK(e.clause() == AdmissibilityClause::NonzeroSum);
    }

    try {
        cyclic_cover(4, {2, 2});
        FAIL("expected NotGenerating");
    } catch (const AdmissibilityError& e) {
        CHECK(e.clause() == AdmissibilityClause::NotGenerating);
    }

    try {
        cyclic_cover(5, {1, 0, 4});
        FAIL("expected ZeroEntry");
    } catch (const AdmissibilityError& e) {
        CHECK(e.clause() == AdmissibilityClause::ZeroEntry);
        CHECK(e.index() == 1);
    }

    try {
        cyclic_cover(3, {0});
        FAIL("expected TupleTooShort");
    } catch (const AdmissibilityError& e) {
        CHECK(e.clause() == AdmissibilityClause::TupleTooShort);
    }

    // k=2 with |A|=2 is degenerate but valid: the (1,1) double cover
    CHECK_NOTHROW(cyclic_cover(2, {1, 1}));
}

TEST_CASE("equivalence witnesses") {
    auto c113 = cyclic_cover(5, {1, 1, 3});
    auto c221 = cyclic_cover(5, {2, 2, 1});
    auto c131 = cyclic_cover(5, {1, 3, 1});

    // u=2 sends (1,1,3) to (2,2,6 mod 5) = (2,2,1)
    auto w = equivalent(c113, c221);
    REQUIRE(w.has_value());
    CHECK(w->images[0].coeffs[0] == 2);

    auto id = equivalent(c113, c113);
    REQUIRE(id.has_value());
    CHECK(c113.group().is_identity(*id));

    // pointwise equivalence is positional: u is forced to 1 by the first
    // coordinate and then fails at the second
    CHECK_FALSE(equivalent(c113, c131).has_value());

    // different k or different group: immediately inequivalent
    CHECK_FALSE(equivalent(c113, cyclic_cover(5, {1, 4})).has_value());
    CHECK_FALSE(equivalent(cyclic_cover(2, {1, 1}), cyclic_cover(3, {1, 2})).has_value());
}

TEST_CASE("canonical form") {
    auto c221 = cyclic_cover(5, {2, 2, 1});
    auto c113 = cyclic_cover(5, {1, 1, 3});
    auto c311 = cyclic_cover(5, {3, 1, 1});
    auto want = c113.tuple();

    CHECK(canonical_form(c221) == want);
    CHECK(canonical_form(c113) == want);
    CHECK(canonical_form(c311, /*unlabeled=*/true) == want);

    // labeled mode keeps position: (3,1,1) is its own labeled class
    CHECK(canonical_form(c311) != want);
}

TEST_CASE("surface invariants") {
    auto s = surface_invariants(cyclic_cover(5, {1, 1, 3}));
    CHECK(s.euler_characteristic == -2);
    CHECK(s.genus == 2);
    CHECK(s.hyperbolic);

    auto sphere = surface_invariants(cyclic_cover(2, {1, 1}));
    CHECK(sphere.euler_characteristic == 2);
    CHECK(sphere.genus == 0);
    CHECK_FALSE(sphere.hyperbolic);

    auto hyper6 = surface_invariants(cyclic_cover(2, {1, 1, 1, 1, 1, 1}));
    CHECK(hyper6.euler_characteristic == -2);
    CHECK(hyper6.genus == 2);

    CHECK_FALSE(is_hyperbolic(cyclic_cover(3, {1, 1, 1})));  // torus
    CHECK_FALSE(is_hyperbolic(cyclic_cover(2, {1, 1, 1, 1})));
    CHECK(is_hyperbolic(cyclic_cover(5, {1, 1, 3})));
}

TEST_CASE("every admissible 2-tuple gives the sphere, n <= 30") {
    for (std::int64_t n = 2; n <= 30; ++n) {
        for (std::int64_t a = 1; a < n; ++a) {
            if (std::gcd(a, n) != 1) continue;  // a must generate for k=2
            auto s = surface_invariants(cyclic_cover(n, {a, n - a}));
            CHECK(s.euler_characteristic == 2);
            CHECK(s.genus == 0);
        }
    }
}

TEST_CASE("hyperelliptic genus formula, k even up to 12") {
    for (int k = 2; k <= 12; k += 2) {
        auto s = surface_invariants(cyclic_cover(2, std::vector<std::int64_t>(k, 1)));
        CHECK(s.genus == (k - 2) / 2);
    }
}

TEST_CASE("equivalent iff equal canonical forms, exhaustive n <= 8, k <= 5") {
    for (std::int64_t n = 2; n <= 8; ++n) {
        for (int k = 2; k <= 5; ++k) {
            auto tuples = oracles::enumerate_admissible_naive({n}, k);
            GroupSpec g({n});
            std::vector<CoverSpec> covers;
            for (const auto& t : tuples) covers.emplace_back(g, oracles::to_tuple(g, t));
            // compare every pair through both routes
            for (std::size_t i = 0; i < covers.size(); ++i) {
                auto ci = canonical_form(covers[i]);
                for (std::size_t j = i; j < covers.size(); ++j) {
                    bool same_canon = ci == canonical_form(covers[j]);
                    auto w = equivalent(covers[i], covers[j]);
                    CHECK(same_canon == w.has_value());
                    if (w) {
                        for (int p = 0; p < covers[i].k(); ++p)
                            CHECK(g.apply(*w, covers[i].tuple()[p]) == covers[j].tuple()[p]);
                    }
                }
            }
        }
    }
}

TEST_CASE("canonical form is idempotent and invariants are class functions") {
    for (std::int64_t n : {5, 6, 8}) {
        GroupSpec g({n});
        for (const auto& t : oracles::enumerate_admissible_naive({n}, 3)) {
            CoverSpec c(g, oracles::to_tuple(g, t));
            auto canon = canonical_form(c);
            CoverSpec canon_cover(g, canon);
            CHECK(canonical_form(canon_cover) == canon);
            CHECK(surface_invariants(c) == surface_invariants(canon_cover));

            auto canon_unlabeled = canonical_form(c, true);
            CHECK(canonical_form(CoverSpec(g, canon_unlabeled), true) == canon_unlabeled);
        }
    }
}

TEST_CASE("cover JSON round trip") {
    auto c = cyclic_cover(5, {1, 1, 3});
    auto j = cover_to_json(c);
    CHECK(j.dump() == R"({"invariant_factors":[5],"tuple":[[1],[1],[3]]})");
    CHECK(cover_from_json(j) == c);

    GroupSpec g({2, 4});
    CoverSpec nc(g, {g.element({1, 0}), g.element({0, 1}), g.element({1, 3})});
    CHECK(cover_from_json(cover_to_json(nc)) == nc);

    CHECK_THROWS_AS(cover_from_json(nlohmann::json{{"tuple", {{1}}}}), Error);
    // inadmissible fixtures are rejected with the violated clause
    nlohmann::json bad{{"invariant_factors", {4}}, {"tuple", {{2}, {2}}}};
    CHECK_THROWS_AS(cover_from_json(bad), AdmissibilityError);
}
