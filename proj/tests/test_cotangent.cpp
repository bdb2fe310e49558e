#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crysalite/cotangent.hpp"

using namespace crysalite;

namespace {

const std::vector<std::string> X1{"x"};
const std::vector<std::string> X2{"x0", "x1"};
const std::vector<std::string> X3{"x0", "x1", "x2"};
const std::vector<std::string> X4{"x0", "x1", "x2", "x3"};

HypersurfaceRing R(std::uint32_t p, const std::vector<std::string>& vars, const std::string& f) {
    return HypersurfaceRing::parse(Prime(p), vars, f);
}

std::map<int, std::uint64_t> run(int from, int to, std::uint64_t each) {
    std::map<int, std::uint64_t> m;
    for (int w = from; w <= to; ++w) m[w] = each;
    return m;
}

HypothesisError::Kind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const HypothesisError& e) {
        return e.kind();
    }
    FAIL("expected HypothesisError");
    return HypothesisError::Kind::NotSmooth;
}

}  // namespace

TEST_CASE("wedge complex shapes") {
    SUBCASE("node, n = 3") {
        const auto C = wedge_complex(R(5, X2, "x0*x1"), 3);
        CHECK(C.terms().size() == 3);
        CHECK(C.terms().at(0) == std::vector<int>{6});
        CHECK(C.terms().at(1) == std::vector<int>{5, 5});
        CHECK(C.terms().at(2) == std::vector<int>{4});
    }
    SUBCASE("x^3 in one variable, n = 2") {
        const auto r = R(5, X1, "x^3");
        const auto C = wedge_complex(r, 2);
        CHECK(C.terms().size() == 2);
        CHECK(C.terms().at(0) == std::vector<int>{6});
        CHECK(C.terms().at(1) == std::vector<int>{4});
        REQUIRE(C.differential(0) != nullptr);
        CHECK(C.differential(0)->at(0, 0) == parse_poly("3*x^2", X1, Prime(5)));
    }
    SUBCASE("n below V truncates the terms") {
        const auto C = wedge_complex(R(5, X3, "x0^2+x1^2+x2^2"), 1);
        CHECK(C.terms().size() == 2);
        CHECK(C.terms().at(1) == std::vector<int>{1, 1, 1});
    }
    SUBCASE("n = 0 is A in degree 0") {
        const auto C = wedge_complex(R(5, X2, "x0*x1"), 0);
        CHECK(C.terms().size() == 1);
        CHECK(C.terms().at(0) == std::vector<int>{0});
    }
}

TEST_CASE("property: wedge complexes square to zero, term ranks are binomial") {
    const std::vector<HypersurfaceRing> rings{R(5, X2, "x0*x1"), R(7, X3, "x0^3+x1^3+x2^3"),
                                              R(3, X3, "x0^3+x1^3+x2^3"), R(5, X4, "x0^2+x1^2+x2^2+x3^2"),
                                              R(5, X3, "x0^2*x1+x2^3")};
    for (const auto& r : rings) {
        const int V = static_cast<int>(r.nvars());
        for (int n = 0; n <= V + 2; ++n) {
            const auto C = wedge_complex(r, n);
            CHECK(complex_check(C));
            for (const auto& [j, ws] : C.terms()) {
                CHECK(ws.size() == binomial(V, j));
                for (int w : ws) CHECK(w == (n - j) * r.degree() + j);
            }
        }
    }
}

TEST_CASE("smooth germ: the wedge squares of a line vanish") {
    const auto r = R(5, X2, "x0");
    const auto t = wedge_cohomology(r, 2, 12);
    CHECK(t.empty());
}

TEST_CASE("wedge_cohomology examples") {
    SUBCASE("node, n = 3 and n = 4") {
        const auto r = R(5, X2, "x0*x1");
        const auto t3 = wedge_cohomology(r, 3);
        CHECK(t3.entries == std::map<std::pair<int, int>, std::uint64_t>{{{2, 4}, 1}, {{1, 6}, 1}});
        const auto t4 = wedge_cohomology(r, 4);
        CHECK(t4.entries == std::map<std::pair<int, int>, std::uint64_t>{{{2, 6}, 1}, {{1, 8}, 1}});
        CHECK(t4.complete.at(1));
        CHECK(t4.complete.at(2));
    }
    SUBCASE("Fermat cubic, n = 5") {
        const auto t = wedge_cohomology(R(7, X3, "x0^3+x1^3+x2^3"), 5);
        CHECK(t.degree(3).dims == std::map<int, std::uint64_t>{{9, 1}, {10, 3}, {11, 3}, {12, 1}});
        CHECK(t.degree(2).dims == std::map<int, std::uint64_t>{{12, 1}, {13, 3}, {14, 3}, {15, 1}});
        CHECK(t.degree(1).dims.empty());
        CHECK(t.degree(0).dims.empty());
    }
    SUBCASE("fat point x^5 over F_5, n = 3") {
        const auto t = wedge_cohomology(R(5, X1, "x^5"), 3);
        CHECK(t.degree(0).dims == run(15, 19, 1));
        CHECK(t.degree(1).dims == run(11, 15, 1));
    }
    SUBCASE("shifted indexing places the fat point in degrees -3 and -2") {
        const auto t = wedge_cohomology(R(5, X1, "x^5"), 3).shifted(-3);
        CHECK(t.total(-3) == 5);
        CHECK(t.total(-2) == 5);
    }
}

TEST_CASE("closed_form_wedge examples") {
    SUBCASE("ODP in four variables, n = 6") {
        const auto t = closed_form_wedge(R(5, X4, "x0^2+x1^2+x2^2+x3^2"), 6);
        CHECK(t.entries == std::map<std::pair<int, int>, std::uint64_t>{{{4, 8}, 1}, {{3, 10}, 1}});
    }
    SUBCASE("Fermat cubic, n = 5, agrees with direct elimination") {
        const auto r = R(7, X3, "x0^3+x1^3+x2^3");
        const auto closed = closed_form_wedge(r, 5);
        CHECK(closed.same_entries(wedge_cohomology(r, 5)));
    }
    SUBCASE("x^3 in one variable") {
        const auto r = R(5, X1, "x^3");
        for (int n = 1; n <= 5; ++n) {
            const auto t = closed_form_wedge(r, n);
            CHECK(t.degree(1).dims == std::map<int, std::uint64_t>{{3 * n - 2, 1}, {3 * n - 1, 1}});
            CHECK(t.degree(0).dims == std::map<int, std::uint64_t>{{3 * n + 1, 1}, {3 * n + 2, 1}});
            CHECK(t.same_entries(wedge_cohomology(r, n)));
        }
    }
}

TEST_CASE("closed_form_wedge guards") {
    CHECK(kind_of([] { closed_form_wedge(R(3, X3, "x0^3+x1^3+x2^3"), 5); }) ==
          HypothesisError::Kind::CharacteristicDividesDegree);
    CHECK(kind_of([] { closed_form_wedge(R(5, X3, "x0^2+x1^2+x2^2"), 2); }) == HypothesisError::Kind::IndexTooSmall);
    CHECK(kind_of([] { closed_form_wedge(R(5, X3, "x0^2*x1+x2^3"), 5); }) == HypothesisError::Kind::NotSmooth);
    CHECK(kind_of([] { closed_form_wedge(R(5, X1, "x^5"), 3); }) ==
          HypothesisError::Kind::CharacteristicDividesDegree);
}

TEST_CASE("special_fiber_dims examples") {
    const auto a = special_fiber_dims(3, 1, 5);
    CHECK(a.dims == std::map<int, std::uint64_t>{{-5, 1}, {-4, 3}, {-3, 3}, {-2, 1}});
    const auto b = special_fiber_dims(2, 2, 2);
    CHECK(b.dims == std::map<int, std::uint64_t>{{-2, 3}, {-1, 4}, {0, 1}});
    for (int N = 0; N <= 4; ++N)
        for (int r = 1; r <= 3; ++r) CHECK(special_fiber_dims(N, r, 0).dims == std::map<int, std::uint64_t>{{0, 1}});
    CHECK_THROWS_AS(special_fiber_dims(-1, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(special_fiber_dims(2, 0, 2), std::invalid_argument);
}

TEST_CASE("property: special fiber matches the wedge complex term ranks") {
    const std::vector<HypersurfaceRing> rings{R(5, X2, "x0*x1"), R(7, X3, "x0^3+x1^3+x2^3"), R(5, X1, "x^4")};
    for (const auto& r : rings) {
        const int V = static_cast<int>(r.nvars());
        for (int n = 0; n <= V + 4; ++n) {
            const auto C = wedge_complex(r, n);
            std::map<int, std::uint64_t> ranks;
            for (const auto& [j, ws] : C.terms())
                if (!ws.empty()) ranks[j - n] = ws.size();
            CHECK(ranks == special_fiber_dims(V, 1, n).dims);
        }
    }
}

TEST_CASE("wedge_flags examples") {
    SUBCASE("ODP in three variables, n = 5") {
        const auto fl = wedge_flags(R(5, X3, "x0^2+x1^2+x2^2"), 5);
        CHECK(fl.top_nonzero);
        CHECK(fl.second_index == 1);
        CHECK(fl.bottom_vanishes);
    }
    SUBCASE("x^3, a zero-dimensional germ, n = 4") {
        const auto fl = wedge_flags(R(5, X1, "x^3"), 4);
        CHECK(fl.top_nonzero);
        CHECK(fl.second_index == 1);
        CHECK_FALSE(fl.bottom_vanishes);
    }
    SUBCASE("node, n = 3") {
        const auto fl = wedge_flags(R(7, X2, "x0*x1"), 3);
        CHECK(fl.top_nonzero);
        CHECK(fl.second_index == 1);
        CHECK(fl.bottom_vanishes);
    }
    SUBCASE("guards") {
        CHECK(kind_of([] { wedge_flags(R(5, X2, "x0"), 4); }) == HypothesisError::Kind::NotSingular);
        CHECK(kind_of([] { wedge_flags(R(5, X2, "x0*x1"), 2); }) == HypothesisError::Kind::IndexTooSmall);
    }
}

TEST_CASE("default weight cutoff covers every piece up to n_max") {
    const auto r = R(5, X1, "x^3");
    CHECK(default_weight_cutoff(r, 4) >= 3 * 4 + 2);
    const auto t = wedge_cohomology(r, 4, default_weight_cutoff(r, 4));
    CHECK(t.complete.at(0));
    CHECK(t.complete.at(1));
}
