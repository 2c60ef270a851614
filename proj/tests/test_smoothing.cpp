#include <doctest.h>

#include "knotdelta/corpus.hpp"
#include "knotdelta/errors.hpp"
#include "knotdelta/family.hpp"
#include "knotdelta/smoothing.hpp"

using namespace knotdelta;

namespace {
GroupElement elem(std::initializer_list<std::tuple<Letter, int, long long>> ts) {
    GroupElement v;
    for (const auto& [l, n, c] : ts) v.add(l, n, c);
    return v;
}
}  // namespace

TEST_SUITE("smoothing") {

TEST_CASE("interleaving") {
    Diagram t = Diagram::parse_pd(kTrefoilPd);
    auto ids = t.crossing_ids();
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            CHECK(interleaved(t, ids[i], ids[j]));
            CHECK(interleaved(t, ids[j], ids[i]));  // symmetric
        }
    CHECK_THROWS_AS(interleaved(t, 0, 0), parse_error);
    CHECK_THROWS_AS(interleaved(t, 0, 42), parse_error);

    Diagram kink = Diagram::parse_pd(kPositiveKinkPd);
    Diagram sum = connected_sum(kink, 1, kink, 1);
    auto sids = sum.crossing_ids();
    CHECK_FALSE(interleaved(sum, sids[0], sids[1]));
}

TEST_CASE("smoothing a kink gives two components and no linking") {
    Diagram kink = Diagram::parse_pd(kPositiveKinkPd);
    SmoothedLink s = smooth(kink, 0);
    CHECK(s.residual.empty());
    CHECK(s.first_component.empty());
    CHECK(s.second_component.empty());
    CHECK(linking_number(kink, 0) == 0);
}

TEST_CASE("smoothing a trefoil crossing") {
    Diagram t = Diagram::parse_pd(kTrefoilPd);
    for (CrossingId a : t.crossing_ids()) {
        SmoothedLink s = smooth(t, a);
        int inter = 0;
        for (const auto& r : s.residual) inter += r.inter_component;
        CHECK(inter == 2);
        CHECK(s.first_component.size() + s.second_component.size() == 4);
        CHECK(linking_number(t, a) == 1);
    }
}

TEST_CASE("component order follows the overcrossing-entry rule") {
    Diagram t = Diagram::parse_pd(kTrefoilPd);
    auto [u, o] = t.visit_positions(0);
    SmoothedLink s = smooth(t, 0);
    // first component = visits strictly between the under and over passes
    std::vector<Visit> expect;
    const int n = t.walk_length();
    for (int i = (u + 1) % n; i != o; i = (i + 1) % n) expect.push_back(t.walk()[i]);
    CHECK(s.first_component == expect);
}

TEST_CASE("invariant values") {
    CHECK(invariant_ilk(Diagram::unknot()).is_zero());
    CHECK(invariant_ilk(Diagram::parse_pd(kPositiveKinkPd)) == elem({{Letter::X, 0, 1}}));
    CHECK(invariant_ilk(Diagram::parse_pd(kNegativeKinkPd)) == elem({{Letter::Y, 0, 1}}));
    CHECK(invariant_ilk(Diagram::parse_pd(kTrefoilPd)) == elem({{Letter::X, 1, 3}}));
    CHECK(invariant_ilk(Diagram::parse_pd(kFigureEightPd)) ==
          elem({{Letter::X, -1, 2}, {Letter::Y, 1, 2}}));
}

TEST_CASE("scalar invariants") {
    Diagram t = Diagram::parse_pd(kTrefoilPd);
    CHECK(writhe(t) == 3);
    CHECK(crossing_number(t) == 3);
    CHECK(cowrithe(t) == -3);
    CHECK(cowrithe_direct(t) == -3);

    Diagram u = Diagram::unknot();
    CHECK(writhe(u) == 0);
    CHECK(crossing_number(u) == 0);
    CHECK(cowrithe(u) == 0);

    CHECK(cowrithe_direct(Diagram::parse_pd(kPositiveKinkPd)) == 0);
    CHECK(cowrithe(Diagram::parse_pd(kFigureEightPd)) == 4);
}

TEST_CASE("linking numbers in the unknot family") {
    Diagram d3 = build_dn(3);
    for (CrossingId a : d3.crossing_ids()) {
        if (d3.sign(a) > 0) CHECK(linking_number(d3, a) == -1);
        else CHECK(linking_number(d3, a) == 0);
    }
}

TEST_CASE("cowrithe routes agree on random diagrams") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 6; ++trial) {
        Diagram d = random_diagram(rng, 8);
        CHECK(cowrithe_direct(d) == cowrithe(d));
    }
}

}  // TEST_SUITE
