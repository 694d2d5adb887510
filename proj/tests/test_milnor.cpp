#include <numeric>
#include <random>

#include "doctest.h"
#include "homtorus/milnor.hpp"

using namespace homtorus;

namespace {

FreeWord random_word(std::mt19937& rng, int ngens, int max_len) {
    FreeWord w;
    int len = std::uniform_int_distribution<int>(0, max_len)(rng);
    for (int k = 0; k < len; ++k) {
        int g = std::uniform_int_distribution<int>(0, ngens - 1)(rng);
        int e = std::uniform_int_distribution<int>(-2, 2)(rng);
        if (e != 0) w.push_back({g, e});
    }
    return w;
}

BraidWord random_braid(std::mt19937& rng, int max_strands, int max_len) {
    BraidWord b;
    b.strands = std::uniform_int_distribution<int>(1, max_strands)(rng);
    if (b.strands == 1) return b;
    int len = std::uniform_int_distribution<int>(0, max_len)(rng);
    for (int k = 0; k < len; ++k) {
        int i = std::uniform_int_distribution<int>(1, b.strands - 1)(rng);
        b.letters.push_back(rng() % 2 ? i : -i);
    }
    return b;
}

} // namespace

TEST_CASE("series inverses cancel exactly at every cap") {
    for (int cap = 1; cap <= 4; ++cap) {
        TruncatedSeries g = TruncatedSeries::gen(2, cap, 0);
        TruncatedSeries gi = TruncatedSeries::gen_inverse(2, cap, 0);
        CHECK(g * gi == TruncatedSeries::one(2, cap));
        CHECK(gi * g == TruncatedSeries::one(2, cap));
    }
}

TEST_CASE("expansion of a commutator starts with the degree-2 bracket") {
    // a b a^-1 b^-1 = 1 + (XY - YX) + higher order
    FreeWord comm{{0, 1}, {1, 1}, {0, -1}, {1, -1}};
    std::vector<int> var_of{0, 1};
    TruncatedSeries s = magnus(comm, var_of, 2, 2);
    CHECK(s.get({}) == 1);
    CHECK(s.get({0}) == 0);
    CHECK(s.get({1}) == 0);
    CHECK(s.get({0, 1}) == 1);
    CHECK(s.get({1, 0}) == -1);
    CHECK(s.get({0, 0}) == 0);
    CHECK(s.get({1, 1}) == 0);
}

TEST_CASE("expansion is multiplicative") {
    std::mt19937 rng(60417);
    std::vector<int> var_of{0, 1, 2, 0}; // two generators share a symbol
    for (int trial = 0; trial < 200; ++trial) {
        int cap = std::uniform_int_distribution<int>(1, 3)(rng);
        FreeWord u = random_word(rng, 4, 6);
        FreeWord v = random_word(rng, 4, 6);
        FreeWord uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        CHECK(magnus(uv, var_of, 3, cap) ==
              magnus(u, var_of, 3, cap) * magnus(v, var_of, 3, cap));
    }
}

TEST_CASE("longitude words") {
    // each borromean ring passes under the others twice, no self-crossings
    LinkDiagram b = borromean();
    for (int comp = 0; comp < 3; ++comp) {
        FreeWord w = longitude(b, comp);
        CHECK(w.size() == 2);
    }
    // a kinked unknot's longitude is meridian^(+1) * meridian^(-1)
    LinkDiagram kink = parse_pd("X[1,1,2,2]");
    TruncatedSeries s = magnus(longitude(kink, 0), traverse(kink).arc_component, 1, 2);
    CHECK(s == TruncatedSeries::one(1, 2));
    CHECK_THROWS_AS(longitude(b, 3), std::invalid_argument);
}

TEST_CASE("degree-1 coefficients of longitudes are linking numbers") {
    std::mt19937 rng(515);
    int cases = 0;
    for (int trial = 0; trial < 200; ++trial) {
        LinkDiagram d = braid_closure(random_braid(rng, 4, 10));
        auto lk = linking_matrix(d);
        Traversal t = traverse(d);
        for (int comp = 0; comp < d.ncomponents; ++comp) {
            TruncatedSeries s =
                magnus(longitude(d, comp), t.arc_component, d.ncomponents, 1);
            TruncatedSeries s2 = longitude_expansion(d, comp);
            for (int j = 0; j < d.ncomponents; ++j) {
                Int expect = j == comp ? Int(0) : Int(lk[comp][j]);
                CHECK(s.get({j}) == expect);
                CHECK(s2.get({j}) == expect);
            }
            ++cases;
        }
    }
    CHECK(cases >= 200);
}

TEST_CASE("triple invariant of the borromean rings is +1") {
    LinkDiagram b = borromean();
    CHECK(mu_bar_123(b) == 1);
    // the same coefficient read off any longitude, cyclically
    CHECK(longitude_expansion(b, 2).get({0, 1}) == 1);
    CHECK(longitude_expansion(b, 0).get({1, 2}) == 1);
    CHECK(longitude_expansion(b, 1).get({2, 0}) == 1);
}

TEST_CASE("triple invariant adds along band sums") {
    for (int n = 1; n <= 5; ++n) CHECK(mu_bar_123(band_sum_borromean(n)) == n);
}

TEST_CASE("triple invariant is antisymmetric and respects relabeling") {
    LinkDiagram b = borromean();
    for (int comp = 0; comp < 3; ++comp)
        CHECK(mu_bar_123(reverse_component(b, comp)) == -1);

    std::vector<int> rot{0, 0, 0}, cross(b.crossings.size());
    std::iota(cross.begin(), cross.end(), 0);
    CHECK(mu_bar_123(relabel_diagram(b, {1, 2, 0}, rot, cross)) == 1);  // cyclic
    CHECK(mu_bar_123(relabel_diagram(b, {2, 0, 1}, rot, cross)) == 1);  // cyclic
    CHECK(mu_bar_123(relabel_diagram(b, {1, 0, 2}, rot, cross)) == -1); // swap
    CHECK(mu_bar_123(relabel_diagram(b, {0, 2, 1}, rot, cross)) == -1); // swap
    CHECK(mu_bar_123(relabel_diagram(b, {2, 1, 0}, rot, cross)) == -1); // swap

    std::mt19937 rng(8080);
    for (int trial = 0; trial < 30; ++trial) {
        std::shuffle(cross.begin(), cross.end(), rng);
        for (int& r : rot) r = static_cast<int>(rng() % 12);
        CHECK(mu_bar_123(relabel_diagram(b, {0, 1, 2}, rot, cross)) == 1);
    }
}

TEST_CASE("triple invariant domain errors and the split case") {
    CHECK(mu_bar_123(braid_closure(parse_braid("", 3))) == 0);
    CHECK_THROWS_AS(mu_bar_123(parse_pd("X[1,3,2,4] X[3,1,4,2]")), WrongComponentCount);
    // three components, but two of them link
    CHECK_THROWS_AS(mu_bar_123(braid_closure(parse_braid("s1 s1", 3))),
                    ZeroLinkingRequired);
}
