#include <doctest.h>

#include <array>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include <homtorus/cohomring.hpp>
#include <homtorus/linkrep.hpp>
#include <homtorus/milnor.hpp>

using namespace homtorus;

namespace {

ExtElement gen(int i) { return i < 4 ? ext_alpha(i) : ext_dt(i - 4); }

// All basis words of the given total degree.
std::vector<ExtElement::Key> words_of_degree(int deg) {
  std::vector<ExtElement::Key> out;
  for (unsigned a = 0; a < 16; ++a)
    for (unsigned d = 0; d < 16; ++d)
      if (std::popcount(a) + std::popcount(d) == static_cast<unsigned>(deg))
        out.push_back({static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(d)});
  return out;
}

ExtElement random_homogeneous(std::mt19937& rng, int deg) {
  ExtElement e;
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  std::uniform_int_distribution<int> keep(0, 2);
  for (const auto& key : words_of_degree(deg)) {
    if (keep(rng) != 0) continue;
    Rat c(num(rng), den(rng));
    if (c != 0) e.terms[key] = c;
  }
  return e;
}

std::vector<std::vector<Int>> identity_matrix(int n) {
  std::vector<std::vector<Int>> u(static_cast<std::size_t>(n),
                                  std::vector<Int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) u[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return u;
}

// Random product of elementary integer operations; returns the tracked det.
int randomize_unimodular(std::mt19937& rng, std::vector<std::vector<Int>>& u) {
  const auto n = u.size();
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> mult(-3, 3);
  std::uniform_int_distribution<int> op(0, 3);
  int det = 1;
  for (int step = 0; step < 12; ++step) {
    std::size_t i = idx(rng), j = idx(rng);
    switch (op(rng)) {
      case 0: {
        if (i == j) break;
        int m = mult(rng);
        for (std::size_t k = 0; k < n; ++k) u[i][k] += m * u[j][k];
        break;
      }
      case 1:
        if (i != j) {
          std::swap(u[i], u[j]);
          det = -det;
        }
        break;
      case 2:
        for (std::size_t k = 0; k < n; ++k) u[i][k] = -u[i][k];
        det = -det;
        break;
      default: {
        if (i == j) break;
        int m = mult(rng);
        for (std::size_t k = 0; k < n; ++k) u[k][i] += m * u[k][j];
        break;
      }
    }
  }
  return det;
}

}  // namespace

TEST_CASE("exterior generators square to zero and anticommute") {
  for (int i = 0; i < 8; ++i) {
    CHECK((gen(i) * gen(i)).is_zero());
    for (int j = 0; j < 8; ++j) {
      if (i == j) continue;
      CHECK((gen(i) * gen(j) + gen(j) * gen(i)).is_zero());
    }
  }
  CHECK_THROWS_AS(ext_alpha(4), std::logic_error);
  CHECK_THROWS_AS(ext_dt(-1), std::logic_error);
}

TEST_CASE("basis words reorder with the merge sign") {
  // Generators multiplied in canonical order carry coefficient +1.
  ExtElement canonical = ext_alpha(0) * ext_alpha(1) * ext_dt(0) * ext_dt(1);
  REQUIRE(canonical.terms.size() == 1);
  CHECK(canonical.terms.at({0x03, 0x03}) == 1);

  // a0 d0 a1 d1: a1 crosses d0, a single transposition.
  ExtElement interleaved = (ext_alpha(0) * ext_dt(0)) * (ext_alpha(1) * ext_dt(1));
  CHECK(interleaved == Rat(-1) * canonical);

  // Unit is neutral.
  CHECK(ext_unit() * interleaved == interleaved);
  CHECK(interleaved * ext_unit() == interleaved);
}

TEST_CASE("exterior product is associative and graded-commutative") {
  std::mt19937 rng(911);
  std::uniform_int_distribution<int> deg(0, 5);
  for (int trial = 0; trial < 200; ++trial) {
    int da = deg(rng), db = deg(rng), dc = deg(rng);
    ExtElement a = random_homogeneous(rng, da);
    ExtElement b = random_homogeneous(rng, db);
    ExtElement c = random_homogeneous(rng, dc);
    CHECK((a * b) * c == a * (b * c));
    ExtElement ba = b * a;
    if (da % 2 == 1 && db % 2 == 1) ba = Rat(-1) * ba;
    CHECK(a * b == ba);
  }
}

TEST_CASE("index of the character form is the top evaluation up to sign") {
  Int at_one = chern_character_index(CupForm{4, 1});
  CHECK(abs(at_one) == 1);
  CHECK(chern_character_index(CupForm{4, 0}) == 0);
  CHECK(abs(chern_character_index(CupForm{4, 5})) == 5);

  auto slant = chern_slant(CupForm{4, 7});
  CHECK(slant.at(0) == 0);
  CHECK(slant.at(2) == 0);
  CHECK(slant.at(4) != 0);

  std::mt19937 rng(4242);
  std::uniform_int_distribution<long long> draw(-1000000, 1000000);
  for (int trial = 0; trial < 100; ++trial) {
    Int c(draw(rng));
    Int idx = chern_character_index(CupForm{4, c});
    CHECK(abs(idx) == abs(c));
    CHECK(idx == at_one * c);  // linear in the top evaluation
  }
}

TEST_CASE("unimodular basis changes scale the top class by the determinant") {
  CupForm f{4, 3};
  CHECK(basis_change(f, identity_matrix(4)).top == 3);

  auto flip = identity_matrix(4);
  flip[0][0] = -1;
  CupForm g = basis_change(f, flip);
  CHECK(g.top == -3);
  CHECK(det_from_cupform(g) == det_from_cupform(f));

  auto doubled = identity_matrix(4);
  doubled[0][0] = 2;
  CHECK_THROWS_AS(basis_change(f, doubled), NotUnimodular);

  auto flip3 = identity_matrix(3);
  flip3[2][2] = -1;
  CHECK(basis_change(CupForm{3, 2}, flip3).top == -2);

  std::mt19937 rng(515151);
  std::uniform_int_distribution<long long> draw(-1000000, 1000000);
  for (int trial = 0; trial < 100; ++trial) {
    auto u = identity_matrix(4);
    int det = randomize_unimodular(rng, u);
    CupForm h{4, Int(draw(rng))};
    CupForm changed = basis_change(h, u);
    CHECK(changed.top == det * h.top);
    CHECK(chern_character_index(changed) == det * chern_character_index(h));
  }
}

TEST_CASE("determinants from cup forms") {
  CHECK(det_from_cupform(CupForm{4, 1}) == 1);
  CHECK(det_from_cupform(CupForm{4, 0}) == 0);
  CHECK(det_from_cupform(CupForm{4, -6}) == 6);
  CHECK(det_from_cupform(CupForm{3, mu_bar_123(band_sum_borromean(2))}) == 2);
}

TEST_CASE("connection form differentiates to the curvature") {
  ExtElement omega;
  for (int k = 0; k < 4; ++k) omega = omega + ext_alpha(k) * ext_dt(k);

  PolyForm conn = universal_connection_form();
  CHECK(constant_part(exterior_derivative(conn)) == omega);

  // Single term t_0 a_0 -> a_0 d_0.
  PolyForm single = poly_monomial({1, 0, 0, 0}, 0x01, 0x00, 1);
  CHECK(constant_part(exterior_derivative(single)) == ext_alpha(0) * ext_dt(0));

  // Constant forms have derivative zero.
  PolyForm constant = poly_monomial({0, 0, 0, 0}, 0x05, 0x02, Rat(7, 3));
  CHECK(exterior_derivative(constant).is_zero());

  CHECK_THROWS_AS(constant_part(conn), std::logic_error);

  // d o d = 0 on random polynomial forms.
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> exp(0, 3);
  std::uniform_int_distribution<int> mask(0, 15);
  std::uniform_int_distribution<int> num(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    PolyForm p;
    for (int t = 0; t < 6; ++t) {
      std::array<std::int32_t, 4> e{exp(rng), exp(rng), exp(rng), exp(rng)};
      p = p + poly_monomial(e, static_cast<std::uint8_t>(mask(rng)),
                            static_cast<std::uint8_t>(mask(rng)), num(rng));
    }
    CHECK(exterior_derivative(exterior_derivative(p)).is_zero());
  }
}
