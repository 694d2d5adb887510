#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <homtorus/errors.hpp>
#include <homtorus/laurent.hpp>

namespace homtorus {

using Rat = boost::multiprecision::cpp_rational;

// Top cup product of a chosen basis of H^1 against the fundamental class.
// rank is the number of basis classes (3 for a 3-manifold, 4 for a 4-manifold).
struct CupForm {
  int rank = 4;
  Int top = 0;
};

// Element of the exterior algebra on eight odd generators a_0..a_3, d_0..d_3
// with rational coefficients.  A basis word is stored as a pair of bitmasks
// (amask, dmask), meaning the product of the selected a's in ascending index
// order followed by the selected d's in ascending index order.
struct ExtElement {
  using Key = std::pair<std::uint8_t, std::uint8_t>;
  std::map<Key, Rat> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const ExtElement& o) const { return terms == o.terms; }
};

ExtElement ext_unit();
ExtElement ext_alpha(int k);  // a_k, 0 <= k < 4
ExtElement ext_dt(int k);     // d_k, 0 <= k < 4

ExtElement operator+(const ExtElement& a, const ExtElement& b);
ExtElement operator-(const ExtElement& a, const ExtElement& b);
ExtElement operator*(const ExtElement& a, const ExtElement& b);
ExtElement operator*(const Rat& c, const ExtElement& a);

// |top|: basis-independent by the unimodular transformation law below.
Int det_from_cupform(const CupForm& f);

// Replaces the basis by u (rows = new basis in terms of old); top picks up
// det(u).  u must be rank x rank with |det| = 1, else NotUnimodular.
CupForm basis_change(const CupForm& f, const std::vector<std::vector<Int>>& u);

// Coefficient of d_0 d_1 d_2 d_3 in the slant of 1 + W + W^2/2 + W^3/6 +
// W^4/24 against the top class, where W = sum_k a_k d_k and the slant reads
// off full-a-mask terms weighted by f.top.  Requires rank 4.  The sign is an
// artifact of the fixed generator ordering; callers should rely on |result|.
Int chern_character_index(const CupForm& f);

// Slant components by d-degree (0, 2 and 4 are the even ones; odd degrees
// cannot occur).  chern_character_index asserts degrees 0 and 2 vanish.
std::map<int, Rat> chern_slant(const CupForm& f);

// Differential form with polynomial coefficients in coordinates t_0..t_3:
// terms map (t-exponents, amask, dmask) -> rational.
struct PolyForm {
  using Key = std::tuple<std::array<std::int32_t, 4>, std::uint8_t, std::uint8_t>;
  std::map<Key, Rat> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const PolyForm& o) const { return terms == o.terms; }
};

PolyForm poly_monomial(const std::array<std::int32_t, 4>& exps, std::uint8_t amask,
                       std::uint8_t dmask, const Rat& coeff);
PolyForm operator+(const PolyForm& a, const PolyForm& b);

// d(t^e phi) = sum_k e_k t^(e - delta_k) phi ^ d_k, with d_k appended on the
// right of the basis word.  Under this convention the derivative of the
// connection form below is exactly sum_k a_k d_k.
PolyForm exterior_derivative(const PolyForm& p);

// Extracts the t-independent part; throws std::logic_error if any term still
// carries a t-exponent.
ExtElement constant_part(const PolyForm& p);

// The tautological connection 1-form sum_k t_k a_k.
PolyForm universal_connection_form();

}  // namespace homtorus
