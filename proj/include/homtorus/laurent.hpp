#pragma once

// Sparse multivariable Laurent polynomials over Z with arbitrary-precision
// coefficients. Terms are kept sorted in graded-lex order with nonzero
// coefficients; exponents may be negative.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "homtorus/errors.hpp"

namespace homtorus {

using Int = boost::multiprecision::cpp_int;
using Monomial = std::vector<int32_t>; // exponent vector, one slot per variable

// graded-lex: lower total degree first, ties broken lexicographically
bool grlex_less(const Monomial& a, const Monomial& b);

struct LaurentPoly {
    int nvars = 0;
    // sorted grlex-ascending, no zero coefficients, every exponent vector
    // has size nvars
    std::vector<std::pair<Monomial, Int>> terms;

    LaurentPoly() = default;
    explicit LaurentPoly(int nv) : nvars(nv) {}

    bool is_zero() const { return terms.empty(); }
    bool operator==(const LaurentPoly& o) const = default;

    static LaurentPoly zero(int nvars);
    static LaurentPoly constant(int nvars, Int c);
    // single variable t_var (0-based) to the given power
    static LaurentPoly var_pow(int nvars, int var, int exp, Int c = 1);
    static LaurentPoly from_terms(int nvars,
                                  std::vector<std::pair<Monomial, Int>> ts);
};

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator-(const LaurentPoly& a);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const Int& c);

// unit-normal representative of the +/- monomial orbit: shift so the minimum
// exponent of each variable is 0, then fix the sign so the grlex-smallest
// term has positive coefficient
LaurentPoly canonical(const LaurentPoly& p);

// sum of coefficients (evaluation at t_i = 1 for all i)
Int eval_at_ones(const LaurentPoly& p);

// exact quotient in the Laurent ring; throws NotDivisible when none exists
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);

// gcd up to units, returned canonical; gcd of an empty/zero family is 0
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly gcd(const std::vector<LaurentPoly>& ps);

// t_i -> T_{varmap[i]}^2; varmap.size() == p.nvars, values < new_nvars
LaurentPoly substitute_squares(const LaurentPoly& p,
                               const std::vector<int>& varmap, int new_nvars);

// text format: "3*t1^2*t2^-1 - 1"; a single-variable polynomial uses the
// bare name "t". parse accepts both; nvars < 0 means infer from the largest
// index seen (at least 1)
std::string render_poly(const LaurentPoly& p);
LaurentPoly parse_poly(const std::string& text, int nvars = -1);

} // namespace homtorus
