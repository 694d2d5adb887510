#include <homtorus/cohomring.hpp>

#include <bit>
#include <stdexcept>

namespace homtorus {

namespace {

void check_gen_index(int k) {
  if (k < 0 || k >= 4) throw std::logic_error("generator index out of range");
}

// Parity of the merge of two disjoint ascending words given by bitmasks:
// number of pairs (x in a, y in b) with y < x.
int merge_inversions(std::uint8_t a, std::uint8_t b) {
  int inv = 0;
  for (int k = 0; k < 4; ++k)
    if (b & (1u << k)) inv += std::popcount(static_cast<unsigned>(a >> (k + 1)));
  return inv;
}

void add_term(std::map<ExtElement::Key, Rat>& acc, ExtElement::Key key, Rat val) {
  auto it = acc.find(key);
  if (it == acc.end()) {
    if (val != 0) acc.emplace(key, std::move(val));
    return;
  }
  it->second += val;
  if (it->second == 0) acc.erase(it);
}

Int laplace_det(const std::vector<std::vector<Int>>& m, std::vector<int> cols) {
  std::size_t row = m.size() - cols.size();
  if (cols.empty()) return 1;
  Int acc = 0;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Int& entry = m[row][static_cast<std::size_t>(cols[j])];
    if (entry == 0) continue;
    std::vector<int> rest;
    rest.reserve(cols.size() - 1);
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (k != j) rest.push_back(cols[k]);
    Int sub = laplace_det(m, rest);
    if (j % 2 == 0)
      acc += entry * sub;
    else
      acc -= entry * sub;
  }
  return acc;
}

void check_rank(const CupForm& f) {
  if (f.rank != 3 && f.rank != 4) throw std::logic_error("cup form rank must be 3 or 4");
}

}  // namespace

ExtElement ext_unit() {
  ExtElement e;
  e.terms[{0, 0}] = 1;
  return e;
}

ExtElement ext_alpha(int k) {
  check_gen_index(k);
  ExtElement e;
  e.terms[{static_cast<std::uint8_t>(1u << k), 0}] = 1;
  return e;
}

ExtElement ext_dt(int k) {
  check_gen_index(k);
  ExtElement e;
  e.terms[{0, static_cast<std::uint8_t>(1u << k)}] = 1;
  return e;
}

ExtElement operator+(const ExtElement& a, const ExtElement& b) {
  ExtElement out = a;
  for (const auto& [key, val] : b.terms) add_term(out.terms, key, val);
  return out;
}

ExtElement operator-(const ExtElement& a, const ExtElement& b) {
  ExtElement out = a;
  for (const auto& [key, val] : b.terms) add_term(out.terms, key, -val);
  return out;
}

ExtElement operator*(const ExtElement& a, const ExtElement& b) {
  ExtElement out;
  for (const auto& [ka, va] : a.terms) {
    const auto [a1, d1] = ka;
    for (const auto& [kb, vb] : b.terms) {
      const auto [a2, d2] = kb;
      if ((a1 & a2) || (d1 & d2)) continue;
      // Word a1 d1 a2 d2: a2 crosses all of d1, then the two a-words and the
      // two d-words merge.
      int inv = std::popcount(static_cast<unsigned>(d1)) *
                    std::popcount(static_cast<unsigned>(a2)) +
                merge_inversions(a1, a2) + merge_inversions(d1, d2);
      Rat val = va * vb;
      if (inv % 2 != 0) val = -val;
      add_term(out.terms,
               {static_cast<std::uint8_t>(a1 | a2), static_cast<std::uint8_t>(d1 | d2)},
               std::move(val));
    }
  }
  return out;
}

ExtElement operator*(const Rat& c, const ExtElement& a) {
  ExtElement out;
  if (c == 0) return out;
  for (const auto& [key, val] : a.terms) out.terms.emplace(key, c * val);
  return out;
}

Int det_from_cupform(const CupForm& f) {
  check_rank(f);
  return f.top < 0 ? Int(-f.top) : f.top;
}

CupForm basis_change(const CupForm& f, const std::vector<std::vector<Int>>& u) {
  check_rank(f);
  const auto n = static_cast<std::size_t>(f.rank);
  if (u.size() != n) throw std::logic_error("basis matrix has wrong size");
  for (const auto& row : u)
    if (row.size() != n) throw std::logic_error("basis matrix has wrong size");
  std::vector<int> cols(n);
  for (std::size_t j = 0; j < n; ++j) cols[j] = static_cast<int>(j);
  Int det = laplace_det(u, cols);
  if (det != 1 && det != -1)
    throw NotUnimodular("basis change must have determinant +1 or -1");
  return CupForm{f.rank, det * f.top};
}

std::map<int, Rat> chern_slant(const CupForm& f) {
  check_rank(f);
  if (f.rank != 4) throw std::logic_error("index computation needs a rank-4 form");
  ExtElement omega;
  for (int k = 0; k < 4; ++k) omega = omega + ext_alpha(k) * ext_dt(k);
  ExtElement ch = ext_unit();
  ExtElement power = ext_unit();
  Rat factorial = 1;
  for (int k = 1; k <= 4; ++k) {
    power = power * omega;
    factorial *= k;
    ch = ch + Rat(1) / factorial * power;
  }
  std::map<int, Rat> slant{{0, 0}, {2, 0}, {4, 0}};
  Rat top(f.top);
  for (const auto& [key, val] : ch.terms) {
    const auto [amask, dmask] = key;
    if (amask != 0x0f) continue;
    slant[std::popcount(static_cast<unsigned>(dmask))] += top * val;
  }
  return slant;
}

Int chern_character_index(const CupForm& f) {
  auto slant = chern_slant(f);
  if (slant.at(0) != 0 || slant.at(2) != 0)
    throw std::logic_error("lower slant components must vanish");
  const Rat& vol = slant.at(4);
  if (boost::multiprecision::denominator(vol) != 1)
    throw std::logic_error("index must be an integer");
  return boost::multiprecision::numerator(vol);
}

PolyForm poly_monomial(const std::array<std::int32_t, 4>& exps, std::uint8_t amask,
                       std::uint8_t dmask, const Rat& coeff) {
  PolyForm p;
  if (coeff != 0) p.terms[{exps, amask, dmask}] = coeff;
  return p;
}

PolyForm operator+(const PolyForm& a, const PolyForm& b) {
  PolyForm out = a;
  for (const auto& [key, val] : b.terms) {
    auto it = out.terms.find(key);
    if (it == out.terms.end()) {
      if (val != 0) out.terms.emplace(key, val);
      continue;
    }
    it->second += val;
    if (it->second == 0) out.terms.erase(it);
  }
  return out;
}

PolyForm exterior_derivative(const PolyForm& p) {
  PolyForm out;
  for (const auto& [key, val] : p.terms) {
    const auto& [exps, amask, dmask] = key;
    for (int k = 0; k < 4; ++k) {
      if (exps[k] == 0) continue;
      if (dmask & (1u << k)) continue;  // d_k ^ d_k = 0
      auto shifted = exps;
      shifted[k] -= 1;
      // Appended d_k crosses the d's with larger index when sorted in.
      int inv = std::popcount(static_cast<unsigned>(dmask >> (k + 1)));
      Rat term = val * exps[k];
      if (inv % 2 != 0) term = -term;
      PolyForm::Key nk{shifted, amask, static_cast<std::uint8_t>(dmask | (1u << k))};
      auto it = out.terms.find(nk);
      if (it == out.terms.end()) {
        if (term != 0) out.terms.emplace(nk, std::move(term));
      } else {
        it->second += term;
        if (it->second == 0) out.terms.erase(it);
      }
    }
  }
  return out;
}

ExtElement constant_part(const PolyForm& p) {
  ExtElement out;
  for (const auto& [key, val] : p.terms) {
    const auto& [exps, amask, dmask] = key;
    if (exps != std::array<std::int32_t, 4>{0, 0, 0, 0})
      throw std::logic_error("form still depends on coordinates");
    out.terms[{amask, dmask}] = val;
  }
  return out;
}

PolyForm universal_connection_form() {
  PolyForm p;
  for (int k = 0; k < 4; ++k) {
    std::array<std::int32_t, 4> e{0, 0, 0, 0};
    e[static_cast<std::size_t>(k)] = 1;
    p = p + poly_monomial(e, static_cast<std::uint8_t>(1u << k), 0, 1);
  }
  return p;
}

}  // namespace homtorus
