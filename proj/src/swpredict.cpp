#include <homtorus/swpredict.hpp>

#include <boost/multiprecision/cpp_int.hpp>

#include <homtorus/foxalex.hpp>
#include <homtorus/milnor.hpp>

namespace homtorus {

int predict_sw_mod2(const Int& det) {
  return det % 2 == 0 ? 0 : 1;
}

VerificationReport verify_lemma(const LinkDiagram& d, const std::string& subject) {
  VerificationReport r;
  r.subject = subject;
  r.mu = mu_bar_123(d);
  r.det = r.mu < 0 ? Int(-r.mu) : r.mu;
  r.alex_eval = eval_at_ones(reduced_alexander(d));
  Int det2 = r.det * r.det;
  Int abs_eval = r.alex_eval < 0 ? Int(-r.alex_eval) : r.alex_eval;
  r.lemma_holds = abs_eval == det2;
  r.sw_mod2 = predict_sw_mod2(r.det);
  r.chain = {{"mu_bar_123", r.mu},
             {"det", r.det},
             {"alex_eval", r.alex_eval},
             {"det_squared", det2},
             {"sw_mod2", r.sw_mod2}};
  return r;
}

LaurentPoly knot_surgery_sw(const std::array<LaurentPoly, 3>& deltas) {
  LaurentPoly out = LaurentPoly::constant(3, 1);
  for (int i = 0; i < 3; ++i) {
    if (deltas[static_cast<std::size_t>(i)].nvars != 1)
      throw VariableMismatch("knot polynomial must have one variable");
    Int at_one = eval_at_ones(deltas[static_cast<std::size_t>(i)]);
    if (at_one != 1 && at_one != -1)
      throw NotAKnotPolynomial("value at 1 must be a unit");
    out = out * substitute_squares(deltas[static_cast<std::size_t>(i)], {i}, 3);
  }
  return canonical(out);
}

bool product_criterion(const Int& total) {
  Int n = total < 0 ? Int(-total) : total;
  Int root = boost::multiprecision::sqrt(n);
  return root * root == n;
}

Int central_coefficient(const LaurentPoly& sw) {
  if (sw.is_zero()) return 0;
  const int nv = sw.nvars;
  Monomial lo = sw.terms.front().first, hi = lo;
  for (const auto& [e, c] : sw.terms)
    for (int v = 0; v < nv; ++v) {
      lo[static_cast<std::size_t>(v)] =
          std::min(lo[static_cast<std::size_t>(v)], e[static_cast<std::size_t>(v)]);
      hi[static_cast<std::size_t>(v)] =
          std::max(hi[static_cast<std::size_t>(v)], e[static_cast<std::size_t>(v)]);
    }
  // Invert every variable, then shift back across the center; the result
  // must reproduce the polynomial up to a global sign.
  std::vector<std::pair<Monomial, Int>> reflected;
  reflected.reserve(sw.terms.size());
  for (const auto& [e, c] : sw.terms) {
    Monomial m(static_cast<std::size_t>(nv));
    for (int v = 0; v < nv; ++v)
      m[static_cast<std::size_t>(v)] = lo[static_cast<std::size_t>(v)] +
                                       hi[static_cast<std::size_t>(v)] -
                                       e[static_cast<std::size_t>(v)];
    reflected.push_back({std::move(m), c});
  }
  LaurentPoly mirror = LaurentPoly::from_terms(nv, std::move(reflected));
  if (mirror != sw && mirror != -sw)
    throw NotSymmetrizable("polynomial is not symmetric under variable inversion");
  Monomial center(static_cast<std::size_t>(nv));
  for (int v = 0; v < nv; ++v) {
    int32_t span = lo[static_cast<std::size_t>(v)] + hi[static_cast<std::size_t>(v)];
    if (span % 2 != 0) return 0;
    center[static_cast<std::size_t>(v)] = span / 2;
  }
  for (const auto& [e, c] : sw.terms)
    if (e == center) return c;
  return 0;
}

nlohmann::json report_to_json(const VerificationReport& r) {
  nlohmann::json chain = nlohmann::json::array();
  for (const auto& [quantity, value] : r.chain)
    chain.push_back({{"quantity", quantity}, {"value", static_cast<long long>(value)}});
  return {{"subject", r.subject},
          {"det", static_cast<long long>(r.det)},
          {"alex_eval", static_cast<long long>(r.alex_eval)},
          {"mu", static_cast<long long>(r.mu)},
          {"lemma_holds", r.lemma_holds},
          {"sw_mod2", r.sw_mod2},
          {"chain", chain}};
}

VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.subject = j.at("subject").get<std::string>();
  r.det = Int(j.at("det").get<long long>());
  r.alex_eval = Int(j.at("alex_eval").get<long long>());
  r.mu = Int(j.at("mu").get<long long>());
  r.lemma_holds = j.at("lemma_holds").get<bool>();
  r.sw_mod2 = j.at("sw_mod2").get<int>();
  for (const auto& entry : j.at("chain"))
    r.chain.push_back({entry.at("quantity").get<std::string>(),
                       Int(entry.at("value").get<long long>())});
  return r;
}

}  // namespace homtorus
