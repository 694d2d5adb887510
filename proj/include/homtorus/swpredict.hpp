#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include <homtorus/laurent.hpp>
#include <homtorus/linkrep.hpp>

namespace homtorus {

// Outcome of the determinant/evaluation congruence check for a surgered
// three-component link, with the full value chain for reporting.
struct VerificationReport {
  std::string subject;
  Int det = 0;  // nonnegative
  Int alex_eval = 0;
  Int mu = 0;
  bool lemma_holds = false;
  int sw_mod2 = 0;
  std::vector<std::pair<std::string, Int>> chain;

  bool operator==(const VerificationReport&) const = default;
};

// Parity of the determinant.
int predict_sw_mod2(const Int& det);

// For a 3-component diagram with vanishing pairwise linking: compares the
// evaluation of the reduced polynomial at (1,1,1) against the square of the
// triple linking invariant and records the congruence chain.
VerificationReport verify_lemma(const LinkDiagram& d,
                                const std::string& subject = "link diagram");

// Product of the three knot polynomials with squared variables, each in its
// own variable.  Inputs must be single-variable with |value at 1| = 1.
LaurentPoly knot_surgery_sw(const std::array<LaurentPoly, 3>& deltas);

// True iff |total| is a perfect square.
bool product_criterion(const Int& total);

// Coefficient of the central monomial of a polynomial symmetric (up to sign)
// under inverting every variable; 0 when the center falls between lattice
// points.  Throws NotSymmetrizable when the symmetry fails.
Int central_coefficient(const LaurentPoly& sw);

nlohmann::json report_to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::json& j);

}  // namespace homtorus
