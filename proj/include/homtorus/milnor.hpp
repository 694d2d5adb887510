#pragma once

// Triple linking invariant via truncated noncommutative expansions: the
// longitude of one component is expanded with every meridian of component j
// mapped to the symbol X_j, and the invariant is a degree-2 coefficient.

#include <map>

#include "homtorus/foxalex.hpp"
#include "homtorus/linkrep.hpp"

namespace homtorus {

// series in noncommuting symbols X_0..X_{nvars-1}, words beyond total degree
// cap are dropped
struct TruncatedSeries {
    int nvars = 0;
    int cap = 0;
    std::map<std::vector<int>, Int> coeff; // word of symbol indices -> coefficient
    bool operator==(const TruncatedSeries&) const = default;

    static TruncatedSeries zero(int nvars, int cap);
    static TruncatedSeries one(int nvars, int cap);
    static TruncatedSeries gen(int nvars, int cap, int var);         // 1 + X
    static TruncatedSeries gen_inverse(int nvars, int cap, int var); // 1 - X + ...
    Int get(const std::vector<int>& word) const;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

// expansion of a free word, generator g contributing the symbol var_of[g]
TruncatedSeries magnus(const FreeWord& w, const std::vector<int>& var_of,
                       int nvars, int cap);

// longitude of one component as a word in the over-arcs passed under,
// multiplied by base-meridian^(-self-writhe) so its degree-1 self term drops
FreeWord longitude(const LinkDiagram& d, int comp);

// Exact degree-2 expansion of the longitude. Every arc is a conjugate
// w m w^-1 of its component's base meridian, and to this order only the
// linear part W of the conjugator survives: the arc expands to
// 1 + X_c + (W X_c - X_c W). The collapse of all arcs to X_c alone would
// lose exactly those bracket terms.
TruncatedSeries longitude_expansion(const LinkDiagram& d, int comp);

// coefficient of X_0 X_1 in the expansion of the third component's
// longitude; requires exactly 3 components and a vanishing linking matrix
Int mu_bar_123(const LinkDiagram& d);

} // namespace homtorus
