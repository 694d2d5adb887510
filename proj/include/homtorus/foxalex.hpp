#pragma once

// Arc presentations of diagram groups, free-derivative calculus, and the
// single- and multi-variable Alexander polynomials computed as gcds of
// maximal minors of the derivative matrix.

#include <utility>
#include <vector>

#include "homtorus/laurent.hpp"
#include "homtorus/linkrep.hpp"

namespace homtorus {

using FreeWord = std::vector<std::pair<int, int>>; // (generator, exponent)

struct GroupPresentation {
    int ngenerators = 0;
    int ncomponents = 0;
    std::vector<int> generator_component;
    std::vector<FreeWord> relators;
};

// one generator per arc, one relator o^e u o^-e v^-1 per crossing (o = over
// arc, u/v = incoming/outgoing under arc, e = crossing sign)
GroupPresentation wirtinger(const LinkDiagram& d);

// free derivative of a word by one generator, with every generator
// abelianized to its component's variable
LaurentPoly fox_derivative(const FreeWord& word, int gen,
                           const std::vector<int>& generator_component,
                           int nvars);

// relators x generators matrix of abelianized derivatives
std::vector<std::vector<LaurentPoly>> alexander_matrix(const LinkDiagram& d);

// determinant up to a monomial unit, by fraction-free elimination
LaurentPoly det_poly(std::vector<std::vector<LaurentPoly>> m, int nvars);

// gcd of the maximal minors left after deleting one generator column
LaurentPoly deleted_column_gcd(const LinkDiagram& d, int col);

// canonical Alexander polynomial; for links the deleted-column gcd carries an
// extra factor (t_c - 1) from the column's component, which is divided out
LaurentPoly alexander_poly(const LinkDiagram& d);

// alexander_poly divided by prod_i (t_i - 1); needs >= 2 components and all
// pairwise linking numbers zero
LaurentPoly reduced_alexander(const LinkDiagram& d);

// |reduced_alexander evaluated at t_i = 1|
Int d_zero(const LinkDiagram& d);

// exponent-sum matrix of a presentation, relators x generators
std::vector<std::vector<Int>> abelianization_matrix(const GroupPresentation& p);

// invariant factors: nonzero diagonal of the Smith normal form
std::vector<Int> smith_diagonal(std::vector<std::vector<Int>> m);

} // namespace homtorus
