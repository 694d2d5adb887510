#include "homtorus/foxalex.hpp"

#include <algorithm>
#include <stdexcept>

namespace homtorus {

GroupPresentation wirtinger(const LinkDiagram& d) {
    Traversal t = traverse(d);
    GroupPresentation p;
    p.ngenerators = static_cast<int>(t.arc_component.size());
    p.ncomponents = d.ncomponents;
    p.generator_component = t.arc_component;
    for (size_t k = 0; k < d.crossings.size(); ++k) {
        int e = d.crossings[k].sign;
        const auto& ca = t.crossing_arcs[k];
        p.relators.push_back(
            {{ca.over, e}, {ca.under_in, 1}, {ca.over, -e}, {ca.under_out, -1}});
    }
    return p;
}

LaurentPoly fox_derivative(const FreeWord& word, int gen,
                           const std::vector<int>& generator_component,
                           int nvars) {
    LaurentPoly result = LaurentPoly::zero(nvars);
    Monomial prefix(nvars, 0);
    for (const auto& [g, e] : word) {
        int v = generator_component.at(g);
        if (v < 0 || v >= nvars)
            throw VariableMismatch("generator component outside variable range");
        if (g == gen && e != 0) {
            // d(g^e) = 1 + g + ... + g^{e-1}, resp. -(g^-1 + ... + g^e)
            std::vector<std::pair<Monomial, Int>> terms;
            for (int k = 0; k < e; ++k) {
                Monomial m = prefix;
                m[v] += k;
                terms.emplace_back(m, 1);
            }
            for (int k = 1; k <= -e; ++k) {
                Monomial m = prefix;
                m[v] -= k;
                terms.emplace_back(m, -1);
            }
            result = result + LaurentPoly::from_terms(nvars, terms);
        }
        prefix[v] += e;
    }
    return result;
}

std::vector<std::vector<LaurentPoly>> alexander_matrix(const LinkDiagram& d) {
    GroupPresentation p = wirtinger(d);
    int nv = std::max(p.ncomponents, 1);
    std::vector<std::vector<LaurentPoly>> m;
    for (const auto& r : p.relators) {
        std::vector<LaurentPoly> row;
        for (int g = 0; g < p.ngenerators; ++g)
            row.push_back(fox_derivative(r, g, p.generator_component, nv));
        m.push_back(std::move(row));
    }
    return m;
}

LaurentPoly det_poly(std::vector<std::vector<LaurentPoly>> m, int nvars) {
    int n = static_cast<int>(m.size());
    if (n == 0) return LaurentPoly::constant(nvars, 1);
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("determinant needs a square matrix");

    // scale every row into ordinary polynomials; changes the result by a unit
    for (auto& row : m) {
        Monomial mins(nvars, 0);
        for (const auto& e : row)
            for (const auto& [mono, c] : e.terms) {
                (void)c;
                for (int v = 0; v < nvars; ++v) mins[v] = std::min(mins[v], mono[v]);
            }
        for (auto& e : row) {
            std::vector<std::pair<Monomial, Int>> shifted;
            for (const auto& [mono, c] : e.terms) {
                Monomial mo = mono;
                for (int v = 0; v < nvars; ++v) mo[v] -= mins[v];
                shifted.emplace_back(mo, c);
            }
            e = LaurentPoly::from_terms(nvars, shifted);
        }
    }

    // fraction-free elimination: every intermediate entry stays a polynomial
    LaurentPoly prev = LaurentPoly::constant(nvars, 1);
    int sgn = 1;
    for (int k = 0; k < n; ++k) {
        int best = -1;
        size_t best_terms = 0;
        for (int i = k; i < n; ++i)
            if (!m[i][k].terms.empty() &&
                (best < 0 || m[i][k].terms.size() < best_terms)) {
                best = i;
                best_terms = m[i][k].terms.size();
            }
        if (best < 0) return LaurentPoly::zero(nvars);
        if (best != k) {
            std::swap(m[best], m[k]);
            sgn = -sgn;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                LaurentPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = exact_div(num, prev);
            }
            m[i][k] = LaurentPoly::zero(nvars);
        }
        prev = m[k][k];
    }
    return sgn < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

LaurentPoly deleted_column_gcd(const LinkDiagram& d, int col) {
    GroupPresentation p = wirtinger(d);
    int nv = std::max(p.ncomponents, 1);
    if (col < 0 || col >= p.ngenerators)
        throw std::invalid_argument("deleted column out of range");
    auto full = alexander_matrix(d);
    int r = static_cast<int>(full.size());
    int k = p.ngenerators - 1; // minor size
    if (k == 0) return LaurentPoly::constant(nv, 1);
    if (r < k) return LaurentPoly::zero(nv);

    std::vector<std::vector<LaurentPoly>> cols(r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < p.ngenerators; ++j)
            if (j != col) cols[i].push_back(full[i][j]);

    // r <= generators always, so either every row is used or one is dropped
    std::vector<LaurentPoly> minors;
    if (r == k) {
        minors.push_back(det_poly(cols, nv));
    } else {
        for (int drop = 0; drop < r; ++drop) {
            std::vector<std::vector<LaurentPoly>> sub;
            for (int i = 0; i < r; ++i)
                if (i != drop) sub.push_back(cols[i]);
            minors.push_back(det_poly(std::move(sub), nv));
        }
    }
    return canonical(gcd(minors));
}

LaurentPoly alexander_poly(const LinkDiagram& d) {
    if (d.ncomponents < 1)
        throw WrongComponentCount("the empty diagram has no Alexander polynomial");
    LaurentPoly dd = deleted_column_gcd(d, 0);
    if (d.ncomponents == 1) {
        LaurentPoly a = canonical(dd);
        Int v = eval_at_ones(a);
        if (v != 1 && v != -1)
            throw std::logic_error("knot polynomial must be a unit at t = 1");
        return a;
    }
    int c = wirtinger(d).generator_component.at(0);
    LaurentPoly tm1 = LaurentPoly::var_pow(d.ncomponents, c, 1) -
                      LaurentPoly::constant(d.ncomponents, 1);
    return canonical(exact_div(dd, tm1));
}

LaurentPoly reduced_alexander(const LinkDiagram& d) {
    if (d.ncomponents < 2)
        throw WrongComponentCount("the reduced polynomial needs at least two "
                                  "components");
    auto lk = linking_matrix(d);
    for (int i = 0; i < d.ncomponents; ++i)
        for (int j = i + 1; j < d.ncomponents; ++j)
            if (lk[i][j] != 0)
                throw ZeroLinkingRequired("components " + std::to_string(i) + " and " +
                                          std::to_string(j) + " have linking number " +
                                          std::to_string(lk[i][j]));
    LaurentPoly delta = alexander_poly(d);
    LaurentPoly prod = LaurentPoly::constant(d.ncomponents, 1);
    for (int i = 0; i < d.ncomponents; ++i)
        prod = prod * (LaurentPoly::var_pow(d.ncomponents, i, 1) -
                       LaurentPoly::constant(d.ncomponents, 1));
    return canonical(exact_div(delta, prod));
}

Int d_zero(const LinkDiagram& d) {
    Int v = eval_at_ones(reduced_alexander(d));
    return v < 0 ? Int(-v) : v;
}

std::vector<std::vector<Int>> abelianization_matrix(const GroupPresentation& p) {
    std::vector<std::vector<Int>> m;
    for (const auto& r : p.relators) {
        std::vector<Int> row(p.ngenerators, 0);
        for (const auto& [g, e] : r) row.at(g) += e;
        m.push_back(std::move(row));
    }
    return m;
}

std::vector<Int> smith_diagonal(std::vector<std::vector<Int>> m) {
    int rows = static_cast<int>(m.size());
    int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("ragged matrix");
    auto swap_cols = [&](int a, int b) {
        for (int i = 0; i < rows; ++i) std::swap(m[i][a], m[i][b]);
    };
    std::vector<Int> out;
    int t = 0;
    while (t < std::min(rows, cols)) {
        // smallest nonzero entry of the trailing block becomes the pivot
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (m[i][j] != 0 &&
                    (pi < 0 || abs(m[i][j]) < abs(m[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        std::swap(m[t], m[pi]);
        swap_cols(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < rows; ++i)
                while (m[i][t] != 0) {
                    Int q = m[i][t] / m[t][t];
                    for (int j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                    if (m[i][t] == 0) break;
                    std::swap(m[i], m[t]); // strictly smaller pivot, terminates
                    clean = false;
                }
            for (int j = t + 1; j < cols; ++j)
                while (m[t][j] != 0) {
                    Int q = m[t][j] / m[t][t];
                    for (int i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                    if (m[t][j] == 0) break;
                    swap_cols(j, t);
                    clean = false;
                }
        }

        // invariant-factor condition: pivot divides the trailing block
        bool redo = false;
        for (int i = t + 1; i < rows && !redo; ++i)
            for (int j = t + 1; j < cols && !redo; ++j)
                if (m[i][j] % m[t][t] != 0) {
                    for (int jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
                    redo = true;
                }
        if (redo) continue;
        out.push_back(abs(m[t][t]));
        ++t;
    }
    return out;
}

} // namespace homtorus
