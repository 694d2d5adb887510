#include "homtorus/milnor.hpp"

#include <stdexcept>

namespace homtorus {

namespace {

void check_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.nvars != b.nvars || a.cap != b.cap)
        throw VariableMismatch("series have different symbol counts or caps");
}

void drop_zeros(TruncatedSeries& s) {
    for (auto it = s.coeff.begin(); it != s.coeff.end();)
        it = it->second == 0 ? s.coeff.erase(it) : std::next(it);
}

} // namespace

TruncatedSeries TruncatedSeries::zero(int nvars, int cap) {
    TruncatedSeries s;
    s.nvars = nvars;
    s.cap = cap;
    return s;
}

TruncatedSeries TruncatedSeries::one(int nvars, int cap) {
    TruncatedSeries s = zero(nvars, cap);
    s.coeff[{}] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::gen(int nvars, int cap, int var) {
    if (var < 0 || var >= nvars) throw VariableMismatch("symbol index out of range");
    TruncatedSeries s = one(nvars, cap);
    if (cap >= 1) s.coeff[{var}] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::gen_inverse(int nvars, int cap, int var) {
    if (var < 0 || var >= nvars) throw VariableMismatch("symbol index out of range");
    TruncatedSeries s = one(nvars, cap);
    std::vector<int> word;
    for (int k = 1; k <= cap; ++k) {
        word.push_back(var);
        s.coeff[word] = (k % 2 == 0) ? 1 : -1;
    }
    return s;
}

Int TruncatedSeries::get(const std::vector<int>& word) const {
    auto it = coeff.find(word);
    return it == coeff.end() ? Int(0) : it->second;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_compatible(a, b);
    TruncatedSeries s = a;
    for (const auto& [w, c] : b.coeff) s.coeff[w] += c;
    drop_zeros(s);
    return s;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_compatible(a, b);
    TruncatedSeries s = a;
    for (const auto& [w, c] : b.coeff) s.coeff[w] -= c;
    drop_zeros(s);
    return s;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_compatible(a, b);
    TruncatedSeries s = TruncatedSeries::zero(a.nvars, a.cap);
    for (const auto& [wa, ca] : a.coeff)
        for (const auto& [wb, cb] : b.coeff) {
            if (static_cast<int>(wa.size() + wb.size()) > a.cap) continue;
            std::vector<int> w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            s.coeff[w] += ca * cb;
        }
    drop_zeros(s);
    return s;
}

TruncatedSeries magnus(const FreeWord& w, const std::vector<int>& var_of,
                       int nvars, int cap) {
    TruncatedSeries s = TruncatedSeries::one(nvars, cap);
    for (const auto& [g, e] : w) {
        int var = var_of.at(g);
        TruncatedSeries f = e > 0 ? TruncatedSeries::gen(nvars, cap, var)
                                  : TruncatedSeries::gen_inverse(nvars, cap, var);
        for (int k = 0; k < std::abs(e); ++k) s = s * f;
    }
    return s;
}

FreeWord longitude(const LinkDiagram& d, int comp) {
    if (comp < 0 || comp >= d.ncomponents)
        throw std::invalid_argument("component index out of range");
    Traversal t = traverse(d);

    std::map<int, int> under_in_at; // edge -> crossing it enters underneath
    for (size_t k = 0; k < d.crossings.size(); ++k)
        under_in_at[d.crossings[k].edges[0]] = static_cast<int>(k);

    FreeWord w;
    for (int e : t.component_edges[comp]) {
        auto it = under_in_at.find(e);
        if (it == under_in_at.end()) continue;
        int k = it->second;
        w.push_back({t.crossing_arcs[k].over, d.crossings[k].sign});
    }

    int self_writhe = 0;
    for (const auto& c : d.crossings) {
        int cu = d.edge_component.at(c.edges[0]);
        int co = d.edge_component.at(c.sign == 1 ? c.edges[3] : c.edges[1]);
        if (cu == comp && co == comp) self_writhe += c.sign;
    }
    if (self_writhe != 0)
        w.push_back({t.arc_of_edge.at(t.component_edges[comp].front()), -self_writhe});
    return w;
}

namespace {

// degree-1 conjugator of every arc relative to its component's base arc:
// walking from the base, each under-passage appends (over arc)^sign to the
// conjugating word, which counts as sign * X_{comp(over)} at this order
std::vector<std::vector<Int>> arc_conjugators(const LinkDiagram& d,
                                              const Traversal& t) {
    int nv = d.ncomponents;
    std::map<int, int> under_in_at;
    for (size_t k = 0; k < d.crossings.size(); ++k)
        under_in_at[d.crossings[k].edges[0]] = static_cast<int>(k);

    std::vector<std::vector<Int>> conj(t.arc_component.size(),
                                       std::vector<Int>(nv, 0));
    for (int ci = 0; ci < d.ncomponents; ++ci) {
        const auto& cyc = t.component_edges[ci];
        int base = t.arc_of_edge.at(cyc.front());
        std::vector<Int> w(nv, 0);
        for (int e : cyc) {
            auto it = under_in_at.find(e);
            if (it == under_in_at.end()) continue;
            int k = it->second;
            w[t.arc_component.at(t.crossing_arcs[k].over)] += d.crossings[k].sign;
            int target = t.crossing_arcs[k].under_out;
            if (target != base) conj[target] = w; // the last passage wraps to base
        }
    }
    return conj;
}

// 1 + X_c + (W X_c - X_c W) and its inverse 1 - X_c + X_c^2 - (W X_c - X_c W)
TruncatedSeries conjugated_meridian(int nv, int c, const std::vector<Int>& w,
                                    bool inverse) {
    TruncatedSeries s = TruncatedSeries::one(nv, 2);
    s.coeff[{c}] = inverse ? -1 : 1;
    if (inverse) s.coeff[{c, c}] = 1;
    Int flip = inverse ? -1 : 1;
    for (int j = 0; j < nv; ++j) {
        if (w[j] == 0) continue;
        s.coeff[{j, c}] += flip * w[j];
        s.coeff[{c, j}] -= flip * w[j];
    }
    return s;
}

} // namespace

TruncatedSeries longitude_expansion(const LinkDiagram& d, int comp) {
    Traversal t = traverse(d);
    auto conj = arc_conjugators(d, t);
    int nv = d.ncomponents;
    TruncatedSeries s = TruncatedSeries::one(nv, 2);
    for (const auto& [g, e] : longitude(d, comp)) {
        TruncatedSeries f =
            conjugated_meridian(nv, t.arc_component.at(g), conj.at(g), e < 0);
        for (int k = 0; k < std::abs(e); ++k) s = s * f;
    }
    return s;
}

Int mu_bar_123(const LinkDiagram& d) {
    if (d.ncomponents != 3)
        throw WrongComponentCount("the triple invariant needs exactly three "
                                  "components, got " + std::to_string(d.ncomponents));
    auto lk = linking_matrix(d);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (lk[i][j] != 0)
                throw ZeroLinkingRequired("components " + std::to_string(i) + " and " +
                                          std::to_string(j) + " have linking number " +
                                          std::to_string(lk[i][j]));
    return longitude_expansion(d, 2).get({0, 1});
}

} // namespace homtorus
