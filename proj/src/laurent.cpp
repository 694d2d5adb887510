#include "homtorus/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace homtorus {

bool grlex_less(const Monomial& a, const Monomial& b) {
    long da = 0, db = 0;
    for (int32_t e : a) da += e;
    for (int32_t e : b) db += e;
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grlex_less(a, b);
    }
};

static void check_same_vars(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars != b.nvars)
        throw VariableMismatch("operands have " + std::to_string(a.nvars) +
                               " and " + std::to_string(b.nvars) + " variables");
}

static void normalize(LaurentPoly& p) {
    for (auto& [m, c] : p.terms)
        if ((int)m.size() != p.nvars)
            throw VariableMismatch("exponent vector size does not match nvars");
    std::sort(p.terms.begin(), p.terms.end(),
              [](const auto& x, const auto& y) { return grlex_less(x.first, y.first); });
    std::vector<std::pair<Monomial, Int>> out;
    out.reserve(p.terms.size());
    for (auto& t : p.terms) {
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().second == 0) out.pop_back();
    }
    p.terms = std::move(out);
}

LaurentPoly LaurentPoly::zero(int nvars) { return LaurentPoly(nvars); }

LaurentPoly LaurentPoly::constant(int nvars, Int c) {
    LaurentPoly p(nvars);
    if (c != 0) p.terms.emplace_back(Monomial(nvars, 0), std::move(c));
    return p;
}

LaurentPoly LaurentPoly::var_pow(int nvars, int var, int exp, Int c) {
    if (var < 0 || var >= nvars) throw VariableMismatch("variable index out of range");
    LaurentPoly p(nvars);
    if (c != 0) {
        Monomial m(nvars, 0);
        m[var] = exp;
        p.terms.emplace_back(std::move(m), std::move(c));
    }
    return p;
}

LaurentPoly LaurentPoly::from_terms(int nvars,
                                    std::vector<std::pair<Monomial, Int>> ts) {
    LaurentPoly p(nvars);
    p.terms = std::move(ts);
    normalize(p);
    return p;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    check_same_vars(a, b);
    LaurentPoly r(a.nvars);
    r.terms = a.terms;
    r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
    normalize(r);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r = a;
    for (auto& [m, c] : r.terms) c = -c;
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return a + (-b);
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    check_same_vars(a, b);
    std::map<Monomial, Int, GrlexLess> acc;
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            Monomial m(a.nvars);
            for (int i = 0; i < a.nvars; ++i) m[i] = ma[i] + mb[i];
            acc[std::move(m)] += ca * cb;
        }
    LaurentPoly r(a.nvars);
    for (auto& [m, c] : acc)
        if (c != 0) r.terms.emplace_back(m, std::move(c));
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const Int& c) {
    if (c == 0) return LaurentPoly::zero(a.nvars);
    LaurentPoly r = a;
    for (auto& [m, k] : r.terms) k *= c;
    return r;
}

LaurentPoly canonical(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    Monomial mn = p.terms.front().first;
    for (const auto& [m, c] : p.terms)
        for (int i = 0; i < p.nvars; ++i) mn[i] = std::min(mn[i], m[i]);
    LaurentPoly r = p;
    for (auto& [m, c] : r.terms)
        for (int i = 0; i < p.nvars; ++i) m[i] -= mn[i];
    // uniform shift preserves grlex order, so terms.front() is still smallest
    if (r.terms.front().second < 0)
        for (auto& [m, c] : r.terms) c = -c;
    return r;
}

Int eval_at_ones(const LaurentPoly& p) {
    Int s = 0;
    for (const auto& [m, c] : p.terms) s += c;
    return s;
}

// componentwise min exponent over all terms (zero poly: all zeros)
static Monomial min_exponents(const LaurentPoly& p) {
    Monomial mn(p.nvars, 0);
    if (p.is_zero()) return mn;
    mn = p.terms.front().first;
    for (const auto& [m, c] : p.terms)
        for (int i = 0; i < p.nvars; ++i) mn[i] = std::min(mn[i], m[i]);
    return mn;
}

static LaurentPoly shift_exponents(const LaurentPoly& p, const Monomial& d) {
    LaurentPoly r = p;
    for (auto& [m, c] : r.terms)
        for (int i = 0; i < p.nvars; ++i) m[i] += d[i];
    return r;
}

// exact division of ordinary polynomials (nonnegative exponents), leading
// term elimination in grlex order; returns false when not divisible
static bool poly_divide(const LaurentPoly& p, const LaurentPoly& q, LaurentPoly& quo) {
    quo = LaurentPoly::zero(p.nvars);
    LaurentPoly rem = p;
    const auto& [mq, cq] = q.terms.back(); // grlex-leading term of q
    std::vector<std::pair<Monomial, Int>> qterms;
    while (!rem.is_zero()) {
        const auto& [mr, cr] = rem.terms.back();
        Monomial d(p.nvars);
        for (int i = 0; i < p.nvars; ++i) {
            d[i] = mr[i] - mq[i];
            if (d[i] < 0) return false;
        }
        if (cr % cq != 0) return false;
        Int k = cr / cq;
        LaurentPoly m(p.nvars);
        m.terms.emplace_back(d, k);
        qterms.emplace_back(std::move(d), std::move(k));
        rem = rem - m * q;
    }
    quo = LaurentPoly::from_terms(p.nvars, std::move(qterms));
    return true;
}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
    check_same_vars(p, q);
    if (p.is_zero()) return LaurentPoly::zero(p.nvars);
    if (q.is_zero()) throw NotDivisible("division by zero polynomial");
    Monomial mp = min_exponents(p), mq = min_exponents(q);
    Monomial neg_mp(p.nvars), neg_mq(p.nvars), shift(p.nvars);
    for (int i = 0; i < p.nvars; ++i) {
        neg_mp[i] = -mp[i];
        neg_mq[i] = -mq[i];
        shift[i] = mp[i] - mq[i];
    }
    LaurentPoly ph = shift_exponents(p, neg_mp);
    LaurentPoly qh = shift_exponents(q, neg_mq);
    LaurentPoly quo(p.nvars);
    if (!poly_divide(ph, qh, quo))
        throw NotDivisible("no exact quotient in the Laurent ring");
    return shift_exponents(quo, shift);
}

// ---- gcd: content / primitive-part recursion, one variable at a time ----

static int degree_in(const LaurentPoly& p, int v) {
    int d = 0;
    for (const auto& [m, c] : p.terms) d = std::max(d, (int)m[v]);
    return d;
}

// coefficient of x_v^k, with the x_v slot zeroed
static LaurentPoly coeff_of(const LaurentPoly& p, int v, int k) {
    LaurentPoly r(p.nvars);
    for (const auto& [m, c] : p.terms)
        if (m[v] == k) {
            Monomial mm = m;
            mm[v] = 0;
            r.terms.emplace_back(std::move(mm), c);
        }
    normalize(r);
    return r;
}

static LaurentPoly shift_var(const LaurentPoly& p, int v, int k) {
    LaurentPoly r = p;
    for (auto& [m, c] : r.terms) m[v] += k;
    return r;
}

static bool is_one(const LaurentPoly& p) {
    return p.terms.size() == 1 && p.terms[0].second == 1 &&
           std::all_of(p.terms[0].first.begin(), p.terms[0].first.end(),
                       [](int32_t e) { return e == 0; });
}

static LaurentPoly gcd_rec(const LaurentPoly& a, const LaurentPoly& b, int v);

// gcd of the x_v-coefficients of p (a polynomial free of x_v and of all
// variables above v)
static LaurentPoly content_in(const LaurentPoly& p, int v) {
    LaurentPoly g = LaurentPoly::zero(p.nvars);
    for (int k = 0; k <= degree_in(p, v); ++k) {
        LaurentPoly c = coeff_of(p, v, k);
        if (c.is_zero()) continue;
        g = g.is_zero() ? canonical(c) : gcd_rec(g, canonical(c), v - 1);
        if (is_one(g)) break;
    }
    return g;
}

// both nonzero, nonnegative exponents, free of variables above v
static LaurentPoly gcd_rec(const LaurentPoly& a, const LaurentPoly& b, int v) {
    if (v < 0) {
        // constants
        Int ga = a.terms[0].second, gb = b.terms[0].second;
        return LaurentPoly::constant(a.nvars, boost::multiprecision::gcd(
                                                  abs(ga), abs(gb)));
    }
    int da = degree_in(a, v), db = degree_in(b, v);
    if (da == 0 && db == 0) return gcd_rec(a, b, v - 1);
    if (da == 0) return gcd_rec(a, content_in(b, v), v - 1);
    if (db == 0) return gcd_rec(content_in(a, v), b, v - 1);

    LaurentPoly ca = content_in(a, v), cb = content_in(b, v);
    LaurentPoly cg = gcd_rec(ca, cb, v - 1);
    LaurentPoly A = exact_div(a, ca), B = exact_div(b, cb);
    if (degree_in(A, v) < degree_in(B, v)) std::swap(A, B);
    // primitive pseudo-remainder sequence in x_v
    for (;;) {
        int dB = degree_in(B, v);
        if (dB == 0) return cg; // primitive and x_v-free => unit
        LaurentPoly lb = coeff_of(B, v, dB);
        LaurentPoly R = A;
        while (!R.is_zero() && degree_in(R, v) >= dB) {
            int dR = degree_in(R, v);
            LaurentPoly lr = coeff_of(R, v, dR);
            R = R * lb - shift_var(B, v, dR - dB) * lr;
        }
        if (R.is_zero()) return cg * B;
        A = B;
        B = exact_div(R, content_in(R, v));
    }
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
    check_same_vars(a, b);
    LaurentPoly ca = canonical(a), cb = canonical(b);
    if (ca.is_zero()) return cb;
    if (cb.is_zero()) return ca;
    return canonical(gcd_rec(ca, cb, a.nvars - 1));
}

LaurentPoly gcd(const std::vector<LaurentPoly>& ps) {
    if (ps.empty()) throw std::logic_error("gcd of empty family");
    LaurentPoly g = canonical(ps[0]);
    for (size_t i = 1; i < ps.size(); ++i) {
        g = gcd(g, ps[i]);
        if (is_one(g)) break;
    }
    return g;
}

LaurentPoly substitute_squares(const LaurentPoly& p,
                               const std::vector<int>& varmap, int new_nvars) {
    if ((int)varmap.size() != p.nvars)
        throw VariableMismatch("varmap size does not match nvars");
    for (int t : varmap)
        if (t < 0 || t >= new_nvars)
            throw VariableMismatch("varmap target out of range");
    std::vector<std::pair<Monomial, Int>> ts;
    ts.reserve(p.terms.size());
    for (const auto& [m, c] : p.terms) {
        Monomial e(new_nvars, 0);
        for (int i = 0; i < p.nvars; ++i) e[varmap[i]] += 2 * m[i];
        ts.emplace_back(std::move(e), c);
    }
    return LaurentPoly::from_terms(new_nvars, std::move(ts));
}

// ---- text format ----

static std::string var_name(int nvars, int i) {
    return nvars == 1 ? "t" : "t" + std::to_string(i + 1);
}

std::string render_poly(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        const auto& [m, c] = *it;
        bool first = it == p.terms.rbegin();
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        Int a = abs(c);
        std::vector<std::string> factors;
        for (int i = 0; i < p.nvars; ++i) {
            if (m[i] == 0) continue;
            std::string f = var_name(p.nvars, i);
            if (m[i] != 1) f += "^" + std::to_string(m[i]);
            factors.push_back(std::move(f));
        }
        if (factors.empty()) {
            os << a.str();
        } else {
            if (a != 1) os << a.str() << "*";
            for (size_t k = 0; k < factors.size(); ++k)
                os << (k ? "*" : "") << factors[k];
        }
    }
    return os.str();
}

namespace {
struct PolyLexer {
    const std::string& s;
    size_t i = 0;
    explicit PolyLexer(const std::string& str) : s(str) {}
    void skip_ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    char take() {
        skip_ws();
        return s[i++];
    }
    std::string digits() {
        skip_ws();
        size_t j = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (j == i) throw MalformedPolynomial("expected digits at position " +
                                              std::to_string(j));
        return s.substr(j, i - j);
    }
};
} // namespace

LaurentPoly parse_poly(const std::string& text, int nvars) {
    PolyLexer lx(text);
    // (sign, coeff, sparse exponents) per term
    struct RawTerm {
        Int coeff;
        std::vector<std::pair<int, int>> exps; // (var index 0-based, exponent)
    };
    std::vector<RawTerm> raw;
    int max_var = 0;
    bool first = true;
    while (!lx.eof()) {
        int sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            lx.take();
            sign = c == '-' ? -1 : 1;
        } else if (!first) {
            throw MalformedPolynomial("expected '+' or '-' between terms");
        }
        first = false;
        RawTerm t;
        t.coeff = sign;
        bool have_factor = false;
        for (;;) {
            char f = lx.peek();
            if (std::isdigit((unsigned char)f)) {
                t.coeff *= Int(lx.digits());
                have_factor = true;
            } else if (f == 't') {
                lx.take();
                int var = 1;
                if (std::isdigit((unsigned char)lx.peek()))
                    var = std::stoi(lx.digits());
                if (var < 1) throw MalformedPolynomial("variable index must be >= 1");
                int e = 1;
                if (lx.peek() == '^') {
                    lx.take();
                    int es = 1;
                    if (lx.peek() == '-') {
                        lx.take();
                        es = -1;
                    }
                    e = es * std::stoi(lx.digits());
                }
                t.exps.emplace_back(var - 1, e);
                max_var = std::max(max_var, var);
                have_factor = true;
            } else {
                throw MalformedPolynomial("unexpected character '" +
                                          std::string(1, f) + "'");
            }
            if (lx.peek() == '*') {
                lx.take();
                continue;
            }
            break;
        }
        if (!have_factor) throw MalformedPolynomial("empty term");
        raw.push_back(std::move(t));
    }
    int nv = nvars >= 0 ? nvars : std::max(max_var, 1);
    if (max_var > nv)
        throw VariableMismatch("polynomial uses t" + std::to_string(max_var) +
                               " but only " + std::to_string(nv) +
                               " variables requested");
    std::vector<std::pair<Monomial, Int>> ts;
    for (auto& t : raw) {
        Monomial m(nv, 0);
        for (auto [v, e] : t.exps) m[v] += e;
        ts.emplace_back(std::move(m), std::move(t.coeff));
    }
    return LaurentPoly::from_terms(nv, std::move(ts));
}

} // namespace homtorus
