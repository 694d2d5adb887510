#include "homtorus/linkrep.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace homtorus {

namespace {

struct DSU {
    std::vector<int> p;
    explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

int over_in_edge(const Crossing& c) { return c.sign == 1 ? c.edges[3] : c.edges[1]; }

} // namespace

Traversal traverse(const LinkDiagram& d) {
    std::map<int, int> occur;
    for (const auto& c : d.crossings) {
        if (c.sign != 1 && c.sign != -1)
            throw InconsistentEdges("crossing sign must be +1 or -1");
        for (int e : c.edges) {
            if (!d.edge_component.count(e))
                throw InconsistentEdges("crossing edge " + std::to_string(e) +
                                        " is missing from the component map");
            ++occur[e];
        }
    }
    for (const auto& [e, n] : occur)
        if (n != 2)
            throw InconsistentEdges("edge " + std::to_string(e) + " appears " +
                                    std::to_string(n) + " times, expected 2");

    // orientation transits forced by the sign convention
    std::map<int, int> succ;
    std::map<int, int> indeg;
    auto add_transit = [&](int x, int y) {
        if (succ.count(x))
            throw NonClosedComponent("edge " + std::to_string(x) +
                                     " leaves two crossings");
        succ[x] = y;
        ++indeg[y];
    };
    for (const auto& c : d.crossings) {
        add_transit(c.edges[0], c.edges[2]);
        if (c.sign == 1)
            add_transit(c.edges[3], c.edges[1]);
        else
            add_transit(c.edges[1], c.edges[3]);
    }
    for (const auto& [e, n] : indeg)
        if (n != 1)
            throw NonClosedComponent("edge " + std::to_string(e) + " enters " +
                                     std::to_string(n) + " crossings");
    for (const auto& [e, n] : occur)
        if (!succ.count(e) || !indeg.count(e))
            throw NonClosedComponent("edge " + std::to_string(e) +
                                     " is not part of a closed strand");
    // crossing-free labels in the component map are free loops
    for (const auto& [e, comp] : d.edge_component) {
        (void)comp;
        if (!occur.count(e)) succ[e] = e;
    }

    // decompose into cycles; std::map order makes the first unseen edge the
    // cycle minimum, so cycles come out ordered by smallest label
    std::vector<std::vector<int>> cycles;
    std::set<int> seen;
    for (const auto& [e0, nxt] : succ) {
        (void)nxt;
        if (seen.count(e0)) continue;
        std::vector<int> cyc;
        int e = e0;
        do {
            cyc.push_back(e);
            seen.insert(e);
            e = succ.at(e);
            if (cyc.size() > succ.size())
                throw NonClosedComponent("orientation walk does not close up");
        } while (e != e0);
        cycles.push_back(std::move(cyc));
    }

    if (static_cast<int>(cycles.size()) != d.ncomponents)
        throw InconsistentEdges("component count " + std::to_string(d.ncomponents) +
                                " does not match " + std::to_string(cycles.size()) +
                                " closed strands");
    for (int ci = 0; ci < static_cast<int>(cycles.size()); ++ci) {
        for (int e : cycles[ci])
            if (d.edge_component.at(e) != ci)
                throw InconsistentEdges("edge " + std::to_string(e) +
                                        " has the wrong component index");
        // edge numbers must increase along the orientation (one wrap per loop)
        if (!std::is_sorted(cycles[ci].begin(), cycles[ci].end()))
            throw InconsistentEdges("edge numbering does not follow orientation in "
                                    "component " + std::to_string(ci));
    }

    Traversal t;
    t.succ = succ;
    t.component_edges = cycles;

    // arcs: an under-out edge starts a new arc, everything else continues one
    std::set<int> arc_start;
    for (const auto& c : d.crossings) arc_start.insert(c.edges[2]);
    for (int ci = 0; ci < static_cast<int>(cycles.size()); ++ci) {
        const auto& cyc = cycles[ci];
        int n = static_cast<int>(cyc.size());
        int first = -1;
        for (int i = 0; i < n; ++i)
            if (arc_start.count(cyc[i])) {
                first = i;
                break;
            }
        if (first < 0) {
            // never passes under anything: single closed arc
            int id = static_cast<int>(t.arc_component.size());
            t.arc_component.push_back(ci);
            t.arc_first_edge.push_back(cyc[0]);
            for (int e : cyc) t.arc_of_edge[e] = id;
            continue;
        }
        int id = -1;
        for (int k = 0; k < n; ++k) {
            int e = cyc[(first + k) % n];
            if (arc_start.count(e)) {
                id = static_cast<int>(t.arc_component.size());
                t.arc_component.push_back(ci);
                t.arc_first_edge.push_back(e);
            }
            t.arc_of_edge[e] = id;
        }
    }
    for (const auto& c : d.crossings)
        t.crossing_arcs.push_back({t.arc_of_edge.at(over_in_edge(c)),
                                   t.arc_of_edge.at(c.edges[0]),
                                   t.arc_of_edge.at(c.edges[2])});
    return t;
}

LinkDiagram make_diagram(std::vector<Crossing> crossings,
                         std::map<int, int> edge_component, int ncomponents) {
    LinkDiagram d;
    d.crossings = std::move(crossings);
    d.edge_component = std::move(edge_component);
    d.ncomponents = ncomponents;
    traverse(d);
    return d;
}

LinkDiagram parse_pd(const std::string& text) {
    std::vector<std::array<int, 4>> tuples;
    size_t i = 0, n = text.size();
    auto skip = [&] {
        while (i < n && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
            ++i;
    };
    auto parse_int = [&]() -> int {
        skip();
        size_t start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw MalformedPD("expected an edge number");
        long v = std::stol(text.substr(start, i - start));
        if (v <= 0 || v > 1'000'000'000) throw MalformedPD("edge number out of range");
        return static_cast<int>(v);
    };
    while (true) {
        skip();
        if (i >= n) break;
        if (text[i] != 'X') throw MalformedPD("expected 'X[' at position " + std::to_string(i));
        ++i;
        skip();
        if (i >= n || text[i] != '[') throw MalformedPD("expected '[' after 'X'");
        ++i;
        std::array<int, 4> tup{};
        int count = 0;
        while (true) {
            skip();
            if (i < n && text[i] == ']') {
                ++i;
                break;
            }
            if (count >= 4) throw MalformedPD("crossing has more than 4 edges");
            tup[count++] = parse_int();
        }
        if (count != 4)
            throw MalformedPD("crossing has " + std::to_string(count) + " edges, expected 4");
        tuples.push_back(tup);
    }

    std::map<int, int> occur;
    for (const auto& t : tuples)
        for (int e : t) ++occur[e];
    for (const auto& [e, cnt] : occur)
        if (cnt != 2)
            throw InconsistentEdges("edge " + std::to_string(e) + " appears " +
                                    std::to_string(cnt) + " times, expected 2");

    // components: under strand joins slots 0/2, over strand joins 1/3
    std::vector<int> labels;
    for (const auto& [e, cnt] : occur) {
        (void)cnt;
        labels.push_back(e);
    }
    std::map<int, int> idx;
    for (int k = 0; k < static_cast<int>(labels.size()); ++k) idx[labels[k]] = k;
    DSU dsu(static_cast<int>(labels.size()));
    for (const auto& t : tuples) {
        dsu.unite(idx[t[0]], idx[t[2]]);
        dsu.unite(idx[t[1]], idx[t[3]]);
    }
    std::map<int, std::vector<int>> classes; // root -> ascending labels
    for (int e : labels) classes[dsu.find(idx[e])].push_back(e);

    // orientation forced by numbering: next edge = next label in the component
    std::map<int, int> nxt;
    for (auto& [root, ls] : classes) {
        (void)root;
        std::sort(ls.begin(), ls.end());
        for (size_t k = 0; k < ls.size(); ++k) nxt[ls[k]] = ls[(k + 1) % ls.size()];
    }

    std::set<int> consumed;
    for (const auto& t : tuples) {
        if (nxt.at(t[0]) != t[2])
            throw NonClosedComponent("under-strand " + std::to_string(t[0]) + " -> " +
                                     std::to_string(t[2]) +
                                     " does not follow the edge numbering");
        if (consumed.count(t[0]))
            throw NonClosedComponent("edge " + std::to_string(t[0]) +
                                     " leaves two crossings");
        consumed.insert(t[0]);
    }

    // over-strand direction: prefer the choice forced by numbering and by the
    // one-exit-per-edge rule, tie-break d->b for fully symmetric cases
    std::vector<int> sign(tuples.size(), 0);
    auto try_resolve = [&](size_t k, bool allow_tiebreak) -> bool {
        int b = tuples[k][1], dd = tuples[k][3];
        bool db = nxt.at(dd) == b && !consumed.count(dd);
        bool bd = nxt.at(b) == dd && !consumed.count(b);
        if (!db && !bd)
            throw NonClosedComponent("over-strand at crossing " + std::to_string(k) +
                                     " does not follow the edge numbering");
        if (db && bd && !allow_tiebreak) return false;
        if (db) {
            sign[k] = 1;
            consumed.insert(dd);
        } else {
            sign[k] = -1;
            consumed.insert(b);
        }
        return true;
    };
    size_t unresolved = tuples.size();
    while (unresolved > 0) {
        bool progress = false;
        for (size_t k = 0; k < tuples.size(); ++k)
            if (sign[k] == 0 && try_resolve(k, false)) {
                --unresolved;
                progress = true;
            }
        if (!progress && unresolved > 0) {
            for (size_t k = 0; k < tuples.size(); ++k)
                if (sign[k] == 0) {
                    try_resolve(k, true);
                    --unresolved;
                    break;
                }
        }
    }
    if (consumed.size() != labels.size())
        throw NonClosedComponent("some edges never leave a crossing");

    // component indices ordered by smallest label
    std::vector<std::vector<int>> comps;
    for (auto& [root, ls] : classes) {
        (void)root;
        comps.push_back(ls);
    }
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    std::map<int, int> edge_component;
    for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci)
        for (int e : comps[ci]) edge_component[e] = ci;

    std::vector<Crossing> crossings;
    for (size_t k = 0; k < tuples.size(); ++k)
        crossings.push_back({tuples[k], sign[k]});
    return make_diagram(std::move(crossings), std::move(edge_component),
                        static_cast<int>(comps.size()));
}

BraidWord parse_braid(const std::string& text, int strands) {
    BraidWord w;
    std::istringstream in(text);
    std::string tok;
    int max_index = 0;
    while (in >> tok) {
        if (tok.size() < 2 || tok[0] != 's')
            throw MalformedBraid("bad braid letter '" + tok + "'");
        size_t pos = 1;
        size_t digits = 0;
        while (pos + digits < tok.size() &&
               std::isdigit(static_cast<unsigned char>(tok[pos + digits])))
            ++digits;
        if (digits == 0) throw MalformedBraid("bad braid letter '" + tok + "'");
        int index = std::stoi(tok.substr(pos, digits));
        pos += digits;
        long exp = 1;
        if (pos < tok.size()) {
            if (tok[pos] != '^') throw MalformedBraid("bad braid letter '" + tok + "'");
            ++pos;
            size_t end = 0;
            try {
                exp = std::stol(tok.substr(pos), &end);
            } catch (const std::exception&) {
                throw MalformedBraid("bad exponent in '" + tok + "'");
            }
            if (end != tok.size() - pos) throw MalformedBraid("bad exponent in '" + tok + "'");
        }
        if (index < 1) throw MalformedBraid("braid index must be >= 1");
        max_index = std::max(max_index, index);
        for (long r = 0; r < std::abs(exp); ++r)
            w.letters.push_back(exp > 0 ? index : -index);
    }
    if (strands < 0)
        w.strands = std::max(max_index + 1, 1);
    else {
        if (strands < 1) throw MalformedBraid("a braid needs at least one strand");
        if (strands < max_index + 1)
            throw MalformedBraid("braid letter exceeds the strand count");
        w.strands = strands;
    }
    return w;
}

// Letters are drawn with the strands flowing downward; with this convention a
// positive letter s_i takes the strand in position i over the strand in
// position i+1, which makes each such crossing negative in the d->b sense.
// This single constant fixes the handedness of every braid closure.
constexpr bool kBraidPositiveIsOver = true;

LinkDiagram braid_closure(const BraidWord& b) {
    const int s = b.strands;
    const int m = static_cast<int>(b.letters.size());
    if (s < 1) throw MalformedBraid("a braid needs at least one strand");
    for (int l : b.letters)
        if (l == 0 || std::abs(l) > s - 1)
            throw MalformedBraid("braid letter exceeds the strand count");

    if (m == 0) {
        // closure of the identity braid: s disjoint unknots
        std::map<int, int> ec;
        for (int p = 0; p < s; ++p) ec[p + 1] = p;
        return make_diagram({}, std::move(ec), s);
    }

    // wire segments between letter rows; row k feeds letter k, rows wrap mod m
    auto seg = [&](int k, int p) { return (k % m) * s + p; };
    DSU dsu(m * s);
    for (int k = 0; k < m; ++k) {
        int i = std::abs(b.letters[k]) - 1;
        for (int p = 0; p < s; ++p)
            if (p != i && p != i + 1) dsu.unite(seg(k, p), seg((k + 1) % m, p));
    }

    // trace the closed strands to number edges along the orientation
    std::vector<char> visited(m * s, 0);
    std::map<int, int> label_of_class;
    std::map<int, int> edge_component;
    int next_label = 1, comp = 0;
    for (int p0 = 0; p0 < s; ++p0) {
        if (visited[seg(0, p0)]) continue;
        label_of_class[dsu.find(seg(0, p0))] = next_label;
        edge_component[next_label] = comp;
        ++next_label;
        int k = 0, p = p0;
        while (!visited[seg(k, p)]) {
            visited[seg(k, p)] = 1;
            int i = std::abs(b.letters[k]) - 1;
            if (p == i || p == i + 1) {
                p = (p == i) ? i + 1 : i;
                k = (k + 1) % m;
                int cl = dsu.find(seg(k, p));
                if (!label_of_class.count(cl)) {
                    label_of_class[cl] = next_label;
                    edge_component[next_label] = comp;
                    ++next_label;
                }
            } else {
                k = (k + 1) % m;
            }
        }
        ++comp;
    }

    std::vector<Crossing> crossings;
    for (int k = 0; k < m; ++k) {
        int i = std::abs(b.letters[k]) - 1;
        int in_l = label_of_class.at(dsu.find(seg(k, i)));
        int in_r = label_of_class.at(dsu.find(seg(k, i + 1)));
        int out_l = label_of_class.at(dsu.find(seg((k + 1) % m, i)));
        int out_r = label_of_class.at(dsu.find(seg((k + 1) % m, i + 1)));
        bool over_type = (b.letters[k] > 0) == kBraidPositiveIsOver;
        if (over_type)
            crossings.push_back({{in_r, in_l, out_l, out_r}, -1});
        else
            crossings.push_back({{in_l, out_l, out_r, in_r}, 1});
    }
    return make_diagram(std::move(crossings), std::move(edge_component), comp);
}

LinkDiagram borromean() { return band_sum_borromean(1); }

LinkDiagram band_sum_borromean(int n) {
    if (n < 1) throw MalformedBraid("band-sum repetition count must be at least 1");
    BraidWord w;
    w.strands = 3;
    for (int r = 0; r < n; ++r)
        for (int v : {1, -2, 1, -2, 1, -2}) w.letters.push_back(v);
    return braid_closure(w);
}

std::vector<std::vector<int>> linking_matrix(const LinkDiagram& d) {
    traverse(d); // reject malformed input before counting
    std::vector<std::vector<int>> lk(d.ncomponents, std::vector<int>(d.ncomponents, 0));
    for (const auto& c : d.crossings) {
        int cu = d.edge_component.at(c.edges[0]);
        int co = d.edge_component.at(over_in_edge(c));
        if (cu != co) lk[cu][co] += c.sign;
    }
    for (int i = 0; i < d.ncomponents; ++i)
        for (int j = 0; j < i; ++j)
            if (lk[i][j] != lk[j][i])
                throw InconsistentEdges("under/over crossing counts disagree between "
                                        "components " + std::to_string(i) + " and " +
                                        std::to_string(j));
    return lk;
}

namespace {

// fresh consecutive labels assigned along the given per-component edge orders
LinkDiagram rebuild(const std::vector<std::vector<int>>& new_order,
                    const std::vector<Crossing>& crossings,
                    const std::vector<int>& sign_flip) {
    std::map<int, int> relabel;
    std::map<int, int> edge_component;
    int next = 1;
    for (int ci = 0; ci < static_cast<int>(new_order.size()); ++ci)
        for (int e : new_order[ci]) {
            relabel[e] = next;
            edge_component[next] = ci;
            ++next;
        }
    std::vector<Crossing> out;
    for (size_t k = 0; k < crossings.size(); ++k) {
        Crossing c = crossings[k];
        for (int& e : c.edges) e = relabel.at(e);
        c.sign *= sign_flip[k];
        out.push_back(c);
    }
    return make_diagram(std::move(out), std::move(edge_component),
                        static_cast<int>(new_order.size()));
}

} // namespace

LinkDiagram reverse_component(const LinkDiagram& d, int comp) {
    if (comp < 0 || comp >= d.ncomponents)
        throw std::invalid_argument("component index out of range");
    Traversal t = traverse(d);

    std::vector<std::vector<int>> order = t.component_edges;
    // reversed component walks its cycle backwards from the same base edge
    auto& cyc = order[comp];
    std::reverse(cyc.begin() + 1, cyc.end());

    std::vector<Crossing> crossings = d.crossings;
    std::vector<int> flip(crossings.size(), 1);
    for (size_t k = 0; k < crossings.size(); ++k) {
        Crossing& c = crossings[k];
        bool under_rev = d.edge_component.at(c.edges[0]) == comp;
        bool over_rev = d.edge_component.at(over_in_edge(c)) == comp;
        if (under_rev) // under-in moves to the old under-out slot
            c.edges = {c.edges[2], c.edges[3], c.edges[0], c.edges[1]};
        if (under_rev != over_rev) flip[k] = -1;
    }
    return rebuild(order, crossings, flip);
}

LinkDiagram relabel_diagram(const LinkDiagram& d, const std::vector<int>& comp_perm,
                            const std::vector<int>& rot,
                            const std::vector<int>& crossing_perm) {
    Traversal t = traverse(d);
    if (static_cast<int>(comp_perm.size()) != d.ncomponents ||
        static_cast<int>(rot.size()) != d.ncomponents ||
        crossing_perm.size() != d.crossings.size())
        throw std::invalid_argument("relabeling data has the wrong size");

    std::vector<std::vector<int>> order;
    for (int new_ci = 0; new_ci < d.ncomponents; ++new_ci) {
        const auto& cyc = t.component_edges.at(comp_perm[new_ci]);
        int n = static_cast<int>(cyc.size());
        int r = ((rot[comp_perm[new_ci]] % n) + n) % n;
        std::vector<int> rotated;
        for (int k = 0; k < n; ++k) rotated.push_back(cyc[(r + k) % n]);
        order.push_back(std::move(rotated));
    }
    std::vector<Crossing> crossings;
    for (int old_k : crossing_perm) crossings.push_back(d.crossings.at(old_k));
    return rebuild(order, crossings, std::vector<int>(crossings.size(), 1));
}

std::string diagram_to_json(const LinkDiagram& d) {
    nlohmann::json j;
    j["crossings"] = nlohmann::json::array();
    for (const auto& c : d.crossings)
        j["crossings"].push_back({{"edges", c.edges}, {"sign", c.sign}});
    j["edge_component"] = nlohmann::json::object();
    for (const auto& [e, ci] : d.edge_component)
        j["edge_component"][std::to_string(e)] = ci;
    j["ncomponents"] = d.ncomponents;
    return j.dump();
}

LinkDiagram diagram_from_json(const std::string& json_text) {
    try {
        nlohmann::json j = nlohmann::json::parse(json_text);
        std::vector<Crossing> crossings;
        for (const auto& jc : j.at("crossings")) {
            Crossing c;
            c.edges = jc.at("edges").get<std::array<int, 4>>();
            c.sign = jc.at("sign").get<int>();
            crossings.push_back(c);
        }
        std::map<int, int> ec;
        for (const auto& [key, val] : j.at("edge_component").items())
            ec[std::stoi(key)] = val.get<int>();
        return make_diagram(std::move(crossings), std::move(ec),
                            j.at("ncomponents").get<int>());
    } catch (const nlohmann::json::exception& ex) {
        throw MalformedPD(std::string("bad diagram JSON: ") + ex.what());
    } catch (const std::invalid_argument&) {
        throw MalformedPD("bad diagram JSON: non-numeric edge label");
    }
}

} // namespace homtorus
