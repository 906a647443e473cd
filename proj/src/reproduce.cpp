#include "rootsys/reproduce.hpp"

#include "rootsys/classify.hpp"
#include "rootsys/named.hpp"
#include "rootsys/orbit.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace rootsys {

namespace {

using Checks = std::vector<Check>;

struct Task {
    std::string scope;
    std::function<Checks()> run;
};

template <class A, class B>
Check check(int crit, std::string anchor, const A& expected, const B& computed) {
    std::ostringstream e, c;
    e << expected;
    c << computed;
    Check k{crit, std::move(anchor), e.str(), c.str(), false};
    k.pass = k.expected == k.computed;
    return k;
}

std::string tstr(const RootSystem& sys, const IsoType& t) { return t.empty() ? "0" : t.str(sys.label.series); }
std::string tstr(const RootSystem& sys, const RootSet& x) { return tstr(sys, iso_type(sys, x)); }

std::string host_of(char s, int n) { return std::string(1, s) + std::to_string(n); }

bool exceptional(const std::string& h) { return h[0] == 'E' || h[0] == 'F' || h[0] == 'G'; }
std::string scope_of(const std::string& h) { return exceptional(h) ? "exceptional" : "classical"; }

std::vector<std::string> all_hosts() {
    std::vector<std::string> v;
    for (int n = 1; n <= 8; ++n) v.push_back(host_of('A', n));
    for (int n = 2; n <= 8; ++n) v.push_back(host_of('B', n));
    for (int n = 3; n <= 8; ++n) v.push_back(host_of('C', n));
    for (int n = 4; n <= 8; ++n) v.push_back(host_of('D', n));
    for (auto h : {"E6", "E7", "E8", "F4", "G2"}) v.push_back(h);
    return v;
}

const std::vector<std::string> kSmallHosts = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"};

BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// Textbook root counts and Weyl group orders.
std::pair<int, BigInt> root_data(const Label& l) {
    int n = l.rank;
    switch (l.series) {
        case 'A': return {n * (n + 1), factorial(n + 1)};
        case 'B':
        case 'C': return {2 * n * n, factorial(n) * (BigInt(1) << n)};
        case 'D': return {2 * n * (n - 1), factorial(n) * (BigInt(1) << (n - 1))};
        case 'E':
            if (n == 6) return {72, 51840};
            if (n == 7) return {126, 2903040};
            return {240, 696729600};
        case 'F': return {48, 1152};
        case 'G': return {12, 12};
    }
    return {0, 0};
}

// ---- criterion 1: root data

Checks root_data_checks(const std::string& h) {
    auto sys = build_root_system(h);
    auto [nroots, w] = root_data(sys.label);
    Checks out;
    out.push_back(check(1, h + " roots", nroots, sys.size()));
    out.push_back(check(1, h + " |W| by recursion", w, weyl_order(sys)));
    out.push_back(check(1, h + " |W| from marks", w, weyl_order_from_marks(sys)));
    if (h == "E8") {
        BigInt f = BigInt(1) << 14;
        f *= 243 * 25 * 7;
        out.push_back(check(1, "E8 |W| = 2^14*3^5*5^2*7", f, weyl_order(sys)));
    }
    return out;
}

// ---- criterion 2: marks, zero sum, affine labels and census

Checks affine_host_checks(const std::string& h) {
    auto sys = build_root_system(h);
    auto ext = sys.extended();
    Checks out;
    RootVec sum(sys.dim, 0);
    bool positive = true;
    for (size_t j = 0; j < ext.size(); ++j) {
        if (sys.marks[j] <= 0) positive = false;
        for (int d = 0; d < sys.dim; ++d) sum[d] += sys.marks[j] * sys.roots[ext[j]][d];
    }
    bool zero = std::all_of(sum.begin(), sum.end(), [](int x) { return x == 0; });
    out.push_back(check(2, h + " marks positive and sum m_j alpha_j = 0", "yes", positive && zero ? "yes" : "no"));
    auto d = diagram_of(sys, ext);
    for (size_t j = 0; j < ext.size(); ++j) d.nodes[j].mark = sys.marks[j];
    std::string want = h + "~";
    if (h == "C2") want = "B2~";
    out.push_back(check(2, h + " extended diagram label", want, classify_affine(d)));
    return out;
}

Checks affine_census_checks() {
    Checks out;
    for (int rb = 1; rb <= 8; ++rb) {
        std::set<std::string> a, b;
        for (auto& e : affine_catalog(rb)) a.insert(e.label);
        for (auto& e : enumerate_affine(rb)) b.insert(e.label);
        std::string missing, extra;
        for (auto& x : a)
            if (!b.count(x)) missing += " " + x;
        for (auto& x : b)
            if (!a.count(x)) extra += " " + x;
        std::ostringstream c;
        c << b.size() << (missing.empty() ? "" : " missing:" + missing) << (extra.empty() ? "" : " extra:" + extra);
        out.push_back(check(2, "affine diagrams of rank <= " + std::to_string(rb), a.size(), c.str()));
    }
    return out;
}

// ---- criterion 3: hom counts

int hom_count(const RootSystem& sys, const std::string& xi) { return int(hom_tuples(sys, IsoType::parse(xi)).size()); }

std::string perps(const RootSystem& sys, const std::string& xi) {
    std::vector<std::string> v;
    for (auto& c : hom_classes(sys, IsoType::parse(xi))) v.push_back(tstr(sys, c.perp_type));
    std::sort(v.begin(), v.end());
    std::string s;
    for (auto& x : v) s += (s.empty() ? "" : ",") + x;
    return s;
}

Checks hom_checks(const std::string& h) {
    auto sys = build_root_system(h);
    const char s = sys.label.series;
    const int n = sys.rank;
    Checks out;
    auto count = [&](const std::string& xi, int want) {
        out.push_back(check(3, "#Hom(" + xi + "," + h + ")", want, hom_count(sys, xi)));
    };
    if (s == 'A' && n >= 2) count("A2", 2);
    if (h == "D4") {
        count("A3", 3);
        count("4A1", 6);
    }
    if (s == 'D' && n > 4) {
        auto fam = table_row(sys, IsoType::parse("A3"));
        std::vector<std::string> fp;
        for (auto& r : fam.rows) fp.push_back(std::to_string(r.sharp) + ":" + r.perp_str());
        std::sort(fp.begin(), fp.end());
        const std::map<int, std::vector<std::string>> want = {
            {5, {"1:0", "1:2A1"}}, {6, {"1:2A1", "1:A3"}}, {7, {"1:A3", "1:D4"}}, {8, {"1:D4", "1:D5"}}};
        auto join = [](const std::vector<std::string>& v) {
            std::string r;
            for (auto& x : v) r += (r.empty() ? "" : " ") + x;
            return r;
        };
        out.push_back(check(3, "A3 in " + h + " families (#:perp)", join(want.at(n)), join(fp)));
    }
    if (h == "E6") {
        count("A4", 2);
        out.push_back(check(3, "perps of A4 in E6", "A1,A1", perps(sys, "A4")));
    }
    if (h == "E7") {
        count("A5", 2);
        out.push_back(check(3, "perps of A5 in E7", "A1,A2", perps(sys, "A5")));
        count("5A1", 15);
    }
    if (h == "E8") {
        count("A4+A2", 2);
        auto fam = table_row(sys, IsoType::parse("A4+A2"));
        std::string c;
        for (auto& r : fam.rows) c += (c.empty() ? "" : " ") + std::to_string(r.sharp_xi_prime) + ":" + r.perp_str();
        out.push_back(check(3, "A4+A2 in E8 #Xi':perp", "1:A1", c));
    }
    if ((s == 'B' || s == 'C') && n >= 4) count("D4", 3);
    if (s == 'D' && n >= 5) count("D4", 3);
    // D_m into hosts containing them
    if (h == "D4") count("D4", 6);
    if (s == 'D')
        for (int m = 5; m <= n; ++m) count(host_of('D', m), m == n ? 2 : 1);
    if (s == 'B')
        for (int m = 5; m <= n; ++m) count(host_of('D', m), 1);
    if (h == "F4") count("D4L", 1);
    if (s == 'E') {
        int top = n == 6 ? 5 : n == 7 ? 6 : 8;
        for (int m = 4; m <= top; ++m) count(host_of('D', m), m == top ? 2 : 1);
    }
    return out;
}

// ---- criterion 4: r and m

Checks rm_checks(const std::string& h) {
    auto sys = build_root_system(h);
    const char s = sys.label.series;
    const int n = sys.rank;
    int r = 0, m = 0;
    switch (s) {
        case 'A': r = (n + 1) / 2; break;
        case 'B': r = n >= 4 ? 2 * (n / 2) : 2; m = n >= 4 ? n : 0; break;
        case 'C': r = n; break;
        case 'D': r = 2 * (n / 2); m = n; break;
        case 'E': r = n == 6 ? 4 : n; m = n == 6 ? 5 : n == 7 ? 6 : 8; break;
        case 'F': r = 4; m = 4; break;
        case 'G': r = 1; break;
    }
    Checks out;
    out.push_back(check(4, "r(" + h + ") recursion", r, r_of(sys)));
    // largest r with an imbedding of rA1 into the long roots
    int direct = 0;
    std::string a1 = sys.two_lengths() ? "A1L" : "A1";
    for (int k = 1; k <= n; ++k)
        if (!hom_tuples(sys, IsoType::parse(std::to_string(k) + a1)).empty()) direct = k;
    out.push_back(check(4, "r(" + h + ") by direct search", r, direct));
    out.push_back(check(4, "m(" + h + ")", m, m_sigma(sys)));
    return out;
}

// ---- criterion 5: fundamental subset counts

struct Bracket {
    std::string xi, host;
    long long value;
};

const std::vector<Bracket> kBrackets = {
    {"2A1", "E6", 10}, {"2A1", "E7", 15}, {"2A1", "E8", 21},
    {"3A1", "E6", 5}, {"3A1", "E7", 11}, {"3A1", "E8", 21},
    {"4A1", "E7", 2}, {"4A1", "E8", 7},
    {"A2+A1", "E6", 10}, {"A2+A1", "E7", 18}, {"A2+A1", "E8", 28},
    {"A2+2A1", "E7", 12}, {"A2+2A1", "E8", 28},
    {"A2+3A1", "E8", 7},
    {"2A2", "E7", 4}, {"2A2", "E8", 8},
    {"2A2+A1", "E8", 9},
    {"2A2+2A1", "E8", 2},
    {"A3+A1", "E7", 11}, {"A3+A1", "E8", 20},
    {"A3+2A1", "E8", 10},
    {"A3+A2", "E8", 10},
    {"A3+A2+A1", "E8", 4},
    {"2A3", "E8", 2},
    {"A4+A1", "E7", 5}, {"A4+A1", "E8", 12},
    {"A4+A2", "E8", 4},
    // intermediate terms of the recursions
    {"A1", "A1", 1}, {"A1", "A4", 4}, {"A1", "D5", 5}, {"A1", "E6", 6},
    {"2A1", "A4", 3}, {"2A1", "D5", 6}, {"3A1", "D5", 2}, {"4A1", "E6", 0},
    {"A2", "A4", 3}, {"A2", "D5", 4}, {"A2", "E6", 5},
    {"A2+A1", "A4", 2}, {"A2+A1", "D5", 4},
    {"A2+2A1", "D5", 1}, {"A2+2A1", "E6", 5}, {"A2+3A1", "E7", 0},
    {"2A2", "E6", 1}, {"2A2+A1", "E6", 1}, {"2A2+A1", "E7", 4},
    {"A3", "A4", 2}, {"A3", "D5", 4}, {"A3", "E6", 5},
    {"A3+A1", "D5", 1}, {"A3+A1", "E6", 4}, {"A3+2A1", "E7", 3},
    {"A3+A2", "E6", 0}, {"A3+A2", "E7", 3}, {"A3+A2+A1", "E7", 1}, {"2A3", "E7", 0},
    {"A4", "D5", 2}, {"A4", "E6", 4}, {"A4+A1", "E6", 2}, {"A4+A2", "E7", 1},
};

Checks bracket_checks(const Bracket& b) {
    auto t = IsoType::parse(b.xi);
    auto sys = build_root_system(b.host);
    long long direct = fundamental_subsets(sys, t).count;
    long long rec = fundamental_count_recursive(t, b.host);
    std::string a = "[" + b.xi + "," + b.host + "]";
    return {check(5, a + " subsets", b.value, direct), check(5, a + " recursion", b.value, rec),
            check(5, a + " subsets = recursion", direct, rec)};
}

// ---- criterion 6: Out_Sigma orders of named representatives

struct OutAnchor {
    std::string name, host, type;
    int order;
};

const std::vector<OutAnchor> kOut = {
    {"8A1std", "E8", "8A1", 1344}, {"7A1std", "E7", "7A1", 168},     {"6A1std", "E8", "6A1", 48},
    {"6A1std", "E7", "6A1", 24},   {"5A1std", "E8", "5A1", 24},      {"5A1std", "E7", "5A1", 8},
    {"D4+3A1std", "E7", "D4+3A1", 6}, {"2D4std", "E8", "2D4", 12},    {"D4+4A1std", "E8", "D4+4A1", 48},
    {"3A2std", "E6", "3A2", 6},    {"3A2std", "E7", "3A2", 12},      {"4A2std", "E8", "4A2", 48},
};

Checks out_checks(const OutAnchor& a) {
    auto sys = build_root_system(a.host);
    auto x = named_subsystem(sys, a.name);
    auto orb = orbit_of(sys, x.roots);
    BigInt order = close_group(int(orb.base.size()), orb.schreier).size();
    std::string tag = a.name + " in " + a.host;
    Checks out;
    out.push_back(check(6, tag + " type", a.type, tstr(sys, x.roots)));
    out.push_back(check(6, "#Out_" + a.host + "(" + a.name + ")", a.order, order));
    BigInt stab = order * weyl_order_of(sys, x.roots) * weyl_order_of(sys, perp(sys, x.roots).roots);
    out.push_back(check(6, tag + " orbit * |Out_Sigma| |W_Xi| |W_perp| = |W|", weyl_order(sys), stab * orb.size));
    return out;
}

// ---- criterion 7: census statistics

struct StatAnchor {
    std::string host;
    int classes, iso, s_closed, l_closed, perp_closed, dense, full_rank, maximal, maximal_s, dual, special;
};

const std::vector<StatAnchor> kStats = {
    {"E6", 20, 20, 20, 16, 7, 10, 3, 3, 3, 3, 1},
    {"E7", 46, 40, 46, 31, 13, 19, 7, 4, 4, 6, 3},
    {"E8", 76, 71, 76, 40, 18, 33, 13, 5, 5, 11, 11},
    {"F4", 36, 22, 23, 11, 9, 20, 16, 3, 3, 5, 4},
    {"G2", 6, 4, 5, 3, 3, 4, 4, 3, 2, 1, 1},
};

Checks stats_checks(const StatAnchor& a) {
    auto sys = build_root_system(a.host);
    auto s = stats(sys);
    const std::string h = a.host;
    Checks out;
    out.push_back(check(7, h + " classes", a.classes, s.classes));
    out.push_back(check(7, h + " isomorphism classes", a.iso, s.iso_classes));
    out.push_back(check(7, h + " S-closed", a.s_closed, s.s_closed));
    out.push_back(check(7, h + " L-closed", a.l_closed, s.l_closed));
    out.push_back(check(7, h + " perp-closed", a.perp_closed, s.perp_closed));
    out.push_back(check(7, h + " perp-dense", a.dense, s.perp_dense));
    out.push_back(check(7, h + " perp-dense, isomorphism classes", a.full_rank, s.full_rank));
    out.push_back(check(7, h + " maximal", a.maximal, s.maximal));
    out.push_back(check(7, h + " maximal S-closed", a.maximal_s, s.maximal_s_closed));
    out.push_back(check(7, h + " dual pairs", a.dual, s.dual_pairs));
    out.push_back(check(7, h + " special dual pairs", a.special, s.special_dual_pairs));
    auto classes = subsystem_classes(sys);
    if (sys.rank <= 4) {
        int orbits = 0;
        std::set<std::string> types;
        for (auto& e : census_small(sys)) {
            orbits += e.orbits;
            types.insert(tstr(sys, e.type.untagged()));
        }
        out.push_back(check(7, h + " classes by exhaustive census", a.classes, orbits));
        out.push_back(check(7, h + " isomorphism classes by exhaustive census", a.iso, types.size()));
    }
    // classes sharing a type must lie in distinct orbits
    int pairs = 0, distinct = 0;
    for (size_t i = 0; i < classes.size(); ++i)
        for (size_t j = i + 1; j < classes.size(); ++j)
            if (classes[i].type == classes[j].type) {
                ++pairs;
                if (!equivalent_under_W(sys, classes[i].rep.roots, classes[j].rep.roots)) ++distinct;
            }
    out.push_back(check(7, h + " same-type classes inequivalent by orbit search", pairs, distinct));
    return out;
}

// ---- criterion 8: engine against the exhaustive oracle, identities

Checks oracle_small_checks(const std::string& h) {
    auto sys = build_root_system(h);
    Checks out;
    auto census = census_small(sys);
    int types = 0, orbit_ok = 0, hom_ok = 0;
    std::map<std::string, int> engine_orbits;
    for (auto& c : subsystem_classes(sys)) engine_orbits[tstr(sys, c.type)]++;
    for (auto& e : census) {
        ++types;
        auto fam = table_row(sys, e.type);
        int xi_sum = 0;
        for (auto& r : fam.rows) xi_sum += r.sharp_xi;
        bool o = xi_sum == e.orbits && engine_orbits[tstr(sys, e.type)] == e.orbits;
        bool m = fam.total() == int(hom_oracle(sys, e.type).size());
        orbit_ok += o;
        hom_ok += m;
    }
    out.push_back(check(8, h + " types with engine orbits = census orbits", types, orbit_ok));
    out.push_back(check(8, h + " types with engine # = oracle hom classes", types, hom_ok));
    out.push_back(check(8, h + " engine classes = census classes", int(engine_orbits.size()), int(census.size())));
    return out;
}

Checks classical_formula_checks(const std::string& h) {
    auto sys = build_root_system(h);
    std::set<std::string> types;
    for (auto& c : subsystem_classes(sys)) types.insert(c.type.untagged().str());
    auto same = [&](const IsoType& a, const IsoType& b) {
        return a.untagged().str(sys.label.series) == b.untagged().str(sys.label.series);
    };
    int n = 0, ok = 0;
    for (auto& ts : types) {
        for (auto& r : table_row(sys, IsoType::parse(ts)).rows) {
            ++n;
            auto c = classical_count(classical_signature(sys, r.image.roots), h);
            bool good = c.exists && BigInt(r.sharp) == c.sharp && r.sharp_xi == c.sharp_xi &&
                        same(r.perp_type, c.perp_type) && same(r.xi_type, c.xi_type) && r.perp_closed == c.perp_closed &&
                        r.p_count.has_value() == c.fundamental && (!c.sharp_sigma || BigInt(r.sharp_sigma) == *c.sharp_sigma);
            if (good && !c.fundamental) good = same(iso_type(sys, closure_L(sys, r.image.roots).roots), *c.l_closure);
            auto sc = closure_S(sys, r.image.roots);
            if (good) good = c.s_closure ? same(iso_type(sys, sc.roots), *c.s_closure) : sc.roots == r.image.roots;
            ok += good;
        }
    }
    return {check(8, h + " families matching the closed formulas", n, ok)};
}

Checks identity_checks(const std::string& h) {
    auto sys = build_root_system(h);
    const BigInt w = weyl_order(sys);
    std::set<IsoType> types;
    for (auto& c : subsystem_classes(sys)) types.insert(c.type);
    int rows = 0, nout = 0, outx = 0, nisom = 0, literal_rows = 0, literal_ok = 0;
    std::string literal_example;
    for (auto& t : types) {
        auto fam = table_row(sys, t);
        for (auto& r : fam.rows) {
            ++rows;
            auto orb = orbit_of(sys, r.image.roots);
            BigInt out_s = close_group(int(orb.base.size()), orb.schreier).size();
            BigInt wx = weyl_order_of(sys, r.image.roots);
            BigInt wp = weyl_order_of(sys, perp(sys, r.image.roots).roots);
            if (BigInt(r.sharp) * out_s == BigInt(r.sharp_xi) * r.out_xi && out_s == r.out_sigma) ++nout;
            if (BigInt(orb.size) * out_s * wx * wp == w) ++outx;
            BigInt lhs = BigInt(orb.size) * r.sharp_xi * r.out_xi * wx * wp;
            if (lhs == BigInt(r.sharp) * w) ++nisom;
            if (fam.rows.size() == 1) {
                ++literal_rows;
                BigInt l2 = BigInt(orb.size) * r.sharp_sigma * r.out_xi * wx * wp;
                if (l2 == BigInt(r.sharp) * w)
                    ++literal_ok;
                else if (literal_example.empty())
                    literal_example = tstr(sys, r.xi_type);
            }
        }
    }
    Checks out;
    out.push_back(check(8, h + " rows with #/#_Xi = |Out(Xi)|/|Out_Sigma(Xi)|", rows, nout));
    out.push_back(check(8, h + " rows with orbit * |Out_Sigma| |W_Xi| |W_perp| = |W|", rows, outx));
    out.push_back(check(8, h + " rows with orbit = # |W| / (#_Xi |Out(Xi)| |W_Xi| |W_perp|)", rows, nisom));
    std::string lit = std::to_string(literal_ok);
    if (!literal_example.empty()) lit += " (first failure " + literal_example + ")";
    out.push_back(check(8, h + " single-family rows with orbit = # |W| / (#_Sigma |Out(Xi)| |W_Xi| |W_perp|)",
                        literal_rows, lit));
    return out;
}

// ---- criterion 9: closure laws

Checks closure_checks(const std::string& h) {
    auto sys = build_root_system(h);
    std::vector<RootSet> subs;
    for (auto& e : census_small(sys))
        for (auto& rep : e.reps) {
            OrbitOptions o;
            o.keep_elements = true;
            for (auto& x : orbit_of(sys, rep.roots, o).elements) subs.push_back(x);
        }
    std::set<std::vector<int>> fundamental_keys;
    for (int mask = 1; mask < (1 << sys.rank); ++mask) {
        std::vector<int> g;
        for (int j = 0; j < sys.rank; ++j)
            if (mask >> j & 1) g.push_back(sys.simple[j]);
        fundamental_keys.insert(subsystem_key(sys, closure(sys, g)));
    }
    using Cl = Subsystem (*)(const RootSystem&, const RootSet&);
    const std::pair<const char*, Cl> cls[] = {{"S", closure_S}, {"L", closure_L}, {"perp", closure_perp}};
    int bad_ext = 0, bad_idem = 0, bad_mono = 0, bad_chain = 0, bad_fund = 0;
    for (auto& x : subs) {
        std::vector<RootSet> c;
        for (auto& [name, f] : cls) {
            auto y = f(sys, x).roots;
            if (!x.subset_of(y)) ++bad_ext;
            if (f(sys, y).roots != y) ++bad_idem;
            c.push_back(y);
        }
        bool pc = is_perp_closed(sys, x), lc = is_L_closed(sys, x), sc = is_S_closed(sys, x);
        if ((pc && !lc) || (lc && !sc)) ++bad_chain;
        if (!c[0].subset_of(c[1]) || !c[1].subset_of(c[2]))
            ++bad_chain;
        if (lc != bool(fundamental_keys.count(subsystem_key(sys, x)))) ++bad_fund;
        // monotone along every one-root enlargement
        for (int r = 0; r < sys.npos; ++r) {
            if (x.test(r)) continue;
            auto gens = fundamental_of(sys, x);
            gens.push_back(r);
            auto y = closure(sys, gens);
            for (size_t k = 0; k < 3; ++k)
                if (!c[k].subset_of(cls[k].second(sys, y).roots)) ++bad_mono;
        }
    }
    Checks out;
    std::string tag = h + " (" + std::to_string(subs.size()) + " subsystems)";
    out.push_back(check(9, tag + " closures extensive: violations", 0, bad_ext));
    out.push_back(check(9, tag + " closures idempotent: violations", 0, bad_idem));
    out.push_back(check(9, tag + " closures monotone: violations", 0, bad_mono));
    out.push_back(check(9, tag + " perp-closed => L-closed => S-closed: violations", 0, bad_chain));
    out.push_back(check(9, tag + " fundamental <=> L-closed: violations", 0, bad_fund));
    return out;
}

// ---- criterion 10: dual pairs

struct DualAnchor {
    std::string host, xi1, xi2;
    bool special;
};

const std::vector<DualAnchor> kDual = {
    {"E6", "A3", "2A1", true},      {"E7", "A5", "A2", true},      {"E7", "A3+A1", "A3", true},
    {"E7", "3A1", "D4", true},      {"E8", "E6", "A2", true},      {"E8", "A5", "A2+A1", true},
    {"E8", "A4", "A4", true},       {"E8", "D6", "2A1", true},     {"E8", "D5", "A3", true},
    {"E8", "D4", "D4", true},       {"E8", "D4+A1", "3A1", true},  {"E8", "2A2", "2A2", true},
    {"E8", "A3+A1", "A3+A1", true}, {"E8", "4A1", "4A1", true},    {"F4", "A2", "A2", true},
    {"E6", "A5", "A1", false},      {"E7", "D6", "A1", false},
};

std::string pair_name(std::string a, std::string b) {
    if (b < a) std::swap(a, b);
    return "(" + a + "," + b + ")";
}

Checks dual_checks(const std::string& h) {
    auto sys = build_root_system(h);
    auto census = dual_pair_census(sys);
    std::map<std::string, std::vector<bool>> found;
    for (auto& d : census)
        found[pair_name(iso_type(sys, d.xi1.roots).untagged().str(), iso_type(sys, d.xi2.roots).untagged().str())]
            .push_back(d.is_special);
    Checks out;
    for (auto& a : kDual) {
        if (a.host != h) continue;
        auto key = pair_name(IsoType::parse(a.xi1).str(), IsoType::parse(a.xi2).str());
        std::string c = "absent";
        if (auto it = found.find(key); it != found.end()) {
            c.clear();
            for (bool s : it->second) c += (c.empty() ? "" : ",") + std::string(s ? "special" : "non-special");
        }
        out.push_back(check(10, h + " dual pair " + key, a.special ? "special" : "non-special", c));
        if (!a.special) {
            // the smaller member has one class, the larger more than one
            int h1 = hom_count(sys, a.xi1), h2 = hom_count(sys, a.xi2);
            out.push_back(check(10, h + " #Hom(" + a.xi2 + ")=1 and #Hom(" + a.xi1 + ")>1", "yes",
                                h2 == 1 && h1 > 1 ? "yes" : "no"));
        }
    }
    if (h == "E8") {
        int special = 0;
        for (auto& d : census) special += d.is_special;
        out.push_back(check(10, "E8 every dual pair special", census.size(), special));
    }
    return out;
}

Checks dual_classical_checks(int m, int n) {
    std::string h = host_of('D', m + n);
    auto sys = build_root_system(h);
    // D_m on the first m coordinates
    std::vector<RootVec> gens;
    for (int i = 0; i + 1 < m; ++i) {
        RootVec v(sys.dim, 0);
        v[i] = 2;
        v[i + 1] = -2;
        gens.push_back(v);
    }
    RootVec last(sys.dim, 0);
    last[m - 2] = 2;
    last[m - 1] = 2;
    gens.push_back(last);
    auto x = generate(sys, gens);
    auto rep = dual_pair_check(sys, x.roots);
    auto dm = [](int k) { return k == 2 ? std::string("2A1") : k == 3 ? std::string("A3") : host_of('D', k); };
    std::string got = tstr(sys, x.roots) + "/" + tstr(sys, rep.xi2.roots) + (rep.is_dual_pair ? " dual" : " not dual") +
                      (rep.is_special ? " special" : " non-special");
    return {check(10, "(" + h + "," + dm(m) + "," + dm(n) + ")", dm(m) + "/" + dm(n) + " dual special", got)};
}

std::vector<Task> build_tasks() {
    std::vector<Task> t;
    auto add = [&](std::string scope, std::function<Checks()> f) { t.push_back({std::move(scope), std::move(f)}); };
    for (auto& h : all_hosts()) add(scope_of(h), [h] { return root_data_checks(h); });
    for (auto& h : all_hosts()) add("affine", [h] { return affine_host_checks(h); });
    add("affine", [] { return affine_host_checks("C2"); });
    add("affine", affine_census_checks);
    for (auto& h : all_hosts()) add(scope_of(h), [h] { return hom_checks(h); });
    for (auto& h : all_hosts()) add(scope_of(h), [h] { return rm_checks(h); });
    for (auto& b : kBrackets) add("fund", [b] { return bracket_checks(b); });
    for (auto& a : kOut) add("out", [a] { return out_checks(a); });
    for (auto& a : kStats) add("exceptional", [a] { return stats_checks(a); });
    for (auto& h : kSmallHosts) add(scope_of(h), [h] { return oracle_small_checks(h); });
    for (auto h : {"A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "B6", "C3", "C4", "C5", "C6", "D5", "D6", "D7", "D8"})
        add("classical", [h = std::string(h)] { return classical_formula_checks(h); });
    for (auto h : {"E6", "E7", "E8", "F4", "G2"})
        add("exceptional", [h = std::string(h)] { return identity_checks(h); });
    for (auto& h : kSmallHosts) add(scope_of(h), [h] { return closure_checks(h); });
    for (auto h : {"E6", "E7", "E8", "F4"}) add("exceptional", [h = std::string(h)] { return dual_checks(h); });
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}, {2, 5}, {3, 5}, {2, 6}})
        add("classical", [m, n] { return dual_classical_checks(m, n); });
    return t;
}

}  // namespace

const std::vector<std::string>& reproduce_scopes() {
    static const std::vector<std::string> s = {"classical", "exceptional", "fund", "out", "affine", "all"};
    return s;
}

std::vector<Check> reproduce(const ReproduceOptions& opt) {
    if (std::find(reproduce_scopes().begin(), reproduce_scopes().end(), opt.scope) == reproduce_scopes().end())
        throw Error("unknown scope: " + opt.scope);
    std::vector<Task> tasks;
    for (auto& t : build_tasks())
        if (opt.scope == "all" || t.scope == opt.scope) tasks.push_back(std::move(t));

    std::vector<Checks> results(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next.fetch_add(1)) < tasks.size();) {
            try {
                results[i] = tasks[i].run();
            } catch (const std::exception& e) {
                results[i] = {Check{0, "task " + std::to_string(i) + " raised", "no error", e.what(), false}};
            }
        }
    };
    int jobs = std::max(1, opt.jobs);
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    std::vector<Check> out;
    for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
    std::stable_sort(out.begin(), out.end(), [](const Check& a, const Check& b) { return a.criterion < b.criterion; });
    return out;
}

std::string format_report_text(const std::vector<Check>& checks) {
    std::ostringstream os;
    int pass = 0;
    for (auto& c : checks) {
        pass += c.pass;
        os << c.criterion << '\t' << (c.pass ? "PASS" : "FAIL") << '\t' << c.anchor << "\texpected=" << c.expected
           << "\tcomputed=" << c.computed << '\n';
    }
    os << "total " << checks.size() << " pass " << pass << " fail " << checks.size() - pass << '\n';
    return os.str();
}

std::string format_report_json(const std::vector<Check>& checks) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (auto& c : checks)
        arr.push_back({{"criterion", c.criterion},
                       {"anchor", c.anchor},
                       {"expected", c.expected},
                       {"computed", c.computed},
                       {"pass", c.pass}});
    return arr.dump(2) + "\n";
}

}  // namespace rootsys
