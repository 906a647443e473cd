#include "rootsys/diagram.hpp"
#include "rootsys/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

namespace rootsys {

namespace {

int series_order(char s) {
    static const std::string order = "EDCBAFG";
    auto p = order.find(s);
    return p == std::string::npos ? 99 : int(p);
}

}  // namespace

bool component_before(const Component& a, const Component& b) {
    if (a.rank != b.rank) return a.rank > b.rank;
    if (a.series != b.series) return series_order(a.series) < series_order(b.series);
    // L before S before untagged
    auto t = [](char c) { return c == 'L' ? 0 : c == 'S' ? 1 : 2; };
    return t(a.tag) < t(b.tag);
}

void IsoType::normalize() {
    std::vector<Component> out;
    for (auto c : comps) {
        if (c.series == 'B' && c.rank == 1) c = {'A', 1, 'S'};
        else if (c.series == 'C' && c.rank == 1) c = {'A', 1, 'L'};
        else if (c.series == 'C' && c.rank == 2) c.series = 'B';
        else if (c.series == 'D' && c.rank == 3) c = {'A', 3, c.tag};
        else if (c.series == 'D' && c.rank == 2) {
            out.push_back({'A', 1, c.tag});
            c = {'A', 1, c.tag};
        }
        out.push_back(c);
    }
    std::stable_sort(out.begin(), out.end(), component_before);
    comps = std::move(out);
}

IsoType IsoType::parse(const std::string& text) {
    IsoType t;
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty() || s == "0" || s == "∅") return t;
    static const std::regex term(R"(^(\d*)([A-G])(\d+)\^?([LS]?)$)");
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, '+')) {
        std::smatch m;
        if (!std::regex_match(part, m, term)) throw Error("cannot parse type term '" + part + "'");
        int mult = m[1].length() ? std::stoi(m[1]) : 1;
        Component c{m[2].str()[0], std::stoi(m[3]), m[4].length() ? m[4].str()[0] : char(0)};
        bool ok = c.rank >= 1;
        switch (c.series) {
        case 'E': ok = c.rank >= 6 && c.rank <= 8; break;
        case 'F': ok = c.rank == 4; break;
        case 'G': ok = c.rank == 2; break;
        default: break;
        }
        if (!ok || mult < 1) throw Error("invalid type term '" + part + "'");
        if (c.tag && !(c.series == 'A' || c.series == 'D' || c.series == 'E'))
            throw Error("length tag on a non simply laced term '" + part + "'");
        for (int k = 0; k < mult; ++k) t.comps.push_back(c);
    }
    t.normalize();
    return t;
}

std::string IsoType::str(char host_series) const {
    if (comps.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < comps.size();) {
        size_t j = i;
        while (j < comps.size() && comps[j] == comps[i]) ++j;
        if (!out.empty()) out += "+";
        if (j - i > 1) out += std::to_string(j - i);
        char s = comps[i].series;
        if (s == 'B' && comps[i].rank == 2 && host_series == 'C') s = 'C';
        out += s;
        out += std::to_string(comps[i].rank);
        if (comps[i].tag) out += comps[i].tag;
        i = j;
    }
    return out;
}

int IsoType::rank() const {
    int r = 0;
    for (auto& c : comps) r += c.rank;
    return r;
}

IsoType IsoType::untagged() const {
    IsoType t = *this;
    for (auto& c : t.comps) c.tag = 0;
    t.normalize();
    return t;
}

IsoType IsoType::operator+(const IsoType& o) const {
    IsoType t = *this;
    t.comps.insert(t.comps.end(), o.comps.begin(), o.comps.end());
    t.normalize();
    return t;
}

bool IsoType::operator<(const IsoType& o) const {
    return std::lexicographical_compare(comps.begin(), comps.end(), o.comps.begin(), o.comps.end(),
                                        component_before);
}

std::vector<DiagramEdge> Diagram::edges() const {
    std::vector<DiagramEdge> out;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j) {
            if (!linked(i, j)) continue;
            int x = std::abs(a[i][j]), y = std::abs(a[j][i]);
            DiagramEdge e{i, j, std::max(x, y), -1};
            if (x > y) e.arrow = i;
            else if (y > x) e.arrow = j;
            out.push_back(e);
        }
    return out;
}

std::vector<std::vector<int>> Diagram::components() const {
    std::vector<int> seen(size(), 0);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < size(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        for (size_t k = 0; k < comp.size(); ++k)
            for (int j = 0; j < size(); ++j)
                if (!seen[j] && linked(comp[k], j)) {
                    seen[j] = 1;
                    comp.push_back(j);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(comp);
    }
    return out;
}

Diagram Diagram::induced(const std::vector<int>& keep) const {
    Diagram d;
    for (int i : keep) d.nodes.push_back(nodes[i]);
    d.a.assign(keep.size(), std::vector<int>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = 0; j < keep.size(); ++j) d.a[i][j] = a[keep[i]][keep[j]];
    return d;
}

std::vector<int> Diagram::relative_lengths() const {
    std::vector<int64_t> r(size(), 0);
    for (auto& comp : components()) {
        r[comp[0]] = 48;
        std::vector<int> queue{comp[0]};
        for (size_t k = 0; k < queue.size(); ++k) {
            int u = queue[k];
            for (int v : comp)
                if (!r[v] && linked(u, v)) {
                    r[v] = r[u] * std::abs(a[u][v]) / std::abs(a[v][u]);
                    queue.push_back(v);
                }
        }
        int64_t g = 0;
        for (int v : comp) g = std::gcd(g, r[v]);
        for (int v : comp) r[v] /= g;
    }
    return {r.begin(), r.end()};
}

Diagram diagram_of(const std::vector<RootVec>& simple) {
    Diagram d;
    int n = int(simple.size());
    d.nodes.resize(n);
    d.a.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        d.nodes[i].len = int(dot(simple[i], simple[i]));
        if (d.nodes[i].len == 0) throw Error("zero vector in diagram input");
        d.a[i][i] = 2;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            d.a[i][j] = cartan_integer(simple[j], simple[i]);
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int p = d.a[i][j] * d.a[j][i];
            if (p < 0 || p > 4 || (p == 0 && (d.a[i][j] || d.a[j][i])))
                throw Error("pair " + std::to_string(i) + "," + std::to_string(j) + " is not a rank-2 configuration");
        }
    return d;
}

Diagram diagram_of(const RootSystem& sys, const std::vector<int>& roots) {
    std::vector<RootVec> v;
    for (int r : roots) v.push_back(sys.roots[r]);
    Diagram d = diagram_of(v);
    for (size_t k = 0; k < roots.size(); ++k) d.nodes[k].tag = roots[k];
    return d;
}

namespace {

std::vector<int> neighbours(const Diagram& d, const std::vector<int>& comp, int u) {
    std::vector<int> out;
    for (int v : comp)
        if (d.linked(u, v)) out.push_back(v);
    return out;
}

// Walk a path from start away from prev until the end.
std::vector<int> walk(const Diagram& d, const std::vector<int>& comp, int start, int prev) {
    std::vector<int> out{start};
    int cur = start;
    while (true) {
        int next = -1;
        for (int v : neighbours(d, comp, cur))
            if (v != prev) next = v;
        if (next < 0 || neighbours(d, comp, cur).size() > 2) break;
        prev = cur;
        cur = next;
        out.push_back(cur);
    }
    return out;
}

struct Shape {
    Component c;
    std::vector<int> order;  // standard numbering of the nodes
};

Shape analyse(const Diagram& d, const std::vector<int>& comp, const ClassifyContext& ctx) {
    int n = int(comp.size());
    int nedges = 0, doubles = 0, triples = 0;
    std::pair<int, int> special{-1, -1};
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            int i = comp[x], j = comp[y];
            if (!d.linked(i, j)) continue;
            int p = d.a[i][j] * d.a[j][i];
            if (p < 1 || p > 3 || d.a[i][j] > 0 || d.a[j][i] > 0)
                throw Error("diagram is not of finite type");
            ++nedges;
            if (p == 2) ++doubles, special = {i, j};
            if (p == 3) ++triples, special = {i, j};
        }
    if (nedges != n - 1) throw Error("diagram is not of finite type (contains a cycle)");
    auto is_short_end = [&](int u, int v) { return std::abs(d.a[u][v]) > 1; };  // u shorter than v
    Shape s;
    if (n == 1) {
        s.c = {'A', 1, 0};
        s.order = comp;
    } else if (triples) {
        if (n != 2) throw Error("diagram is not of finite type");
        auto [u, v] = special;
        if (is_short_end(u, v)) std::swap(u, v);
        s.c = {'G', 2, 0};
        s.order = {u, v};  // long root first
    } else if (doubles) {
        if (doubles > 1) throw Error("diagram is not of finite type");
        std::vector<int> ends;
        for (int v : comp) {
            auto nb = neighbours(d, comp, v).size();
            if (nb > 2) throw Error("diagram is not of finite type");
            if (nb == 1) ends.push_back(v);
        }
        auto [u, v] = special;  // make u the shorter one
        if (is_short_end(v, u)) std::swap(u, v);
        bool u_end = std::count(ends.begin(), ends.end(), u) > 0;
        bool v_end = std::count(ends.begin(), ends.end(), v) > 0;
        if (n == 2) {
            s.c = {'B', 2, 0};
            s.order = {v, u};
        } else if (u_end) {
            s.c = {'B', n, 0};
            auto path = walk(d, comp, u, -1);
            std::reverse(path.begin(), path.end());
            s.order = path;
        } else if (v_end) {
            s.c = {'C', n, 0};
            auto path = walk(d, comp, v, -1);
            std::reverse(path.begin(), path.end());
            s.order = path;
        } else if (n == 4) {
            s.c = {'F', 4, 0};
            // start from the end on the long side
            int start = -1;
            for (int e : ends)
                if (d.linked(e, v)) start = e;
            s.order = walk(d, comp, start, -1);
        } else {
            throw Error("diagram is not of finite type");
        }
    } else {
        int branch = -1;
        std::vector<int> ends;
        for (int v : comp) {
            auto nb = neighbours(d, comp, v).size();
            if (nb > 3) throw Error("diagram is not of finite type");
            if (nb == 3) {
                if (branch >= 0) throw Error("diagram is not of finite type");
                branch = v;
            }
            if (nb == 1) ends.push_back(v);
        }
        if (branch < 0) {
            s.c = {'A', n, 0};
            s.order = walk(d, comp, std::min(ends[0], ends[1]), -1);
        } else {
            std::vector<std::vector<int>> arms;
            for (int v : neighbours(d, comp, branch)) arms.push_back(walk(d, comp, v, branch));
            std::stable_sort(arms.begin(), arms.end(),
                             [](auto& x, auto& y) { return x.size() < y.size(); });
            size_t p = arms[0].size(), q = arms[1].size(), r = arms[2].size();
            if (p == 1 && q == 1) {
                s.c = {'D', n, 0};
                auto lng = arms[2];
                std::reverse(lng.begin(), lng.end());
                s.order = lng;
                s.order.push_back(branch);
                s.order.push_back(arms[0][0]);
                s.order.push_back(arms[1][0]);
            } else if (p == 1 && q == 2 && r >= 2 && r <= 4) {
                s.c = {'E', n, 0};
                s.order = {arms[1][1], arms[0][0], arms[1][0], branch};
                for (int v : arms[2]) s.order.push_back(v);
            } else {
                throw Error("diagram is not of finite type");
            }
        }
    }
    if ((s.c.series == 'A' || s.c.series == 'D' || s.c.series == 'E') && ctx.long_len > 0) {
        int len = d.nodes[comp[0]].len;
        if (len) s.c.tag = len == ctx.long_len ? 'L' : 'S';
    }
    return s;
}

}  // namespace

Component classify_component(const Diagram& d, const std::vector<int>& nodes, const ClassifyContext& ctx) {
    return analyse(d, nodes, ctx).c;
}

IsoType classify_diagram(const Diagram& d, const ClassifyContext& ctx) {
    IsoType t;
    for (auto& comp : d.components()) t.comps.push_back(analyse(d, comp, ctx).c);
    t.normalize();
    return t;
}

std::vector<int> standard_order(const Diagram& d, const ClassifyContext& ctx) {
    std::vector<Shape> shapes;
    for (auto& comp : d.components()) shapes.push_back(analyse(d, comp, ctx));
    std::stable_sort(shapes.begin(), shapes.end(),
                     [](const Shape& x, const Shape& y) { return component_before(x.c, y.c); });
    std::vector<int> out;
    for (auto& s : shapes) out.insert(out.end(), s.order.begin(), s.order.end());
    return out;
}

std::vector<std::vector<int>> cartan_matrix(const Component& c) {
    static std::mutex mu;
    static std::map<std::pair<char, int>, std::vector<std::vector<int>>> cache;
    std::lock_guard lock(mu);
    auto key = std::make_pair(c.series, c.rank);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto sys = build_root_system(Label{c.series, c.rank});
    std::vector<RootVec> simple;
    for (int i : sys.simple) simple.push_back(sys.roots[i]);
    auto m = diagram_of(simple).a;
    cache[key] = m;
    return m;
}

Diagram template_of(const IsoType& t) {
    Diagram d;
    int n = t.rank();
    d.nodes.resize(n);
    d.a.assign(n, std::vector<int>(n, 0));
    int off = 0;
    for (auto& c : t.comps) {
        auto m = cartan_matrix(c);
        for (int i = 0; i < c.rank; ++i)
            for (int j = 0; j < c.rank; ++j) d.a[off + i][off + j] = m[i][j];
        off += c.rank;
    }
    return d;
}

namespace {

bool node_compatible(const DiagramNode& x, const DiagramNode& y, bool marks) {
    if (x.len && y.len && x.len != y.len) return false;
    if (marks && x.mark && y.mark && *x.mark != *y.mark) return false;
    return true;
}

// Backtracking search for maps src_nodes -> dst_nodes (injective) preserving
// the Cartan entries among the mapped nodes.  f returns false to stop.
void search_maps(const Diagram& src, const std::vector<int>& src_nodes, const Diagram& dst,
                 const std::vector<int>& dst_nodes, bool marks, const std::vector<int>& fixed,
                 const std::function<bool(const std::vector<int>&)>& f) {
    // order source nodes so each one after the first is adjacent to an earlier one when possible
    std::vector<int> order;
    std::vector<char> placed(src.size(), 0);
    for (int s : src_nodes) {
        if (placed[s]) continue;
        std::vector<int> q{s};
        placed[s] = 1;
        for (size_t k = 0; k < q.size(); ++k) {
            order.push_back(q[k]);
            for (int v : src_nodes)
                if (!placed[v] && src.linked(q[k], v)) placed[v] = 1, q.push_back(v);
        }
    }
    std::vector<int> img(src.size(), -1);
    std::vector<char> used(dst.size(), 0);
    for (int s : src_nodes)
        if (fixed[s] >= 0) used[fixed[s]] = 1;
    bool stop = false;
    std::function<void(size_t)> rec = [&](size_t k) {
        if (stop) return;
        if (k == order.size()) {
            if (!f(img)) stop = true;
            return;
        }
        int s = order[k];
        auto fits = [&](int t) {
            if (!node_compatible(src.nodes[s], dst.nodes[t], marks)) return false;
            for (size_t p = 0; p < k; ++p) {
                int u = order[p];
                if (dst.a[t][img[u]] != src.a[s][u] || dst.a[img[u]][t] != src.a[u][s]) return false;
            }
            return true;
        };
        if (fixed[s] >= 0) {
            if (fits(fixed[s])) {
                img[s] = fixed[s];
                rec(k + 1);
                img[s] = -1;
            }
            return;
        }
        for (int t : dst_nodes) {
            if (used[t] || !fits(t)) continue;
            img[s] = t;
            used[t] = 1;
            rec(k + 1);
            used[t] = 0;
            img[s] = -1;
        }
    };
    rec(0);
}

}  // namespace

std::vector<std::vector<int>> all_automorphisms(const Diagram& d, bool respect_marks) {
    std::vector<int> all(d.size());
    std::iota(all.begin(), all.end(), 0);
    std::vector<std::vector<int>> out;
    search_maps(d, all, d, all, respect_marks, std::vector<int>(d.size(), -1), [&](const std::vector<int>& m) {
        out.push_back(m);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

PermGroup diagram_automorphisms(const Diagram& d, bool respect_marks) {
    PermGroup g;
    int n = d.size();
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    auto comps = d.components();
    for (size_t c = 0; c < comps.size(); ++c) {
        // automorphisms of the component
        std::vector<std::vector<int>> auts;
        search_maps(d, comps[c], d, comps[c], respect_marks, std::vector<int>(n, -1),
                    [&](const std::vector<int>& m) {
                        auts.push_back(m);
                        return true;
                    });
        g.order *= int(auts.size());
        for (auto& m : auts) {
            auto p = id;
            bool trivial = true;
            for (int v : comps[c]) p[v] = m[v], trivial &= m[v] == v;
            if (!trivial) g.gens.push_back(p);
        }
    }
    // permutations of isomorphic components: transpositions with the first of each class
    std::vector<int> done(comps.size(), 0);
    for (size_t c = 0; c < comps.size(); ++c) {
        if (done[c]) continue;
        done[c] = 1;
        int k = 1;
        for (size_t e = c + 1; e < comps.size(); ++e) {
            if (done[e] || comps[e].size() != comps[c].size()) continue;
            std::vector<int> found;
            search_maps(d, comps[c], d, comps[e], respect_marks, std::vector<int>(n, -1),
                        [&](const std::vector<int>& m) {
                            found = m;
                            return false;
                        });
            if (found.empty()) continue;
            done[e] = 1;
            auto p = id;
            for (int v : comps[c]) p[v] = found[v], p[found[v]] = v;
            g.gens.push_back(p);
            g.order *= ++k;
        }
    }
    return g;
}

std::vector<std::vector<int>> subdiagram_imbeddings(const Diagram& phi, const Diagram& target,
                                                    std::optional<std::pair<int, int>> pin) {
    std::vector<int> src(phi.size()), dst(target.size());
    std::iota(src.begin(), src.end(), 0);
    std::iota(dst.begin(), dst.end(), 0);
    std::vector<int> fixed(phi.size(), -1);
    if (pin) {
        if (pin->first < 0 || pin->first >= phi.size() || pin->second < 0 || pin->second >= target.size())
            throw Error("pin out of range");
        fixed[pin->first] = pin->second;
    }
    std::set<std::vector<int>> out;
    if (phi.size() > target.size()) return {};
    search_maps(phi, src, target, dst, false, fixed, [&](const std::vector<int>& m) {
        out.insert(m);
        return true;
    });
    return {out.begin(), out.end()};
}

namespace {

// Positive integral null vector normalised to minimum 1, if the
// generalized Cartan matrix is of affine type.
std::optional<std::vector<int>> affine_numbers(const Diagram& d) {
    if (d.components().size() != 1) return std::nullopt;
    {
        // cheap singularity test before the exact computation
        int n = d.size();
        std::vector<std::vector<double>> m(n, std::vector<double>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j] = d.a[i][j];
        double det = 1;
        for (int c = 0; c < n; ++c) {
            int piv = c;
            for (int r = c + 1; r < n; ++r)
                if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
            if (std::abs(m[piv][c]) < 1e-9) {
                det = 0;
                break;
            }
            std::swap(m[piv], m[c]);
            det *= m[c][c];
            for (int r = c + 1; r < n; ++r) {
                double f = m[r][c] / m[c][c];
                for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
            }
        }
        if (std::abs(det) > 1e-6) return std::nullopt;
    }
    QMatrix m(d.size(), std::vector<Rational>(d.size()));
    for (int i = 0; i < d.size(); ++i)
        for (int j = 0; j < d.size(); ++j) m[i][j] = d.a[i][j];
    auto ns = nullspace(m);
    if (ns.size() != 1) return std::nullopt;
    auto v = ns[0];
    bool neg = v[0] < 0;
    Rational lo = -1;
    for (auto& x : v) {
        if (neg) x = -x;
        if (x <= 0) return std::nullopt;
        if (lo < 0 || x < lo) lo = x;
    }
    std::vector<int> out;
    for (auto& x : v) {
        Rational y = x / lo;
        if (denominator(y) != 1) return std::nullopt;
        out.push_back(int(numerator(y)));
    }
    return out;
}

Diagram with_marks(Diagram d) {
    auto m = affine_numbers(d);
    if (!m) throw Error("not an affine diagram");
    for (int i = 0; i < d.size(); ++i) {
        d.nodes[i].mark = (*m)[i];
        d.nodes[i].len = 0;
        d.nodes[i].tag.reset();
    }
    return d;
}

bool isomorphic(const Diagram& x, const Diagram& y) {
    if (x.size() != y.size()) return false;
    std::vector<int> a(x.size()), b(y.size());
    std::iota(a.begin(), a.end(), 0);
    std::iota(b.begin(), b.end(), 0);
    bool found = false;
    search_maps(x, a, y, b, false, std::vector<int>(x.size(), -1), [&](const std::vector<int>&) {
        found = true;
        return false;
    });
    return found;
}

Diagram scaled_diagram(std::vector<RootVec> v) { return diagram_of(v); }

std::vector<AffineEntry> build_catalog(int rank_bound) {
    std::vector<std::pair<std::string, Diagram>> raw;
    auto from_system = [&](const std::string& lbl, bool prime, const std::string& name) {
        auto sys = build_root_system(lbl);
        std::vector<int> idx;
        if (prime) {
            auto e = sys.extended_prime();
            if (!e) return;
            idx = *e;
        } else {
            idx = sys.extended();
        }
        std::vector<RootVec> v;
        for (int i : idx) v.push_back(sys.roots[i]);
        raw.push_back({name, scaled_diagram(v)});
    };
    for (int n = 1; n <= rank_bound; ++n) {
        std::string r = std::to_string(n);
        from_system("A" + r, false, "A" + r + "~");
        if (n >= 2) from_system("B" + r, false, "B" + r + "~");
        if (n >= 2) from_system("C" + r, false, "C" + r + "~");
        if (n >= 4) from_system("D" + r, false, "D" + r + "~");
        if (n >= 6 && n <= 8) from_system("E" + r, false, "E" + r + "~");
        if (n == 4) from_system("F4", false, "F4~");
        if (n == 2) from_system("G2", false, "G2~");
        if (n >= 2) from_system("B" + r, true, "B" + r + "~'");
        if (n >= 2) from_system("C" + r, true, "C" + r + "~'");
        if (n == 4) from_system("F4", true, "F4~'");
        if (n == 2) from_system("G2", true, "G2~'");
        // the non-reduced system BC_n: simple roots of B_n and the highest root 2e_1
        std::vector<RootVec> v;
        RootVec a0(n, 0);
        a0[0] = -4;
        v.push_back(a0);
        for (int i = 0; i + 1 < n; ++i) {
            RootVec x(n, 0);
            x[i] = 2, x[i + 1] = -2;
            v.push_back(x);
        }
        RootVec last(n, 0);
        last[n - 1] = 2;
        v.push_back(last);
        raw.push_back({"BC" + r + "~", scaled_diagram(v)});
    }
    std::vector<AffineEntry> out;
    for (auto& [name, d] : raw) {
        Diagram dm = with_marks(d);
        bool merged = false;
        for (auto& e : out)
            if (isomorphic(e.diagram, dm)) {
                e.aliases.push_back(name);
                merged = true;
                break;
            }
        if (!merged) out.push_back({name, {}, dm});
    }
    return out;
}

}  // namespace

std::vector<AffineEntry> affine_catalog(int rank_bound) {
    static std::mutex mu;
    static std::map<int, std::vector<AffineEntry>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(rank_bound);
    if (it == cache.end()) it = cache.emplace(rank_bound, build_catalog(rank_bound)).first;
    return it->second;
}

std::string classify_affine(const Diagram& d) {
    bool marked = d.size() > 0;
    for (auto& n : d.nodes) marked = marked && n.mark.has_value();
    if (marked) {
        int lo = *d.nodes[0].mark;
        for (int i = 0; i < d.size(); ++i) {
            long long s = 0;
            for (int j = 0; j < d.size(); ++j) s += (long long)d.a[i][j] * *d.nodes[j].mark;
            if (*d.nodes[i].mark <= 0 || s != 0)
                throw Error("not affine: balance fails at node " + std::to_string(i));
            lo = std::min(lo, *d.nodes[i].mark);
        }
        if (lo != 1) throw Error("not affine: smallest number is " + std::to_string(lo) + ", not 1");
    }
    auto m = affine_numbers(d);
    if (!m) throw Error("not affine: no positive balanced numbering");
    for (auto& e : affine_catalog(d.size() - 1))
        if (isomorphic(e.diagram, d)) return e.label;
    throw Error("affine diagram not recognised");
}

std::vector<AffineEntry> enumerate_affine(int rank_bound) {
    if (rank_bound < 1) return {};
    // Every connected affine diagram has a node of degree at most two whose
    // removal leaves a connected diagram of finite type.  Grow each connected
    // finite diagram by one node in all possible ways and keep the affine ones.
    static const std::vector<std::pair<int, int>> bonds = {
        {-1, -1}, {-1, -2}, {-2, -1}, {-1, -3}, {-3, -1}, {-2, -2}, {-1, -4}, {-4, -1}};
    std::vector<Diagram> found;
    auto consider = [&](const Diagram& d) {
        if (!affine_numbers(d)) return;
        for (auto& f : found)
            if (isomorphic(f, d)) return;
        found.push_back(with_marks(d));
    };
    for (int n = 1; n <= rank_bound; ++n) {
        std::vector<Diagram> finite;
        std::vector<Component> kinds;
        kinds.push_back({'A', n, 0});
        if (n >= 3) kinds.push_back({'B', n, 0});
        if (n >= 2) kinds.push_back({'C', n, 0});  // C2 = B2
        if (n >= 4) kinds.push_back({'D', n, 0});
        if (n >= 6 && n <= 8) kinds.push_back({'E', n, 0});
        if (n == 4) kinds.push_back({'F', 4, 0});
        if (n == 2) kinds.push_back({'G', 2, 0});
        for (auto& c : kinds) {
            auto m = cartan_matrix(c);
            Diagram base;
            base.nodes.resize(n);
            base.a = m;
            // both orientations of the matrix (transpose = dual diagram)
            finite.push_back(base);
            Diagram t = base;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) t.a[i][j] = m[j][i];
            finite.push_back(t);
        }
        for (auto& base : finite) {
            auto grow = [&](const std::vector<std::pair<int, std::pair<int, int>>>& att) {
                Diagram d = base;
                d.nodes.push_back({});
                for (auto& row : d.a) row.push_back(0);
                d.a.push_back(std::vector<int>(n + 1, 0));
                d.a[n][n] = 2;
                for (auto& [v, b] : att) {
                    d.a[n][v] = b.first;
                    d.a[v][n] = b.second;
                }
                consider(d);
            };
            for (int u = 0; u < n; ++u)
                for (auto& b : bonds) {
                    grow({{u, b}});
                    for (int v = u + 1; v < n; ++v)
                        for (auto& c : bonds) grow({{u, b}, {v, c}});
                }
        }
    }
    // label through the catalogue
    auto cat = affine_catalog(rank_bound);
    std::vector<AffineEntry> out;
    for (auto& d : found) {
        AffineEntry e{"?", {}, d};
        for (auto& c : cat)
            if (isomorphic(c.diagram, d)) {
                e.label = c.label;
                e.aliases = c.aliases;
            }
        out.push_back(e);
    }
    std::stable_sort(out.begin(), out.end(), [](const AffineEntry& x, const AffineEntry& y) {
        if (x.diagram.size() != y.diagram.size()) return x.diagram.size() < y.diagram.size();
        return x.label < y.label;
    });
    return out;
}

std::string to_dot(const Diagram& d, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n  node [shape=circle];\n";
    for (int i = 0; i < d.size(); ++i) {
        os << "  n" << i << " [label=\"";
        if (d.nodes[i].mark) os << *d.nodes[i].mark;
        else os << i;
        os << "\"";
        if (d.nodes[i].tag) os << " tooltip=\"root " << *d.nodes[i].tag << "\"";
        os << "];\n";
    }
    for (auto& e : d.edges()) {
        int from = e.arrow < 0 ? e.i : (e.arrow == e.i ? e.j : e.i);
        int to = e.arrow < 0 ? e.j : e.arrow;
        for (int k = 0; k < e.bond; ++k)
            os << "  n" << from << " -> n" << to << (e.arrow < 0 ? " [dir=none]" : "") << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace rootsys
