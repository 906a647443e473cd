#include "rootsys/classify.hpp"
#include "rootsys/orbit.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

namespace rootsys {

namespace {

int roots_of_component(const Component& c) {
    int n = c.rank;
    switch (c.series) {
        case 'A': return n * (n + 1);
        case 'B':
        case 'C': return 2 * n * n;
        case 'D': return 2 * n * (n - 1);
        case 'E': return n == 6 ? 72 : n == 7 ? 126 : 240;
        case 'F': return 48;
        case 'G': return 12;
    }
    return 0;
}

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

RootSet orthogonal_part(const RootSystem& sys, const RootSet& h, const std::vector<int>& u) {
    RootSet out;
    h.for_each([&](int r) {
        for (int x : u)
            if (sys.ip(r, x) != 0) return;
        out.set(r);
    });
    return out;
}

// Negatives of the dominant long and dominant short roots of an irreducible
// subsystem with fundamental system psi.
std::pair<int, int> lowest_roots(const RootSystem& sys, const RootSet& a, const std::vector<int>& psi) {
    int best_long = -1, best_short = -1;
    a.for_each([&](int r) {
        for (int p : psi)
            if (sys.ip(r, p) < 0) return;
        if (best_long < 0 || sys.norm[r] > sys.norm[best_long]) best_long = r;
        if (best_short < 0 || sys.norm[r] < sys.norm[best_short]) best_short = r;
    });
    if (best_long < 0) throw Error("internal: no dominant root");
    int lo = sys.neg(best_long);
    int sh = sys.norm[best_short] == sys.norm[best_long] ? -1 : sys.neg(best_short);
    return {lo, sh};
}

class HomEngine {
public:
    explicit HomEngine(const RootSystem& sys) : sys_(sys) {}

    // W_A-classes of Hom(c, A) for irreducible A, canonical under W_A.
    const std::vector<std::vector<int>>& irreducible(const Component& c, const RootSet& a) {
        auto key = std::make_pair(std::make_tuple(c.series, c.rank, c.tag), a);
        if (auto it = irr_memo_.find(key); it != irr_memo_.end()) return it->second;
        std::set<std::vector<int>> found;
        auto psi = fundamental_of(sys_, a);
        if (roots_of_component(c) <= a.count() && c.rank <= int(psi.size())) {
            Canonizer cz(sys_, psi);
            IsoType single;
            single.comps.push_back({c.series, c.rank, 0});
            Diagram tmpl = template_of(single);
            auto [lo, sh] = lowest_roots(sys_, a, psi);
            std::vector<std::vector<int>> ext{concat(psi, {lo})};
            if (sh >= 0) ext.push_back(concat(psi, {sh}));
            for (auto& t : ext) {
                auto d = diagram_of(sys_, t);
                for (auto& m : subdiagram_imbeddings(tmpl, d)) {
                    std::vector<int> tuple(m.size());
                    bool ok = true;
                    for (size_t k = 0; k < m.size(); ++k) {
                        tuple[k] = t[m[k]];
                        if (c.tag == 'L' && !sys_.is_long(tuple[k])) ok = false;
                        if (c.tag == 'S' && sys_.is_long(tuple[k])) ok = false;
                    }
                    if (ok) found.insert(cz.canon(tuple));
                }
            }
            for (auto& b : children(a, psi, ext))
                for (auto& k : irreducible_components(sys_, b))
                    for (auto& t : irreducible(c, k)) found.insert(cz.canon(t));
        }
        return irr_memo_.emplace(key, std::vector<std::vector<int>>(found.begin(), found.end())).first->second;
    }

    // Classes of Hom(t, H) for any subsystem H, one representative each.
    // The first component of t is placed first, then the rest recursively
    // inside its orthogonal complement.
    const std::vector<std::vector<int>>& reducible(const IsoType& t, const RootSet& h) {
        auto key = std::make_pair(t.str(), h);
        if (auto it = red_memo_.find(key); it != red_memo_.end()) return it->second;
        std::vector<std::vector<int>> out;
        if (t.comps.empty()) {
            out.push_back({});
        } else {
            IsoType rest = t;
            rest.comps.erase(rest.comps.begin());
            const Component c = t.comps[0];
            for (auto& k : irreducible_components(sys_, h))
                for (auto& u : irreducible(c, k)) {
                    auto p = orthogonal_part(sys_, h, u);
                    for (auto& s : reducible(rest, p)) out.push_back(concat(u, s));
                }
        }
        return red_memo_.emplace(key, std::move(out)).first->second;
    }

private:
    // Maximal-subsystem candidates: node deletions from the two extended
    // fundamental systems and from psi, dropping those of full size.
    const std::vector<RootSet>& children(const RootSet& a, const std::vector<int>& psi,
                                         const std::vector<std::vector<int>>& ext) {
        if (auto it = child_memo_.find(a); it != child_memo_.end()) return it->second;
        std::set<RootSet> out;
        auto lists = ext;
        lists.push_back(psi);
        for (auto& t : lists)
            for (size_t x = 0; x < t.size(); ++x) {
                std::vector<int> keep;
                for (size_t y = 0; y < t.size(); ++y)
                    if (y != x) keep.push_back(t[y]);
                if (keep.empty()) continue;
                auto b = closure(sys_, keep);
                if (b.count() < a.count()) out.insert(b);
            }
        return child_memo_.emplace(a, std::vector<RootSet>(out.begin(), out.end())).first->second;
    }

    const RootSystem& sys_;
    std::map<std::pair<std::tuple<char, int, char>, RootSet>, std::vector<std::vector<int>>> irr_memo_;
    std::map<std::pair<std::string, RootSet>, std::vector<std::vector<int>>> red_memo_;
    std::map<RootSet, std::vector<RootSet>> child_memo_;
};

std::vector<std::vector<int>> canon_all(const Canonizer& cz, const std::vector<std::vector<int>>& in) {
    std::set<std::vector<int>> s;
    for (auto& t : in) s.insert(cz.canon(t));
    return {s.begin(), s.end()};
}

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) {
        a = find(a), b = find(b);
        if (a != b) p[std::max(a, b)] = std::min(a, b);
    }
};

IsoType type_of_components(const std::vector<Component>& cs) {
    IsoType t;
    t.comps = cs;
    t.normalize();
    return t;
}

}  // namespace

std::vector<std::vector<int>> hom_tuples(const RootSystem& sys, const IsoType& xi) {
    HomEngine eng(sys);
    return canon_all(Canonizer(sys), eng.reducible(xi, all_roots_of(sys)));
}

std::vector<std::vector<int>> hom_tuples_in(const RootSystem& sys, const IsoType& xi, const RootSet& h) {
    HomEngine eng(sys);
    return canon_all(Canonizer(sys, fundamental_of(sys, h)), eng.reducible(xi, h));
}

std::vector<HomClass> hom_classes(const RootSystem& sys, const IsoType& xi) {
    std::vector<HomClass> out;
    for (auto& t : hom_tuples(sys, xi)) {
        HomClass h;
        h.xi_type = xi;
        h.host = sys.label.str();
        h.rep = t;
        h.image = generate(sys, t);
        auto p = perp(sys, h.image.roots);
        h.perp_type = iso_type(sys, p.roots);
        h.perp_perp_type = iso_type(sys, perp(sys, p.roots).roots);
        out.push_back(std::move(h));
    }
    return out;
}

IsoType perp_of_class(const HomClass& h) { return iso_type(*h.image.host, perp(*h.image.host, h.image.roots).roots); }

std::string ClassificationRow::p_str() const { return p_count ? std::to_string(*p_count) : p_marker; }
std::string ClassificationRow::perp_str() const { return perp_type.empty() ? "0" : perp_type.str(host_label[0]); }
std::string ClassificationRow::l_str() const { return l_closure ? l_closure->str(host_label[0]) : ""; }
std::string ClassificationRow::s_str() const { return s_closure ? s_closure->str(host_label[0]) : ""; }

int HomFamily::total() const {
    int s = 0;
    for (auto& r : rows) s += r.sharp;
    return s;
}

HomFamily table_row(const RootSystem& sys, const IsoType& xi, const TableOptions& opt) {
    HomFamily fam;
    auto tuples = hom_tuples(sys, xi);
    const int n = int(tuples.size());
    if (n == 0) return fam;
    const char series = sys.label.series;
    Canonizer cz(sys);
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < n; ++i) index[tuples[i]] = i;
    auto lookup = [&](const std::vector<int>& t) {
        auto it = index.find(cz.canon(t));
        if (it == index.end()) throw Error("internal: transformed class missing from the list");
        return it->second;
    };

    std::vector<RootSet> images(n);
    std::vector<std::vector<int>> keys(n);
    for (int i = 0; i < n; ++i) {
        images[i] = closure(sys, tuples[i]);
        keys[i] = subsystem_key(sys, images[i]);
    }

    UnionFind by_sigma(n), by_prime(n), by_family(n);
    for (auto& g : outer_automorphisms(sys))
        for (int i = 0; i < n; ++i) {
            std::vector<int> t(tuples[i].size());
            for (size_t k = 0; k < t.size(); ++k) t[k] = g[tuples[i][k]];
            int j = lookup(t);
            by_sigma.unite(i, j);
            by_family.unite(i, j);
        }
    {
        std::map<std::vector<int>, int> first;
        for (int i = 0; i < n; ++i) {
            auto [it, fresh] = first.emplace(keys[i], i);
            if (!fresh) by_family.unite(i, it->second);
        }
    }
    {
        size_t off = 0;
        for (auto& c : xi.comps) {
            IsoType single;
            single.comps.push_back({c.series, c.rank, 0});
            for (auto& tau : all_automorphisms(template_of(single)))
                for (int i = 0; i < n; ++i) {
                    auto t = tuples[i];
                    for (int k = 0; k < c.rank; ++k) t[off + k] = tuples[i][off + tau[k]];
                    by_prime.unite(i, lookup(t));
                }
            off += c.rank;
        }
    }

    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < n; ++i) groups[by_family.find(i)].push_back(i);

    const BigInt out_xi = out_order(xi);
    for (auto& [root, members] : groups) {
        ClassificationRow row;
        row.xi_type = xi;
        row.host_label = sys.label.str();
        std::set<std::vector<int>> fkeys;
        std::set<int> sig, pri;
        for (int i : members) {
            row.classes.push_back(tuples[i]);
            fkeys.insert(keys[i]);
            sig.insert(by_sigma.find(i));
            pri.insert(by_prime.find(i));
        }
        row.sharp = int(members.size());
        row.sharp_xi = int(fkeys.size());
        row.sharp_xi_prime = int(pri.size());
        row.sharp_sigma = int(sig.size());
        const RootSet& img = images[members.front()];
        row.image = {&sys, img};
        auto p = perp(sys, img);
        row.perp_type = iso_type(sys, p.roots);
        auto dp = dual_pair_check(sys, img);
        row.perp_closed = dp.is_dual_pair;
        if (p.empty())
            row.perp_perp = sys.label.str();
        else if (dp.is_dual_pair)
            row.perp_perp = dp.is_special ? "o" : "x";
        else
            row.perp_perp = type_string(sys, perp(sys, p.roots).roots);
        auto img_type = iso_type(sys, img);
        auto lc = closure_L(sys, img);
        if (lc.roots == img) {
            long long cnt = 0;
            for (auto& sub : fundamental_subsets(sys, img_type).subsets) {
                std::vector<int> th;
                for (int k : sub) th.push_back(sys.simple[k]);
                if (fkeys.count(subsystem_key(sys, closure(sys, th)))) ++cnt;
            }
            row.p_count = cnt;
        } else {
            row.p_marker = lc.roots == closure_perp(sys, img).roots ? "<-" : "->";
            if (span_rank(sys, perp(sys, p.roots).roots) > xi.rank()) row.l_closure = iso_type(sys, lc.roots);
        }
        auto sc = closure_S(sys, img);
        if (!(sc.roots == img)) row.s_closure = iso_type(sys, sc.roots);
        row.out_xi = out_xi;
        row.out_sigma = out_sigma_order(sys, img);
        if (opt.orbit_sizes) row.orbit_size = orbit_of(sys, img).size;
        row.family = img_type.str(series);
        fam.rows.push_back(std::move(row));
    }

    std::sort(fam.rows.begin(), fam.rows.end(), [](const ClassificationRow& a, const ClassificationRow& b) {
        if (!(a.perp_type == b.perp_type)) return a.perp_type < b.perp_type;
        return a.classes.front() < b.classes.front();
    });

    // Families sharing an image type: ' marks the one inside A_7 (E_7) or A_8 (E_8).
    std::map<std::string, std::vector<size_t>> by_label;
    for (size_t r = 0; r < fam.rows.size(); ++r) by_label[fam.rows[r].family].push_back(r);
    for (auto& [label, rows] : by_label) {
        if (rows.size() < 2) continue;
        bool primed = false;
        if (rows.size() == 2 && series == 'E' && sys.rank >= 7) {
            IsoType an;
            an.comps.push_back({'A', sys.rank, 0});
            auto host_a = closure(sys, hom_tuples(sys, an).front());
            auto img_type = iso_type(sys, fam.rows[rows[0]].image.roots);
            std::set<std::vector<int>> inside;
            for (auto& t : hom_tuples_in(sys, img_type, host_a)) inside.insert(subsystem_key(sys, closure(sys, t)));
            bool in0 = inside.count(subsystem_key(sys, fam.rows[rows[0]].image.roots)) > 0;
            bool in1 = inside.count(subsystem_key(sys, fam.rows[rows[1]].image.roots)) > 0;
            if (in0 != in1) {
                fam.rows[rows[0]].family = label + (in0 ? "'" : "''");
                fam.rows[rows[1]].family = label + (in1 ? "'" : "''");
                primed = true;
            }
        }
        if (!primed)
            for (size_t k = 0; k < rows.size(); ++k) fam.rows[rows[k]].family = label + "_" + std::to_string(k + 1);
    }
    return fam;
}

// ---------------------------------------------------------------------------
// Classical hosts

namespace {

int at(const std::map<int, int>& v, int j) {
    auto it = v.find(j);
    return it == v.end() ? 0 : it->second;
}

BigInt factorial(int n) {
    BigInt r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

BigInt power(int b, int e) {
    BigInt r = 1;
    for (int k = 0; k < e; ++k) r *= b;
    return r;
}

void add_d_block(std::vector<Component>& cs, int j, int times) {
    for (int t = 0; t < times; ++t) {
        if (j == 2) {
            cs.push_back({'A', 1, 0});
            cs.push_back({'A', 1, 0});
        } else if (j == 3) {
            cs.push_back({'A', 3, 0});
        } else if (j >= 4) {
            cs.push_back({'D', j, 0});
        }
    }
}

void add_bc_block(std::vector<Component>& cs, char series, int j, int times) {
    for (int t = 0; t < times; ++t) {
        if (j == 1)
            cs.push_back({'A', 1, 0});
        else if (j >= 2)
            cs.push_back({series, j, 0});
    }
}

IsoType blocks_type(const std::map<int, int>& m, const std::map<int, int>& k, const std::map<int, int>& n, char bc) {
    std::vector<Component> cs;
    for (auto [j, c] : m)
        for (int t = 0; t < c; ++t) cs.push_back({'A', j, 0});
    for (auto [j, c] : k) add_d_block(cs, j, c);
    for (auto [j, c] : n) add_bc_block(cs, bc, j, c);
    return type_of_components(cs);
}

std::map<int, int> pruned(std::map<int, int> v) {
    for (auto it = v.begin(); it != v.end();) it = it->second == 0 ? v.erase(it) : std::next(it);
    return v;
}

}  // namespace

std::string ClassicalSpec::str() const {
    auto one = [](const char* name, const std::map<int, int>& v) {
        std::string s = name;
        s += "=(";
        bool first = true;
        for (auto [j, c] : v) {
            if (!c) continue;
            if (!first) s += ",";
            s += std::to_string(j) + ":" + std::to_string(c);
            first = false;
        }
        return s + ")";
    };
    return one("m", m) + " " + one("k", k) + " " + one("n", n);
}

ClassicalRow classical_count(const ClassicalSpec& spec_in, const std::string& host_label) {
    Label lab = parse_label(host_label);
    const int N = lab.rank;
    const char s = lab.series;
    ClassicalSpec spec{pruned(spec_in.m), pruned(spec_in.k), pruned(spec_in.n)};
    for (auto* v : {&spec.m, &spec.k, &spec.n})
        for (auto [j, c] : *v)
            if (j < 1 || c < 0) throw Error("multiplicities must be indexed by j >= 1 and nonnegative");
    if (at(spec.k, 1)) throw Error("k_1 must vanish");
    if (s == 'A' && !(spec.k.empty() && spec.n.empty())) throw Error("A_n hosts only take the m vector");
    if (s == 'D' && !spec.n.empty()) throw Error("D_n hosts take no n vector");
    if (s != 'A' && s != 'B' && s != 'C' && s != 'D') throw Error("classical_count needs a classical host");
    if ((s == 'B' && N < 2) || (s == 'C' && N < 3) || (s == 'D' && N < 5))
        throw Error("classical_count covers B_n (n>=2), C_n (n>=3), D_n (n>=5) and A_n");

    ClassicalRow row;
    int M = 0, sum_m = 0, sum_m2 = 0, sum_k = 0, sum_n = 0, jn = 0, jk = 0;
    for (auto [j, c] : spec.m) M += (j + 1) * c, sum_m += c, sum_m2 += j >= 2 ? c : 0;
    for (auto [j, c] : spec.k) M += j * c, sum_k += c, jk += j * c;
    for (auto [j, c] : spec.n) M += j * c, sum_n += c, jn += j * c;
    row.big_m = M;
    const char bc = s == 'C' ? 'C' : 'B';
    row.xi_type = blocks_type(spec.m, spec.k, spec.n, bc);

    if (s == 'A') {
        row.exists = M <= N + 1;
        if (!row.exists) return row;
        row.sharp = power(2, sum_m2);
        row.sharp_xi = 1;
        row.sharp_sigma = sum_m2 > 0 ? power(2, sum_m2 - 1) : BigInt(1);
        if (N - M >= 1) row.perp_type = type_of_components({{'A', N - M, 0}});
        row.perp_closed = sum_m <= 1 && M != N;
        row.fundamental = true;
        return row;
    }

    row.exists = M <= N;
    if (!row.exists) return row;
    const int m1 = at(spec.m, 1), m3 = at(spec.m, 3), k2 = at(spec.k, 2), k3 = at(spec.k, 3), k4 = at(spec.k, 4);
    std::vector<Component> perp_cs;
    for (int t = 0; t < m1; ++t) perp_cs.push_back({'A', 1, 0});

    if (s == 'D') {
        const int eps1 = M == N ? 2 : 1;
        bool odd_only = true;
        for (auto [j, c] : spec.m)
            if (j % 2 == 0 && c) odd_only = false;
        const int eps2 = (M == N && odd_only && sum_k == 0) ? 2 : 1;
        row.sharp = eps1 * power(3, k4) * factorial(m1 + 2 * k2) * factorial(m3 + k3) /
                    (power(2, k2) * factorial(m1) * factorial(k2) * factorial(m3) * factorial(k3));
        row.sharp_xi = eps2;
        add_d_block(perp_cs, N - M, 1);
        row.perp_type = type_of_components(perp_cs);
        // derived from the block model; see the README note on D_n
        row.perp_closed = sum_m2 == 0 && sum_k <= 1 && (M != N - 1 || sum_k == 0);
        row.fundamental = sum_k <= 1;
        if (!row.fundamental) row.l_closure = blocks_type(spec.m, {{jk, 1}}, {}, bc);
        return row;
    }

    const int n1 = at(spec.n, 1);
    row.sharp = power(3, k4) * factorial(m1 + n1 + 2 * k2) * factorial(m3 + k3) /
                (power(2, k2) * factorial(m1) * factorial(n1) * factorial(k2) * factorial(m3) * factorial(k3));
    row.sharp_xi = 1;
    add_bc_block(perp_cs, bc, N - M, 1);
    row.perp_type = type_of_components(perp_cs);
    row.perp_closed = sum_m2 == 0 && sum_k == 0 && sum_n <= 1;
    row.fundamental = sum_k == 0 && sum_n <= 1;
    if (!row.fundamental) row.l_closure = blocks_type(spec.m, {}, {{jk + jn, 1}}, bc);
    if (s == 'B' && sum_n >= 2) row.s_closure = blocks_type(spec.m, spec.k, {{jn, 1}}, bc);
    if (s == 'C' && sum_k >= 1) {
        auto nn = spec.n;
        for (auto [j, c] : spec.k) nn[j] += c;
        row.s_closure = blocks_type(spec.m, {}, nn, bc);
    }
    return row;
}

ClassicalSpec classical_signature(const RootSystem& sys, const RootSet& xi) {
    const char s = sys.label.series;
    if (s != 'A' && s != 'B' && s != 'C' && s != 'D') throw Error("classical_signature needs a classical host");
    auto comps = irreducible_components(sys, xi);
    std::vector<uint64_t> support(comps.size(), 0);
    for (size_t c = 0; c < comps.size(); ++c)
        comps[c].for_each([&](int r) {
            for (int k = 0; k < sys.dim; ++k)
                if (sys.roots[r][k]) support[c] |= uint64_t(1) << k;
        });
    UnionFind uf(int(comps.size()));
    for (size_t a = 0; a < comps.size(); ++a)
        for (size_t b = a + 1; b < comps.size(); ++b)
            if (support[a] & support[b]) uf.unite(int(a), int(b));
    ClassicalSpec spec;
    std::map<int, std::vector<int>> blocks;
    for (size_t c = 0; c < comps.size(); ++c) blocks[uf.find(int(c))].push_back(int(c));
    for (auto& [root, members] : blocks) {
        uint64_t sup = 0;
        RootSet all;
        for (int c : members) sup |= support[c], all = all | comps[c];
        const int size = std::popcount(sup);
        bool single = false;
        all.for_each([&](int r) {
            int nz = 0;
            for (int k = 0; k < sys.dim; ++k) nz += sys.roots[r][k] != 0;
            single = single || nz == 1;
        });
        const int rank = span_rank(sys, all);
        if (single)
            spec.n[size] += 1;
        else if (rank == size)
            spec.k[size] += 1;
        else
            spec.m[size - 1] += 1;
    }
    return spec;
}

// ---------------------------------------------------------------------------
// Invariants of the host

namespace {

int r_recursive(const RootSystem& sys, const RootSet& a) {
    int total = 0;
    for (auto& k : irreducible_components(sys, a)) {
        bool has_long = false;
        k.for_each([&](int r) { has_long = has_long || sys.is_long(r); });
        if (!has_long) continue;
        auto psi = fundamental_of(sys, k);
        int theta = sys.neg(lowest_roots(sys, k, psi).first);
        total += 1 + r_recursive(sys, orthogonal_part(sys, k, {theta}));
    }
    return total;
}

}  // namespace

int r_of(const RootSystem& sys) { return r_recursive(sys, all_roots_of(sys)); }

int m_sigma(const RootSystem& sys) {
    RootSet longs;
    for (int r = 0; r < sys.size(); ++r)
        if (sys.is_long(r)) longs.set(r);
    int best = 0;
    for (auto& k : irreducible_components(sys, longs)) {
        auto psi = fundamental_of(sys, k);
        auto ext = concat(psi, {lowest_roots(sys, k, psi).first});
        auto d = diagram_of(sys, ext);
        for (int m = 4; m <= d.size(); ++m) {
            IsoType t;
            t.comps.push_back({'D', m, 0});
            if (!subdiagram_imbeddings(template_of(t), d).empty()) best = std::max(best, m);
        }
    }
    return best;
}

std::vector<SubsystemClass> subsystem_classes(const RootSystem& sys) {
    std::map<std::vector<int>, SubsystemClass> found;
    std::unordered_map<RootSet, bool, RootSetHash> seen;
    std::vector<RootSet> queue;
    auto visit = [&](const RootSet& s) {
        if (!seen.emplace(s, true).second) return;
        auto key = subsystem_key(sys, s);
        if (found.count(key)) return;
        found.emplace(key, SubsystemClass{{&sys, s}, iso_type(sys, s), key});
        queue.push_back(s);
    };
    for (int r = 0; r < sys.npos; ++r) visit(closure(sys, {r}));
    for (size_t q = 0; q < queue.size(); ++q) {
        RootSet t = queue[q];
        auto psi = fundamental_of(sys, t);
        for (int r = 0; r < sys.npos; ++r) {
            if (t.test(r)) continue;
            auto g = psi;
            g.push_back(r);
            visit(closure(sys, g));
        }
    }
    std::vector<SubsystemClass> out;
    for (auto& [k, c] : found) out.push_back(c);
    std::sort(out.begin(), out.end(), [](const SubsystemClass& a, const SubsystemClass& b) {
        if (a.type.rank() != b.type.rank()) return a.type.rank() < b.type.rank();
        if (!(a.type == b.type)) return a.type < b.type;
        return a.key < b.key;
    });
    return out;
}

namespace {

bool is_maximal(const RootSystem& sys, const RootSet& x, bool s_closed) {
    const RootSet all = all_roots_of(sys);
    if (x == all) return false;
    if (s_closed && !is_S_closed(sys, x)) return false;
    auto psi = fundamental_of(sys, x);
    for (int r = 0; r < sys.npos; ++r) {
        if (x.test(r)) continue;
        auto g = psi;
        g.push_back(r);
        RootSet y = closure(sys, g);
        if (s_closed) y = closure_S(sys, y).roots;
        if (!(y == all)) return false;
    }
    return true;
}

}  // namespace

std::vector<std::pair<IsoType, Subsystem>> maximal_subsystems(const RootSystem& sys, bool s_closed_only) {
    std::vector<std::pair<IsoType, Subsystem>> out;
    for (auto& c : subsystem_classes(sys))
        if (is_maximal(sys, c.rep.roots, s_closed_only)) out.emplace_back(c.type, c.rep);
    return out;
}

std::vector<DualPairReport> dual_pair_census(const RootSystem& sys) {
    const RootSet all = all_roots_of(sys);
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    std::vector<DualPairReport> out;
    for (auto& c : subsystem_classes(sys)) {
        const RootSet& x = c.rep.roots;
        if (x == all || !is_perp_closed(sys, x)) continue;
        auto key2 = subsystem_key(sys, perp(sys, x).roots);
        auto pk = std::minmax(c.key, key2);
        if (!seen.insert({pk.first, pk.second}).second) continue;
        out.push_back(dual_pair_check(sys, x));
    }
    return out;
}

Stats stats(const RootSystem& sys) {
    Stats st;
    auto classes = subsystem_classes(sys);
    std::set<std::string> iso;
    for (auto& c : classes) {
        const RootSet& x = c.rep.roots;
        iso.insert(c.type.untagged().str());
        st.s_closed += is_S_closed(sys, x);
        st.l_closed += is_L_closed(sys, x);
        st.perp_closed += is_perp_closed(sys, x);
        st.perp_dense += perp(sys, x).empty();
        st.full_rank += span_rank(sys, x) == sys.rank;
        st.maximal += is_maximal(sys, x, false);
        st.maximal_s_closed += is_maximal(sys, x, true);
    }
    st.classes = int(classes.size());
    st.iso_classes = int(iso.size());
    for (auto& d : dual_pair_census(sys)) {
        ++st.dual_pairs;
        st.special_dual_pairs += d.is_special;
    }
    return st;
}

}  // namespace rootsys
