#include "rootsys/subsystem.hpp"
#include "rootsys/linalg.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>

namespace rootsys {

std::vector<int> Subsystem::positive() const {
    std::vector<int> out;
    roots.for_each([&](int r) {
        if (host->positive(r)) out.push_back(r);
    });
    return out;
}

Subsystem make_subsystem(const RootSystem& sys, const RootSet& roots) {
    auto idx = roots.indices();
    for (int a : idx)
        for (int b : idx)
            if (!roots.test(sys.refl(a, b))) throw Error("root set is not reflection closed");
    return {&sys, roots};
}

Subsystem generate(const RootSystem& sys, const std::vector<int>& theta) {
    for (int r : theta)
        if (r < 0 || r >= sys.size()) throw Error("root index out of range");
    return {&sys, closure(sys, theta)};
}

Subsystem generate(const RootSystem& sys, const std::vector<RootVec>& theta) {
    std::vector<int> idx;
    for (auto& v : theta) {
        int r = sys.index_of(v);
        if (r < 0) throw Error("vector is not a root of " + sys.label.str());
        idx.push_back(r);
    }
    return generate(sys, idx);
}

Subsystem perp(const RootSystem& sys, const RootSet& xi) {
    auto idx = xi.indices();
    RootSet out;
    for (int r = 0; r < sys.size(); ++r) {
        bool ok = true;
        for (int a : idx)
            if (sys.ip(r, a) != 0) {
                ok = false;
                break;
            }
        if (ok) out.set(r);
    }
    return {&sys, out};
}

Subsystem perp_fast_connected(const RootSystem& sys, const std::vector<int>& theta) {
    auto ext = sys.extended();
    std::vector<int> base;
    if (std::find(theta.begin(), theta.end(), sys.alpha0) != theta.end()) {
        base = ext;
    } else if (sys.alpha0_prime &&
               std::find(theta.begin(), theta.end(), *sys.alpha0_prime) != theta.end()) {
        base = *sys.extended_prime();
    } else {
        throw Error("theta must contain alpha_0 or alpha_0'");
    }
    for (int t : theta)
        if (std::find(base.begin(), base.end(), t) == base.end())
            throw Error("theta is not a subset of the extended fundamental system");
    std::set<int> uniq(theta.begin(), theta.end());
    if (uniq.size() >= base.size()) throw Error("theta must be a proper subset");
    auto d = diagram_of(sys, std::vector<int>(uniq.begin(), uniq.end()));
    if (d.components().size() != 1) throw Error("theta must be connected");
    std::vector<int> gens;
    for (int b : base) {
        bool orth = true;
        for (int t : uniq) orth &= sys.ip(b, t) == 0;
        if (orth) gens.push_back(b);
    }
    return generate(sys, gens);
}

Subsystem closure_S(const RootSystem& sys, const RootSet& xi) {
    RootSet s = xi;
    std::vector<int> list = xi.indices();
    for (size_t k = 0; k < list.size(); ++k)
        for (size_t j = 0; j <= k; ++j) {
            int c = sys.sum(list[k], list[j]);
            if (c >= 0 && !s.test(c)) {
                s.set(c);
                list.push_back(c);
            }
        }
    return {&sys, closure(sys, s.indices())};
}

Subsystem closure_L(const RootSystem& sys, const RootSet& xi) {
    auto psi = fundamental_of(sys, xi);
    if (psi.empty()) return {&sys, RootSet{}};
    QMatrix b;
    for (int r : psi) b.push_back(to_q(sys.roots[r]));
    auto ns = nullspace(b);
    RootSet out;
    for (int r = 0; r < sys.size(); ++r) {
        bool in = true;
        for (auto& v : ns) {
            Rational t = 0;
            for (int k = 0; k < sys.dim; ++k) t += v[k] * sys.roots[r][k];
            if (t != 0) {
                in = false;
                break;
            }
        }
        if (in) out.set(r);
    }
    return {&sys, out};
}

Subsystem closure_perp(const RootSystem& sys, const RootSet& xi) { return perp(sys, perp(sys, xi).roots); }

bool is_S_closed(const RootSystem& sys, const RootSet& xi) { return closure_S(sys, xi).roots == xi; }
bool is_L_closed(const RootSystem& sys, const RootSet& xi) { return closure_L(sys, xi).roots == xi; }
bool is_perp_closed(const RootSystem& sys, const RootSet& xi) { return closure_perp(sys, xi).roots == xi; }

int span_rank(const RootSystem& sys, const RootSet& xi) { return int(fundamental_of(sys, xi).size()); }

std::vector<RootSet> components_of(const RootSystem& sys, const RootSet& xi) {
    return irreducible_components(sys, xi);
}

ClassifyContext context_of(const RootSystem& sys) {
    return {sys.two_lengths() ? sys.long_norm : 0, sys.label.series};
}

std::vector<int> fundamental_system_of(const RootSystem& sys, const RootSet& xi) {
    return fundamental_of(sys, xi);
}

std::vector<int> standard_fundamental(const RootSystem& sys, const RootSet& xi) {
    auto psi = fundamental_of(sys, xi);
    auto d = diagram_of(sys, psi);
    auto order = standard_order(d, context_of(sys));
    std::vector<int> out;
    for (int k : order) out.push_back(psi[k]);
    return out;
}

IsoType iso_type(const RootSystem& sys, const RootSet& xi) {
    return classify_diagram(diagram_of(sys, fundamental_of(sys, xi)), context_of(sys));
}

std::string type_string(const RootSystem& sys, const RootSet& xi) {
    return iso_type(sys, xi).str(sys.label.series);
}

Canonizer::Canonizer(const RootSystem& sys, std::vector<int> gens) : sys_(&sys), gens_(std::move(gens)) {
    if (gens_.size() > 64) throw Error("too many generators for the canonizer");
}

Canonizer::Canonizer(const RootSystem& sys) : Canonizer(sys, sys.simple) {}

uint64_t Canonizer::all_active() const {
    return gens_.size() == 64 ? ~uint64_t(0) : ((uint64_t(1) << gens_.size()) - 1);
}

void Canonizer::dominate(std::vector<int>& tuple, size_t pos, uint64_t& active, std::vector<int>* extra,
                         std::vector<int>* word) const {
    const auto& sys = *sys_;
    while (true) {
        int hit = -1;
        for (uint64_t m = active; m; m &= m - 1) {
            int j = std::countr_zero(m);
            if (sys.ip(gens_[j], tuple[pos]) < 0) {
                hit = j;
                break;
            }
        }
        if (hit < 0) break;
        int g = gens_[hit];
        for (size_t k = pos; k < tuple.size(); ++k) tuple[k] = sys.refl(g, tuple[k]);
        if (extra)
            for (auto& x : *extra) x = sys.refl(g, x);
        if (word) word->push_back(hit);
    }
    for (uint64_t m = active; m; m &= m - 1) {
        int j = std::countr_zero(m);
        if (sys.ip(gens_[j], tuple[pos]) != 0) active &= ~(uint64_t(1) << j);
    }
}

std::vector<int> Canonizer::canon(std::vector<int> tuple, std::vector<int>* word) const {
    uint64_t active = all_active();
    for (size_t p = 0; p < tuple.size(); ++p) dominate(tuple, p, active, nullptr, word);
    return tuple;
}

int Canonizer::apply(const std::vector<int>& word, int root) const {
    for (int j : word) root = sys_->refl(gens_[j], root);
    return root;
}

int Canonizer::undo(const std::vector<int>& word, int root) const {
    for (auto it = word.rbegin(); it != word.rend(); ++it) root = sys_->refl(gens_[*it], root);
    return root;
}

namespace {

const std::vector<std::vector<int>>& component_auts(const Component& c) {
    static std::mutex mu;
    static std::map<std::tuple<char, int>, std::vector<std::vector<int>>> cache;
    std::lock_guard lock(mu);
    auto key = std::make_tuple(c.series, c.rank);
    auto it = cache.find(key);
    if (it == cache.end()) {
        IsoType t;
        t.comps.push_back({c.series, c.rank, 0});
        it = cache.emplace(key, all_automorphisms(template_of(t))).first;
    }
    return it->second;
}

struct Block {
    Component c;
    std::vector<int> roots;
    bool operator<(const Block& o) const {
        if (!(c == o.c)) return component_before(c, o.c);
        return roots < o.roots;
    }
    bool operator==(const Block& o) const { return c == o.c && roots == o.roots; }
};

std::vector<Block> blocks_of(const IsoType& t, const std::vector<int>& psi) {
    std::vector<Block> out;
    size_t off = 0;
    for (auto& c : t.comps) {
        Block b{c, {}};
        for (int k = 0; k < c.rank; ++k) b.roots.push_back(psi[off + k]);
        off += c.rank;
        out.push_back(b);
    }
    if (off != psi.size()) throw Error("fundamental system does not match the type");
    return out;
}

struct KeyState {
    uint64_t active;
    std::vector<Block> rest;
    bool operator<(const KeyState& o) const {
        if (active != o.active) return active < o.active;
        return rest < o.rest;
    }
};

// Extend state by placing some remaining block of type c (under some
// automorphism) at the next positions.  f receives the block values and the
// successor state.
template <class F>
void expand(const Canonizer& cz, const KeyState& st, const Component& c, F&& f) {
    for (size_t e = 0; e < st.rest.size(); ++e) {
        if (!(st.rest[e].c == c)) continue;
        for (auto& tau : component_auts(c)) {
            std::vector<int> tuple;
            for (int k = 0; k < c.rank; ++k) tuple.push_back(st.rest[e].roots[tau[k]]);
            std::vector<int> extra;
            for (size_t o = 0; o < st.rest.size(); ++o)
                if (o != e) extra.insert(extra.end(), st.rest[o].roots.begin(), st.rest[o].roots.end());
            uint64_t active = st.active;
            for (int k = 0; k < c.rank; ++k) cz.dominate(tuple, k, active, &extra);
            KeyState next{active, {}};
            size_t pos = 0;
            for (size_t o = 0; o < st.rest.size(); ++o) {
                if (o == e) continue;
                Block b{st.rest[o].c, {}};
                for (size_t k = 0; k < st.rest[o].roots.size(); ++k) b.roots.push_back(extra[pos++]);
                next.rest.push_back(b);
            }
            std::sort(next.rest.begin(), next.rest.end());
            f(tuple, std::move(next), tau);
        }
    }
}

}  // namespace

std::vector<int> subsystem_key(const RootSystem& sys, const IsoType& t, const std::vector<int>& psi) {
    Canonizer cz(sys);
    std::set<KeyState> states;
    KeyState init{cz.all_active(), blocks_of(t, psi)};
    std::sort(init.rest.begin(), init.rest.end());
    states.insert(init);
    std::vector<int> key;
    for (auto& c : t.comps) {
        std::vector<int> best;
        std::set<KeyState> next;
        for (auto& st : states)
            expand(cz, st, c, [&](const std::vector<int>& vals, KeyState&& ns, const std::vector<int>&) {
                if (best.empty() || vals < best) {
                    best = vals;
                    next.clear();
                }
                if (vals == best) next.insert(std::move(ns));
            });
        key.insert(key.end(), best.begin(), best.end());
        states = std::move(next);
    }
    return key;
}

std::vector<int> subsystem_key(const RootSystem& sys, const RootSet& xi) {
    return subsystem_key(sys, iso_type(sys, xi), standard_fundamental(sys, xi));
}

BigInt out_sigma_order(const RootSystem& sys, const RootSet& xi) {
    auto t = iso_type(sys, xi);
    auto psi = standard_fundamental(sys, xi);
    Canonizer cz(sys);
    auto target = cz.canon(psi);
    std::map<KeyState, BigInt> states;
    KeyState init{cz.all_active(), blocks_of(t, psi)};
    std::sort(init.rest.begin(), init.rest.end());
    states[init] = 1;
    size_t off = 0;
    for (auto& c : t.comps) {
        std::map<KeyState, BigInt> next;
        std::vector<int> want(target.begin() + off, target.begin() + off + c.rank);
        for (auto& [st, mult] : states)
            expand(cz, st, c, [&](const std::vector<int>& vals, KeyState&& ns, const std::vector<int>&) {
                if (vals == want) next[std::move(ns)] += mult;
            });
        states = std::move(next);
        off += c.rank;
    }
    BigInt total = 0;
    for (auto& [st, mult] : states) total += mult;
    return total;
}

BigInt out_order(const IsoType& t) {
    BigInt r = 1;
    for (size_t i = 0; i < t.comps.size();) {
        size_t j = i;
        while (j < t.comps.size() && t.comps[j] == t.comps[i]) ++j;
        BigInt a = int(component_auts(t.comps[i]).size());
        for (size_t k = i; k < j; ++k) r *= a * int(k - i + 1);
        i = j;
    }
    return r;
}

DualPairReport dual_pair_check(const RootSystem& sys, const RootSet& xi1) {
    DualPairReport rep;
    rep.xi1 = {&sys, xi1};
    rep.xi2 = perp(sys, xi1);
    rep.is_dual_pair = perp(sys, rep.xi2.roots).roots == xi1;
    rep.out1_order = out_order(iso_type(sys, xi1).untagged());
    rep.out2_order = out_order(iso_type(sys, rep.xi2.roots).untagged());
    rep.out_sigma1_order = out_sigma_order(sys, xi1);
    rep.out_sigma2_order = out_sigma_order(sys, rep.xi2.roots);
    rep.is_special = rep.is_dual_pair && rep.out1_order == rep.out_sigma1_order &&
                     rep.out2_order == rep.out_sigma2_order;
    return rep;
}

bool type_matches(const IsoType& actual, const IsoType& target) {
    bool tagged = false;
    for (auto& c : target.comps) tagged |= c.tag != 0;
    if (tagged) return actual == target;
    return actual.untagged() == target.untagged();
}

FundamentalSubsets fundamental_subsets(const RootSystem& sys, const IsoType& target) {
    int n = sys.rank;
    if (n > 24) throw Error("rank too large for subset enumeration");
    auto d = diagram_of(sys, sys.simple);
    auto ctx = context_of(sys);
    FundamentalSubsets out;
    for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
        if (std::popcount(mask) != target.rank()) continue;
        std::vector<int> keep;
        for (int k = 0; k < n; ++k)
            if (mask >> k & 1) keep.push_back(k);
        if (type_matches(classify_diagram(d.induced(keep), ctx), target)) {
            ++out.count;
            out.subsets.push_back(keep);
        }
    }
    return out;
}

long long fundamental_count_recursive(const IsoType& target, const std::string& host_label) {
    auto sys = build_root_system(host_label);
    auto d = diagram_of(sys, sys.simple);
    auto ctx = context_of(sys);
    int n = d.size();
    std::map<std::pair<uint64_t, std::string>, long long> memo;
    std::function<long long(uint64_t, const IsoType&)> count = [&](uint64_t mask, const IsoType& t) -> long long {
        if (t.empty()) return 1;
        if (!mask || std::popcount(mask) < t.rank()) return 0;
        auto key = std::make_pair(mask, t.str());
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        // an end node of the remaining diagram
        int x = -1, best = 99;
        for (int v = 0; v < n; ++v) {
            if (!(mask >> v & 1)) continue;
            int deg = 0;
            for (int u = 0; u < n; ++u)
                if ((mask >> u & 1) && d.linked(u, v)) ++deg;
            if (deg < best) best = deg, x = v;
        }
        long long res = count(mask & ~(uint64_t(1) << x), t);
        // connected subsets through x become one component of the subsystem
        std::set<uint64_t> seen;
        std::vector<uint64_t> stack{uint64_t(1) << x};
        while (!stack.empty()) {
            uint64_t c = stack.back();
            stack.pop_back();
            if (!seen.insert(c).second) continue;
            std::vector<int> keep;
            uint64_t nb = 0;
            for (int v = 0; v < n; ++v) {
                if (!(c >> v & 1)) continue;
                keep.push_back(v);
                for (int u = 0; u < n; ++u)
                    if ((mask >> u & 1) && d.linked(u, v)) nb |= uint64_t(1) << u;
            }
            nb &= ~c;
            auto ct = classify_diagram(d.induced(keep), ctx);
            if (int(keep.size()) <= t.rank()) {
                bool tagged = false;
                for (auto& cc : t.comps) tagged |= cc.tag != 0;
                auto comp = ct.comps[0];
                for (size_t k = 0; k < t.comps.size(); ++k) {
                    auto want = t.comps[k];
                    bool ok = tagged ? want == comp
                                     : (want.series == comp.series && want.rank == comp.rank);
                    if (!ok) continue;
                    IsoType rest = t;
                    rest.comps.erase(rest.comps.begin() + k);
                    res += count(mask & ~c & ~nb, rest);
                    break;
                }
                for (uint64_t m = nb; m; m &= m - 1) stack.push_back(c | (m & -m));
            }
        }
        memo[key] = res;
        return res;
    };
    return count((n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1), target);
}

std::vector<std::vector<int>> outer_automorphisms(const RootSystem& sys) {
    auto d = diagram_of(sys, sys.simple);
    auto g = diagram_automorphisms(d, false);
    std::vector<std::vector<int>> out;
    for (auto& p : g.gens) {
        std::vector<int> img(sys.rank);
        for (int j = 0; j < sys.rank; ++j) img[j] = p[j];
        out.push_back(root_permutation(sys, isometry_from_simple_map(sys, img)));
    }
    return out;
}

}  // namespace rootsys
