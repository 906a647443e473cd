#include "rootsys/orbit.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace rootsys {

uint64_t default_state_cap() {
    if (const char* s = std::getenv("ROOTSYS_STATE_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end != s && v > 0) return v;
    }
    return 20000000ull;
}

namespace {

struct Mask {
    uint64_t lo = 0, hi = 0;
    void set(int i) { (i < 64 ? lo : hi) |= uint64_t(1) << (i & 63); }
    bool operator==(const Mask&) const = default;
    bool operator<(const Mask& o) const { return lo != o.lo ? lo < o.lo : hi < o.hi; }
    template <class F>
    void for_each(F&& f) const {
        for (int k = 0; k < 2; ++k)
            for (uint64_t x = k ? hi : lo; x; x &= x - 1) f(k * 64 + std::countr_zero(x));
    }
};

struct MaskHash {
    size_t operator()(const Mask& m) const { return size_t((m.lo * 0x9e3779b97f4a7c15ull) ^ (m.hi + 0x632be59bd9b4e019ull + (m.lo >> 17))); }
};

Mask mask_of(const RootSystem& sys, const RootSet& xi) {
    Mask m;
    xi.for_each([&](int i) {
        if (sys.positive(i)) m.set(i);
    });
    return m;
}

RootSet roots_of(const RootSystem& sys, const Mask& m) {
    RootSet r;
    m.for_each([&](int i) {
        r.set(i);
        r.set(sys.neg(i));
    });
    return r;
}

// Replace an ordered fundamental system of a subsystem by the one that is
// positive for the host order, keeping track of positions.
void make_positive(const RootSystem& sys, std::vector<int>& base) {
    while (true) {
        auto it = std::find_if(base.begin(), base.end(), [&](int r) { return !sys.positive(r); });
        if (it == base.end()) return;
        int b = *it;
        for (auto& r : base) r = sys.refl(b, r);
    }
}

}  // namespace

OrbitResult orbit_of(const RootSystem& sys, const RootSet& xi, const OrbitOptions& opt) {
    if (sys.npos > 128) throw Error("orbit engine supports at most 128 positive roots");
    uint64_t cap = opt.cap ? opt.cap : default_state_cap();
    OrbitResult res;
    res.base = standard_fundamental(sys, xi);
    const int r = int(res.base.size());

    std::vector<Mask> states;
    std::vector<int> bases;  // r entries per state
    std::unordered_map<Mask, uint32_t, MaskHash> ids;
    std::set<std::vector<int>> gens;

    Mask start = mask_of(sys, xi);
    states.push_back(start);
    bases.insert(bases.end(), res.base.begin(), res.base.end());
    ids.emplace(start, 0);

    std::vector<int> img(r), perm(r);
    for (size_t cur = 0; cur < states.size(); ++cur) {
        if (opt.progress && (cur & 0xffff) == 0) opt.progress(states.size());
        for (int s : sys.simple) {
            Mask next;
            states[cur].for_each([&](int j) { next.set(sys.pos(sys.refl(s, j))); });
            for (int k = 0; k < r; ++k) img[k] = sys.refl(s, bases[cur * r + k]);
            make_positive(sys, img);
            auto [it, fresh] = ids.try_emplace(next, uint32_t(states.size()));
            if (fresh) {
                if (states.size() >= cap)
                    throw ResourceError("orbit exceeds the state cap of " + std::to_string(cap) +
                                        " (set ROOTSYS_STATE_CAP to raise it)");
                states.push_back(next);
                bases.insert(bases.end(), img.begin(), img.end());
                continue;
            }
            const int* known = &bases[size_t(it->second) * r];
            bool identity = true;
            for (int k = 0; k < r; ++k) {
                perm[k] = int(std::find(known, known + r, img[k]) - known);
                if (perm[k] == r) throw Error("internal: closing edge does not permute the base");
                identity = identity && perm[k] == k;
            }
            if (!identity) gens.insert(perm);
        }
    }
    if (opt.progress) opt.progress(states.size());

    res.size = states.size();
    res.representative = {&sys, roots_of(sys, *std::min_element(states.begin(), states.end()))};
    res.schreier.assign(gens.begin(), gens.end());
    if (opt.keep_elements) {
        res.elements.reserve(states.size());
        for (auto& m : states) res.elements.push_back(roots_of(sys, m));
    }
    return res;
}

bool equivalent_under_W(const RootSystem& sys, const RootSet& xi1, const RootSet& xi2) {
    if (xi1.count() != xi2.count()) return false;
    return orbit_of(sys, xi1).representative == orbit_of(sys, xi2).representative;
}

BigInt stabilizer_order(const RootSystem& sys, const RootSet& xi) {
    return weyl_order(sys) / BigInt(orbit_of(sys, xi).size);
}

std::vector<std::vector<int>> close_group(int n, const std::vector<std::vector<int>>& gens) {
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    std::set<std::vector<int>> seen{id};
    std::vector<std::vector<int>> queue{id};
    for (size_t q = 0; q < queue.size(); ++q)
        for (auto& g : gens) {
            std::vector<int> h(n);
            for (int i = 0; i < n; ++i) h[i] = g[queue[q][i]];
            if (seen.insert(h).second) queue.push_back(std::move(h));
        }
    return {seen.begin(), seen.end()};
}

OutSigmaGroup out_sigma(const RootSystem& sys, const RootSet& xi) {
    auto orb = orbit_of(sys, xi);
    OutSigmaGroup g;
    g.base = {&sys, xi};
    g.base_roots = orb.base;
    g.elements = close_group(int(orb.base.size()), orb.schreier);
    g.order = BigInt(g.elements.size());
    return g;
}

std::vector<CensusEntry> census_small(const RootSystem& sys) {
    if (sys.rank > 4) throw Error("census_small needs a host of rank at most 4");
    std::vector<int> pos(sys.npos);
    for (int i = 0; i < sys.npos; ++i) pos[i] = i;
    std::set<RootSet> subs;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from) -> void {
        if (!pick.empty()) subs.insert(closure(sys, pick));
        if (int(pick.size()) == sys.rank) return;
        for (int i = from; i < sys.npos; ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);

    std::set<RootSet> done;
    std::map<IsoType, CensusEntry> by_type;
    for (auto& s : subs) {
        if (done.count(s)) continue;
        OrbitOptions opt;
        opt.keep_elements = true;
        auto orb = orbit_of(sys, s, opt);
        done.insert(orb.elements.begin(), orb.elements.end());
        auto t = iso_type(sys, s);
        auto& e = by_type[t];
        e.type = t;
        e.orbits += 1;
        e.reps.push_back(orb.representative);
    }
    std::vector<CensusEntry> out;
    for (auto& [t, e] : by_type) out.push_back(e);
    return out;
}

std::vector<std::vector<int>> hom_oracle(const RootSystem& sys, const IsoType& t) {
    Diagram tmpl = template_of(t);
    const int r = tmpl.size();
    std::vector<char> want_len(r, 0);
    {
        int off = 0;
        for (auto& c : t.comps) {
            for (int k = 0; k < c.rank; ++k) want_len[off + k] = c.tag;
            off += c.rank;
        }
    }
    Canonizer cz(sys);
    std::vector<std::vector<int>> out;
    std::vector<int> tuple;
    auto rec = [&](auto&& self, uint64_t active) -> void {
        int k = int(tuple.size());
        if (k == r) {
            out.push_back(tuple);
            return;
        }
        for (int b = 0; b < sys.size(); ++b) {
            if (want_len[k] == 'L' && !sys.is_long(b)) continue;
            if (want_len[k] == 'S' && sys.is_long(b)) continue;
            bool ok = true;
            for (uint64_t m = active; m && ok; m &= m - 1)
                ok = sys.ip(cz.gens()[std::countr_zero(m)], b) >= 0;
            for (int j = 0; j < k && ok; ++j)
                ok = sys.cartan_int(b, tuple[j]) == tmpl.a[j][k] && sys.cartan_int(tuple[j], b) == tmpl.a[k][j];
            if (!ok) continue;
            uint64_t next = active;
            for (uint64_t m = active; m; m &= m - 1) {
                int g = std::countr_zero(m);
                if (sys.ip(cz.gens()[g], b) != 0) next &= ~(uint64_t(1) << g);
            }
            tuple.push_back(b);
            self(self, next);
            tuple.pop_back();
        }
    };
    rec(rec, cz.all_active());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace rootsys
