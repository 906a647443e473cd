#include "rootsys/core.hpp"

#include <numeric>

namespace rootsys {

RootSet all_roots_of(const RootSystem& sys) {
    RootSet s;
    for (int i = 0; i < sys.size(); ++i) s.set(i);
    return s;
}

RootSet closure(const RootSystem& sys, const std::vector<int>& gens) {
    RootSet s;
    std::vector<int> q;
    auto add = [&](int r) {
        if (!s.test(r)) {
            s.set(r);
            q.push_back(r);
        }
    };
    for (int g : gens) {
        add(g);
        add(sys.neg(g));
    }
    for (size_t h = 0; h < q.size(); ++h)
        for (int g : gens) add(sys.refl(g, q[h]));
    return s;
}

std::vector<int> fundamental_of(const RootSystem& sys, const RootSet& sub) {
    std::vector<int> pos;
    sub.for_each([&](int r) {
        if (sys.positive(r)) pos.push_back(r);
    });
    std::vector<int> out;
    for (int x : pos) {
        bool simple = true;
        for (int y : pos) {
            if (y == x) continue;
            int d = sys.sum(x, sys.neg(y));
            if (d >= 0 && sys.positive(d) && sub.test(d)) {
                simple = false;
                break;
            }
        }
        if (simple) out.push_back(x);
    }
    return out;
}

std::vector<RootSet> irreducible_components(const RootSystem& sys, const RootSet& sub) {
    auto psi = fundamental_of(sys, sub);
    int k = int(psi.size());
    std::vector<int> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (sys.ip(psi[i], psi[j]) != 0) parent[find(i)] = find(j);
    std::vector<RootSet> out;
    for (int i = 0; i < k; ++i) {
        if (find(i) != i) continue;
        std::vector<int> g;
        for (int j = 0; j < k; ++j)
            if (find(j) == i) g.push_back(psi[j]);
        out.push_back(closure(sys, g));
    }
    return out;
}

}  // namespace rootsys
