#include "rootsys/named.hpp"

namespace rootsys {

namespace {

RootVec eps(std::initializer_list<std::pair<int, int>> terms) {
    RootVec v(8, 0);
    for (auto [i, c] : terms) v[i - 1] += 2 * c;
    return v;
}

std::vector<NamedRep> build() {
    const RootVec a1{1, -1, -1, -1, -1, -1, -1, 1};
    const RootVec a2 = eps({{1, 1}, {2, 1}});
    const RootVec a3 = eps({{2, 1}, {1, -1}});
    const RootVec a4 = eps({{3, 1}, {2, -1}});
    const RootVec a5 = eps({{4, 1}, {3, -1}});
    const RootVec a6 = eps({{5, 1}, {4, -1}});
    const RootVec a7 = eps({{6, 1}, {5, -1}});
    const RootVec a8 = eps({{7, 1}, {6, -1}});
    const RootVec ap = eps({{5, -1}, {6, -1}});
    const RootVec aq = eps({{3, -1}, {4, -1}});
    const RootVec a0_8 = eps({{7, -1}, {8, -1}});
    const RootVec a0_7 = eps({{7, 1}, {8, -1}});
    const RootVec at = eps({{8, 1}, {7, -1}});
    const RootVec a0_6{-1, -1, -1, -1, -1, 1, 1, -1};

    std::vector<RootVec> a8std{a2, a3, a5, aq, a7, ap, a0_7, a0_8};
    auto first = [&](int k) { return std::vector<RootVec>(a8std.begin(), a8std.begin() + k); };
    std::vector<RootVec> a4x2{a2, a0_6, a3, a1, a5, a6, a8, a0_8};

    return {
        {"8A1std", "E8", a8std},
        {"7A1std", "E7 E8", first(7)},
        {"6A1std", "E7 E8", first(6)},
        {"5A1std", "E7 E8", first(5)},
        {"4A1std", "E7 E8", first(4)},
        {"4A1alt", "E7 E8", {a2, a3, a5, a7}},
        {"2D4std", "E8", {a2, a3, a4, a5, aq, a7, at, a8, a0_8, ap}},
        {"D4+4A1std", "E8", {a2, a3, a4, a5, aq, a7, at, a0_8, ap}},
        {"D4+3A1std", "E7 E8", {a2, a3, a4, a5, aq, a7, at, ap}},
        {"4A2std", "E8", a4x2},
        {"3A2std", "E6 E7 E8", std::vector<RootVec>(a4x2.begin(), a4x2.begin() + 6)},
        {"3A1_1", "E7 E8", {a0_7, ap, aq}},
        {"3A1_2", "E7 E8", {a0_7, ap, a7}},
        {"4A1_1", "E7 E8", {a0_7, ap, aq, a7}},
        {"4A1_2", "E7 E8", {a0_7, ap, aq, a5}},
        {"4A1_3", "E7 E8", {a0_7, ap, aq, a2}},
        {"4A1_4", "E7 E8", {a0_7, ap, aq, a3}},
    };
}

}  // namespace

const std::vector<NamedRep>& named_representatives() {
    static const std::vector<NamedRep> reps = build();
    return reps;
}

bool is_named(const std::string& name) {
    for (auto& r : named_representatives())
        if (r.name == name) return true;
    return false;
}

std::vector<int> named_roots(const RootSystem& sys, const std::string& name) {
    for (auto& r : named_representatives()) {
        if (r.name != name) continue;
        if (sys.dim != 8 || sys.label.series != 'E')
            throw Error("named set '" + name + "' lives in " + r.hosts + ", not " + sys.label.str());
        std::vector<int> idx;
        for (auto& v : r.roots) {
            int i = sys.index_of(v);
            if (i < 0) throw Error("named set '" + name + "' is not contained in " + sys.label.str());
            idx.push_back(i);
        }
        return idx;
    }
    throw Error("unknown named set '" + name + "'");
}

Subsystem named_subsystem(const RootSystem& sys, const std::string& name) {
    return generate(sys, named_roots(sys, name));
}

}  // namespace rootsys
