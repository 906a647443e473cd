#include "rootsys/core.hpp"
#include "rootsys/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>

#include <json.hpp>

namespace rootsys {

namespace {

std::string key_of(const RootVec& v) {
    std::string k(v.size(), '\0');
    for (size_t i = 0; i < v.size(); ++i) k[i] = char(v[i] + 64);
    return k;
}

RootVec unit(int dim, int i, int s) {
    RootVec v(dim, 0);
    v[i] = s;
    return v;
}

// +-e_i +- e_j for i<j<lim, scaled
void add_pm_pairs(std::vector<RootVec>& out, int dim, int lim) {
    for (int i = 0; i < lim; ++i)
        for (int j = i + 1; j < lim; ++j)
            for (int si : {1, -1})
                for (int sj : {1, -1}) {
                    RootVec v(dim, 0);
                    v[i] = 2 * si;
                    v[j] = 2 * sj;
                    out.push_back(v);
                }
}

RootVec e_diff(int dim, int i, int j) {  // e_i - e_j (1-based), scaled
    RootVec v(dim, 0);
    v[i - 1] += 2;
    v[j - 1] -= 2;
    return v;
}

RootVec e_sum(int dim, int i, int j) {
    RootVec v(dim, 0);
    v[i - 1] += 2;
    v[j - 1] += 2;
    return v;
}

std::vector<RootVec> e_simple(int n) {
    std::vector<RootVec> s;
    s.push_back({1, -1, -1, -1, -1, -1, -1, 1});  // (e1+e8)/2 - (e2+..+e7)/2
    s.push_back(e_sum(8, 1, 2));
    for (int j = 3; j <= n; ++j) s.push_back(e_diff(8, j - 1, j - 2));
    return s;
}

}  // namespace

Label parse_label(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '_') s += c;
    if (s.size() < 2) throw Error("invalid root system label '" + raw + "'");
    Label l;
    l.series = char(std::toupper(static_cast<unsigned char>(s[0])));
    for (size_t i = 1; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw Error("invalid root system label '" + raw + "'");
    l.rank = std::stoi(s.substr(1));
    bool ok = false;
    switch (l.series) {
        case 'A': ok = l.rank >= 1; break;
        case 'B': ok = l.rank >= 1; break;  // B1 ~ A1 alias
        case 'C': ok = l.rank >= 2; break;  // C2 ~ B2 alias
        case 'D': ok = l.rank >= 2; break;  // D2, D3 aliases
        case 'E': ok = l.rank >= 6 && l.rank <= 8; break;
        case 'F': ok = l.rank == 4; break;
        case 'G': ok = l.rank == 2; break;
        default: ok = false;
    }
    if (!ok) throw Error("invalid root system label '" + raw + "'");
    return l;
}

int64_t dot(const RootVec& a, const RootVec& b) {
    if (a.size() != b.size()) throw Error("dimension mismatch");
    int64_t s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += int64_t(a[i]) * b[i];
    return s;
}

RootVec reflect(const RootVec& alpha, const RootVec& x) {
    int64_t aa = dot(alpha, alpha);
    if (aa == 0) throw Error("reflection in the zero vector");
    int64_t ax = dot(alpha, x);
    RootVec r(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        int64_t num = 2 * ax * alpha[i];
        if (num % aa != 0) throw Error("reflection leaves the scaled lattice");
        r[i] = int(x[i] - num / aa);
    }
    return r;
}

int cartan_integer(const RootVec& alpha, const RootVec& beta) {
    int64_t bb = dot(beta, beta);
    if (bb == 0) throw Error("cartan integer against the zero vector");
    int64_t num = 2 * dot(alpha, beta);
    if (num % bb != 0) throw Error("non-integral cartan integer");
    return int(num / bb);
}

int RootSystem::index_of(const RootVec& v) const {
    auto it = lookup_.find(key_of(v));
    return it == lookup_.end() ? -1 : it->second;
}

std::vector<int> RootSystem::extended() const {
    std::vector<int> e{alpha0};
    e.insert(e.end(), simple.begin(), simple.end());
    return e;
}

std::optional<std::vector<int>> RootSystem::extended_prime() const {
    if (!alpha0_prime) return std::nullopt;
    std::vector<int> e{*alpha0_prime};
    e.insert(e.end(), simple.begin(), simple.end());
    return e;
}

void RootSystem::finalize() {
    int n = size();
    if (n > kMaxRoots) throw Error("root system too large for this build");
    stride_ = n;
    lookup_.clear();
    for (int i = 0; i < n; ++i) lookup_[key_of(roots[i])] = i;
    norm.assign(n, 0);
    for (int i = 0; i < n; ++i) norm[i] = int(dot(roots[i], roots[i]));
    long_norm = *std::max_element(norm.begin(), norm.end());
    short_norm = *std::min_element(norm.begin(), norm.end());
    ip_.assign(size_t(n) * n, 0);
    refl_.assign(size_t(n) * n, 0);
    sum_.assign(size_t(n) * n, -1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) ip_[i * n + j] = int(dot(roots[i], roots[j]));
    RootVec tmp(dim);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int c = 2 * ip_[i * n + j] / norm[i];
            for (int k = 0; k < dim; ++k) tmp[k] = roots[j][k] - c * roots[i][k];
            int r = index_of(tmp);
            if (r < 0) throw Error("root set not closed under reflections");
            refl_[i * n + j] = uint16_t(r);
            for (int k = 0; k < dim; ++k) tmp[k] = roots[i][k] + roots[j][k];
            sum_[i * n + j] = int16_t(index_of(tmp));
        }
}

RootSystem build_from(Label label, int dim, const std::vector<RootVec>& input,
                      const std::vector<RootVec>& simple_vecs) {
    int rank = int(simple_vecs.size());
    for (auto& v : input)
        if (int(v.size()) != dim) throw Error("root of wrong dimension");

    // Expand the simple roots into all roots by simple reflections while
    // tracking coordinates; this also checks the supplied list.
    std::map<RootVec, std::vector<int>> coeff;
    std::deque<RootVec> q;
    for (int j = 0; j < rank; ++j) {
        std::vector<int> c(rank, 0);
        c[j] = 1;
        coeff[simple_vecs[j]] = c;
        q.push_back(simple_vecs[j]);
    }
    while (!q.empty()) {
        RootVec x = q.front();
        q.pop_front();
        auto cx = coeff[x];
        for (int j = 0; j < rank; ++j) {
            int c = cartan_integer(x, simple_vecs[j]);
            if (c == 0) continue;
            RootVec y = reflect(simple_vecs[j], x);
            if (coeff.count(y)) continue;
            auto cy = cx;
            cy[j] -= c;
            coeff[y] = cy;
            q.push_back(y);
        }
    }
    if (coeff.size() != input.size())
        throw Error("root list does not match the Weyl orbit of the simple roots");
    for (auto& v : input)
        if (!coeff.count(v)) throw Error("root list does not match the Weyl orbit of the simple roots");

    std::vector<std::pair<RootVec, std::vector<int>>> pos;
    for (auto& [v, c] : coeff) {
        bool nonneg = std::all_of(c.begin(), c.end(), [](int a) { return a >= 0; });
        bool nonpos = std::all_of(c.begin(), c.end(), [](int a) { return a <= 0; });
        if (!nonneg && !nonpos) throw Error("root with mixed-sign coefficients");
        if (nonneg) pos.push_back({v, c});
    }
    std::sort(pos.begin(), pos.end(), [](const auto& a, const auto& b) {
        int ha = std::accumulate(a.second.begin(), a.second.end(), 0);
        int hb = std::accumulate(b.second.begin(), b.second.end(), 0);
        if (ha != hb) return ha < hb;
        return a.second > b.second;
    });

    RootSystem s;
    s.label = label;
    s.dim = dim;
    s.rank = rank;
    s.npos = int(pos.size());
    for (auto& p : pos) {
        s.roots.push_back(p.first);
        s.coeff.push_back(p.second);
    }
    for (int i = 0; i < s.npos; ++i) {
        RootVec v = s.roots[i];
        for (auto& x : v) x = -x;
        auto c = s.coeff[i];
        for (auto& x : c) x = -x;
        s.roots.push_back(v);
        s.coeff.push_back(c);
    }
    s.finalize();
    for (int j = 0; j < rank; ++j) s.simple.push_back(j);
    s.cartan.assign(rank, std::vector<int>(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) s.cartan[i][j] = s.cartan_int(i, j);

    // reducedness: parallel roots are +-
    for (int i = 0; i < s.size(); ++i)
        for (int j = 0; j < s.size(); ++j) {
            int64_t a = s.ip(i, j);
            if (a * a == int64_t(s.norm[i]) * s.norm[j] && j != i && j != s.neg(i))
                throw Error("root system is not reduced");
        }

    // the highest root is the unique positive root of maximal height
    s.highest = s.npos - 1;
    s.alpha0 = s.neg(s.highest);
    s.marks = {1};
    for (int c : s.coeff[s.highest]) s.marks.push_back(c);
    if (s.two_lengths()) {
        for (int i = s.npos - 1; i >= 0; --i)
            if (!s.is_long(i)) {
                s.alpha0_prime = s.neg(i);
                break;
            }
    }
    return s;
}

RootSystem build_root_system(Label l) {
    int n = l.rank;
    std::vector<RootVec> roots, simple;
    int dim = 0;
    switch (l.series) {
        case 'A': {
            dim = n + 1;
            for (int i = 1; i <= dim; ++i)
                for (int j = 1; j <= dim; ++j)
                    if (i != j) roots.push_back(e_diff(dim, i, j));
            for (int j = 1; j <= n; ++j) simple.push_back(e_diff(dim, j, j + 1));
            break;
        }
        case 'B':
        case 'C':
        case 'D': {
            dim = n;
            add_pm_pairs(roots, dim, dim);
            int s = l.series == 'B' ? 2 : 4;
            if (l.series != 'D')
                for (int k = 0; k < dim; ++k)
                    for (int sg : {1, -1}) roots.push_back(unit(dim, k, sg * s));
            for (int j = 1; j < n; ++j) simple.push_back(e_diff(dim, j, j + 1));
            if (l.series == 'D') {
                if (n == 2) {
                    simple = {e_diff(dim, 1, 2), e_sum(dim, 1, 2)};
                } else {
                    simple.back() = e_diff(dim, n - 1, n);
                    simple.push_back(e_sum(dim, n - 1, n));
                }
            } else {
                simple.push_back(unit(dim, n - 1, s));
            }
            break;
        }
        case 'E': {
            dim = 8;
            if (n == 8) {
                add_pm_pairs(roots, 8, 8);
                for (int mask = 0; mask < 256; ++mask) {
                    if (std::popcount(unsigned(mask)) % 2) continue;
                    RootVec v(8);
                    for (int k = 0; k < 8; ++k) v[k] = (mask >> k) & 1 ? -1 : 1;
                    roots.push_back(v);
                }
            } else if (n == 7) {
                add_pm_pairs(roots, 8, 6);
                RootVec t(8, 0);
                t[6] = 2;
                t[7] = -2;
                roots.push_back(t);
                for (auto& x : t) x = -x;
                roots.push_back(t);
                for (int mask = 0; mask < 64; ++mask) {
                    if (std::popcount(unsigned(mask)) % 2 == 0) continue;
                    RootVec v(8);
                    for (int k = 0; k < 6; ++k) v[k] = (mask >> k) & 1 ? -1 : 1;
                    v[6] = 1;
                    v[7] = -1;
                    roots.push_back(v);
                    for (auto& x : v) x = -x;
                    roots.push_back(v);
                }
            } else {
                add_pm_pairs(roots, 8, 5);
                for (int mask = 0; mask < 32; ++mask) {
                    if (std::popcount(unsigned(mask)) % 2) continue;
                    RootVec v(8);
                    for (int k = 0; k < 5; ++k) v[k] = (mask >> k) & 1 ? -1 : 1;
                    v[5] = -1;
                    v[6] = -1;
                    v[7] = 1;
                    roots.push_back(v);
                    for (auto& x : v) x = -x;
                    roots.push_back(v);
                }
            }
            simple = e_simple(n);
            break;
        }
        case 'F': {
            dim = 4;
            add_pm_pairs(roots, 4, 4);
            for (int k = 0; k < 4; ++k)
                for (int sg : {1, -1}) roots.push_back(unit(4, k, 2 * sg));
            for (int mask = 0; mask < 16; ++mask) {
                RootVec v(4);
                for (int k = 0; k < 4; ++k) v[k] = (mask >> k) & 1 ? -1 : 1;
                roots.push_back(v);
            }
            simple = {e_diff(4, 2, 3), e_diff(4, 3, 4), unit(4, 3, 2), {1, -1, -1, -1}};
            break;
        }
        case 'G': {
            dim = 3;
            for (int i = 1; i <= 3; ++i)
                for (int j = 1; j <= 3; ++j)
                    if (i != j) roots.push_back(e_diff(3, i, j));
            for (int i = 0; i < 3; ++i)
                for (int sg : {1, -1}) {
                    RootVec v(3, -2 * sg);
                    v[i] = 4 * sg;
                    roots.push_back(v);
                }
            simple = {{-4, 2, 2}, {2, -2, 0}};
            break;
        }
        default:
            throw Error("invalid root system label '" + l.str() + "'");
    }
    return build_from(l, dim, roots, simple);
}

RootSystem build_root_system(const std::string& label) { return build_root_system(parse_label(label)); }

BigInt weyl_order_of(const RootSystem& sys, const RootSet& sub) {
    if (sub.empty()) return 1;
    auto comps = irreducible_components(sys, sub);
    BigInt total = 1;
    for (auto& c : comps) {
        auto psi = fundamental_of(sys, c);
        int top = -1;
        c.for_each([&](int r) {
            if (sys.norm[r] < (top < 0 ? 0 : sys.norm[top])) return;
            for (int b : psi)
                if (sys.ip(b, r) < 0) return;
            if (top < 0 || sys.norm[r] > sys.norm[top]) top = r;
        });
        int nlong = 0;
        c.for_each([&](int r) {
            if (sys.norm[r] == sys.norm[top]) ++nlong;
        });
        std::vector<int> rest;
        for (int b : psi)
            if (sys.ip(b, top) == 0) rest.push_back(b);
        total *= BigInt(nlong) * weyl_order_of(sys, closure(sys, rest));
    }
    return total;
}

BigInt weyl_order(const RootSystem& sys) { return weyl_order_of(sys, all_roots_of(sys)); }

BigInt weyl_order_from_marks(const RootSystem& sys) {
    BigInt r = 1;
    for (int k = 2; k <= sys.rank; ++k) r *= k;
    int ones = int(std::count(sys.marks.begin(), sys.marks.end(), 1));
    r *= ones;
    for (size_t j = 1; j < sys.marks.size(); ++j) r *= sys.marks[j];
    return r;
}

RootSystem dualize(const RootSystem& sys) {
    int l = 1;
    for (int v : sys.norm) l = std::lcm(l, v);
    auto co = [&](const RootVec& x) {
        int n = int(dot(x, x));
        RootVec y(x.size());
        for (size_t k = 0; k < x.size(); ++k) y[k] = x[k] * (l / n);
        return y;
    };
    std::vector<RootVec> roots, simple;
    for (auto& r : sys.roots) roots.push_back(co(r));
    for (int j : sys.simple) simple.push_back(co(sys.roots[j]));
    int g = 0;
    for (auto& r : roots)
        for (int x : r) g = std::gcd(g, std::abs(x));
    // drop common factors but keep coordinates even where they were
    int target = g / std::gcd(g, 2);
    for (auto* set : {&roots, &simple})
        for (auto& r : *set)
            for (auto& x : r) x /= target;
    Label lab = sys.label;
    if (lab.series == 'B')
        lab.series = 'C';
    else if (lab.series == 'C')
        lab.series = 'B';
    if (lab.series == 'F' || lab.series == 'G') std::reverse(simple.begin(), simple.end());
    return build_from(lab, sys.dim, roots, simple);
}

RootVec Isometry::apply(const RootVec& x) const {
    if (int(x.size()) != dim()) throw Error("dimension mismatch");
    RootVec r(x.size());
    for (int i = 0; i < dim(); ++i) {
        int64_t s = 0;
        for (int j = 0; j < dim(); ++j) s += m[i][j] * x[j];
        if (s % den != 0) throw Error("isometry leaves the scaled lattice");
        r[i] = int(s / den);
    }
    return r;
}

Isometry Isometry::compose(const Isometry& g) const {
    Isometry r;
    int n = dim();
    r.m.assign(n, std::vector<int64_t>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) r.m[i][j] += m[i][k] * g.m[k][j];
    r.den = den * g.den;
    int64_t gg = r.den;
    for (auto& row : r.m)
        for (auto x : row) gg = std::gcd(gg, std::abs(x));
    if (gg > 1) {
        for (auto& row : r.m)
            for (auto& x : row) x /= gg;
        r.den /= gg;
    }
    return r;
}

Isometry Isometry::identity(int n) {
    Isometry r;
    r.m.assign(n, std::vector<int64_t>(n, 0));
    for (int i = 0; i < n; ++i) r.m[i][i] = 1;
    return r;
}

Isometry Isometry::minus_identity(int n) {
    Isometry r = identity(n);
    for (int i = 0; i < n; ++i) r.m[i][i] = -1;
    return r;
}

Isometry Isometry::reflection(const RootVec& a) {
    int n = int(a.size());
    int64_t aa = dot(a, a);
    Isometry r;
    r.den = aa;
    r.m.assign(n, std::vector<int64_t>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.m[i][j] = (i == j ? aa : 0) - 2 * int64_t(a[i]) * a[j];
    return r;
}

Isometry isometry_from_simple_map(const RootSystem& sys, const std::vector<int>& img) {
    int n = sys.dim, r = sys.rank;
    QMatrix basis, target;
    for (int j = 0; j < r; ++j) {
        basis.push_back(to_q(sys.roots[sys.simple[j]]));
        target.push_back(to_q(sys.roots[sys.simple[img[j]]]));
    }
    QMatrix rows;
    for (int j = 0; j < r; ++j) rows.push_back(basis[j]);
    for (auto& v : nullspace(rows)) {
        basis.push_back(v);
        target.push_back(v);
    }
    if (int(basis.size()) != n) throw Error("simple roots do not span a complementable subspace");
    // M * B^T = T^T  ->  M = T^T (B^T)^{-1}
    QMatrix bt = transpose(basis), tt = transpose(target);
    QMatrix mq = multiply(tt, inverse(bt));
    return to_isometry(mq);
}

std::vector<int> root_permutation(const RootSystem& sys, const Isometry& g) {
    std::vector<int> p(sys.size());
    for (int i = 0; i < sys.size(); ++i) {
        int j = sys.index_of(g.apply(sys.roots[i]));
        if (j < 0) throw Error("isometry does not preserve the root system");
        p[i] = j;
    }
    return p;
}

bool is_in_weyl_group(const RootSystem& sys, const std::vector<int>& perm) {
    // v = g(2 rho); move it to the dominant chamber, carrying g(Psi) along.
    RootVec v(sys.dim, 0);
    for (int i = 0; i < sys.npos; ++i)
        for (int k = 0; k < sys.dim; ++k) v[k] += sys.roots[perm[i]][k];
    std::vector<int> t;
    for (int j : sys.simple) t.push_back(perm[j]);
    for (bool moved = true; moved;) {
        moved = false;
        for (int j : sys.simple) {
            int64_t a = dot(sys.roots[j], v);
            if (a < 0) {
                v = reflect(sys.roots[j], v);
                for (auto& x : t) x = sys.refl(j, x);
                moved = true;
            }
        }
    }
    for (size_t j = 0; j < t.size(); ++j)
        if (t[j] != sys.simple[j]) return false;
    return true;
}

bool is_in_weyl_group(const RootSystem& sys, const Isometry& g) {
    return is_in_weyl_group(sys, root_permutation(sys, g));
}

std::string to_json(const RootSystem& sys) {
    nlohmann::ordered_json j;
    j["label"] = sys.label.str();
    j["dimension"] = sys.dim;
    j["scale"] = 2;
    j["roots"] = sys.roots;
    j["simple"] = sys.simple;
    j["marks"] = sys.marks;
    return j.dump();
}

RootSystem from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    Label l = parse_label(j.at("label").get<std::string>());
    int dim = j.at("dimension").get<int>();
    auto roots = j.at("roots").get<std::vector<RootVec>>();
    auto idx = j.at("simple").get<std::vector<int>>();
    std::vector<RootVec> simple;
    for (int i : idx) {
        if (i < 0 || i >= int(roots.size())) throw Error("simple root index out of range");
        simple.push_back(roots[i]);
    }
    RootSystem s = build_from(l, dim, roots, simple);
    if (s.roots != roots) throw Error("root order in document is not canonical");
    if (s.marks != j.at("marks").get<std::vector<int>>()) throw Error("marks do not match the roots");
    return s;
}

}  // namespace rootsys
