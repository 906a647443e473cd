#include "rootsys/linalg.hpp"

#include <numeric>

namespace rootsys {

std::vector<Rational> to_q(const RootVec& v) { return {v.begin(), v.end()}; }

QMatrix transpose(const QMatrix& a) {
    if (a.empty()) return {};
    QMatrix t(a[0].size(), std::vector<Rational>(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
    return t;
}

QMatrix multiply(const QMatrix& a, const QMatrix& b) {
    QMatrix c(a.size(), std::vector<Rational>(b.empty() ? 0 : b[0].size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(QMatrix& m) {
    std::vector<size_t> piv;
    if (m.empty()) return piv;
    size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rational inv = 1 / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

}  // namespace

QMatrix inverse(const QMatrix& a) {
    size_t n = a.size();
    QMatrix m(n, std::vector<Rational>(2 * n));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
        m[i][n + i] = 1;
    }
    auto piv = rref(m);
    if (piv.size() < n || piv[n - 1] != n - 1) throw Error("singular matrix");
    QMatrix r(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) r[i][j] = m[i][n + j];
    return r;
}

QMatrix nullspace(const QMatrix& a) {
    if (a.empty()) return {};
    QMatrix m = a;
    auto piv = rref(m);
    size_t cols = a[0].size();
    std::vector<bool> is_piv(cols, false);
    for (auto c : piv) is_piv[c] = true;
    QMatrix out;
    for (size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<Rational> v(cols);
        v[f] = 1;
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m[i][f];
        BigInt l = 1;
        for (auto& x : v) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(x));
        for (auto& x : v) x *= l;
        out.push_back(v);
    }
    return out;
}

int rank_of(const QMatrix& a) {
    QMatrix m = a;
    return int(rref(m).size());
}

int rank_of(const std::vector<RootVec>& rows) {
    QMatrix m;
    for (auto& r : rows) m.push_back(to_q(r));
    return rank_of(m);
}

Isometry to_isometry(const QMatrix& mq) {
    BigInt l = 1;
    for (auto& row : mq)
        for (auto& x : row) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(x));
    Isometry g;
    g.den = static_cast<int64_t>(l);
    for (auto& row : mq) {
        std::vector<int64_t> r;
        for (auto& x : row) r.push_back(static_cast<int64_t>(boost::multiprecision::numerator(Rational(x * l))));
        g.m.push_back(r);
    }
    return g;
}

}  // namespace rootsys
