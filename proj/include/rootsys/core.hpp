#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rootsys {

using BigInt = boost::multiprecision::cpp_int;

// Coordinates in the basis e_1..e_N, every entry doubled so that the
// half-integral E-family roots stay integral.  (x|y) = dot(x,y)/4.
using RootVec = std::vector<int>;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when an enumeration would exceed its configured state cap.
class ResourceError : public Error {
public:
    using Error::Error;
};

constexpr int kMaxRoots = 512;

struct RootSet {
    std::array<uint64_t, kMaxRoots / 64> w{};

    void set(int i) { w[i >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }
    bool empty() const {
        for (auto x : w)
            if (x) return false;
        return true;
    }
    bool subset_of(const RootSet& o) const {
        for (size_t k = 0; k < w.size(); ++k)
            if (w[k] & ~o.w[k]) return false;
        return true;
    }
    RootSet operator|(const RootSet& o) const {
        RootSet r;
        for (size_t k = 0; k < w.size(); ++k) r.w[k] = w[k] | o.w[k];
        return r;
    }
    RootSet operator&(const RootSet& o) const {
        RootSet r;
        for (size_t k = 0; k < w.size(); ++k) r.w[k] = w[k] & o.w[k];
        return r;
    }
    bool operator==(const RootSet&) const = default;
    bool operator<(const RootSet& o) const {
        for (size_t k = 0; k < w.size(); ++k)
            if (w[k] != o.w[k]) return w[k] < o.w[k];
        return false;
    }
    template <class F>
    void for_each(F&& f) const {
        for (size_t k = 0; k < w.size(); ++k) {
            uint64_t x = w[k];
            while (x) {
                int b = std::countr_zero(x);
                f(int(k * 64 + b));
                x &= x - 1;
            }
        }
    }
    std::vector<int> indices() const {
        std::vector<int> v;
        for_each([&](int i) { v.push_back(i); });
        return v;
    }
};

struct RootSetHash {
    size_t operator()(const RootSet& s) const {
        uint64_t h = 0x9e3779b97f4a7c15ull;
        for (auto x : s.w) h = (h ^ x) * 0x100000001b3ull + (h >> 29);
        return size_t(h);
    }
};

struct Label {
    char series = 'A';
    int rank = 1;
    std::string str() const { return std::string(1, series) + std::to_string(rank); }
    bool operator==(const Label&) const = default;
};

Label parse_label(const std::string& s);

struct RootSystem {
    Label label;
    int dim = 0;
    int rank = 0;
    int npos = 0;                    // roots [0,npos) positive, root npos+i = -root i
    std::vector<RootVec> roots;
    std::vector<std::vector<int>> coeff;  // coordinates in the simple roots
    std::vector<int> simple;         // indices of alpha_1..alpha_n (Bourbaki order)
    std::vector<std::vector<int>> cartan;
    int highest = -1;
    int alpha0 = -1;
    std::optional<int> alpha0_prime;
    std::vector<int> marks;          // marks[0] = 1, marks[j] = m_j(alpha_max)
    std::vector<int> norm;           // scaled squared length (4x)
    int long_norm = 0;
    int short_norm = 0;

    int size() const { return int(roots.size()); }
    int neg(int i) const { return i < npos ? i + npos : i - npos; }
    int pos(int i) const { return i < npos ? i : i - npos; }
    bool positive(int i) const { return i < npos; }
    int ip(int i, int j) const { return ip_[i * stride_ + j]; }
    int refl(int i, int j) const { return refl_[i * stride_ + j]; }
    // index of root_i + root_j, or -1
    int sum(int i, int j) const { return sum_[i * stride_ + j]; }
    // <root_i, root_j> = 2(a_i|a_j)/(a_j|a_j)
    int cartan_int(int i, int j) const { return 2 * ip(i, j) / norm[j]; }
    bool two_lengths() const { return long_norm != short_norm; }
    bool is_long(int i) const { return norm[i] == long_norm; }
    int index_of(const RootVec& v) const;  // -1 if not a root
    std::vector<int> extended() const;     // alpha_0, alpha_1, .., alpha_n
    std::optional<std::vector<int>> extended_prime() const;

    void finalize();  // fill lookup tables

private:
    int stride_ = 0;
    std::vector<int> ip_;
    std::vector<uint16_t> refl_;
    std::vector<int16_t> sum_;
    std::unordered_map<std::string, int> lookup_;
};

RootSystem build_root_system(const std::string& label);
RootSystem build_root_system(Label label);
// Generic constructor from an explicit root list and ordered simple roots.
RootSystem build_from(Label label, int dim, const std::vector<RootVec>& roots,
                      const std::vector<RootVec>& simple);

// Primitive operations on sets of root indices.
RootSet all_roots_of(const RootSystem& sys);
RootSet closure(const RootSystem& sys, const std::vector<int>& gens);  // <gens> = W_gens gens
// Simple roots of a subsystem for the positive system induced by the host.
std::vector<int> fundamental_of(const RootSystem& sys, const RootSet& sub);
std::vector<RootSet> irreducible_components(const RootSystem& sys, const RootSet& sub);

int64_t dot(const RootVec& a, const RootVec& b);
RootVec reflect(const RootVec& alpha, const RootVec& x);
int cartan_integer(const RootVec& alpha, const RootVec& beta);

BigInt weyl_order(const RootSystem& sys);            // recursion #W = #S^L * #W_{Psi cap a0^perp}
BigInt weyl_order_from_marks(const RootSystem& sys); // n! * #{j : m_j = 1} * prod m_j
// Order of the Weyl group of a subsystem given by any set of roots of sys.
BigInt weyl_order_of(const RootSystem& sys, const RootSet& sub);

RootSystem dualize(const RootSystem& sys);

// Rational matrix acting on scaled coordinates: x -> (m x) / den.
struct Isometry {
    std::vector<std::vector<int64_t>> m;
    int64_t den = 1;

    int dim() const { return int(m.size()); }
    RootVec apply(const RootVec& x) const;
    Isometry compose(const Isometry& g) const;  // this * g
    static Isometry identity(int n);
    static Isometry minus_identity(int n);
    static Isometry reflection(const RootVec& alpha);
};

// Isometry realising the permutation alpha_j -> alpha_{perm[j]} of the simple
// roots, extended by the identity on the orthogonal complement of the span.
Isometry isometry_from_simple_map(const RootSystem& sys, const std::vector<int>& image_of_simple);
// Root index permutation induced by g; throws if g does not preserve the roots.
std::vector<int> root_permutation(const RootSystem& sys, const Isometry& g);
bool is_in_weyl_group(const RootSystem& sys, const Isometry& g);
bool is_in_weyl_group(const RootSystem& sys, const std::vector<int>& root_perm);

std::string to_json(const RootSystem& sys);
RootSystem from_json(const std::string& text);

}  // namespace rootsys
