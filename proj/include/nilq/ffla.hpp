#pragma once

// Dense square matrices over GF(p) with just enough linear algebra to read off
// the Jordan type of a nilpotent matrix.

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "nilq/error.hpp"
#include "nilq/partition.hpp"

namespace nilq {

using Residue = std::uint32_t;

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline constexpr Residue kDefaultPrime = 10007;

/// Row-major n x n matrix with entries reduced mod an odd prime p < 2^31.
class FieldMatrix {
public:
    FieldMatrix() = default;

    FieldMatrix(Residue p, int dim) : p_(p), dim_(dim), entries_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), 0) {
        if (p < 3 || p >= (1u << 31) || !is_prime(p)) throw Error("modulus " + std::to_string(p) + " is not an odd prime below 2^31");
        if (dim < 0) throw Error("negative matrix dimension");
    }

    static FieldMatrix zero(Residue p, int dim) { return FieldMatrix(p, dim); }

    static FieldMatrix identity(Residue p, int dim) {
        FieldMatrix m(p, dim);
        for (int i = 0; i < dim; ++i) m.set(i, i, 1);
        return m;
    }

    Residue prime() const noexcept { return p_; }
    int dim() const noexcept { return dim_; }

    /// 0-based access.
    Residue operator()(int r, int c) const { return entries_[index(r, c)]; }

    void set(int r, int c, std::int64_t value) {
        std::int64_t v = value % static_cast<std::int64_t>(p_);
        if (v < 0) v += p_;
        entries_[index(r, c)] = static_cast<Residue>(v);
    }

    bool is_zero() const {
        for (Residue e : entries_)
            if (e != 0) return false;
        return true;
    }

    friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

    friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
        a.check_compatible(b);
        const int n = a.dim_;
        FieldMatrix out(a.p_, n);
        const std::uint64_t p = a.p_;
        for (int i = 0; i < n; ++i) {
            for (int k = 0; k < n; ++k) {
                const std::uint64_t aik = a(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < n; ++j) {
                    auto& e = out.entries_[out.index(i, j)];
                    e = static_cast<Residue>((e + aik * b(k, j)) % p);
                }
            }
        }
        return out;
    }

    friend FieldMatrix operator+(const FieldMatrix& a, const FieldMatrix& b) {
        a.check_compatible(b);
        FieldMatrix out = a;
        for (std::size_t i = 0; i < out.entries_.size(); ++i)
            out.entries_[i] = static_cast<Residue>((std::uint64_t{a.entries_[i]} + b.entries_[i]) % a.p_);
        return out;
    }

    FieldMatrix transposed() const {
        FieldMatrix out(p_, dim_);
        for (int r = 0; r < dim_; ++r)
            for (int c = 0; c < dim_; ++c) out.entries_[out.index(c, r)] = (*this)(r, c);
        return out;
    }

    /// Debug dump: one row per line, space-separated residues.
    std::string dump() const {
        std::ostringstream os;
        for (int r = 0; r < dim_; ++r) {
            for (int c = 0; c < dim_; ++c) os << (c ? " " : "") << (*this)(r, c);
            os << '\n';
        }
        return os.str();
    }

private:
    std::size_t index(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(c);
    }

    void check_compatible(const FieldMatrix& b) const {
        if (p_ != b.p_ || dim_ != b.dim_) throw Error("matrix size or modulus mismatch");
    }

    Residue p_ = kDefaultPrime;
    int dim_ = 0;
    std::vector<Residue> entries_;
};

inline Residue pow_mod(Residue base, std::uint64_t exp, Residue p) {
    std::uint64_t result = 1;
    std::uint64_t b = base % p;
    while (exp) {
        if (exp & 1) result = result * b % p;
        b = b * b % p;
        exp >>= 1;
    }
    return static_cast<Residue>(result);
}

inline Residue inverse_mod(Residue a, Residue p) {
    if (a % p == 0) throw Error("zero has no inverse");
    return pow_mod(a, p - 2, p);
}

/// Rank over GF(p) by Gaussian elimination.
inline int rank(const FieldMatrix& m) {
    const int n = m.dim();
    const std::uint64_t p = m.prime();
    std::vector<std::vector<Residue>> a(static_cast<std::size_t>(n), std::vector<Residue>(static_cast<std::size_t>(n)));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = m(r, c);
    int rk = 0;
    for (int col = 0; col < n && rk < n; ++col) {
        int pivot = -1;
        for (int r = rk; r < n; ++r)
            if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(rk)]);
        auto& prow = a[static_cast<std::size_t>(rk)];
        const std::uint64_t inv = inverse_mod(prow[static_cast<std::size_t>(col)], m.prime());
        for (int r = rk + 1; r < n; ++r) {
            auto& row = a[static_cast<std::size_t>(r)];
            const std::uint64_t f = row[static_cast<std::size_t>(col)] * inv % p;
            if (f == 0) continue;
            for (int c = col; c < n; ++c)
                row[static_cast<std::size_t>(c)] =
                    static_cast<Residue>((row[static_cast<std::size_t>(c)] + (p - f) * prow[static_cast<std::size_t>(c)]) % p);
        }
        ++rk;
    }
    return rk;
}

/// rank(M^0) = n, rank(M), rank(M^2), ... up to the first zero or n + 1 entries.
struct RankProfile {
    std::vector<int> ranks;
    bool reaches_zero() const { return !ranks.empty() && ranks.back() == 0; }
};

inline RankProfile rank_profile(const FieldMatrix& m) {
    RankProfile prof;
    const int n = m.dim();
    prof.ranks.push_back(n);
    FieldMatrix power = FieldMatrix::identity(m.prime(), n);
    while (prof.ranks.back() != 0 && static_cast<int>(prof.ranks.size()) < n + 1) {
        power = power * m;
        prof.ranks.push_back(rank(power));
    }
    return prof;
}

/// Jordan type from a rank profile: conjugate of the successive rank drops.
inline Partition jordan_type(const RankProfile& prof) {
    if (!prof.reaches_zero()) throw Error("not nilpotent");
    std::vector<int> drops;
    for (std::size_t k = 1; k < prof.ranks.size(); ++k) drops.push_back(prof.ranks[k - 1] - prof.ranks[k]);
    return conjugate(Partition(std::move(drops)));
}

inline Partition jordan_type(const FieldMatrix& m) { return jordan_type(rank_profile(m)); }

inline bool is_nilpotent(const FieldMatrix& m) { return rank_profile(m).reaches_zero(); }

inline bool is_strictly_upper_triangular(const FieldMatrix& m) {
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c <= r; ++c)
            if (m(r, c) != 0) return false;
    return true;
}

/// values[i-1] is the column of the first nonzero entry right of the diagonal in
/// row i (1-based), or n + 1 for a zero row.
struct PhiMap {
    std::vector<int> values;

    int dim() const noexcept { return static_cast<int>(values.size()); }
    int operator()(int i) const { return values.at(static_cast<std::size_t>(i - 1)); }
    friend bool operator==(const PhiMap&, const PhiMap&) = default;
};

inline PhiMap phi_map(const FieldMatrix& m) {
    if (!is_strictly_upper_triangular(m)) throw Error("phi_map needs a strictly upper triangular matrix");
    const int n = m.dim();
    PhiMap phi;
    phi.values.assign(static_cast<std::size_t>(n), n + 1);
    for (int r = 0; r < n; ++r)
        for (int c = r + 1; c < n; ++c)
            if (m(r, c) != 0) {
                phi.values[static_cast<std::size_t>(r)] = c + 1;
                break;
            }
    return phi;
}

inline bool is_nondecreasing(const PhiMap& phi) {
    for (std::size_t i = 1; i < phi.values.size(); ++i)
        if (phi.values[i] < phi.values[i - 1]) return false;
    return true;
}

/// Count of rows whose k-fold Phi iterate stays below n + 1. Equals rank Y^k for
/// every Y with this Phi when the values below n + 1 are pairwise distinct;
/// otherwise it only bounds rank Y^k from above.
inline int phi_rank_prediction(const PhiMap& phi, int k) {
    if (!is_nondecreasing(phi)) throw Error("phi_rank_prediction needs a nondecreasing map");
    if (k < 1) throw Error("phi_rank_prediction needs k >= 1");
    const int n = phi.dim();
    int count = 0;
    for (int i = 1; i <= n; ++i) {
        int x = i;
        for (int step = 0; step < k && x != n + 1; ++step) x = phi(x);
        if (x != n + 1) ++count;
    }
    return count;
}

}  // namespace nilq
