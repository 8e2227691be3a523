#pragma once

// Coordinates on the centralizer of a nilpotent Jordan matrix and on the
// block-structured subspaces around it, with seeded samplers over GF(p).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nilq/bgraph.hpp"
#include "nilq/error.hpp"
#include "nilq/ffla.hpp"
#include "nilq/partition.hpp"
#include "nilq/rng.hpp"

namespace nilq {

/// Block-diagonal nilpotent Jordan matrix with ones on each block's superdiagonal.
inline FieldMatrix jordan_matrix(const Partition& b, Residue p = kDefaultPrime) {
    FieldMatrix j(p, b.weight());
    int offset = 0;
    for (int mu : b.parts()) {
        for (int r = 0; r + 1 < mu; ++r) j.set(offset + r, offset + r + 1, 1);
        offset += mu;
    }
    return j;
}

/// D / D_bar / E_bar carry one coordinate per strip position; C / C_bar / N_bar
/// tie each strip diagonal to a single Toeplitz coordinate. The *_bar variants
/// force the main-diagonal sub-blocks A(i) of each run to be lower triangular;
/// E_bar and N_bar additionally make them strictly lower.
enum class Variant { D, D_bar, E_bar, C, C_bar, N_bar };

inline constexpr Variant kAllVariants[] = {Variant::D, Variant::D_bar, Variant::E_bar,
                                           Variant::C, Variant::C_bar, Variant::N_bar};

inline const char* to_string(Variant v) {
    switch (v) {
        case Variant::D: return "D";
        case Variant::D_bar: return "D_bar";
        case Variant::E_bar: return "E_bar";
        case Variant::C: return "C";
        case Variant::C_bar: return "C_bar";
        case Variant::N_bar: return "N_bar";
    }
    return "?";
}

inline Variant parse_variant(std::string_view name) {
    for (Variant v : kAllVariants)
        if (name == to_string(v)) return v;
    throw Error("unknown subalgebra variant '" + std::string(name) + "'");
}

inline bool is_toeplitz(Variant v) { return v == Variant::C || v == Variant::C_bar || v == Variant::N_bar; }

/// One free coordinate: diagonal `diag` (1 = main) of the upper triangular strip of
/// block (row_block, col_block), 1-based. The strip is aligned to the block's
/// top-right corner. `position` is 0 for a Toeplitz coordinate covering the whole
/// diagonal, otherwise the 1-based entry along that diagonal.
struct CoordDescriptor {
    int row_block = 0;
    int col_block = 0;
    int diag = 0;
    int position = 0;
    std::vector<std::pair<int, int>> placement;  // global 0-based (row, col)
};

struct SubalgebraSpec {
    Partition partition;
    Variant variant = Variant::C;
    std::vector<CoordDescriptor> coords;
    std::vector<CoordDescriptor> constrained;

    int free_count() const noexcept { return static_cast<int>(coords.size()); }
};

namespace detail {

inline std::vector<int> block_offsets(const Partition& b) {
    std::vector<int> off{0};
    for (int mu : b.parts()) off.push_back(off.back() + mu);
    return off;
}

/// Entries of diagonal `diag` (1-based) in the strip of an R x C block, block-local.
inline std::vector<std::pair<int, int>> strip_diagonal(int rows, int cols, int diag) {
    const int shift = cols > rows ? cols - rows : 0;
    const int m = std::min(rows, cols);
    std::vector<std::pair<int, int>> out;
    for (int r = 0; r + diag - 1 < m; ++r) out.emplace_back(r, r + shift + diag - 1);
    return out;
}

}  // namespace detail

inline SubalgebraSpec subalgebra_spec(const Partition& b, Variant variant) {
    SubalgebraSpec spec;
    spec.partition = b;
    spec.variant = variant;
    const auto off = detail::block_offsets(b);
    const int t = b.length();
    for (int h = 1; h <= t; ++h) {
        for (int k = 1; k <= t; ++k) {
            const int rows = b.part(h), cols = b.part(k);
            const bool same_run = rows == cols;
            for (int l = 1; l <= std::min(rows, cols); ++l) {
                auto local = detail::strip_diagonal(rows, cols, l);
                bool forced = false;
                if (same_run && l == 1 && variant != Variant::D && variant != Variant::C) {
                    const bool strict = variant == Variant::E_bar || variant == Variant::N_bar;
                    forced = strict ? h <= k : h < k;
                }
                auto& bucket = forced ? spec.constrained : spec.coords;
                auto to_global = [&](std::pair<int, int> rc) {
                    return std::pair{off[static_cast<std::size_t>(h - 1)] + rc.first, off[static_cast<std::size_t>(k - 1)] + rc.second};
                };
                if (is_toeplitz(variant)) {
                    CoordDescriptor d{h, k, l, 0, {}};
                    for (auto rc : local) d.placement.push_back(to_global(rc));
                    bucket.push_back(std::move(d));
                } else {
                    for (std::size_t pos = 0; pos < local.size(); ++pos)
                        bucket.push_back({h, k, l, static_cast<int>(pos + 1), {to_global(local[pos])}});
                }
            }
        }
    }
    return spec;
}

/// Matrix with each coordinate value written over its placement.
inline FieldMatrix realize(const SubalgebraSpec& spec, std::span<const std::int64_t> values, Residue p = kDefaultPrime) {
    if (values.size() != spec.coords.size())
        throw Error("realize: expected " + std::to_string(spec.coords.size()) + " values, got " + std::to_string(values.size()));
    FieldMatrix m(p, spec.partition.weight());
    for (std::size_t i = 0; i < values.size(); ++i)
        for (auto [r, c] : spec.coords[i].placement) m.set(r, c, values[i]);
    return m;
}

inline std::vector<std::int64_t> sample_values(const SubalgebraSpec& spec, Residue p, std::uint64_t seed, std::uint64_t index = 0) {
    SampleStream rng(seed, index);
    std::vector<std::int64_t> values(spec.coords.size());
    for (auto& v : values) v = static_cast<std::int64_t>(rng.uniform(p));
    return values;
}

/// Independent uniform coordinates drawn from the stream (seed, index).
inline FieldMatrix sample(const SubalgebraSpec& spec, Residue p, std::uint64_t seed, std::uint64_t index = 0) {
    return realize(spec, sample_values(spec, p, seed, index), p);
}

/// '*' where some coordinate writes, '.' elsewhere; one string per row.
inline std::vector<std::string> mask(const SubalgebraSpec& spec) {
    const auto n = static_cast<std::size_t>(spec.partition.weight());
    std::vector<std::string> rows(n, std::string(n, '.'));
    for (const auto& d : spec.coords)
        for (auto [r, c] : d.placement) rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = '*';
    return rows;
}

inline std::string mask_dump(const SubalgebraSpec& spec) {
    std::string out;
    for (const auto& row : mask(spec)) out += row + '\n';
    return out;
}

/// True when x vanishes outside the coordinate placements of spec.
inline bool fits_mask(const SubalgebraSpec& spec, const FieldMatrix& x) {
    const auto m = mask(spec);
    if (x.dim() != spec.partition.weight()) return false;
    for (int r = 0; r < x.dim(); ++r)
        for (int c = 0; c < x.dim(); ++c)
            if (x(r, c) != 0 && m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] == '.') return false;
    return true;
}

/// Main-diagonal entries at `position` (1-based) of the blocks of run `run`.
inline FieldMatrix run_diagonal_block(const Partition& b, const FieldMatrix& x, int run, int position) {
    const RunEncoding enc = run_encoding(b);
    const auto off = detail::block_offsets(b);
    const int first = enc.q(run - 1);  // 0-based index of the run's first block
    const int m = enc.run(run).count;
    FieldMatrix a(x.prime(), m);
    for (int h = 0; h < m; ++h)
        for (int k = 0; k < m; ++k)
            a.set(h, k, x(off[static_cast<std::size_t>(first + h)] + position - 1, off[static_cast<std::size_t>(first + k)] + position - 1));
    return a;
}

/// Nilpotency decided on the small same-run diagonal sub-blocks only.
inline bool structured_nilpotency(const Partition& b, const FieldMatrix& x) {
    if (!fits_mask(subalgebra_spec(b, Variant::D), x)) throw Error("structured_nilpotency: matrix is outside D_B");
    const RunEncoding enc = run_encoding(b);
    for (int i = 1; i <= enc.size(); ++i)
        for (int l = 1; l <= enc.run(i).value; ++l)
            if (!is_nilpotent(run_diagonal_block(b, x, i, l))) return false;
    return true;
}

/// perm[a] is the canonical basis index of the a-th vector in the triangularizing order.
inline std::vector<int> prec_permutation(const Partition& b) {
    const RunEncoding enc = run_encoding(b);
    std::vector<int> perm;
    for (const auto& v : prec_ordered_labels(enc)) perm.push_back(basis_index(enc, v));
    return perm;
}

/// Matrix of x in the reordered basis: out(a, c) = x(perm[a], perm[c]).
inline FieldMatrix permute(const FieldMatrix& x, std::span<const int> perm) {
    if (static_cast<int>(perm.size()) != x.dim()) throw Error("permutation size mismatch");
    FieldMatrix out(x.prime(), x.dim());
    for (int a = 0; a < x.dim(); ++a)
        for (int c = 0; c < x.dim(); ++c) out.set(a, c, x(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(c)]));
    return out;
}

}  // namespace nilq
