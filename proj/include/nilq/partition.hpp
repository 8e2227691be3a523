#pragma once

// Integer partitions as Jordan types: parsing, dominance, run-length form,
// almost-rectangular segmentation and the partitions derived from it.

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "nilq/error.hpp"

namespace nilq {

/// Weakly decreasing sequence of positive integers. The empty partition is valid.
class Partition {
public:
    Partition() = default;

    /// Throws if `parts` is not weakly decreasing or contains a part < 1.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw Error("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1]) throw Error("partition parts must be weakly decreasing");
        }
        weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts into weakly decreasing order and drops zero parts.
    static Partition normalized(std::vector<int> parts) {
        std::erase(parts, 0);
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }

    std::span<const int> parts() const noexcept { return parts_; }
    const std::vector<int>& vec() const noexcept { return parts_; }
    int weight() const noexcept { return weight_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    /// 1-based part access; returns 0 past the end, as in the usual padding convention.
    int part(int i) const noexcept {
        return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Flat comma-separated rendering, e.g. "5,4,3,3,2,1". The empty partition renders as "".
inline std::string to_string(const Partition& b) {
    std::string out;
    for (int i = 1; i <= b.length(); ++i) {
        if (i > 1) out += ',';
        out += std::to_string(b.part(i));
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Partition& b) { return os << '(' << to_string(b) << ')'; }

/// Parses "5,4,3,3,2,1", "5 4 3 3 2 1" or exponent form "5^2 4 3^4 2 1".
inline Partition parse_partition(std::string_view text) {
    std::vector<int> parts;
    auto parse_int = [](std::string_view token, std::string_view digits, const char* what) {
        int value = 0;
        const char* first = digits.data();
        const char* last = digits.data() + digits.size();
        if (digits.empty()) throw ParseError(std::string(token), std::string("missing ") + what);
        if (digits.front() == '+') ++first;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec == std::errc::result_out_of_range) throw ParseError(std::string(token), std::string(what) + " out of range");
        if (ec != std::errc() || ptr != last) throw ParseError(std::string(token), std::string(what) + " is not an integer");
        return value;
    };

    std::size_t pos = 0;
    while (pos < text.size()) {
        auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ';'; };
        while (pos < text.size() && is_sep(text[pos])) ++pos;
        std::size_t end = pos;
        while (end < text.size() && !is_sep(text[end])) ++end;
        if (end == pos) break;
        std::string_view token = text.substr(pos, end - pos);
        pos = end;

        std::string_view base = token;
        int count = 1;
        if (auto caret = token.find('^'); caret != std::string_view::npos) {
            base = token.substr(0, caret);
            count = parse_int(token, token.substr(caret + 1), "exponent");
            if (count <= 0) throw ParseError(std::string(token), "exponent must be positive");
        }
        int value = parse_int(token, base, "part");
        if (value <= 0) throw ParseError(std::string(token), "parts must be positive");
        parts.insert(parts.end(), static_cast<std::size_t>(count), value);
    }
    return Partition::normalized(std::move(parts));
}

enum class Dominance { Less, Equal, Greater, Incomparable };

inline const char* to_string(Dominance d) {
    switch (d) {
        case Dominance::Less: return "Less";
        case Dominance::Equal: return "Equal";
        case Dominance::Greater: return "Greater";
        case Dominance::Incomparable: return "Incomparable";
    }
    return "?";
}

/// Dominance order by prefix sums. Both partitions must have the same weight.
inline Dominance dominance(const Partition& a, const Partition& b) {
    if (a.weight() != b.weight())
        throw Error("dominance needs partitions of equal weight (" + std::to_string(a.weight()) + " vs " +
                    std::to_string(b.weight()) + ")");
    bool some_less = false;
    bool some_greater = false;
    int sa = 0;
    int sb = 0;
    const int len = std::max(a.length(), b.length());
    for (int l = 1; l <= len; ++l) {
        sa += a.part(l);
        sb += b.part(l);
        some_less |= sa < sb;
        some_greater |= sa > sb;
    }
    if (some_less && some_greater) return Dominance::Incomparable;
    if (some_less) return Dominance::Less;
    if (some_greater) return Dominance::Greater;
    return Dominance::Equal;
}

/// a <= b in dominance order.
inline bool dominated_by(const Partition& a, const Partition& b) {
    auto d = dominance(a, b);
    return d == Dominance::Less || d == Dominance::Equal;
}

/// Conjugate (transpose of the Young diagram).
inline Partition conjugate(const Partition& b) {
    std::vector<int> out(static_cast<std::size_t>(b.part(1)), 0);
    for (int p : b.parts())
        for (int k = 0; k < p; ++k) ++out[static_cast<std::size_t>(k)];
    return Partition(std::move(out));
}

struct Run {
    int value = 0;  // part size
    int count = 0;  // multiplicity
    friend bool operator==(const Run&, const Run&) = default;
};

/// Run-length form. `cumulative[i-1]` is q_i, the index of the last part of run i.
struct RunEncoding {
    std::vector<Run> runs;
    std::vector<int> cumulative;

    int size() const noexcept { return static_cast<int>(runs.size()); }
    /// 1-based run access.
    const Run& run(int i) const { return runs.at(static_cast<std::size_t>(i - 1)); }
    /// q_i with q_0 = 0.
    int q(int i) const { return i == 0 ? 0 : cumulative.at(static_cast<std::size_t>(i - 1)); }
};

inline RunEncoding run_encoding(const Partition& b) {
    RunEncoding enc;
    int seen = 0;
    for (int p : b.parts()) {
        ++seen;
        if (!enc.runs.empty() && enc.runs.back().value == p) {
            ++enc.runs.back().count;
            enc.cumulative.back() = seen;
        } else {
            enc.runs.push_back({p, 1});
            enc.cumulative.push_back(seen);
        }
    }
    return enc;
}

inline Partition expand(const RunEncoding& enc) {
    std::vector<int> parts;
    for (const auto& r : enc.runs) parts.insert(parts.end(), static_cast<std::size_t>(r.count), r.value);
    return Partition(std::move(parts));
}

/// Exponent rendering, e.g. "5^2 4 3^4 2 1".
inline std::string to_exponent_string(const Partition& b) {
    std::ostringstream os;
    bool first = true;
    for (const auto& r : run_encoding(b).runs) {
        if (!first) os << ' ';
        first = false;
        os << r.value;
        if (r.count > 1) os << '^' << r.count;
    }
    return os.str();
}

inline bool is_almost_rectangular(const Partition& b) {
    return b.empty() || b.part(1) - b.part(b.length()) <= 1;
}

/// Breakpoints n_1 < ... < n_r (1-based, n_r = t) of the almost-rectangular segmentation.
struct ArDecomposition {
    std::vector<int> breakpoints;
    int r = 0;
};

/// Segments are taken greedily from the right: each segment holds every remaining
/// part within 1 of its last part, so consecutive segment ends differ by more than 1.
inline ArDecomposition ar_decomposition(const Partition& b) {
    if (b.empty()) throw Error("ar_decomposition of the empty partition");
    std::vector<int> ends;
    int end = b.length();
    while (end >= 1) {
        ends.push_back(end);
        int start = end;
        while (start > 1 && b.part(start - 1) - b.part(end) <= 1) --start;
        end = start - 1;
    }
    std::reverse(ends.begin(), ends.end());
    ArDecomposition d;
    d.r = static_cast<int>(ends.size());
    d.breakpoints = std::move(ends);
    return d;
}

/// Largest length of a contiguous run of parts with spread <= 1.
inline int s_max(const Partition& b) {
    if (b.empty()) throw Error("s_max of the empty partition");
    int best = 0;
    int start = 1;
    for (int i = 1; i <= b.length(); ++i) {
        while (b.part(start) - b.part(i) > 1) ++start;
        best = std::max(best, i - start + 1);
    }
    return best;
}

/// Each almost-rectangular segment collapsed to its sum, sorted.
inline Partition tilde(const Partition& b) {
    if (b.empty()) return {};
    std::vector<int> sums;
    int prev = 0;
    for (int end : ar_decomposition(b).breakpoints) {
        int s = 0;
        for (int i = prev + 1; i <= end; ++i) s += b.part(i);
        sums.push_back(s);
        prev = end;
    }
    return Partition::normalized(std::move(sums));
}

/// Jordan type of the s-th power of the n x n full Jordan block.
inline Partition power_type(int n, int s) {
    if (n < 0 || s < 1) throw Error("power_type needs n >= 0 and s >= 1");
    const int q = n / s;
    const int r = n % s;
    std::vector<int> parts(static_cast<std::size_t>(r), q + 1);
    if (q > 0) parts.insert(parts.end(), static_cast<std::size_t>(s - r), q);
    return Partition(std::move(parts));
}

}  // namespace nilq
