#pragma once

// The recursion for the maximal Jordan type Q(B) in the nilpotent centralizer
// of a nilpotent matrix of type B: Q(B) = (omega_1(B), Q(hat(B))).

#include <vector>

#include "nilq/error.hpp"
#include "nilq/partition.hpp"

namespace nilq {

/// Generic nilpotency index in the nilpotent centralizer of type b.
///
/// Maximizes 2(i-1) + mu_i + ... + mu_{s_i} over the first index i of every run,
/// where s_i is the last index with mu_i - mu_{s_i} <= 1. Starting inside a run
/// never helps for parts >= 2, and for parts equal to 1 it would count the
/// skipped parts twice.
inline int omega1(const Partition& b) {
    if (b.empty()) throw Error("omega1 of the empty partition");
    const int t = b.length();
    int best = 0;
    int s = 1;
    for (int i = 1; i <= t; ++i) {
        if (i > 1 && b.part(i) == b.part(i - 1)) continue;
        s = std::max(s, i);
        while (s < t && b.part(i) - b.part(s + 1) <= 1) ++s;
        int sum = 0;
        for (int k = i; k <= s; ++k) sum += b.part(k);
        best = std::max(best, 2 * (i - 1) + sum);
    }
    return best;
}

/// A run pair (i_tilde, i_tilde + s) to delete when passing from B to hat(B).
struct HatSelection {
    int i_tilde = 0;      // 1-based run index
    int s = 0;            // 0 or 1
    int cardinality = 0;  // size of the distinguished basis subset this choice determines

    friend bool operator==(const HatSelection&, const HatSelection&) = default;
};

/// Every (i_tilde, s) whose runs differ in part size by at most 1, with its cardinality.
inline std::vector<HatSelection> admissible_selections(const Partition& b) {
    const RunEncoding enc = run_encoding(b);
    std::vector<HatSelection> out;
    for (int i = 1; i <= enc.size(); ++i) {
        for (int s = 0; s <= 1 && i + s <= enc.size(); ++s) {
            if (enc.run(i).value - enc.run(i + s).value > 1) continue;
            int card = 2 * enc.q(i - 1);
            for (int k = i; k <= i + s; ++k) card += enc.run(k).count * enc.run(k).value;
            out.push_back({i, s, card});
        }
    }
    return out;
}

/// All admissible selections of maximum cardinality, in (i_tilde, s) order.
inline std::vector<HatSelection> maximizing_selections(const Partition& b) {
    auto all = admissible_selections(b);
    int best = 0;
    for (const auto& h : all) best = std::max(best, h.cardinality);
    std::erase_if(all, [best](const HatSelection& h) { return h.cardinality != best; });
    return all;
}

/// Maximizing selection with the smallest i_tilde, then the smallest s.
inline HatSelection select_hat(const Partition& b) {
    if (b.empty()) throw Error("select_hat of the empty partition");
    return maximizing_selections(b).front();
}

/// hat(B) for an explicit selection: runs i_tilde..i_tilde+s deleted, earlier parts
/// reduced by 2 (zeros dropped), later runs kept.
inline Partition hat_with(const Partition& b, const HatSelection& sel) {
    const RunEncoding enc = run_encoding(b);
    if (sel.i_tilde < 1 || sel.s < 0 || sel.s > 1 || sel.i_tilde + sel.s > enc.size())
        throw Error("hat selection out of range");
    std::vector<int> parts;
    for (int i = 1; i <= enc.size(); ++i) {
        const Run& r = enc.run(i);
        if (i < sel.i_tilde) {
            if (r.value > 2) parts.insert(parts.end(), static_cast<std::size_t>(r.count), r.value - 2);
        } else if (i > sel.i_tilde + sel.s) {
            parts.insert(parts.end(), static_cast<std::size_t>(r.count), r.value);
        }
    }
    // Strictly decreasing run values make this ordered already; the constructor re-checks it.
    return Partition(std::move(parts));
}

inline Partition hat(const Partition& b) {
    if (b.empty()) throw Error("hat of the empty partition");
    return hat_with(b, select_hat(b));
}

struct QStep {
    Partition partition;
    int omega1 = 0;
    HatSelection selection;
};

/// Every level of the recursion, from b down to the empty partition.
struct QChain {
    Partition input;
    std::vector<QStep> steps;
    Partition result;
};

inline QChain q_of(const Partition& b) {
    QChain chain;
    chain.input = b;
    std::vector<int> result;
    Partition current = b;
    while (!current.empty()) {
        QStep step{current, omega1(current), select_hat(current)};
        result.push_back(step.omega1);
        current = hat_with(current, step.selection);
        chain.steps.push_back(std::move(step));
    }
    chain.result = Partition(std::move(result));
    return chain;
}

inline Partition q_partition(const Partition& b) { return q_of(b).result; }

}  // namespace nilq
