#pragma once

// Independent checks of the recursion: exhaustive structural audits and a
// sampling oracle over the nilpotent centralizer slice in GF(p).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "nilq/bgraph.hpp"
#include "nilq/centralizer.hpp"
#include "nilq/ffla.hpp"
#include "nilq/oblak.hpp"
#include "nilq/partition.hpp"

namespace nilq {

/// All partitions of n in reverse lexicographic order, starting with (n).
inline std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw Error("enumerate_partitions needs n >= 0");
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> a{n};
    while (true) {
        out.emplace_back(a);
        // rightmost part > 1
        int rem = 0;
        while (!a.empty() && a.back() == 1) {
            a.pop_back();
            ++rem;
        }
        if (a.empty()) break;
        const int k = --a.back();
        ++rem;
        while (rem > k) {
            a.push_back(k);
            rem -= k;
        }
        a.push_back(rem);
    }
    return out;
}

enum class Verdict { Confirmed, MaxMismatch, DominanceViolation, Inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Confirmed: return "Confirmed";
        case Verdict::MaxMismatch: return "MaxMismatch";
        case Verdict::DominanceViolation: return "DominanceViolation";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

struct Violation {
    std::string check;
    std::uint64_t seed = 0;
    std::uint64_t sample_index = 0;
};

struct VerifyReport {
    Partition partition;
    Partition predicted;
    Residue prime = kDefaultPrime;
    std::uint64_t seed = 0;
    int samples = 0;
    std::map<Partition, int, std::greater<>> observed;  // type -> frequency
    std::vector<Partition> maximal;                     // dominance-maximal observed types
    std::map<int, int> corank_histogram;                // number of Jordan blocks -> frequency
    int modal_corank = 0;
    int segment_count = 0;  // r_B
    std::vector<Violation> violations;
    Verdict verdict = Verdict::Inconclusive;
};

struct SampleOutcome {
    Partition type;
    bool above_prediction = false;
    bool power_rank_exceeded = false;
};

/// Jordan type of one slice sample plus the two inequalities every sample must meet.
inline SampleOutcome check_sample(const Partition& b, const SubalgebraSpec& spec, const Partition& predicted, int s_b,
                                  Residue p, std::uint64_t seed, std::uint64_t index) {
    const FieldMatrix a = sample(spec, p, seed, index);
    const RankProfile prof = rank_profile(a);
    SampleOutcome out;
    out.type = jordan_type(prof);
    out.above_prediction = !dominated_by(out.type, predicted);
    // rank((A^s)^m) <= rank(J^m), with rank(J^m) = sum of max(mu - m, 0)
    auto rank_a = [&](int k) { return k < static_cast<int>(prof.ranks.size()) ? prof.ranks[static_cast<std::size_t>(k)] : 0; };
    for (int m = 1; m <= b.part(1); ++m) {
        int rank_j = 0;
        for (int mu : b.parts()) rank_j += std::max(mu - m, 0);
        if (rank_a(s_b * m) > rank_j) out.power_rank_exceeded = true;
    }
    return out;
}

/// Samples the slice, compares the observed types against Q(b). Results depend only on
/// (b, p, samples, seed); `threads` only changes the schedule.
inline VerifyReport verify(const Partition& b, Residue p = kDefaultPrime, int samples = 100, std::uint64_t seed = 0,
                           unsigned threads = 1) {
    if (samples < 1) throw Error("verify needs at least one sample");
    VerifyReport rep;
    rep.partition = b;
    rep.predicted = q_partition(b);
    rep.prime = p;
    rep.seed = seed;
    rep.samples = samples;
    if (b.empty()) {
        rep.observed[b] = samples;
        rep.maximal = {b};
        rep.verdict = Verdict::Confirmed;
        return rep;
    }
    rep.segment_count = ar_decomposition(b).r;
    const SubalgebraSpec spec = subalgebra_spec(b, Variant::N_bar);
    const int s_b = s_max(b);

    std::vector<SampleOutcome> outcomes(static_cast<std::size_t>(samples));
    auto work = [&](unsigned worker, unsigned stride) {
        for (std::size_t i = worker; i < outcomes.size(); i += stride)
            outcomes[i] = check_sample(b, spec, rep.predicted, s_b, p, seed, i);
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(samples)));
    if (threads == 1) {
        work(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w, threads);
    }

    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const auto& o = outcomes[i];
        ++rep.observed[o.type];
        ++rep.corank_histogram[o.type.length()];
        if (o.above_prediction) rep.violations.push_back({"type_dominated_by_prediction", seed, i});
        if (o.power_rank_exceeded) rep.violations.push_back({"power_rank_bounded_by_jordan", seed, i});
    }
    for (const auto& [type, count] : rep.observed) {
        bool dominated = false;
        for (const auto& [other, c2] : rep.observed)
            if (other != type && dominance(type, other) == Dominance::Less) dominated = true;
        if (!dominated) rep.maximal.push_back(type);
    }
    int best = -1;
    for (const auto& [corank, count] : rep.corank_histogram)
        if (count > best) {
            best = count;
            rep.modal_corank = corank;
        }

    const bool exact = rep.maximal.size() == 1 && rep.maximal.front() == rep.predicted;
    const bool all_below = std::all_of(rep.maximal.begin(), rep.maximal.end(), [&](const Partition& m) {
        return dominance(m, rep.predicted) == Dominance::Less;
    });
    if (!rep.violations.empty())
        rep.verdict = Verdict::DominanceViolation;
    else if (exact)
        rep.verdict = Verdict::Confirmed;
    else if (all_below)
        rep.verdict = Verdict::Inconclusive;
    else
        rep.verdict = Verdict::MaxMismatch;
    return rep;
}

inline nlohmann::json to_json(const VerifyReport& r) {
    auto types = nlohmann::json::array();
    for (const auto& [type, count] : r.observed) types.push_back({{"type", type.vec()}, {"count", count}});
    auto maximal = nlohmann::json::array();
    for (const auto& m : r.maximal) maximal.push_back(m.vec());
    auto coranks = nlohmann::json::object();
    for (const auto& [k, c] : r.corank_histogram) coranks[std::to_string(k)] = c;
    auto violations = nlohmann::json::array();
    for (const auto& v : r.violations) violations.push_back({{"check", v.check}, {"seed", v.seed}, {"sample", v.sample_index}});
    return {{"partition", r.partition.vec()},
            {"predicted", r.predicted.vec()},
            {"prime", r.prime},
            {"seed", r.seed},
            {"samples", r.samples},
            {"observed", types},
            {"maximal", maximal},
            {"corank_histogram", coranks},
            {"modal_corank", r.modal_corank},
            {"segment_count", r.segment_count},
            {"violations", violations},
            {"verdict", to_string(r.verdict)}};
}

/// Pass/fail tally of one named structural check.
struct CheckTally {
    long passed = 0;
    long failed = 0;
    std::optional<Partition> first_counterexample;
};

struct AuditOptions {
    int tie_upto = 20;     // tie-robustness of hat is checked for n <= tie_upto
    int sample_upto = 0;   // sampling oracle for n <= sample_upto (0 = off)
    Residue prime = kDefaultPrime;
    int samples = 100;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

struct AuditSummary {
    int n_max = 0;
    long partitions = 0;
    std::map<std::string, CheckTally> checks;
    std::map<std::string, int> verdicts;  // sampling oracle, by verdict name
    std::vector<VerifyReport> unconfirmed;

    long failures() const {
        long f = 0;
        for (const auto& [name, t] : checks) f += t.failed;
        return f;
    }
    bool ok() const {
        auto it = verdicts.find("Confirmed");
        const int confirmed = it == verdicts.end() ? 0 : it->second;
        int total = 0;
        for (const auto& [v, c] : verdicts) total += c;
        return failures() == 0 && confirmed == total;
    }
};

namespace detail {

inline bool gaps_at_least_two(const Partition& q) {
    for (int i = 1; i < q.length(); ++i)
        if (q.part(i) - q.part(i + 1) < 2) return false;
    return true;
}

inline bool all_gaps_exceed_one(const Partition& b) { return gaps_at_least_two(b); }

}  // namespace detail

/// Runs every structural check on a single partition, reporting into `record`.
inline void audit_partition(const Partition& b, const AuditOptions& opt,
                            const std::function<void(const std::string&, bool)>& record) {
    const QChain chain = q_of(b);
    const Partition& q = chain.result;
    const int n = b.weight();

    record("q_weight", q.weight() == n);
    record("q_gaps_at_least_two", detail::gaps_at_least_two(q));
    record("q_idempotent", q_partition(q) == q);
    record("q_fixed_iff_gapped", (q == b) == detail::all_gaps_exceed_one(b));
    record("q_single_iff_almost_rectangular", is_almost_rectangular(b) == (q == Partition{n}));
    record("b_dominated_by_q", dominated_by(b, q));
    if (b.empty()) return;

    const ArDecomposition ar = ar_decomposition(b);
    record("q_length_equals_segment_count", q.length() == ar.r);
    bool uniform = true;
    const int smax = s_max(b);
    for (std::size_t i = 0; i < ar.breakpoints.size(); ++i) {
        const int len = ar.breakpoints[i] - (i == 0 ? 0 : ar.breakpoints[i - 1]);
        if (len != smax) uniform = false;
    }
    if (uniform) record("q_equals_tilde_when_segments_uniform", q == tilde(b));

    const int w1 = omega1(b);
    const HatSelection sel = select_hat(b);
    record("selection_cardinality_matches_omega", sel.cardinality == w1);

    const BGraph g = build_graph(b);
    record("graph_omega_matches_formula", g.omega1 == w1);
    const long circ = std::count(g.delta_circ.begin(), g.delta_circ.end(), true);
    record("delta_circ_size_matches_omega", circ == w1);
    std::vector<int> hits(static_cast<std::size_t>(g.omega1), 0);
    std::vector<int> row_of(static_cast<std::size_t>(g.omega1), -1);
    for (int v = 0; v < g.size(); ++v)
        if (g.delta_circ[static_cast<std::size_t>(v)]) {
            const int lv = g.level[static_cast<std::size_t>(v)];
            ++hits[static_cast<std::size_t>(lv)];
            row_of[static_cast<std::size_t>(lv)] = v;
        }
    const bool bijective = circ == g.omega1 && std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
    record("delta_circ_levels_bijective", bijective);
    if (bijective) {
        // rows omega1 - q_{i~+s} .. omega1 - 1 are led by a chain end v^{mu}
        // that has the largest run index in its row
        bool ok = true;
        const int tail = g.encoding.q(sel.i_tilde + sel.s);
        for (int m = std::max(0, g.omega1 - tail); m < g.omega1; ++m) {
            const auto& lead = g.labels[static_cast<std::size_t>(row_of[static_cast<std::size_t>(m)])];
            if (lead.depth != g.encoding.run(lead.run).value) ok = false;
            for (int v = 0; v < g.size(); ++v)
                if (g.level[static_cast<std::size_t>(v)] == m && g.labels[static_cast<std::size_t>(v)].run > lead.run) ok = false;
        }
        record("tail_rows_led_by_chain_ends", ok);
    }

    if (n <= opt.tie_upto) {
        const auto maxima = maximizing_selections(b);
        bool agree = true;
        for (const auto& h : maxima) {
            const Partition rest = q_partition(hat_with(b, h));
            std::vector<int> variant{w1};
            variant.insert(variant.end(), rest.parts().begin(), rest.parts().end());
            if (variant != q.vec()) agree = false;
        }
        record("hat_tie_robust", agree);
    }
}

/// Structural checks over every partition of every n <= n_max, and the sampling
/// oracle for n <= sample_upto.
inline AuditSummary audit_range(int n_max, const AuditOptions& opt = {}) {
    if (n_max < 1) throw Error("audit_range needs n_max >= 1");
    AuditSummary sum;
    sum.n_max = n_max;
    for (int n = 1; n <= n_max; ++n) {
        for (const auto& b : enumerate_partitions(n)) {
            ++sum.partitions;
            auto record = [&](const std::string& name, bool pass) {
                auto& t = sum.checks[name];
                if (pass) {
                    ++t.passed;
                } else {
                    ++t.failed;
                    if (!t.first_counterexample) t.first_counterexample = b;
                }
            };
            try {
                audit_partition(b, opt, record);
            } catch (const Error&) {
                record("no_internal_error", false);
            }
            if (n <= opt.sample_upto) {
                VerifyReport rep = verify(b, opt.prime, opt.samples, opt.seed, opt.threads);
                ++sum.verdicts[to_string(rep.verdict)];
                if (rep.verdict != Verdict::Confirmed) sum.unconfirmed.push_back(std::move(rep));
            }
        }
    }
    return sum;
}

}  // namespace nilq
