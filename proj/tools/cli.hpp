#pragma once

// Subcommand front end. `run` takes the arguments after the program name and
// returns the process exit status: 0 success, 1 verification failure, 2 usage error.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nilq/bgraph.hpp"
#include "nilq/centralizer.hpp"
#include "nilq/oblak.hpp"
#include "nilq/oracle.hpp"
#include "nilq/partition.hpp"

namespace nilq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

struct Config {
    std::string format = "text";
    bool runs = false;
    std::int64_t prime = kDefaultPrime;
    int samples = 100;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    int sample_upto = 0;
    std::vector<std::string> partitions;
    int n_max = 0;
};

namespace detail {

using nlohmann::json;

class Printer {
public:
    Printer(const Config& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

    bool json_mode() const { return cfg_.format == "json"; }
    std::string text(const Partition& b) const { return cfg_.runs ? to_exponent_string(b) : to_string(b); }
    void emit(const json& j) const { out_ << j.dump(2) << '\n'; }
    std::ostream& line() const { return out_; }

private:
    const Config& cfg_;
    std::ostream& out_;
};

inline json selection_json(const HatSelection& s) {
    return {{"i_tilde", s.i_tilde}, {"s", s.s}, {"cardinality", s.cardinality}};
}

inline int cmd_q(const Partition& b, const Printer& pr) {
    const Partition q = q_partition(b);
    if (pr.json_mode())
        pr.emit({{"partition", b.vec()}, {"q", q.vec()}});
    else
        pr.line() << pr.text(q) << '\n';
    return kExitOk;
}

inline int cmd_omega(const Partition& b, const Printer& pr) {
    const int w = omega1(b);
    if (pr.json_mode())
        pr.emit({{"partition", b.vec()}, {"omega1", w}});
    else
        pr.line() << w << '\n';
    return kExitOk;
}

inline int cmd_hat(const Partition& b, const Printer& pr) {
    if (b.empty()) throw Error("hat needs a nonempty partition");
    const HatSelection sel = select_hat(b);
    const Partition h = hat_with(b, sel);
    if (pr.json_mode()) {
        json j = selection_json(sel);
        j["partition"] = b.vec();
        j["hat"] = h.vec();
        pr.emit(j);
    } else {
        pr.line() << pr.text(h) << '\n'
                  << "i_tilde " << sel.i_tilde << '\n'
                  << "s " << sel.s << '\n'
                  << "cardinality " << sel.cardinality << '\n';
    }
    return kExitOk;
}

inline int cmd_chain(const Partition& b, const Printer& pr) {
    const QChain chain = q_of(b);
    if (pr.json_mode()) {
        json steps = json::array();
        for (const auto& st : chain.steps)
            steps.push_back({{"partition", st.partition.vec()}, {"omega1", st.omega1}, {"i_tilde", st.selection.i_tilde}, {"s", st.selection.s}});
        pr.emit({{"input", chain.input.vec()}, {"steps", steps}, {"result", chain.result.vec()}});
    } else {
        for (const auto& st : chain.steps)
            pr.line() << pr.text(st.partition) << "  omega1=" << st.omega1 << " i_tilde=" << st.selection.i_tilde
                      << " s=" << st.selection.s << '\n';
        pr.line() << "Q " << pr.text(chain.result) << '\n';
    }
    return kExitOk;
}

inline int cmd_graph(const Partition& b, const Config& cfg, std::ostream& out) {
    out << render_graph(build_graph(b), cfg.format);
    if (cfg.format == "json") out << '\n';
    return kExitOk;
}

inline int cmd_dims(const Partition& b, const Printer& pr) {
    json j = json::object();
    for (Variant v : kAllVariants) j[to_string(v)] = subalgebra_spec(b, v).free_count();
    if (pr.json_mode()) {
        pr.emit({{"partition", b.vec()}, {"dims", j}});
    } else {
        for (Variant v : kAllVariants) pr.line() << to_string(v) << ' ' << j[to_string(v)].get<int>() << '\n';
    }
    return kExitOk;
}

inline int cmd_verify(const Partition& b, const Config& cfg, const Printer& pr) {
    const VerifyReport rep = verify(b, static_cast<Residue>(cfg.prime), cfg.samples, cfg.seed, cfg.threads);
    if (pr.json_mode()) {
        pr.emit(to_json(rep));
    } else {
        pr.line() << "# seed " << rep.seed << " prime " << rep.prime << " samples " << rep.samples << '\n'
                  << "partition " << pr.text(rep.partition) << '\n'
                  << "predicted " << pr.text(rep.predicted) << '\n';
        for (const auto& [type, count] : rep.observed) pr.line() << "observed " << pr.text(type) << ' ' << count << '\n';
        for (const auto& m : rep.maximal) pr.line() << "maximal " << pr.text(m) << '\n';
        pr.line() << "modal_corank " << rep.modal_corank << '\n'
                  << "segment_count " << rep.segment_count << '\n';
        for (const auto& v : rep.violations) pr.line() << "violation " << v.check << " sample " << v.sample_index << '\n';
        pr.line() << "verdict " << to_string(rep.verdict) << '\n';
    }
    return rep.verdict == Verdict::Confirmed ? kExitOk : kExitFailed;
}

inline int cmd_audit(const Config& cfg, const Printer& pr) {
    AuditOptions opt;
    opt.sample_upto = cfg.sample_upto;
    opt.prime = static_cast<Residue>(cfg.prime);
    opt.samples = cfg.samples;
    opt.seed = cfg.seed;
    opt.threads = cfg.threads;
    const AuditSummary sum = audit_range(cfg.n_max, opt);
    if (pr.json_mode()) {
        json checks = json::object();
        for (const auto& [name, t] : sum.checks) {
            checks[name] = {{"passed", t.passed}, {"failed", t.failed}};
            if (t.first_counterexample) checks[name]["first_counterexample"] = t.first_counterexample->vec();
        }
        json unconfirmed = json::array();
        for (const auto& r : sum.unconfirmed) unconfirmed.push_back(to_json(r));
        pr.emit({{"n_max", sum.n_max},
                 {"seed", cfg.seed},
                 {"partitions", sum.partitions},
                 {"checks", checks},
                 {"verdicts", sum.verdicts},
                 {"unconfirmed", unconfirmed},
                 {"ok", sum.ok()}});
    } else {
        pr.line() << "# seed " << cfg.seed << " prime " << cfg.prime << " samples " << cfg.samples << " sample_upto "
                  << cfg.sample_upto << '\n'
                  << "partitions " << sum.partitions << '\n';
        for (const auto& [name, t] : sum.checks) {
            pr.line() << "check " << name << " passed " << t.passed << " failed " << t.failed;
            if (t.first_counterexample) pr.line() << " first " << pr.text(*t.first_counterexample);
            pr.line() << '\n';
        }
        for (const auto& [verdict, count] : sum.verdicts) pr.line() << "verdict " << verdict << ' ' << count << '\n';
        for (const auto& r : sum.unconfirmed) pr.line() << "unconfirmed " << pr.text(r.partition) << ' ' << to_string(r.verdict) << '\n';
        pr.line() << (sum.ok() ? "ok" : "FAILED") << '\n';
    }
    return sum.ok() ? kExitOk : kExitFailed;
}

inline int cmd_dominance(const Partition& a, const Partition& b, const Printer& pr) {
    const Dominance d = dominance(a, b);
    if (pr.json_mode())
        pr.emit({{"a", a.vec()}, {"b", b.vec()}, {"dominance", to_string(d)}});
    else
        pr.line() << to_string(d) << '\n';
    return kExitOk;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Generic Jordan types of nilpotent centralizer slices", "nilq"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_flag("--runs", cfg.runs, "Print partitions in exponent form");
    };
    auto sampling = [&](CLI::App* sub) {
        sub->add_option("--prime", cfg.prime, "Field size")->check([](const std::string& s) -> std::string {
            std::int64_t p = 0;
            try {
                p = std::stoll(s);
            } catch (const std::exception&) {
                return "not an integer: " + s;
            }
            if (p < 3 || p >= (std::int64_t{1} << 31) || !is_prime(static_cast<std::uint64_t>(p)))
                return "--prime must be a prime in [3, 2^31)";
            return {};
        });
        sub->add_option("--samples", cfg.samples, "Random samples per partition")->check(CLI::PositiveNumber);
        sub->add_option("--seed", cfg.seed, "Base seed");
        sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
    };

    const std::pair<const char*, const char*> unary[] = {
        {"q", "Generic Jordan type Q(B)"},
        {"omega", "Maximal length of a simple U-chain"},
        {"hat", "Reduced partition and the selection producing it"},
        {"chain", "Every step of the recursion"},
        {"graph", "Poset levels of the basis"},
        {"dims", "Free-parameter counts per slice variant"},
        {"verify", "Sampling oracle over GF(p)"},
    };
    for (auto [name, help] : unary) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("partition", cfg.partitions, "Partition, e.g. \"5,4,3^2\"")->required()->expected(1);
        common(sub);
        if (std::string(name) == "verify") sampling(sub);
    }
    auto* audit = app.add_subcommand("audit", "Structural checks for all partitions of n <= N");
    audit->add_option("N", cfg.n_max, "Largest n")->required()->check(CLI::PositiveNumber);
    audit->add_option("--sample-upto", cfg.sample_upto, "Also run the sampling oracle for n <= M")->check(CLI::NonNegativeNumber);
    common(audit);
    sampling(audit);
    auto* dom = app.add_subcommand("dominance", "Dominance order of two partitions");
    dom->add_option("partitions", cfg.partitions, "Two partitions of the same n")->required()->expected(2);
    common(dom);

    std::vector<const char*> argv{"nilq"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    const detail::Printer pr(cfg, out);
    const std::string name = app.get_subcommands().front()->get_name();
    try {
        if (name == "audit") return detail::cmd_audit(cfg, pr);
        std::vector<Partition> parts;
        for (const auto& text : cfg.partitions) parts.push_back(parse_partition(text));
        if (name == "dominance") return detail::cmd_dominance(parts[0], parts[1], pr);
        const Partition& b = parts.front();
        if (name == "q") return detail::cmd_q(b, pr);
        if (name == "omega") return detail::cmd_omega(b, pr);
        if (name == "hat") return detail::cmd_hat(b, pr);
        if (name == "chain") return detail::cmd_chain(b, pr);
        if (name == "graph") return detail::cmd_graph(b, cfg, out);
        if (name == "dims") return detail::cmd_dims(b, pr);
        if (name == "verify") return detail::cmd_verify(b, cfg, pr);
    } catch (const Error& e) {
        err << "nilq " << name << ": " << e.what() << '\n';
        return kExitUsage;
    }
    err << "nilq: unknown subcommand " << name << '\n';
    return kExitUsage;
}

}  // namespace nilq::cli
