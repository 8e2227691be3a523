#pragma once

// The relation on the canonical Jordan basis that governs the generic element of
// the nilpotent centralizer slice, leveled into the "graph of B" table.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <queue>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nilq/error.hpp"
#include "nilq/oblak.hpp"
#include "nilq/partition.hpp"

namespace nilq {

/// Basis vector v_{mu,j}^l: run index (1-based), block j within the run
/// (1..multiplicity) and depth l (1..mu). Depth 1 is the cyclic generator of
/// its Jordan chain and depth mu spans the kernel.
struct BasisLabel {
    int run = 0;
    int j = 0;
    int depth = 0;
    friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

inline bool valid_label(const RunEncoding& enc, const BasisLabel& v) {
    return v.run >= 1 && v.run <= enc.size() && v.j >= 1 && v.j <= enc.run(v.run).count && v.depth >= 1 &&
           v.depth <= enc.run(v.run).value;
}

inline std::string to_string(const RunEncoding& enc, const BasisLabel& v) {
    return "v[" + std::to_string(enc.run(v.run).value) + "," + std::to_string(v.j) + "]^" + std::to_string(v.depth);
}

/// Labels in canonical basis order: runs ascending, blocks j = m..1 within a run,
/// depths mu..1 within a block. Position k in this list is matrix index k.
inline std::vector<BasisLabel> basis_labels(const RunEncoding& enc) {
    std::vector<BasisLabel> out;
    for (int i = 1; i <= enc.size(); ++i)
        for (int j = enc.run(i).count; j >= 1; --j)
            for (int l = enc.run(i).value; l >= 1; --l) out.push_back({i, j, l});
    return out;
}

/// Index of a label in basis_labels(enc).
inline int basis_index(const RunEncoding& enc, const BasisLabel& v) {
    const int block = enc.q(v.run) - v.j;  // 0-based block index
    int offset = 0;
    for (int i = 1; i < v.run; ++i) offset += enc.run(i).count * enc.run(i).value;
    offset += (block - enc.q(v.run - 1)) * enc.run(v.run).value;
    return offset + enc.run(v.run).value - v.depth;
}

/// True when a generic slice element maps src to a vector with nonzero dst coordinate.
inline bool relates(const RunEncoding& enc, const BasisLabel& src, const BasisLabel& dst) {
    if (!valid_label(enc, src) || !valid_label(enc, dst)) throw Error("basis label out of range");
    const int i = dst.run, j = dst.j, l = dst.depth;
    const int ip = src.run, jp = src.j, lp = src.depth;
    const int mu = enc.run(i).value, mup = enc.run(ip).value;
    if (i < ip && mu - l <= mup - lp) return true;
    if (i == ip && j >= jp && l > lp) return true;
    if (i > ip && l >= lp) return true;
    if (i == ip && j < jp && l >= lp) return true;
    return false;
}

/// Order of the triangularizing basis: mu - l ascending, then run, then block.
inline std::strong_ordering prec_compare(const RunEncoding& enc, const BasisLabel& x, const BasisLabel& y) {
    const int hx = enc.run(x.run).value - x.depth;
    const int hy = enc.run(y.run).value - y.depth;
    if (auto c = hx <=> hy; c != 0) return c;
    if (auto c = x.run <=> y.run; c != 0) return c;
    return x.j <=> y.j;
}

/// Depth descending, then run descending, then block ascending.
inline std::strong_ordering ll_compare(const RunEncoding& enc, const BasisLabel& x, const BasisLabel& y) {
    (void)enc;
    if (auto c = y.depth <=> x.depth; c != 0) return c;
    if (auto c = y.run <=> x.run; c != 0) return c;
    return x.j <=> y.j;
}

inline std::vector<BasisLabel> prec_ordered_labels(const RunEncoding& enc) {
    auto labels = basis_labels(enc);
    std::sort(labels.begin(), labels.end(),
              [&](const BasisLabel& a, const BasisLabel& b) { return prec_compare(enc, a, b) < 0; });
    return labels;
}

inline std::vector<BasisLabel> ll_ordered_labels(const RunEncoding& enc) {
    auto labels = basis_labels(enc);
    std::sort(labels.begin(), labels.end(),
              [&](const BasisLabel& a, const BasisLabel& b) { return ll_compare(enc, a, b) < 0; });
    return labels;
}

struct BGraph {
    Partition partition;
    RunEncoding encoding;
    std::vector<BasisLabel> labels;            // canonical basis order
    std::vector<std::vector<int>> successors;  // by source index
    std::vector<int> level;                    // longest path ending at each label
    int omega1 = 0;
    HatSelection selection;
    std::vector<bool> delta_circ;

    int size() const noexcept { return static_cast<int>(labels.size()); }
};

/// Distinguished subset for a selection: both chain ends of every block in the runs
/// before i_tilde, and every vector of runs i_tilde..i_tilde+s.
inline bool in_delta_circ(const RunEncoding& enc, const HatSelection& sel, const BasisLabel& v) {
    if (v.run < sel.i_tilde) return v.depth == 1 || v.depth == enc.run(v.run).value;
    return v.run <= sel.i_tilde + sel.s;
}

inline BGraph build_graph(const Partition& b) {
    if (b.empty()) throw Error("build_graph of the empty partition");
    BGraph g;
    g.partition = b;
    g.encoding = run_encoding(b);
    g.labels = basis_labels(g.encoding);
    const std::size_t n = g.labels.size();
    g.successors.assign(n, {});
    std::vector<int> indegree(n, 0);
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t d = 0; d < n; ++d)
            if (relates(g.encoding, g.labels[s], g.labels[d])) {
                g.successors[s].push_back(static_cast<int>(d));
                ++indegree[d];
            }

    g.level.assign(n, 0);
    std::queue<int> ready;
    for (std::size_t v = 0; v < n; ++v)
        if (indegree[v] == 0) ready.push(static_cast<int>(v));
    std::size_t visited = 0;
    while (!ready.empty()) {
        const int v = ready.front();
        ready.pop();
        ++visited;
        for (int w : g.successors[static_cast<std::size_t>(v)]) {
            auto& lw = g.level[static_cast<std::size_t>(w)];
            lw = std::max(lw, g.level[static_cast<std::size_t>(v)] + 1);
            if (--indegree[static_cast<std::size_t>(w)] == 0) ready.push(w);
        }
    }
    if (visited != n) throw Error("basis relation has a cycle");

    g.omega1 = 1 + *std::max_element(g.level.begin(), g.level.end());
    g.selection = select_hat(b);
    g.delta_circ.resize(n);
    for (std::size_t v = 0; v < n; ++v) g.delta_circ[v] = in_delta_circ(g.encoding, g.selection, g.labels[v]);
    return g;
}

enum class GraphFormat { Text, Json };

inline GraphFormat parse_graph_format(std::string_view name) {
    if (name == "text") return GraphFormat::Text;
    if (name == "json") return GraphFormat::Json;
    throw Error("unknown graph format '" + std::string(name) + "'");
}

inline nlohmann::json graph_to_json(const BGraph& g) {
    auto out = nlohmann::json::array();
    for (int v = 0; v < g.size(); ++v) {
        const auto& lab = g.labels[static_cast<std::size_t>(v)];
        out.push_back({{"level", g.level[static_cast<std::size_t>(v)]},
                       {"run", lab.run},
                       {"j", lab.j},
                       {"l", lab.depth},
                       {"in_delta_circ", static_cast<bool>(g.delta_circ[static_cast<std::size_t>(v)])}});
    }
    return out;
}

/// Table with one row per level and one column per run, columns ordered by
/// ascending part size. Members of the distinguished subset carry a '*'.
inline std::string render_graph_text(const BGraph& g) {
    const int rows = g.omega1;
    const int cols = g.encoding.size();
    // column c shows run u - c
    std::vector<std::vector<std::string>> cell(static_cast<std::size_t>(rows),
                                               std::vector<std::string>(static_cast<std::size_t>(cols)));
    for (int v = 0; v < g.size(); ++v) {
        const auto& lab = g.labels[static_cast<std::size_t>(v)];
        auto& c = cell[static_cast<std::size_t>(g.level[static_cast<std::size_t>(v)])]
                      [static_cast<std::size_t>(cols - lab.run)];
        if (!c.empty()) c += ' ';
        c += to_string(g.encoding, lab);
        if (g.delta_circ[static_cast<std::size_t>(v)]) c += '*';
    }
    const int label_w = static_cast<int>(std::to_string(rows - 1).size());
    std::vector<std::size_t> width(static_cast<std::size_t>(cols));
    for (int c = 0; c < cols; ++c) {
        width[static_cast<std::size_t>(c)] = std::to_string(g.encoding.run(cols - c).value).size();
        for (int r = 0; r < rows; ++r)
            width[static_cast<std::size_t>(c)] =
                std::max(width[static_cast<std::size_t>(c)], cell[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].size());
    }
    auto pad = [](std::string s, std::size_t w) {
        s.resize(std::max(w, s.size()), ' ');
        return s;
    };
    std::ostringstream os;
    std::string header(static_cast<std::size_t>(label_w), ' ');
    for (int c = 0; c < cols; ++c)
        header += "  " + pad(std::to_string(g.encoding.run(cols - c).value), width[static_cast<std::size_t>(c)]);
    while (!header.empty() && header.back() == ' ') header.pop_back();
    os << header << '\n';
    for (int r = 0; r < rows; ++r) {
        std::string line = std::to_string(r);
        line = std::string(static_cast<std::size_t>(label_w) - line.size(), ' ') + line;
        for (int c = 0; c < cols; ++c)
            line += "  " + pad(cell[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], width[static_cast<std::size_t>(c)]);
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << '\n';
    }
    return os.str();
}

inline std::string render_graph(const BGraph& g, GraphFormat format) {
    if (format == GraphFormat::Json) return graph_to_json(g).dump();
    return render_graph_text(g);
}

inline std::string render_graph(const BGraph& g, std::string_view format) {
    return render_graph(g, parse_graph_format(format));
}

}  // namespace nilq
