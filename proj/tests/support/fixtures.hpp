#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilq/partition.hpp"

#ifndef NILQ_FIXTURE_DIR
#error "NILQ_FIXTURE_DIR must point at tests/fixtures"
#endif

namespace nilq::fixtures {

inline std::string path(const std::string& name) { return std::string(NILQ_FIXTURE_DIR) + "/" + name; }

inline std::vector<std::string> read_lines(const std::string& name) {
    std::ifstream in(path(name));
    if (!in) throw std::runtime_error("missing fixture " + name);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

struct GraphCell {
    int level;
    int mu;
    int j;
    int l;
};

struct GraphTable {
    Partition partition;
    std::vector<GraphCell> cells;
};

inline std::vector<GraphTable> graph_tables() {
    std::vector<GraphTable> out;
    for (const auto& line : read_lines("graph_tables.txt")) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream is(line);
        std::string head;
        is >> head;
        if (head == "partition") {
            std::string parts;
            is >> parts;
            out.push_back({parse_partition(parts), {}});
            continue;
        }
        const int level = std::stoi(head);
        for (std::string cell; is >> cell;) {
            GraphCell c{level, 0, 0, 0};
            char comma;
            std::istringstream cs(cell);
            cs >> c.mu >> comma >> c.j >> comma >> c.l;
            out.back().cells.push_back(c);
        }
    }
    return out;
}

}  // namespace nilq::fixtures
