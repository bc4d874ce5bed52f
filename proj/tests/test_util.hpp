#pragma once

#include "axg/graph.hpp"
#include "axg/io.hpp"

#include <sstream>
#include <string>

namespace axg_test {

inline axg::Graph from_text(const std::string& text) {
    std::istringstream in(text);
    return axg::read_edge_list(in);
}

inline axg::Graph make(int n, const axg::EdgeList& edges) { return axg::Graph::build(n, edges); }

// Triangle 0-1-2 and triangle 3-4-5 joined by the bridge 2-3.
inline axg::Graph two_triangle_bridge() {
    return make(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
}

// Two triangles sharing vertex 0.
inline axg::Graph bowtie() { return make(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

} // namespace axg_test
