#pragma once

#include <functional>
#include <string>
#include <vector>

namespace springerlab {

// DOT text for the transitive reduction of a partial order. Nodes keep the
// given order, labels are emitted verbatim; at most 500 nodes.
std::string render_hasse(const std::vector<std::string>& labels,
                         const std::function<bool(size_t, size_t)>& leq,
                         const std::string& graph_name = "hasse");

} // namespace springerlab
