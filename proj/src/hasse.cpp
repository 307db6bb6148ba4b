#include "springerlab/hasse.hpp"

#include "springerlab/errors.hpp"

namespace springerlab {

std::string render_hasse(const std::vector<std::string>& labels,
                         const std::function<bool(size_t, size_t)>& leq,
                         const std::string& graph_name)
{
    const size_t n = labels.size();
    if (n > 500)
        throw too_large("render_hasse: " + std::to_string(n) + " nodes exceed the limit of 500");

    std::vector<std::vector<bool>> strict(n, std::vector<bool>(n, false));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j)
                strict[i][j] = leq(j, i) && !leq(i, j); // i > j

    std::string out = "digraph " + graph_name + " {\n  rankdir=TB;\n  node [shape=box];\n";
    for (size_t i = 0; i < n; ++i)
        out += "  n" + std::to_string(i) + " [label=\"" + labels[i] + "\"];\n";
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (!strict[i][j])
                continue;
            bool covered = true;
            for (size_t k = 0; k < n && covered; ++k)
                if (strict[i][k] && strict[k][j])
                    covered = false;
            if (covered)
                out += "  n" + std::to_string(i) + " -> n" + std::to_string(j) + ";\n";
        }
    out += "}\n";
    return out;
}

} // namespace springerlab
