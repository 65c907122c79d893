#include "qpfd/bell.hpp"

namespace qpfd {

namespace {

void fill(int part, int remaining, std::vector<int>& current,
          std::vector<std::vector<int>>& out) {
    if (part > static_cast<int>(current.size())) {
        if (remaining == 0) out.push_back(current);
        return;
    }
    // Ascending multiplicity first keeps the whole stream in ascending
    // lexicographic order on (m_1, m_2, ...).
    for (int m = 0; m * part <= remaining; ++m) {
        current[static_cast<std::size_t>(part - 1)] = m;
        fill(part + 1, remaining - m * part, current, out);
    }
    current[static_cast<std::size_t>(part - 1)] = 0;
}

}  // namespace

std::vector<std::vector<int>> partition_multiplicities(int n) {
    std::vector<std::vector<int>> out;
    if (n < 0) return out;
    std::vector<int> current(static_cast<std::size_t>(n), 0);
    fill(1, n, current, out);
    return out;
}

}  // namespace qpfd
