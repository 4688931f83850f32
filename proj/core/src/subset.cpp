#include "uff/subset.hpp"

#include <stdexcept>

namespace uff {

std::vector<int> mask_elements(SubsetMask m) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(card(m)));
    while (m != 0) {
        const int i = std::countr_zero(m);
        out.push_back(i + 1);
        m &= m - 1;
    }
    return out;
}

std::string format_subset(SubsetMask m) {
    std::string s = "{";
    bool first = true;
    for (int e : mask_elements(m)) {
        if (!first) s += ',';
        s += std::to_string(e);
        first = false;
    }
    s += '}';
    return s;
}

SubsetMask subset_from_elements(const std::vector<int>& elems, int n) {
    if (n < 1 || n > kMaxGround) throw std::invalid_argument("ground size must be in [1,64]");
    SubsetMask m = 0;
    int prev = 0;
    for (int e : elems) {
        if (e < 1) throw std::invalid_argument("element " + std::to_string(e) + " out of range");
        if (e > n)
            throw std::invalid_argument("element " + std::to_string(e) + " exceeds n=" + std::to_string(n));
        if (e <= prev) throw std::invalid_argument("elements must be strictly ascending");
        m |= SubsetMask{1} << (e - 1);
        prev = e;
    }
    return m;
}

}  // namespace uff
