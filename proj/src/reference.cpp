// Serial reference kernels: plain double loops over the member lists.

#include "tmpart/repfn.hpp"

namespace tmpart::reference {

RepProfile rep_profile(const NatSet& s, std::uint64_t n_max) {
    RepProfile p{ProfileKind::Same, n_max, std::vector<std::uint64_t>(n_max + 1, 0)};
    const auto elems = s.elements();
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j) {
            const auto n = elems[i] + elems[j];
            if (n <= n_max) ++p.counts[n];
        }
    return p;
}

RepProfile rep_cross_profile(const NatSet& c, const NatSet& d, std::uint64_t n_max) {
    RepProfile p{ProfileKind::Cross, n_max, std::vector<std::uint64_t>(n_max + 1, 0)};
    const auto ce = c.elements();
    const auto de = d.elements();
    for (auto x : ce)
        for (auto y : de)
            if (x + y <= n_max) ++p.counts[x + y];
    return p;
}

}  // namespace tmpart::reference
