#include "bell/correlators.hpp"

#include <bit>

namespace bell {

std::vector<CorrelatorTerm> expand_functional(SiteCount n, const BellFunctional& f) {
    check_compatible(n.n, f);
    std::vector<CorrelatorTerm> terms;
    terms.reserve(1u << (n.n - 1));
    for (uint32_t word = 0; word < (1u << n.n); ++word) {
        int nb = std::popcount(word);
        int coeff = 0;
        if (nb % 2 == 0) {
            // contributes to Re with sign (-1)^(nb/2)
            int s = (nb / 2) % 2 == 0 ? 1 : -1;
            if (f.kind == FunctionalKind::Mermin)
                coeff = s;
            else
                coeff = f.s_r * s;
        } else if (f.kind != FunctionalKind::Mermin) {
            // contributes to Im with sign (-1)^((nb-1)/2)
            int s = ((nb - 1) / 2) % 2 == 0 ? 1 : -1;
            coeff = f.s_i * s;
        }
        if (coeff != 0) terms.push_back({word, coeff});
    }
    return terms;
}

}  // namespace bell
