#pragma once

#include "bell/types.hpp"

namespace bell {

// One full correlator <prod_k O_k> with O_k in {A_k, B_k}; choice bit k set
// means B at site k.
struct CorrelatorTerm {
    uint32_t choice = 0;  // bit k: 1 = B_k, 0 = A_k
    int coefficient = 0;  // +1 or -1
};

// Signed correlator expansion of the functional: Re prod(A_k + i B_k) keeps
// words with an even number of B's and sign (-1)^(#B/2); the Im part keeps
// odd-#B words with sign (-1)^((#B-1)/2).  CHSH/Ardehali/Svetlichny combine
// the two parts with (s_R, s_I); Mermin is the Re part alone.
std::vector<CorrelatorTerm> expand_functional(SiteCount n, const BellFunctional& f);

}  // namespace bell
