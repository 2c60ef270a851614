#ifndef KNOTDELTA_FAMILY_HPP
#define KNOTDELTA_FAMILY_HPP

#include <vector>

#include "knotdelta/diagram.hpp"
#include "knotdelta/group_element.hpp"
#include "knotdelta/moves.hpp"

namespace knotdelta {

/// Unknot diagram with 2n+1 crossings built from the one-negative-kink
/// diagram by n matched RII insertions pushing the arc across the kink
/// strand; I_lk(D_n) = (n+1)Y_0 + nX_{-1}.
Diagram build_dn(int n);

/// Mirror image of D_n; I_lk(E_n) = (n+1)X_0 + nY_1.
Diagram build_en(int n);

/// v_n = I_lk(E_n) - I_lk(D_n) = (n+1)X_0 + nY_1 - (n+1)Y_0 - nX_{-1}.
GroupElement family_difference(int n);

/// The 2n+2-move sequence D_n -> E_n: n RII removals and one RI removal
/// down to the trivial diagram, then one RI insertion and n RII insertions.
/// Sites are anchored in the evolving diagram; replaying from build_dn(n)
/// ends at a diagram isomorphic to build_en(n).
std::vector<MoveSite> dn_to_en_sequence(int n);

}  // namespace knotdelta

#endif
