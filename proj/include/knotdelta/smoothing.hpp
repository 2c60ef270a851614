#ifndef KNOTDELTA_SMOOTHING_HPP
#define KNOTDELTA_SMOOTHING_HPP

#include <vector>

#include "knotdelta/diagram.hpp"
#include "knotdelta/group_element.hpp"

namespace knotdelta {

/// Ordered two-component link diagram produced by smoothing one crossing.
/// The first component is the one entering a neighborhood of the smoothed
/// crossing along the overcrossing arc and leaving along the undercrossing
/// arc.
struct SmoothedLink {
    CrossingId smoothed;
    std::vector<Visit> first_component;
    std::vector<Visit> second_component;
    struct Residual {
        CrossingId crossing;
        int sign;
        bool inter_component;
    };
    std::vector<Residual> residual;
};

/// True iff the chords of a and b cross in the Gauss chord diagram, i.e.
/// the visit order along the knot is a..b..a..b.  Symmetric.  Throws on
/// a == b or unknown ids.
bool interleaved(const Diagram& d, CrossingId a, CrossingId b);

SmoothedLink smooth(const Diagram& d, CrossingId a);

/// Linking number of the two components of the smoothing at a: half the
/// signed count of crossings interleaved with a.
int linking_number(const Diagram& d, CrossingId a);

/// Sum over positive crossings of X_{lk} plus sum over negative crossings
/// of Y_{lk}; the zero-crossing unknot maps to the zero element.
GroupElement invariant_ilk(const Diagram& d);

int writhe(const Diagram& d);
int crossing_number(const Diagram& d);
/// H = h(I_lk) with h(X_n) = -n, h(Y_n) = n; this is minus the cowrithe of
/// the usual literature convention.
int cowrithe(const Diagram& d);
/// Independent route: sum over interleaved unordered pairs of -sgn(a)sgn(b).
int cowrithe_direct(const Diagram& d);

}  // namespace knotdelta

#endif
