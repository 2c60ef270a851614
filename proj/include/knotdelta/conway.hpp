#ifndef KNOTDELTA_CONWAY_HPP
#define KNOTDELTA_CONWAY_HPP

#include "knotdelta/diagram.hpp"

namespace knotdelta {

/// Diagram with a marked basepoint: the knot walk starts at the head of the
/// given edge.
struct BasedDiagram {
    Diagram diagram;
    EdgeLabel basepoint_edge;
};

Diagram crossing_switch(const Diagram& d, CrossingId a);

/// True iff, walking from the basepoint, every crossing is first met on its
/// over-strand.
bool is_descending(const BasedDiagram& bd);
bool is_descending_from(const Diagram& d, int start_pos);

/// Coefficient of x^2 in the Conway polynomial, by skein recursion to
/// descending diagrams: at the first crossing met on its under-strand,
/// c2(D_{a+}) = c2(D_{a-}) + lk(D^a).  Descending diagrams give 0.
int c2(const Diagram& d);
int c2_from(const Diagram& d, int start_pos);

/// Arnold's spherical-curve invariant St + J+/2, normalized to vanish on
/// the circle and the figure-eight curve, via A = H + 4*c2.  Depends only
/// on the underlying curve.
int arnold_a(const Diagram& d);

}  // namespace knotdelta

#endif
