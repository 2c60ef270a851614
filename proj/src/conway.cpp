#include "knotdelta/conway.hpp"

#include <algorithm>
#include <set>

#include "knotdelta/errors.hpp"
#include "knotdelta/smoothing.hpp"

namespace knotdelta {

Diagram crossing_switch(const Diagram& d, CrossingId a) { return d.switched(a); }

bool is_descending_from(const Diagram& d, int start_pos) {
    const int n = d.walk_length();
    if (n == 0) return true;
    std::set<CrossingId> seen;
    for (int i = 0; i < n; ++i) {
        const Visit& v = d.walk()[(start_pos + i) % n];
        if (seen.insert(v.crossing).second && !v.over) return false;
    }
    return true;
}

bool is_descending(const BasedDiagram& bd) {
    if (bd.diagram.is_unknot()) return true;
    int start = (bd.diagram.label_position(bd.basepoint_edge) + 1) % bd.diagram.walk_length();
    return is_descending_from(bd.diagram, start);
}

int c2_from(const Diagram& d, int start_pos) {
    if (d.is_unknot()) return 0;
    const int n = d.walk_length();
    Diagram cur = d;
    int acc = 0;
    // Each switch turns the first descent violation into a first-met
    // overpass without disturbing earlier crossings, so the violation count
    // strictly drops and the loop runs at most once per crossing.
    for (int guard = 0; guard <= d.crossing_count(); ++guard) {
        std::set<CrossingId> seen;
        CrossingId violator = -1;
        for (int i = 0; i < n; ++i) {
            const Visit& v = cur.walk()[(start_pos + i) % n];
            if (seen.insert(v.crossing).second && !v.over) {
                violator = v.crossing;
                break;
            }
        }
        if (violator < 0) return acc;  // descending
        int lk = linking_number(cur, violator);
        acc += cur.sign(violator) > 0 ? lk : -lk;
        cur = cur.switched(violator);
    }
    throw internal_inconsistency("descent recursion failed to terminate");
}

int c2(const Diagram& d) {
    if (d.is_unknot()) return 0;
    EdgeLabel emin = *std::min_element(d.labels().begin(), d.labels().end());
    int start = (d.label_position(emin) + 1) % d.walk_length();
    return c2_from(d, start);
}

int arnold_a(const Diagram& d) { return cowrithe(d) + 4 * c2(d); }

}  // namespace knotdelta
