#include "knotdelta/smoothing.hpp"

#include "knotdelta/errors.hpp"

namespace knotdelta {

bool interleaved(const Diagram& d, CrossingId a, CrossingId b) {
    if (a == b) throw parse_error("interleaved requires two distinct crossings");
    auto [au, ao] = d.visit_positions(a);
    auto [bu, bo] = d.visit_positions(b);
    int lo = std::min(au, ao), hi = std::max(au, ao);
    bool bu_in = bu > lo && bu < hi;
    bool bo_in = bo > lo && bo < hi;
    return bu_in != bo_in;
}

SmoothedLink smooth(const Diagram& d, CrossingId a) {
    auto [au, ao] = d.visit_positions(a);
    const int n = d.walk_length();

    SmoothedLink link;
    link.smoothed = a;
    // First component: leaves along the under-out edge (just after the under
    // visit) and returns along the over-in edge.
    for (int i = (au + 1) % n; i != ao; i = (i + 1) % n) link.first_component.push_back(d.walk()[i]);
    for (int i = (ao + 1) % n; i != au; i = (i + 1) % n) link.second_component.push_back(d.walk()[i]);

    for (CrossingId b : d.crossing_ids()) {
        if (b == a) continue;
        link.residual.push_back({b, d.sign(b), interleaved(d, a, b)});
    }
    return link;
}

int linking_number(const Diagram& d, CrossingId a) {
    int sum = 0;
    for (CrossingId b : d.crossing_ids()) {
        if (b == a) continue;
        if (interleaved(d, a, b)) sum += d.sign(b);
    }
    if (sum % 2 != 0)
        throw internal_inconsistency("signed interleaved count is odd at crossing " + std::to_string(a));
    return sum / 2;
}

GroupElement invariant_ilk(const Diagram& d) {
    GroupElement v;
    for (CrossingId a : d.crossing_ids()) {
        int lk = linking_number(d, a);
        v.add(d.sign(a) > 0 ? Letter::X : Letter::Y, lk, 1);
    }
    return v;
}

int writhe(const Diagram& d) {
    int w = 0;
    for (CrossingId a : d.crossing_ids()) w += d.sign(a);
    return w;
}

int crossing_number(const Diagram& d) { return d.crossing_count(); }

int cowrithe(const Diagram& d) {
    GroupElement v = invariant_ilk(d);
    int h = 0;
    for (const auto& [s, c] : v.terms())
        h += static_cast<int>(c) * (s.letter == Letter::X ? -s.index : s.index);
    return h;
}

int cowrithe_direct(const Diagram& d) {
    auto ids = d.crossing_ids();
    int h = 0;
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (interleaved(d, ids[i], ids[j])) h -= d.sign(ids[i]) * d.sign(ids[j]);
    return h;
}

}  // namespace knotdelta
