#include "knotdelta/family.hpp"

#include <stdexcept>

#include "knotdelta/errors.hpp"
#include "knotdelta/smoothing.hpp"

namespace knotdelta {

namespace {

// The poke site after a given crossing: over edge = the gap following its
// over visit (the arc being pushed), under edge = the gap following its
// under visit (the strand being crossed).  The two edges co-border exactly
// one face in this family.
MoveSite poke_after(const Diagram& d, CrossingId anchor) {
    auto [u, o] = d.visit_positions(anchor);
    EdgeLabel over = d.labels()[o];
    EdgeLabel under = d.labels()[u];
    int face = -1;
    for (int f = 0; f < static_cast<int>(d.faces().size()); ++f) {
        bool ho = false, hu = false;
        for (const Dart& dt : d.faces()[f].darts) {
            ho = ho || d.dart_edge(dt) == over;
            hu = hu || d.dart_edge(dt) == under;
        }
        if (ho && hu) {
            if (face != -1) throw internal_inconsistency("ambiguous poke face in family construction");
            face = f;
        }
    }
    if (face < 0) throw internal_inconsistency("no poke face in family construction");
    return {MoveKind::R2Insert, R2InsertAnchor{face, over, under, true}};
}

Diagram build_family(int n, int kink_sign, std::vector<MoveSite>* record) {
    if (n < 0) throw std::invalid_argument("family index must be nonnegative");
    MoveSite kink{MoveKind::R1Insert, R1InsertAnchor{0, KinkSide::Right, kink_sign}};
    if (record) record->push_back(kink);
    Diagram d = apply_move(Diagram::unknot(), kink);
    CrossingId anchor = d.max_crossing_id();
    for (int k = 0; k < n; ++k) {
        MoveSite poke = poke_after(d, anchor);
        if (record) record->push_back(poke);
        d = apply_move(d, poke);
        anchor = d.max_crossing_id() - 1;  // first crossing of the new pair
    }
    return d;
}

}  // namespace

Diagram build_dn(int n) { return build_family(n, -1, nullptr); }

Diagram build_en(int n) { return build_family(n, -1, nullptr).mirrored(); }

GroupElement family_difference(int n) {
    return invariant_ilk(build_en(n)) - invariant_ilk(build_dn(n));
}

std::vector<MoveSite> dn_to_en_sequence(int n) {
    if (n < 0) throw std::invalid_argument("family index must be nonnegative");
    std::vector<MoveSite> moves;
    Diagram d = build_dn(n);

    // Undo the n pokes: crossing pair (2k-1, 2k) was added by poke k.
    for (int k = n; k >= 1; --k) {
        CrossingId c1 = 2 * k - 1, c2 = 2 * k;
        MoveSite found{};
        bool have = false;
        for (const MoveSite& m : enumerate_moves(d)) {
            if (m.kind != MoveKind::R2Remove) continue;
            const auto& a = std::get<R2RemoveAnchor>(m.anchor);
            if (a.c1 == c1 && a.c2 == c2) {
                found = m;
                have = true;
                break;
            }
        }
        if (!have) throw internal_inconsistency("family sequence: poke pair is not removable");
        moves.push_back(found);
        d = apply_move(d, found);
    }

    // Remove the negative kink, reaching the trivial diagram.
    {
        MoveSite found{};
        bool have = false;
        for (const MoveSite& m : enumerate_moves(d)) {
            if (m.kind == MoveKind::R1Remove) {
                found = m;
                have = true;
                break;
            }
        }
        if (!have) throw internal_inconsistency("family sequence: kink is not removable");
        moves.push_back(found);
        d = apply_move(d, found);
    }
    if (!d.is_unknot()) throw internal_inconsistency("family sequence did not reach the trivial diagram");

    // Build the mirror side: positive kink, then n pokes.
    std::vector<MoveSite> up;
    Diagram e = build_family(n, 1, &up);
    for (const MoveSite& m : up) moves.push_back(m);

    if (!is_isomorphic(e, build_en(n)))
        throw internal_inconsistency("family sequence endpoint is not E_n");
    return moves;
}

}  // namespace knotdelta
