#include "knotdelta/moves.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "knotdelta/errors.hpp"
#include "knotdelta/smoothing.hpp"

namespace knotdelta {

std::string move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::R1Insert: return "R1-insert";
        case MoveKind::R1Remove: return "R1-remove";
        case MoveKind::R2Insert: return "R2-insert";
        case MoveKind::R2Remove: return "R2-remove";
        case MoveKind::R3: return "R3";
    }
    return "?";
}

namespace {

// Kink insertion patterns: whether the walk passes under itself first.
// Calibrated so the loop is carved from the face on the requested side.
bool kink_first_under(KinkSide side, int sign) {
    return (side == KinkSide::Right) == (sign > 0);
}

Dart dart_of_edge_in_face(const Diagram& d, int face, EdgeLabel e) {
    for (const Dart& dt : d.faces()[face].darts)
        if (d.dart_edge(dt) == e) return dt;
    throw inapplicable_move("edge " + std::to_string(e) + " does not border face " +
                            std::to_string(face));
}

struct BigonInfo {
    EdgeLabel e1, e2;   // bigon edges (darts of the face, in orbit order)
    bool removable;     // one strand over at both crossings
    bool matched;
    CrossingId ca, cb;  // corner crossings (ca = first dart's crossing)
};

BigonInfo bigon_info(const Diagram& d, const Face& f) {
    const Dart& d1 = f.darts[0];
    const Dart& d2 = f.darts[1];
    BigonInfo b{};
    b.e1 = d.dart_edge(d1);
    b.e2 = d.dart_edge(d2);
    b.ca = d1.crossing;
    b.cb = d2.crossing;
    Dart a1 = d.other_end(d1);
    b.removable = (d1.slot % 2) == (a1.slot % 2);
    b.matched = d.dart_is_tail(d1) != d.dart_is_tail(d2);
    return b;
}

struct TrigonInfo {
    std::array<EdgeLabel, 3> edges;  // in orbit order
    std::array<CrossingId, 3> corners;  // crossings of the orbit darts
    bool transitive;
    CrossingId top_bottom;  // crossing between top and bottom strands
};

TrigonInfo trigon_info(const Diagram& d, const Face& f) {
    TrigonInfo t{};
    for (int i = 0; i < 3; ++i) {
        t.edges[i] = d.dart_edge(f.darts[i]);
        t.corners[i] = f.darts[i].crossing;
    }
    // Corner at f.darts[(i+1)%3].crossing joins edges[i] (arriving) and
    // edges[(i+1)%3] (leaving); the over strand sits at the odd slot.
    std::array<int, 3> wins{};
    std::map<std::pair<int, int>, CrossingId> corner_of;
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3;
        Dart arriving = d.other_end(f.darts[i]);
        bool arriving_over = arriving.slot % 2 == 1;
        wins[arriving_over ? i : j] += 1;
        corner_of[{std::min(i, j), std::max(i, j)}] = f.darts[j].crossing;
    }
    int top = -1, bottom = -1;
    for (int i = 0; i < 3; ++i) {
        if (wins[i] == 2) top = i;
        if (wins[i] == 0) bottom = i;
    }
    t.transitive = top >= 0 && bottom >= 0;
    if (t.transitive)
        t.top_bottom = corner_of.at({std::min(top, bottom), std::max(top, bottom)});
    return t;
}

std::tuple<int, long long, long long, long long> sort_key(const MoveSite& m) {
    switch (m.kind) {
        case MoveKind::R1Insert: {
            const auto& a = std::get<R1InsertAnchor>(m.anchor);
            return {0, a.edge, a.side == KinkSide::Left ? 0 : 1, a.sign > 0 ? 0 : 1};
        }
        case MoveKind::R1Remove: {
            const auto& a = std::get<R1RemoveAnchor>(m.anchor);
            return {1, a.face, a.crossing, 0};
        }
        case MoveKind::R2Insert: {
            const auto& a = std::get<R2InsertAnchor>(m.anchor);
            return {2, a.face, a.over_edge, a.under_edge};
        }
        case MoveKind::R2Remove: {
            const auto& a = std::get<R2RemoveAnchor>(m.anchor);
            return {3, a.face, a.c1, a.c2};
        }
        case MoveKind::R3: {
            const auto& a = std::get<R3Anchor>(m.anchor);
            return {4, a.face, a.corners[0], a.corners[1]};
        }
    }
    return {9, 0, 0, 0};
}

}  // namespace

std::vector<MoveSite> enumerate_moves(const Diagram& d) {
    std::vector<MoveSite> out;

    if (d.is_unknot()) {
        for (KinkSide side : {KinkSide::Left, KinkSide::Right})
            for (int sign : {1, -1})
                out.push_back({MoveKind::R1Insert, R1InsertAnchor{0, side, sign}});
        std::sort(out.begin(), out.end(),
                  [](const MoveSite& a, const MoveSite& b) { return sort_key(a) < sort_key(b); });
        return out;
    }

    std::vector<EdgeLabel> edges = d.labels();
    std::sort(edges.begin(), edges.end());
    for (EdgeLabel e : edges)
        for (KinkSide side : {KinkSide::Left, KinkSide::Right})
            for (int sign : {1, -1})
                out.push_back({MoveKind::R1Insert, R1InsertAnchor{e, side, sign}});

    // One RI-remove site per kink crossing; the standalone kink has monogons
    // on both sides, anchored at the lower face id.
    std::map<CrossingId, int> monogon_at;
    const auto& faces = d.faces();
    for (int f = 0; f < static_cast<int>(faces.size()); ++f)
        if (faces[f].darts.size() == 1)
            monogon_at.try_emplace(faces[f].darts[0].crossing, f);
    for (const auto& [c, f] : monogon_at)
        out.push_back({MoveKind::R1Remove, R1RemoveAnchor{f, c}});

    for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
        const auto& darts = faces[f].darts;
        const int m = static_cast<int>(darts.size());

        if (m == 2) {
            BigonInfo b = bigon_info(d, faces[f]);
            if (b.ca != b.cb && b.removable)
                out.push_back({MoveKind::R2Remove,
                               R2RemoveAnchor{f, std::min(b.ca, b.cb), std::max(b.ca, b.cb),
                                              b.matched}});
        }

        if (m == 3) {
            TrigonInfo t = trigon_info(d, faces[f]);
            bool distinct = t.corners[0] != t.corners[1] && t.corners[1] != t.corners[2] &&
                            t.corners[0] != t.corners[2];
            if (distinct && t.transitive) {
                std::array<CrossingId, 3> cs = t.corners;
                std::sort(cs.begin(), cs.end());
                out.push_back({MoveKind::R3, R3Anchor{f, cs, d.sign(t.top_bottom)}});
            }
        }

        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                if (i == j) continue;
                EdgeLabel over = d.dart_edge(darts[i]);
                EdgeLabel under = d.dart_edge(darts[j]);
                if (over == under)
                    throw internal_inconsistency("edge borders the same face twice");
                bool matched = d.dart_is_tail(darts[i]) != d.dart_is_tail(darts[j]);
                out.push_back({MoveKind::R2Insert, R2InsertAnchor{f, over, under, matched}});
            }
    }

    std::sort(out.begin(), out.end(),
              [](const MoveSite& a, const MoveSite& b) { return sort_key(a) < sort_key(b); });
    return out;
}

namespace {

struct Insertion {
    std::vector<Visit> visits;
    std::vector<EdgeLabel> fresh;  // labels for the gaps after each inserted visit
};

Diagram rebuild_with_insertions(const Diagram& d, const std::map<int, Insertion>& by_gap,
                                const std::map<CrossingId, int>& new_signs) {
    const int n = d.walk_length();
    std::vector<Visit> walk;
    std::vector<EdgeLabel> labels;
    for (int i = 0; i < n; ++i) {
        walk.push_back(d.walk()[i]);
        labels.push_back(d.labels()[i]);
        auto it = by_gap.find(i);
        if (it != by_gap.end()) {
            const Insertion& ins = it->second;
            for (std::size_t k = 0; k < ins.visits.size(); ++k) {
                walk.push_back(ins.visits[k]);
                labels.push_back(ins.fresh[k]);
            }
        }
    }
    std::map<CrossingId, int> signs = d.signs();
    for (const auto& [c, s] : new_signs) signs[c] = s;
    return Diagram::from_walk(std::move(walk), std::move(signs), std::move(labels));
}

Diagram rebuild_without_visits(const Diagram& d, const std::set<int>& removed) {
    const int n = d.walk_length();
    if (static_cast<int>(removed.size()) == n) return Diagram::unknot();
    std::vector<Visit> walk;
    std::vector<EdgeLabel> labels;
    std::set<CrossingId> gone;
    for (int i : removed) gone.insert(d.walk()[i].crossing);
    for (int i = 0; i < n; ++i) {
        if (removed.count(i)) continue;
        walk.push_back(d.walk()[i]);
        labels.push_back(d.labels()[i]);  // merged edge keeps the incoming label
    }
    std::map<CrossingId, int> signs;
    for (const auto& [c, s] : d.signs())
        if (!gone.count(c)) signs[c] = s;
    return Diagram::from_walk(std::move(walk), std::move(signs), std::move(labels));
}

Diagram apply_r1_insert(const Diagram& d, const R1InsertAnchor& a) {
    if (a.sign != 1 && a.sign != -1) throw inapplicable_move("RI kink sign must be +1 or -1");
    bool first_under = kink_first_under(a.side, a.sign);
    if (d.is_unknot()) {
        if (a.edge != 0) throw inapplicable_move("the zero-crossing unknot has no labeled edge");
        std::vector<Visit> walk{{0, !first_under}, {0, first_under}};
        return Diagram::from_walk(std::move(walk), {{0, a.sign}}, {1, 2});
    }
    if (!d.has_label(a.edge)) throw inapplicable_move("stale RI-insert edge " + std::to_string(a.edge));
    int gap = d.label_position(a.edge);
    CrossingId k = d.max_crossing_id() + 1;
    EdgeLabel l = d.max_label();
    Insertion ins;
    ins.visits = {Visit{k, !first_under}, Visit{k, first_under}};
    ins.fresh = {l + 1, l + 2};
    return rebuild_with_insertions(d, {{gap, ins}}, {{k, a.sign}});
}

Diagram apply_r1_remove(const Diagram& d, const R1RemoveAnchor& a) {
    if (!d.has_crossing(a.crossing)) throw inapplicable_move("stale RI-remove crossing");
    auto [u, o] = d.visit_positions(a.crossing);
    const int n = d.walk_length();
    int first = -1;
    if ((u + 1) % n == o) first = u;
    else if ((o + 1) % n == u) first = o;
    else throw inapplicable_move("crossing " + std::to_string(a.crossing) + " is not a kink");
    bool face_ok = a.face >= 0 && a.face < static_cast<int>(d.faces().size()) &&
                   d.faces()[a.face].darts.size() == 1 &&
                   d.faces()[a.face].darts[0].crossing == a.crossing;
    if (!face_ok) throw inapplicable_move("stale RI-remove face anchor");
    return rebuild_without_visits(d, {first, (first + 1) % n});
}

Diagram apply_r2_insert(const Diagram& d, const R2InsertAnchor& a) {
    if (d.is_unknot()) throw inapplicable_move("RII insertion needs a face with two edges");
    if (a.face < 0 || a.face >= static_cast<int>(d.faces().size()))
        throw inapplicable_move("stale RII-insert face anchor");
    Dart da = dart_of_edge_in_face(d, a.face, a.over_edge);
    Dart db = dart_of_edge_in_face(d, a.face, a.under_edge);
    bool sense_a = d.dart_is_tail(da);
    bool sense_b = d.dart_is_tail(db);
    bool matched = sense_a != sense_b;
    if (matched != a.matched) throw inapplicable_move("RII-insert matched flag does not fit the face");

    int gap_a = d.label_position(a.over_edge);
    int gap_b = d.label_position(a.under_edge);
    CrossingId n1 = d.max_crossing_id() + 1;
    CrossingId n2 = n1 + 1;
    // Which of the two new crossings is positive is fixed by which side of
    // the over edge the poke leaves from (the face), read off the dart sense.
    int n1_sign = matched ? (sense_a ? -1 : 1) : (sense_a ? 1 : -1);

    EdgeLabel l = d.max_label();
    std::map<int, Insertion> ins;
    ins[gap_a] = Insertion{{Visit{n1, true}, Visit{n2, true}}, {l + 1, l + 2}};
    ins[gap_b] = matched ? Insertion{{Visit{n1, false}, Visit{n2, false}}, {l + 3, l + 4}}
                         : Insertion{{Visit{n2, false}, Visit{n1, false}}, {l + 3, l + 4}};
    Diagram out = rebuild_with_insertions(d, ins, {{n1, n1_sign}, {n2, -n1_sign}});

    // The poke must split the anchor face: the two old darts now bound
    // different faces.  Anything else means a calibration bug.
    if (out.face_of(da) == out.face_of(db))
        throw internal_inconsistency("RII insertion failed to split its anchor face");
    return out;
}

Diagram apply_r2_remove(const Diagram& d, const R2RemoveAnchor& a) {
    if (a.face < 0 || a.face >= static_cast<int>(d.faces().size()))
        throw inapplicable_move("stale RII-remove face anchor");
    const Face& f = d.faces()[a.face];
    if (f.darts.size() != 2) throw inapplicable_move("RII-remove anchor is not a bigon");
    BigonInfo b = bigon_info(d, f);
    if (std::min(b.ca, b.cb) != a.c1 || std::max(b.ca, b.cb) != a.c2)
        throw inapplicable_move("stale RII-remove crossing anchors");
    if (b.ca == b.cb || !b.removable)
        throw inapplicable_move("bigon does not admit an RII removal");
    const int n = d.walk_length();
    int g1 = d.label_position(b.e1);
    int g2 = d.label_position(b.e2);
    return rebuild_without_visits(d, {g1, (g1 + 1) % n, g2, (g2 + 1) % n});
}

Diagram apply_r3(const Diagram& d, const R3Anchor& a) {
    if (a.face < 0 || a.face >= static_cast<int>(d.faces().size()))
        throw inapplicable_move("stale R3 face anchor");
    const Face& f = d.faces()[a.face];
    if (f.darts.size() != 3) throw inapplicable_move("R3 anchor is not a trigon");
    TrigonInfo t = trigon_info(d, f);
    std::array<CrossingId, 3> cs = t.corners;
    std::sort(cs.begin(), cs.end());
    if (cs != a.corners) throw inapplicable_move("stale R3 corner anchors");
    if (!t.transitive)
        throw inapplicable_move("trigon tournament is cyclic: no top/middle/bottom ordering");
    if (d.sign(t.top_bottom) != a.over_sign) throw inapplicable_move("stale R3 sign tag");

    const int n = d.walk_length();
    std::vector<Visit> walk = d.walk();
    for (EdgeLabel e : t.edges) {
        int g = d.label_position(e);
        std::swap(walk[g], walk[(g + 1) % n]);
    }
    return Diagram::from_walk(std::move(walk), d.signs(), d.labels());
}

}  // namespace

Diagram apply_move(const Diagram& d, const MoveSite& m) {
    switch (m.kind) {
        case MoveKind::R1Insert: return apply_r1_insert(d, std::get<R1InsertAnchor>(m.anchor));
        case MoveKind::R1Remove: return apply_r1_remove(d, std::get<R1RemoveAnchor>(m.anchor));
        case MoveKind::R2Insert: return apply_r2_insert(d, std::get<R2InsertAnchor>(m.anchor));
        case MoveKind::R2Remove: return apply_r2_remove(d, std::get<R2RemoveAnchor>(m.anchor));
        case MoveKind::R3: return apply_r3(d, std::get<R3Anchor>(m.anchor));
    }
    throw inapplicable_move("unknown move kind");
}

std::string delta_case_label(const MoveDelta& d) {
    std::string core;
    switch (d.shape) {
        case DeltaShape::X0: core = "X_0"; break;
        case DeltaShape::Y0: core = "Y_0"; break;
        case DeltaShape::XYSame:
            core = "X_" + std::to_string(d.n) + "+Y_" + std::to_string(d.n);
            break;
        case DeltaShape::XYNext:
            core = "X_" + std::to_string(d.n) + "+Y_" + std::to_string(d.n + 1);
            break;
        case DeltaShape::XXDiff:
            core = "X_" + std::to_string(d.n) + "-X_" + std::to_string(d.n + 1);
            break;
        case DeltaShape::YYDiff:
            core = "Y_" + std::to_string(d.n) + "-Y_" + std::to_string(d.n + 1);
            break;
    }
    if (d.shape == DeltaShape::X0 || d.shape == DeltaShape::Y0)
        return (d.sign > 0 ? "+" : "-") + core;
    return d.sign > 0 ? "+(" + core + ")" : "-(" + core + ")";
}

MoveDelta classify_delta(const Diagram& d, const MoveSite& m) {
    GroupElement before = invariant_ilk(d);
    Diagram moved = apply_move(d, m);
    GroupElement change = invariant_ilk(moved) - before;

    auto fail = [&](const std::string& why) -> MoveDelta {
        throw internal_inconsistency("move delta " + change.to_text() + " violates the " +
                                     move_kind_name(m.kind) + " case analysis: " + why);
    };

    MoveDelta out{change, DeltaShape::X0, 0, 0};
    switch (m.kind) {
        case MoveKind::R1Insert:
        case MoveKind::R1Remove: {
            int orient = m.kind == MoveKind::R1Insert ? 1 : -1;
            if (change.support_size() != 1) return fail("RI delta must be a single basis term");
            auto [sym, coeff] = *change.terms().begin();
            if (sym.index != 0 || coeff != orient)
                return fail("RI delta must be " + std::string(orient > 0 ? "+" : "-") + "X_0 or Y_0");
            out.shape = sym.letter == Letter::X ? DeltaShape::X0 : DeltaShape::Y0;
            out.sign = orient;
            out.n = 0;
            break;
        }
        case MoveKind::R2Insert:
        case MoveKind::R2Remove: {
            int orient = m.kind == MoveKind::R2Insert ? 1 : -1;
            bool matched = m.kind == MoveKind::R2Insert
                               ? std::get<R2InsertAnchor>(m.anchor).matched
                               : std::get<R2RemoveAnchor>(m.anchor).matched;
            if (change.support_size() != 2) return fail("RII delta must have two basis terms");
            int xn = 0, yn = 0;
            bool seen_x = false, seen_y = false;
            for (const auto& [sym, coeff] : change.terms()) {
                if (coeff != orient) return fail("RII delta coefficients must match the orientation");
                if (sym.letter == Letter::X) { xn = sym.index; seen_x = true; }
                else { yn = sym.index; seen_y = true; }
            }
            if (!seen_x || !seen_y) return fail("RII delta must pair one X with one Y");
            if (matched) {
                if (yn != xn + 1) return fail("matched RII delta must be ±(X_n+Y_{n+1})");
                out.shape = DeltaShape::XYNext;
            } else {
                if (yn != xn) return fail("unmatched RII delta must be ±(X_n+Y_n)");
                out.shape = DeltaShape::XYSame;
            }
            out.sign = orient;
            out.n = xn;
            break;
        }
        case MoveKind::R3: {
            if (change.support_size() != 2) return fail("RIII delta must have two basis terms");
            auto it = change.terms().begin();
            auto [s1, c1] = *it;
            auto [s2, c2] = *std::next(it);
            if (s1.letter != s2.letter || s2.index != s1.index + 1 || c1 != -c2 ||
                (c1 != 1 && c1 != -1))
                return fail("RIII delta must be ±(X_n-X_{n+1}) or ±(Y_n-Y_{n+1})");
            out.shape = s1.letter == Letter::X ? DeltaShape::XXDiff : DeltaShape::YYDiff;
            out.sign = static_cast<int>(c1);
            out.n = s1.index;
            break;
        }
    }
    return out;
}

namespace {

void add_crossing_neighborhood(const Diagram& d, CrossingId c, MoveSupport& s) {
    s.crossings.insert(c);
    auto t = d.tuple(c);
    for (int slot = 0; slot < 4; ++slot) {
        s.edges.insert(t[slot]);
        s.faces.insert(d.face_of(Dart{c, slot}));
    }
}

}  // namespace

MoveSupport move_support(const Diagram& d, const MoveSite& m) {
    MoveSupport s;
    switch (m.kind) {
        case MoveKind::R1Insert: {
            // The insertion happens in a disc meeting only the edge interior
            // and the face on the chosen side.
            const auto& a = std::get<R1InsertAnchor>(m.anchor);
            s.edges.insert(a.edge);
            if (d.is_unknot()) {
                s.faces.insert(0);
                s.faces.insert(1);
                break;
            }
            Dart tail{-1, -1}, head{-1, -1};
            for (const auto& t : d.tuples())
                for (int slot = 0; slot < 4; ++slot)
                    if (t.slot[slot] == a.edge)
                        (d.dart_is_tail(Dart{t.id, slot}) ? tail : head) = Dart{t.id, slot};
            s.faces.insert(d.face_of(a.side == KinkSide::Right ? tail : head));
            break;
        }
        case MoveKind::R1Remove:
            add_crossing_neighborhood(d, std::get<R1RemoveAnchor>(m.anchor).crossing, s);
            break;
        case MoveKind::R2Insert: {
            // The poke lives in a disc inside the anchor face, meeting only
            // the two edge interiors.
            const auto& a = std::get<R2InsertAnchor>(m.anchor);
            s.edges.insert(a.over_edge);
            s.edges.insert(a.under_edge);
            s.faces.insert(a.face);
            break;
        }
        case MoveKind::R2Remove: {
            const auto& a = std::get<R2RemoveAnchor>(m.anchor);
            add_crossing_neighborhood(d, a.c1, s);
            add_crossing_neighborhood(d, a.c2, s);
            break;
        }
        case MoveKind::R3: {
            for (CrossingId c : std::get<R3Anchor>(m.anchor).corners)
                add_crossing_neighborhood(d, c, s);
            break;
        }
    }
    return s;
}

bool supports_disjoint(const MoveSupport& a, const MoveSupport& b) {
    auto overlap = [](const auto& x, const auto& y) {
        for (const auto& v : x)
            if (y.count(v)) return true;
        return false;
    };
    return !overlap(a.crossings, b.crossings) && !overlap(a.edges, b.edges) &&
           !overlap(a.faces, b.faces);
}

MoveSite re_anchor(const Diagram& before, const MoveSite& m, const Diagram& after) {
    switch (m.kind) {
        case MoveKind::R1Insert:
            return m;  // anchored by edge label only
        case MoveKind::R1Remove: {
            auto a = std::get<R1RemoveAnchor>(m.anchor);
            for (int f = 0; f < static_cast<int>(after.faces().size()); ++f)
                if (after.faces()[f].darts.size() == 1 &&
                    after.faces()[f].darts[0].crossing == a.crossing)
                    return {m.kind, R1RemoveAnchor{f, a.crossing}};  // lowest face id
            throw inapplicable_move("cannot re-anchor RI removal");
        }
        case MoveKind::R2Insert: {
            auto a = std::get<R2InsertAnchor>(m.anchor);
            Dart da = dart_of_edge_in_face(before, a.face, a.over_edge);
            a.face = after.face_of(da);
            return {m.kind, a};
        }
        case MoveKind::R2Remove: {
            auto a = std::get<R2RemoveAnchor>(m.anchor);
            Dart rep = before.faces()[a.face].darts[0];
            a.face = after.face_of(rep);
            return {m.kind, a};
        }
        case MoveKind::R3: {
            auto a = std::get<R3Anchor>(m.anchor);
            Dart rep = before.faces()[a.face].darts[0];
            a.face = after.face_of(rep);
            return {m.kind, a};
        }
    }
    throw inapplicable_move("unknown move kind");
}

bool disjoint_commute_check(const Diagram& d, const MoveSite& m1, const MoveSite& m2) {
    MoveSupport s1 = move_support(d, m1);
    MoveSupport s2 = move_support(d, m2);
    if (!supports_disjoint(s1, s2))
        throw inapplicable_move("disjoint_commute_check requires disjoint anchor supports");
    GroupElement delta1 = classify_delta(d, m1).change;
    Diagram moved = apply_move(d, m2);
    MoveSite m1p = re_anchor(d, m1, moved);
    GroupElement delta1p = classify_delta(moved, m1p).change;
    return delta1 == delta1p;
}

nlohmann::ordered_json move_to_json(const MoveSite& m) {
    nlohmann::ordered_json j;
    j["kind"] = move_kind_name(m.kind);
    switch (m.kind) {
        case MoveKind::R1Insert: {
            const auto& a = std::get<R1InsertAnchor>(m.anchor);
            j["edge"] = a.edge;
            j["side"] = a.side == KinkSide::Left ? "L" : "R";
            j["sign"] = a.sign;
            break;
        }
        case MoveKind::R1Remove: {
            const auto& a = std::get<R1RemoveAnchor>(m.anchor);
            j["face"] = a.face;
            j["crossing"] = a.crossing;
            break;
        }
        case MoveKind::R2Insert: {
            const auto& a = std::get<R2InsertAnchor>(m.anchor);
            j["face"] = a.face;
            j["edges"] = {a.over_edge, a.under_edge};
            j["over"] = a.over_edge;
            j["matched"] = a.matched;
            break;
        }
        case MoveKind::R2Remove: {
            const auto& a = std::get<R2RemoveAnchor>(m.anchor);
            j["face"] = a.face;
            j["crossings"] = {a.c1, a.c2};
            j["matched"] = a.matched;
            break;
        }
        case MoveKind::R3: {
            const auto& a = std::get<R3Anchor>(m.anchor);
            j["face"] = a.face;
            j["crossings"] = {a.corners[0], a.corners[1], a.corners[2]};
            j["over_sign"] = a.over_sign;
            break;
        }
    }
    return j;
}

nlohmann::ordered_json move_to_json(const Diagram& d, const MoveSite& m, bool with_delta) {
    nlohmann::ordered_json j = move_to_json(m);
    if (with_delta) {
        MoveDelta delta = classify_delta(d, m);
        j["delta"] = delta.change.to_json();
        j["delta_text"] = delta.change.to_text();
        j["case"] = delta_case_label(delta);
    }
    return j;
}

MoveSite move_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw parse_error("move JSON must be an object with a \"kind\" string");
    std::string kind = j["kind"].get<std::string>();
    auto geti = [&](const char* key) -> int {
        if (!j.contains(key) || !j[key].is_number_integer())
            throw parse_error(std::string("move JSON missing integer field \"") + key + "\"");
        return j[key].get<int>();
    };
    if (kind == "R1-insert") {
        std::string side = j.value("side", "L");
        if (side != "L" && side != "R") throw parse_error("RI side must be \"L\" or \"R\"");
        return {MoveKind::R1Insert,
                R1InsertAnchor{geti("edge"), side == "L" ? KinkSide::Left : KinkSide::Right,
                               geti("sign")}};
    }
    if (kind == "R1-remove")
        return {MoveKind::R1Remove, R1RemoveAnchor{geti("face"), geti("crossing")}};
    if (kind == "R2-insert") {
        if (!j.contains("edges") || !j["edges"].is_array() || j["edges"].size() != 2)
            throw parse_error("R2-insert needs \"edges\": [over, under]");
        EdgeLabel over = j["edges"][0].get<EdgeLabel>();
        EdgeLabel under = j["edges"][1].get<EdgeLabel>();
        if (j.contains("over") && j["over"].get<EdgeLabel>() != over)
            std::swap(over, under);
        if (!j.contains("matched") || !j["matched"].is_boolean())
            throw parse_error("R2-insert needs boolean \"matched\"");
        return {MoveKind::R2Insert,
                R2InsertAnchor{geti("face"), over, under, j["matched"].get<bool>()}};
    }
    if (kind == "R2-remove") {
        if (!j.contains("crossings") || j["crossings"].size() != 2)
            throw parse_error("R2-remove needs \"crossings\": [c1, c2]");
        CrossingId c1 = j["crossings"][0].get<CrossingId>();
        CrossingId c2 = j["crossings"][1].get<CrossingId>();
        if (!j.contains("matched") || !j["matched"].is_boolean())
            throw parse_error("R2-remove needs boolean \"matched\"");
        return {MoveKind::R2Remove,
                R2RemoveAnchor{geti("face"), std::min(c1, c2), std::max(c1, c2),
                               j["matched"].get<bool>()}};
    }
    if (kind == "R3") {
        if (!j.contains("crossings") || j["crossings"].size() != 3)
            throw parse_error("R3 needs \"crossings\": [a, b, c]");
        std::array<CrossingId, 3> cs{j["crossings"][0].get<CrossingId>(),
                                     j["crossings"][1].get<CrossingId>(),
                                     j["crossings"][2].get<CrossingId>()};
        std::sort(cs.begin(), cs.end());
        return {MoveKind::R3, R3Anchor{geti("face"), cs, geti("over_sign")}};
    }
    throw parse_error("unknown move kind: " + kind);
}

}  // namespace knotdelta
