#ifndef KNOTDELTA_MOVES_HPP
#define KNOTDELTA_MOVES_HPP

#include <array>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "knotdelta/diagram.hpp"
#include "knotdelta/group_element.hpp"

namespace knotdelta {

enum class MoveKind { R1Insert, R1Remove, R2Insert, R2Remove, R3 };

std::string move_kind_name(MoveKind k);

/// Which face of the edge receives the kink loop: Left = the face at the
/// edge's head dart, Right = the face at its tail dart.
enum class KinkSide { Left, Right };

struct R1InsertAnchor {
    EdgeLabel edge;  // 0 denotes the closed curve of the zero-crossing unknot
    KinkSide side;
    int sign;
    bool operator==(const R1InsertAnchor&) const = default;
};

struct R1RemoveAnchor {
    int face;  // monogon face
    CrossingId crossing;
    bool operator==(const R1RemoveAnchor&) const = default;
};

struct R2InsertAnchor {
    int face;
    EdgeLabel over_edge;
    EdgeLabel under_edge;
    bool matched;  // strand orientations coincide
    bool operator==(const R2InsertAnchor&) const = default;
};

struct R2RemoveAnchor {
    int face;  // bigon face
    CrossingId c1, c2;  // c1 < c2
    bool matched;
    bool operator==(const R2RemoveAnchor&) const = default;
};

struct R3Anchor {
    int face;  // trigon face with a transitive over/under tournament
    std::array<CrossingId, 3> corners;  // ascending
    int over_sign;  // sign of the crossing between top and bottom strands
    bool operator==(const R3Anchor&) const = default;
};

struct MoveSite {
    MoveKind kind;
    std::variant<R1InsertAnchor, R1RemoveAnchor, R2InsertAnchor, R2RemoveAnchor, R3Anchor> anchor;
};

/// Complete deterministic list of applicable sites: every (edge, side, sign)
/// RI insertion, every monogon RI removal, every ordered same-face edge pair
/// with over-choice for RII insertion, every coherently-oriented bigon RII
/// removal, and every transitive trigon RIII.
std::vector<MoveSite> enumerate_moves(const Diagram& d);

/// Applies a site; throws inapplicable_move when the site is stale or does
/// not fit the diagram.
Diagram apply_move(const Diagram& d, const MoveSite& m);

enum class DeltaShape { X0, Y0, XYSame, XYNext, XXDiff, YYDiff };

struct MoveDelta {
    GroupElement change;
    DeltaShape shape;
    int sign;  // +1 or -1: the generator or its negative
    int n;     // witnessing index (0 for X0/Y0)
};

std::string delta_case_label(const MoveDelta& d);

/// change = I_lk(apply(d,m)) - I_lk(d), classified against the exact shape a
/// move of this kind must produce.  A delta outside the prescribed shape
/// throws internal_inconsistency: that is a bug tripwire, not an input error.
MoveDelta classify_delta(const Diagram& d, const MoveSite& m);

struct MoveSupport {
    std::set<CrossingId> crossings;
    std::set<EdgeLabel> edges;
    std::set<int> faces;
};

MoveSupport move_support(const Diagram& d, const MoveSite& m);
bool supports_disjoint(const MoveSupport& a, const MoveSupport& b);

/// For disjointly-anchored m1, m2: applies m2, re-anchors m1 in the moved
/// diagram by its untouched labels, and reports whether m1's classified
/// change is unaffected.  Throws on overlapping supports.
bool disjoint_commute_check(const Diagram& d, const MoveSite& m1, const MoveSite& m2);

/// Re-anchors a site in a diagram obtained from d by moves not touching the
/// site's support (face ids are rebuilt from surviving darts).
MoveSite re_anchor(const Diagram& before, const MoveSite& m, const Diagram& after);

nlohmann::ordered_json move_to_json(const MoveSite& m);
nlohmann::ordered_json move_to_json(const Diagram& d, const MoveSite& m, bool with_delta);
MoveSite move_from_json(const nlohmann::json& j);

}  // namespace knotdelta

#endif
