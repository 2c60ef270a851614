#ifndef KNOTDELTA_DIAGRAM_HPP
#define KNOTDELTA_DIAGRAM_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

namespace knotdelta {

using CrossingId = int;
using EdgeLabel = int;

/// One pass of the knot through a crossing.
struct Visit {
    CrossingId crossing;
    bool over;
    bool operator==(const Visit&) const = default;
};

/// A slot position at a crossing; slots are numbered 0..3 in the cyclic
/// order of the PD tuple.  Slot 0 holds the incoming under-edge, slot 2 the
/// outgoing under-edge; the over-strand enters at slot 1 on a positive
/// crossing and at slot 3 on a negative one.
struct Dart {
    CrossingId crossing;
    int slot;
    auto operator<=>(const Dart&) const = default;
};

/// Boundary walk of one complement region, as the cyclic dart sequence of
/// the face-traversal orbit.
struct Face {
    std::vector<Dart> darts;
};

struct GaussEntry {
    int crossing;  // 1-based, numbered by first appearance
    bool over;
    int sign;
    bool operator==(const GaussEntry&) const = default;
};

/// Oriented knot diagram on the sphere.  The authoritative data is the knot
/// walk (cyclic visit sequence), the crossing signs, and the edge labels of
/// the gaps between consecutive visits; the PD tuples and face structure are
/// derived.  Construction validates the full set of diagram invariants,
/// including V - E + F = 2, so every live Diagram is a genuine spherical
/// knot diagram.  Immutable after construction.
class Diagram {
  public:
    Diagram() = default;  // zero-crossing unknot

    static Diagram unknot() { return Diagram{}; }

    /// Parses the PD text grammar: PD[X(e1,e2,e3,e4),...] or PD[].
    /// Throws parse_error on malformed syntax, labels not used exactly
    /// twice, disconnected or multi-component input, orientation
    /// inconsistency, or a nonspherical (nonzero genus) code.
    static Diagram parse_pd(const std::string& text);

    /// Builds a diagram from walk data.  walk[i] -> walk[i+1] is joined by
    /// the edge labeled labels[i] (labels distinct, positive).  Throws
    /// internal_inconsistency when the data is not a valid spherical code.
    static Diagram from_walk(std::vector<Visit> walk, std::map<CrossingId, int> signs,
                             std::vector<EdgeLabel> labels);

    int crossing_count() const { return static_cast<int>(signs_.size()); }
    bool is_unknot() const { return walk_.empty(); }
    int walk_length() const { return static_cast<int>(walk_.size()); }

    const std::vector<Visit>& walk() const { return walk_; }
    const std::vector<EdgeLabel>& labels() const { return labels_; }
    const std::map<CrossingId, int>& signs() const { return signs_; }

    bool has_crossing(CrossingId c) const { return signs_.count(c) != 0; }
    int sign(CrossingId c) const;
    std::vector<CrossingId> crossing_ids() const;  // ascending

    /// Walk positions (under_pos, over_pos) of a crossing's two visits.
    std::pair<int, int> visit_positions(CrossingId c) const;
    /// Walk gap index carrying the given edge label.
    int label_position(EdgeLabel e) const;
    bool has_label(EdgeLabel e) const;

    struct PdTuple {
        CrossingId id;
        std::array<EdgeLabel, 4> slot;
    };
    /// Tuples in order of first visit along the walk.
    const std::vector<PdTuple>& tuples() const { return tuples_; }
    std::array<EdgeLabel, 4> tuple(CrossingId c) const;

    /// Faces sorted by their minimal dart; for the zero-crossing unknot the
    /// two faces carry no darts and face_count() returns 2.
    const std::vector<Face>& faces() const { return faces_; }
    int face_count() const { return is_unknot() ? 2 : static_cast<int>(faces_.size()); }
    int face_of(Dart d) const;

    EdgeLabel dart_edge(Dart d) const;
    /// True when the edge departs from this occurrence (tail); false when it
    /// arrives (head).
    bool dart_is_tail(Dart d) const;
    Dart other_end(Dart d) const;

    /// Canonical PD text: edges renumbered 1..2V along the walk starting at
    /// the lowest label, crossings emitted in first-visit order.
    std::string serialize() const;

    /// Signed Gauss sequence from the canonical basepoint (head of the
    /// lowest-labeled edge); empty for the zero-crossing unknot.
    std::vector<GaussEntry> gauss_code() const;

    Diagram mirrored() const;
    Diagram reversed() const;
    /// Over/under swapped at one crossing; its sign flips, the underlying
    /// curve is unchanged.
    Diagram switched(CrossingId c) const;

    EdgeLabel max_label() const;
    CrossingId max_crossing_id() const;

  private:
    std::vector<Visit> walk_;
    std::vector<EdgeLabel> labels_;
    std::map<CrossingId, int> signs_;

    // derived
    std::vector<PdTuple> tuples_;
    std::vector<Face> faces_;
    std::map<EdgeLabel, int> label_pos_;
    std::map<CrossingId, std::pair<int, int>> positions_;
    std::map<Dart, int> face_index_;

    void build(bool from_parse);
};

bool is_isomorphic(const Diagram& a, const Diagram& b);

/// Diagrams joined along the chosen edges, respecting orientation.  Edge
/// labels and crossing ids of d2 are shifted past d1's.
Diagram connected_sum(const Diagram& d1, EdgeLabel e1, const Diagram& d2, EdgeLabel e2);

std::string gauss_to_text(const std::vector<GaussEntry>& code);
/// Equality of Gauss sequences up to cyclic rotation (with renumbering).
bool gauss_cyclically_equal(const std::vector<GaussEntry>& a, const std::vector<GaussEntry>& b);

}  // namespace knotdelta

#endif
