#include "knotdelta/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <tuple>

#include "knotdelta/errors.hpp"

namespace knotdelta {

int Diagram::sign(CrossingId c) const {
    auto it = signs_.find(c);
    if (it == signs_.end()) throw parse_error("unknown crossing id " + std::to_string(c));
    return it->second;
}

std::vector<CrossingId> Diagram::crossing_ids() const {
    std::vector<CrossingId> ids;
    ids.reserve(signs_.size());
    for (const auto& [c, s] : signs_) ids.push_back(c);
    return ids;
}

std::pair<int, int> Diagram::visit_positions(CrossingId c) const {
    auto it = positions_.find(c);
    if (it == positions_.end()) throw parse_error("unknown crossing id " + std::to_string(c));
    return it->second;
}

int Diagram::label_position(EdgeLabel e) const {
    auto it = label_pos_.find(e);
    if (it == label_pos_.end()) throw parse_error("unknown edge label " + std::to_string(e));
    return it->second;
}

bool Diagram::has_label(EdgeLabel e) const { return label_pos_.count(e) != 0; }

std::array<EdgeLabel, 4> Diagram::tuple(CrossingId c) const {
    for (const auto& t : tuples_)
        if (t.id == c) return t.slot;
    throw parse_error("unknown crossing id " + std::to_string(c));
}

int Diagram::face_of(Dart d) const {
    auto it = face_index_.find(d);
    if (it == face_index_.end()) throw internal_inconsistency("face_of: unknown dart");
    return it->second;
}

EdgeLabel Diagram::dart_edge(Dart d) const { return tuple(d.crossing)[d.slot]; }

bool Diagram::dart_is_tail(Dart d) const {
    if (d.slot == 2) return true;
    if (d.slot == 0) return false;
    // over slots: on a positive crossing the over-strand enters at slot 1
    return sign(d.crossing) > 0 ? d.slot == 3 : d.slot == 1;
}

Dart Diagram::other_end(Dart d) const {
    EdgeLabel e = dart_edge(d);
    for (const auto& t : tuples_)
        for (int s = 0; s < 4; ++s)
            if (t.slot[s] == e && !(t.id == d.crossing && s == d.slot)) return Dart{t.id, s};
    throw internal_inconsistency("other_end: edge occurs once");
}

EdgeLabel Diagram::max_label() const {
    EdgeLabel m = 0;
    for (EdgeLabel e : labels_) m = std::max(m, e);
    return m;
}

CrossingId Diagram::max_crossing_id() const {
    CrossingId m = -1;
    for (const auto& [c, s] : signs_) m = std::max(m, c);
    return m;
}

void Diagram::build(bool from_parse) {
    auto fail = [&](const std::string& msg) -> void {
        if (from_parse) throw parse_error(msg);
        throw internal_inconsistency(msg);
    };

    tuples_.clear();
    faces_.clear();
    label_pos_.clear();
    positions_.clear();
    face_index_.clear();

    const int n = static_cast<int>(walk_.size());
    if (n == 0) {
        if (!labels_.empty() || !signs_.empty()) fail("zero-crossing unknot carries no crossings or labels");
        return;
    }
    if (static_cast<int>(labels_.size()) != n) fail("walk/label size mismatch");
    if (n != 2 * static_cast<int>(signs_.size())) fail("walk must visit each crossing exactly twice");

    for (int i = 0; i < n; ++i) {
        const Visit& v = walk_[i];
        auto it = signs_.find(v.crossing);
        if (it == signs_.end()) fail("walk visits a crossing with no sign");
        if (it->second != 1 && it->second != -1) fail("crossing sign must be +1 or -1");
        auto [pit, fresh] = positions_.try_emplace(v.crossing, -1, -1);
        int& slot = v.over ? pit->second.second : pit->second.first;
        if (slot != -1) fail("crossing visited twice with the same over/under role");
        slot = i;
    }
    for (const auto& [c, p] : positions_)
        if (p.first < 0 || p.second < 0) fail("crossing missing an over or under visit");

    for (int i = 0; i < n; ++i) {
        if (labels_[i] <= 0) fail("edge labels must be positive");
        if (!label_pos_.emplace(labels_[i], i).second) fail("duplicate edge label");
    }

    auto in_edge = [&](int pos) { return labels_[(pos + n - 1) % n]; };
    auto out_edge = [&](int pos) { return labels_[pos]; };

    std::set<CrossingId> emitted;
    for (int i = 0; i < n; ++i) {
        CrossingId c = walk_[i].crossing;
        if (!emitted.insert(c).second) continue;
        auto [u, o] = positions_.at(c);
        PdTuple t{c, {}};
        t.slot[0] = in_edge(u);
        t.slot[2] = out_edge(u);
        if (signs_.at(c) > 0) {
            t.slot[1] = in_edge(o);
            t.slot[3] = out_edge(o);
        } else {
            t.slot[3] = in_edge(o);
            t.slot[1] = out_edge(o);
        }
        tuples_.push_back(t);
    }

    // Face orbits of sigma∘alpha over the 4V darts.
    std::map<EdgeLabel, std::vector<Dart>> occ;
    for (const auto& t : tuples_)
        for (int s = 0; s < 4; ++s) occ[t.slot[s]].push_back(Dart{t.id, s});
    for (const auto& [e, ds] : occ)
        if (ds.size() != 2) fail("edge label " + std::to_string(e) + " does not occur exactly twice");

    std::map<CrossingId, const PdTuple*> by_id;
    for (const auto& t : tuples_) by_id[t.id] = &t;
    auto alpha = [&](Dart d) -> Dart {
        const auto& ds = occ.at(by_id.at(d.crossing)->slot[d.slot]);
        return ds[0] == d ? ds[1] : ds[0];
    };

    std::vector<Dart> all;
    for (const auto& t : tuples_)
        for (int s = 0; s < 4; ++s) all.push_back(Dart{t.id, s});
    std::sort(all.begin(), all.end());

    std::set<Dart> seen;
    for (const Dart& start : all) {
        if (seen.count(start)) continue;
        Face f;
        Dart d = start;
        do {
            f.darts.push_back(d);
            seen.insert(d);
            Dart a = alpha(d);
            d = Dart{a.crossing, (a.slot + 1) % 4};
        } while (!(d == start));
        faces_.push_back(std::move(f));
    }
    for (int i = 0; i < static_cast<int>(faces_.size()); ++i)
        for (const Dart& d : faces_[i].darts) face_index_[d] = i;

    const int v = crossing_count();
    const int f = static_cast<int>(faces_.size());
    if (v - 2 * v + f != 2)
        fail("nonzero genus: V-E+F = " + std::to_string(v - 2 * v + f) +
             ", not a spherical diagram");
}

Diagram Diagram::from_walk(std::vector<Visit> walk, std::map<CrossingId, int> signs,
                           std::vector<EdgeLabel> labels) {
    Diagram d;
    d.walk_ = std::move(walk);
    d.labels_ = std::move(labels);
    d.signs_ = std::move(signs);
    d.build(false);
    return d;
}

namespace {

std::vector<std::array<EdgeLabel, 4>> parse_pd_tuples(const std::string& text) {
    std::vector<std::array<EdgeLabel, 4>> tuples;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto expect = [&](char c) {
        skip_ws();
        if (i >= text.size() || text[i] != c)
            throw parse_error(std::string("expected '") + c + "' at position " + std::to_string(i));
        ++i;
    };
    skip_ws();
    if (text.compare(i, 2, "PD") != 0) throw parse_error("PD code must start with 'PD['");
    i += 2;
    expect('[');
    skip_ws();
    if (i < text.size() && text[i] == ']') {
        ++i;
        skip_ws();
        if (i != text.size()) throw parse_error("trailing characters after PD code");
        return tuples;
    }
    while (true) {
        expect('X');
        expect('(');
        std::array<EdgeLabel, 4> t{};
        for (int k = 0; k < 4; ++k) {
            skip_ws();
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw parse_error("expected positive integer edge label");
            t[k] = std::stoi(text.substr(start, i - start));
            if (t[k] <= 0) throw parse_error("edge labels must be positive");
            if (k < 3) expect(',');
        }
        expect(')');
        tuples.push_back(t);
        skip_ws();
        if (i < text.size() && text[i] == ',') {
            ++i;
            continue;
        }
        expect(']');
        break;
    }
    skip_ws();
    if (i != text.size()) throw parse_error("trailing characters after PD code");
    return tuples;
}

}  // namespace

Diagram Diagram::parse_pd(const std::string& text) {
    auto tuples = parse_pd_tuples(text);
    const int v = static_cast<int>(tuples.size());
    if (v == 0) return unknot();

    std::map<EdgeLabel, std::vector<std::pair<int, int>>> occ;  // label -> (crossing, slot)
    for (int c = 0; c < v; ++c)
        for (int s = 0; s < 4; ++s) occ[tuples[c][s]].push_back({c, s});
    for (const auto& [e, ds] : occ)
        if (ds.size() != 2)
            throw parse_error("edge label " + std::to_string(e) + " occurs " +
                              std::to_string(ds.size()) + " times; every label must occur exactly twice");

    // Reconstruct the knot walk.  Slot 0 is the incoming under-edge and slot
    // 2 the outgoing one; the over-strand direction is forced by following
    // the walk from crossing 0's outgoing under-edge.
    std::vector<std::array<int, 4>> role(v, {0, 0, 0, 0});  // 0 unused, 1 arrival, 2 departure
    std::vector<int> over_in(v, -1);

    std::vector<Visit> walk;
    std::vector<EdgeLabel> arrival_edge;
    int cur_c = 0, cur_s = 2;
    role[0][2] = 2;
    for (int step = 0; step < 2 * v; ++step) {
        EdgeLabel e = tuples[cur_c][cur_s];
        const auto& ds = occ.at(e);
        auto [nc, ns] = ds[0] == std::make_pair(cur_c, cur_s) ? ds[1] : ds[0];
        if (ns == 2)
            throw parse_error("orientation inconsistency: edge " + std::to_string(e) +
                              " enters an outgoing under slot");
        if (role[nc][ns] != 0)
            throw parse_error("orientation inconsistency at edge " + std::to_string(e));
        role[nc][ns] = 1;
        bool over = (ns == 1 || ns == 3);
        if (over) {
            if (over_in[nc] != -1 && over_in[nc] != ns)
                throw parse_error("orientation inconsistency: crossing entered over twice");
            over_in[nc] = ns;
        }
        walk.push_back(Visit{nc, over});
        arrival_edge.push_back(e);
        int exit_s = over ? (ns + 2) % 4 : 2;
        if (nc == 0 && exit_s == 2) {
            if (step != 2 * v - 1)
                throw parse_error("disconnected or multi-component diagram: knot walk closes early");
        } else if (role[nc][exit_s] != 0) {
            throw parse_error("orientation inconsistency: departure slot reused");
        }
        role[nc][exit_s] = 2;
        cur_c = nc;
        cur_s = exit_s;
    }
    if (!(cur_c == 0 && cur_s == 2))
        throw parse_error("knot walk does not close up");
    for (int c = 0; c < v; ++c)
        for (int s = 0; s < 4; ++s)
            if (role[c][s] == 0)
                throw parse_error("disconnected or multi-component diagram: the knot walk misses crossing " +
                                  std::to_string(c + 1));

    std::map<CrossingId, int> signs;
    for (int c = 0; c < v; ++c) {
        if (over_in[c] == -1) throw parse_error("crossing never entered on its over-strand");
        signs[c] = over_in[c] == 1 ? 1 : -1;
    }

    const int n = 2 * v;
    std::vector<EdgeLabel> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = arrival_edge[(i + 1) % n];

    Diagram d;
    d.walk_ = std::move(walk);
    d.labels_ = std::move(labels);
    d.signs_ = std::move(signs);
    d.build(true);
    return d;
}

std::string Diagram::serialize() const {
    if (is_unknot()) return "PD[]";
    const int n = walk_length();
    EdgeLabel emin = *std::min_element(labels_.begin(), labels_.end());
    int p = label_pos_.at(emin);
    std::map<EdgeLabel, int> relabel;
    for (int i = 0; i < n; ++i) relabel[labels_[(p + i) % n]] = i + 1;

    std::ostringstream out;
    out << "PD[";
    std::set<CrossingId> emitted;
    bool first = true;
    for (int i = 0; i < n; ++i) {
        CrossingId c = walk_[(p + 1 + i) % n].crossing;
        if (!emitted.insert(c).second) continue;
        auto t = tuple(c);
        if (!first) out << ",";
        first = false;
        out << "X(" << relabel.at(t[0]) << "," << relabel.at(t[1]) << "," << relabel.at(t[2])
            << "," << relabel.at(t[3]) << ")";
    }
    out << "]";
    return out.str();
}

std::vector<GaussEntry> Diagram::gauss_code() const {
    std::vector<GaussEntry> code;
    if (is_unknot()) return code;
    const int n = walk_length();
    EdgeLabel emin = *std::min_element(labels_.begin(), labels_.end());
    int start = (label_pos_.at(emin) + 1) % n;
    std::map<CrossingId, int> number;
    for (int i = 0; i < n; ++i) {
        const Visit& v = walk_[(start + i) % n];
        auto [it, fresh] = number.try_emplace(v.crossing, static_cast<int>(number.size()) + 1);
        code.push_back(GaussEntry{it->second, v.over, signs_.at(v.crossing)});
    }
    return code;
}

Diagram Diagram::mirrored() const {
    std::vector<Visit> w = walk_;
    for (auto& v : w) v.over = !v.over;
    std::map<CrossingId, int> s;
    for (const auto& [c, sg] : signs_) s[c] = -sg;
    return from_walk(std::move(w), std::move(s), labels_);
}

Diagram Diagram::reversed() const {
    const int n = walk_length();
    if (n == 0) return *this;
    std::vector<Visit> w(n);
    std::vector<EdgeLabel> l(n);
    for (int i = 0; i < n; ++i) {
        w[i] = walk_[n - 1 - i];
        l[i] = labels_[(2 * n - 2 - i) % n];
    }
    return from_walk(std::move(w), signs_, std::move(l));
}

Diagram Diagram::switched(CrossingId c) const {
    auto [u, o] = visit_positions(c);
    std::vector<Visit> w = walk_;
    w[u].over = true;
    w[o].over = false;
    std::map<CrossingId, int> s = signs_;
    s[c] = -s[c];
    return from_walk(std::move(w), std::move(s), labels_);
}

Diagram connected_sum(const Diagram& d1, EdgeLabel e1, const Diagram& d2, EdgeLabel e2) {
    if (d1.is_unknot()) return d2;
    if (d2.is_unknot()) return d1;
    int i1 = d1.label_position(e1);
    int i2 = d2.label_position(e2);

    const int n1 = d1.walk_length(), n2 = d2.walk_length();
    CrossingId cshift = d1.max_crossing_id() + 1;
    EdgeLabel lshift = d1.max_label();

    std::vector<Visit> walk;
    std::vector<EdgeLabel> labels;
    walk.reserve(n1 + n2);
    labels.reserve(n1 + n2);

    for (int i = 0; i <= i1; ++i) {
        walk.push_back(d1.walk()[i]);
        if (i < i1) labels.push_back(d1.labels()[i]);
    }
    labels.push_back(e1);  // junction into d2
    for (int k = 1; k <= n2; ++k) {
        int i = (i2 + k) % n2;
        Visit v = d2.walk()[i];
        v.crossing += cshift;
        walk.push_back(v);
        if (k < n2) labels.push_back(d2.labels()[i] + lshift);
    }
    EdgeLabel fresh = lshift + d2.max_label() + 1;
    labels.push_back(fresh);  // junction back into d1
    for (int i = i1 + 1; i < n1; ++i) {
        walk.push_back(d1.walk()[i]);
        labels.push_back(d1.labels()[i]);
    }

    std::map<CrossingId, int> signs = d1.signs();
    for (const auto& [c, s] : d2.signs()) signs[c + cshift] = s;
    return Diagram::from_walk(std::move(walk), std::move(signs), std::move(labels));
}

namespace {

// Canonical signed code: minimum over basepoint rotations of the visit
// sequence with crossings renumbered by first appearance.
std::vector<std::tuple<int, int, int>> canonical_code(const Diagram& d) {
    const int n = d.walk_length();
    std::vector<std::tuple<int, int, int>> best;
    for (int r = 0; r < n; ++r) {
        std::vector<std::tuple<int, int, int>> code;
        code.reserve(n);
        std::map<CrossingId, int> number;
        for (int i = 0; i < n; ++i) {
            const Visit& v = d.walk()[(r + i) % n];
            auto [it, fresh] = number.try_emplace(v.crossing, static_cast<int>(number.size()));
            code.push_back({it->second, v.over ? 1 : 0, d.signs().at(v.crossing)});
        }
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

}  // namespace

bool is_isomorphic(const Diagram& a, const Diagram& b) {
    if (a.crossing_count() != b.crossing_count()) return false;
    if (a.is_unknot()) return true;
    return canonical_code(a) == canonical_code(b);
}

std::string gauss_to_text(const std::vector<GaussEntry>& code) {
    std::string out;
    for (const auto& g : code) {
        if (!out.empty()) out += ' ';
        out += g.over ? 'O' : 'U';
        out += std::to_string(g.crossing);
        out += g.sign > 0 ? '+' : '-';
    }
    return out;
}

bool gauss_cyclically_equal(const std::vector<GaussEntry>& a, const std::vector<GaussEntry>& b) {
    if (a.size() != b.size()) return false;
    const int n = static_cast<int>(a.size());
    if (n == 0) return true;
    auto canon = [n](const std::vector<GaussEntry>& code) {
        std::vector<std::tuple<int, int, int>> best;
        for (int r = 0; r < n; ++r) {
            std::vector<std::tuple<int, int, int>> seq;
            seq.reserve(n);
            std::map<int, int> number;
            for (int i = 0; i < n; ++i) {
                const GaussEntry& g = code[(r + i) % n];
                auto [it, fresh] = number.try_emplace(g.crossing, static_cast<int>(number.size()));
                seq.push_back({it->second, g.over ? 1 : 0, g.sign});
            }
            if (best.empty() || seq < best) best = std::move(seq);
        }
        return best;
    };
    return canon(a) == canon(b);
}

}  // namespace knotdelta
