// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Tolerances and thresholds are pinned in code.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "knotdelta/bounds.hpp"
#include "knotdelta/conway.hpp"
#include "knotdelta/corpus.hpp"
#include "knotdelta/errors.hpp"
#include "knotdelta/family.hpp"
#include "knotdelta/moves.hpp"
#include "knotdelta/smoothing.hpp"
#include "knotdelta/verify.hpp"

using namespace knotdelta;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
    bool pass = true;
    std::string detail;
    long long checks = 0;

    void require(bool ok, const std::string& why) {
        ++checks;
        if (!ok && pass) {
            pass = false;
            detail = why;
        }
    }
};

GroupElement dn_value(int n) {
    GroupElement v;
    v.add(Letter::Y, 0, n + 1).add(Letter::X, -1, n);
    return v;
}

GroupElement en_value(int n) {
    GroupElement v;
    v.add(Letter::X, 0, n + 1).add(Letter::Y, 1, n);
    return v;
}

// --- 1 -----------------------------------------------------------------
Criterion family_identity() {
    Criterion c;
    for (int n = 0; n <= 10; ++n) {
        Diagram dn = build_dn(n), en = build_en(n);
        c.require(dn.crossing_count() == 2 * n + 1, "D_n crossing count at n=" + std::to_string(n));
        c.require(invariant_ilk(dn) == dn_value(n), "I_lk(D_n) at n=" + std::to_string(n));
        c.require(invariant_ilk(en) == en_value(n), "I_lk(E_n) at n=" + std::to_string(n));
    }
    return c;
}

// --- 2 -----------------------------------------------------------------
Criterion theorem_dn_en() {
    Criterion c;
    std::vector<GroupElement> four{
        GroupElement::from_text("X_0 + Y_1"), GroupElement::from_text("-X_-1 - Y_0"),
        GroupElement::from_text("X_0 - X_-1"), GroupElement::from_text("Y_1 - Y_0")};
    for (int n = 1; n <= 10; ++n) {
        GroupElement v = en_value(n) - dn_value(n);
        LowerBoundResult lb = lower_bound(v, builtin_functionals());
        c.require(lb.bound == 2 * n + 2 && lb.certificate == "g",
                  "lower bound at n=" + std::to_string(n) + " is " + std::to_string(lb.bound) +
                      " via " + lb.certificate);
        std::vector<MoveSite> seq = dn_to_en_sequence(n);
        c.require(static_cast<int>(seq.size()) == 2 * n + 2,
                  "sequence length at n=" + std::to_string(n));
        Diagram d = build_dn(n);
        int ri = 0;
        GroupElement total;
        for (const MoveSite& m : seq) {
            GroupElement delta = classify_delta(d, m).change;
            total += delta;
            if (m.kind == MoveKind::R1Insert || m.kind == MoveKind::R1Remove) {
                ++ri;
            } else {
                bool ok = false;
                for (const GroupElement& a : four) ok = ok || delta == a;
                c.require(ok, "RII delta outside the four-element set at n=" + std::to_string(n));
            }
            d = apply_move(d, m);
        }
        c.require(ri == 2, "RI count at n=" + std::to_string(n) + " is " + std::to_string(ri));
        c.require(total == v, "delta sum at n=" + std::to_string(n));
        c.require(is_isomorphic(d, build_en(n)), "replay endpoint at n=" + std::to_string(n));
    }
    RLengthResult r1 = rlength_exact(en_value(1) - dn_value(1), 8);
    c.require(!r1.limit_hit && r1.length == 4, "rlength(v_1) by search");
    return c;
}

// --- 3 -----------------------------------------------------------------
Criterion delta_classification(const std::vector<CorpusEntry>& corpus) {
    Criterion c;
    long long moves = 0;
    for (const auto& [name, d] : corpus) {
        for (const MoveSite& m : enumerate_moves(d)) {
            ++moves;
            try {
                MoveDelta delta = classify_delta(d, m);
                c.require(as_generator(delta.change).has_value(),
                          name + ": delta outside R for " + move_kind_name(m.kind));
                bool shape_ok = true;
                switch (m.kind) {
                    case MoveKind::R1Insert:
                    case MoveKind::R1Remove:
                        shape_ok = delta.shape == DeltaShape::X0 || delta.shape == DeltaShape::Y0;
                        break;
                    case MoveKind::R2Insert:
                    case MoveKind::R2Remove: {
                        bool matched = m.kind == MoveKind::R2Insert
                                           ? std::get<R2InsertAnchor>(m.anchor).matched
                                           : std::get<R2RemoveAnchor>(m.anchor).matched;
                        shape_ok = delta.shape == (matched ? DeltaShape::XYNext : DeltaShape::XYSame);
                        break;
                    }
                    case MoveKind::R3:
                        shape_ok =
                            delta.shape == DeltaShape::XXDiff || delta.shape == DeltaShape::YYDiff;
                        break;
                }
                c.require(shape_ok, name + ": case mismatch for " + move_kind_name(m.kind));
            } catch (const internal_inconsistency& ex) {
                c.require(false, name + ": " + ex.what());
            }
        }
    }
    c.require(moves >= 500, "corpus offered only " + std::to_string(moves) + " moves");
    return c;
}

// --- 4 -----------------------------------------------------------------
Criterion order_one(const std::vector<CorpusEntry>& corpus) {
    Criterion c;
    std::mt19937 rng(20240);
    long long pairs = 0;
    for (const auto& [name, d] : corpus) {
        if (d.is_unknot()) continue;
        std::vector<MoveSite> sites = enumerate_moves(d);
        std::vector<MoveSupport> supports;
        supports.reserve(sites.size());
        for (const MoveSite& m : sites) supports.push_back(move_support(d, m));
        int got = 0, attempts = 0;
        while (got < 14 && attempts < 600) {
            ++attempts;
            std::size_t i = rng() % sites.size(), j = rng() % sites.size();
            if (i == j || !supports_disjoint(supports[i], supports[j])) continue;
            c.require(disjoint_commute_check(d, sites[i], sites[j]),
                      name + ": disjoint pair " + move_kind_name(sites[i].kind) + "/" +
                          move_kind_name(sites[j].kind));
            ++got;
            ++pairs;
        }
    }
    c.require(pairs >= 200, "only " + std::to_string(pairs) + " disjoint pairs sampled");
    return c;
}

// --- 5 -----------------------------------------------------------------
Criterion cowrithe_crosscheck(const std::vector<CorpusEntry>& corpus) {
    Criterion c;
    Functional h = builtin_functional("h");
    for (const auto& [name, d] : corpus)
        c.require(cowrithe_direct(d) == h(invariant_ilk(d)) && cowrithe_direct(d) == cowrithe(d),
                  name + ": cowrithe routes disagree");
    for (int n = 0; n <= 10; ++n)
        c.require(cowrithe(build_dn(n)) == n && cowrithe(build_en(n)) == n,
                  "H(D_n)/H(E_n) at n=" + std::to_string(n));
    return c;
}

// --- 6 -----------------------------------------------------------------
Criterion skein_identity(const std::vector<CorpusEntry>& corpus) {
    Criterion c;
    for (const auto& [name, d] : corpus)
        for (CrossingId a : d.crossing_ids()) {
            Diagram plus = d.sign(a) > 0 ? d : crossing_switch(d, a);
            Diagram minus = d.sign(a) > 0 ? crossing_switch(d, a) : d;
            c.require(cowrithe(plus) - cowrithe(minus) == -4 * linking_number(d, a),
                      name + ": skein at crossing " + std::to_string(a));
        }
    return c;
}

// --- 7 -----------------------------------------------------------------
// The hand-run skein oracle: replays the descent recursion step by step and
// checks each intermediate against the frozen by-hand values.
Criterion conway_arnold(const std::vector<CorpusEntry>& corpus) {
    Criterion c;

    {
        Diagram t = Diagram::parse_pd(kTrefoilPd);
        EdgeLabel emin = 1;
        int start = (t.label_position(emin) + 1) % t.walk_length();
        // step 1: the first crossing along the walk is met under; both other
        // crossings interleave it with positive signs, so lk = 1
        const Visit& v0 = t.walk()[start];
        c.require(!v0.over, "trefoil oracle: first visit should be an underpass");
        c.require(t.sign(v0.crossing) == 1 && linking_number(t, v0.crossing) == 1,
                  "trefoil oracle: first skein term");
        Diagram s1 = crossing_switch(t, v0.crossing);
        // step 2: the next violation contributes lk = 0 (signs now cancel)
        CrossingId second = -1;
        std::set<CrossingId> seen;
        for (int i = 0; i < s1.walk_length(); ++i) {
            const Visit& v = s1.walk()[(start + i) % s1.walk_length()];
            if (seen.insert(v.crossing).second && !v.over) {
                second = v.crossing;
                break;
            }
        }
        c.require(second >= 0 && linking_number(s1, second) == 0,
                  "trefoil oracle: second skein term");
        Diagram s2 = crossing_switch(s1, second);
        c.require(is_descending_from(s2, start), "trefoil oracle: descending after two switches");
        c.require(c2(t) == 1, "c2(trefoil)");
        c.require(c2(t.mirrored()) == 1, "c2(mirror trefoil)");
    }
    {
        Diagram f8 = Diagram::parse_pd(kFigureEightPd);
        int start = (f8.label_position(1) + 1) % f8.walk_length();
        std::set<CrossingId> seen;
        CrossingId first = -1;
        for (int i = 0; i < f8.walk_length(); ++i) {
            const Visit& v = f8.walk()[(start + i) % f8.walk_length()];
            if (seen.insert(v.crossing).second && !v.over) {
                first = v.crossing;
                break;
            }
        }
        c.require(first >= 0 && f8.sign(first) == 1 && linking_number(f8, first) == -1,
                  "figure-eight oracle: first skein term");
        c.require(is_descending_from(crossing_switch(f8, first), start),
                  "figure-eight oracle: descending after one switch");
        c.require(c2(f8) == -1, "c2(figure-eight)");
    }

    for (int n = 0; n <= 10; ++n)
        c.require(c2(build_dn(n)) == 0 && c2(build_en(n)) == 0,
                  "c2 of the unknot family at n=" + std::to_string(n));

    c.require(arnold_a(Diagram::unknot()) == 0, "A of the circle");
    c.require(arnold_a(Diagram::parse_pd(kPositiveKinkPd)) == 0, "A of the figure-eight curve");
    c.require(arnold_a(Diagram::parse_pd(kNegativeKinkPd)) == 0, "A of the mirrored kink");

    std::mt19937 rng(777);
    for (const auto& [name, d] : corpus) {
        int want = arnold_a(d);
        auto ids = d.crossing_ids();
        const int v = d.crossing_count();
        if (v <= 8) {
            for (unsigned mask = 1; mask < (1u << v); ++mask) {
                Diagram s = d;
                for (int b = 0; b < v; ++b)
                    if (mask & (1u << b)) s = crossing_switch(s, ids[b]);
                c.require(arnold_a(s) == want, name + ": A changed under a switch subset");
            }
        } else {
            for (int trial = 0; trial < 256; ++trial) {
                Diagram s = d;
                for (int b = 0; b < v; ++b)
                    if (rng() % 2) s = crossing_switch(s, ids[b]);
                c.require(arnold_a(s) == want, name + ": A changed under a switch subset");
            }
        }
        int c2_before = c2(d);
        for (const MoveSite& m : enumerate_moves(d))
            c.require(c2(apply_move(d, m)) == c2_before,
                      name + ": c2 changed under " + move_kind_name(m.kind));
    }
    return c;
}

// --- 8 -----------------------------------------------------------------
Criterion structural_invariances(const std::vector<CorpusEntry>& corpus) {
    Criterion c;
    for (const auto& [name, d] : corpus) {
        GroupElement ilk = invariant_ilk(d);
        c.require(invariant_ilk(d.mirrored()) == mirror_conjugate(ilk),
                  name + ": mirror conjugation");
        c.require(invariant_ilk(d.reversed()) == ilk, name + ": orientation independence");
    }
    std::mt19937 rng(4242);
    for (std::size_t i = 0; i < corpus.size(); ++i)
        for (std::size_t j = i; j < corpus.size(); ++j) {
            const Diagram& a = corpus[i].diagram;
            const Diagram& b = corpus[j].diagram;
            EdgeLabel ea = a.is_unknot() ? 0 : a.labels()[rng() % a.labels().size()];
            EdgeLabel eb = b.is_unknot() ? 0 : b.labels()[rng() % b.labels().size()];
            Diagram s = connected_sum(a, ea, b, eb);
            c.require(invariant_ilk(s) == invariant_ilk(a) + invariant_ilk(b),
                      corpus[i].name + " # " + corpus[j].name + ": additivity");
        }
    return c;
}

// --- 9 -----------------------------------------------------------------
Criterion search_oracle_equivalence() {
    Criterion c;
    auto oracle = bfs_oracle(4, -4, 4);
    std::unordered_map<GroupElement, int, GroupElementHash> dist;
    for (const auto& [v, d] : oracle) dist[v] = d;

    long long compared = 0;
    for (const auto& [v, d] : oracle) {
        if (v.is_zero()) continue;
        if (v.min_index() < -2 || v.max_index() > 2) continue;
        bool in_box = true;
        for (const auto& [s, coeff] : v.terms()) in_box = in_box && std::llabs(coeff) <= 2;
        if (!in_box) continue;
        RLengthResult r = rlength_exact(v, 4);
        c.require(!r.limit_hit && r.length == d,
                  v.to_text() + ": search " + std::to_string(r.limit_hit ? -1 : r.length) +
                      " vs oracle " + std::to_string(d));
        ++compared;
    }
    c.require(compared >= 1000, "box intersection too small: " + std::to_string(compared));

    // elements of the box the oracle cannot reach in 4 steps must exceed
    // the search limit as well
    std::mt19937 rng(31415);
    int negatives = 0;
    while (negatives < 200) {
        GroupElement v;
        for (int i = 0; i < 10; ++i) {
            int coeff = static_cast<int>(rng() % 5) - 2;
            if (coeff) v.add(i < 5 ? Letter::X : Letter::Y, (i % 5) - 2, coeff);
        }
        if (v.is_zero() || dist.count(v)) continue;
        RLengthResult r = rlength_exact(v, 4);
        c.require(r.limit_hit, v.to_text() + ": search found a length the oracle missed");
        ++negatives;
    }
    return c;
}

// --- 10 ----------------------------------------------------------------
Criterion decomposition_structure() {
    Criterion c;
    GroupElement x0 = GroupElement::basis(Letter::X, 0);
    GroupElement minus_y0 = -GroupElement::basis(Letter::Y, 0);
    std::vector<GroupElement> four{
        GroupElement::from_text("X_0 + Y_1"), GroupElement::from_text("-X_-1 - Y_0"),
        GroupElement::from_text("X_0 - X_-1"), GroupElement::from_text("Y_1 - Y_0")};
    for (int n : {1, 2}) {
        int k = 2 * n + 2;
        auto profile = decomposition_profile(en_value(n) - dn_value(n), k);
        c.require(!profile.empty(), "no decompositions at n=" + std::to_string(n));
        for (const auto& decomposition : profile) {
            int ri_like = 0, allowed = 0;
            for (const Generator& g : decomposition) {
                if (g.elem == x0 || g.elem == minus_y0) ++ri_like;
                else {
                    bool ok = false;
                    for (const GroupElement& a : four) ok = ok || g.elem == a;
                    if (ok) ++allowed;
                }
            }
            c.require(ri_like == 2 && allowed == 2 * n,
                      "decomposition structure at n=" + std::to_string(n));
        }
    }
    return c;
}

struct Entry {
    int number;
    const char* label;
    double budget_s;  // 0 = no stated budget
    Criterion result;
    double elapsed = 0;
};

}  // namespace

int main() {
    std::vector<CorpusEntry> corpus = builtin_corpus(1);

    std::vector<Entry> entries;
    auto run = [&](int number, const char* label, double budget, auto&& fn) {
        Entry e{number, label, budget, {}, 0};
        auto t0 = Clock::now();
        e.result = fn();
        e.elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
        if (budget > 0 && e.elapsed >= budget)
            e.result.require(false, "runtime " + std::to_string(e.elapsed) + "s exceeds budget");
        entries.push_back(std::move(e));
    };

    run(1, "family identity I_lk(D_n), I_lk(E_n) for n<=10", 1.0, family_identity);
    run(2, "minimal D_n->E_n distance 2n+2 with two RI moves", 10.0, theorem_dn_en);
    run(3, "move-delta classification over the corpus", 0, [&] { return delta_classification(corpus); });
    run(4, "order-one commutation on disjoint move pairs", 0, [&] { return order_one(corpus); });
    run(5, "cowrithe cross-check and H(D_n)=H(E_n)=n", 0, [&] { return cowrithe_crosscheck(corpus); });
    run(6, "skein relation at every corpus crossing", 0, [&] { return skein_identity(corpus); });
    run(7, "Conway c2 and curve invariant A", 0, [&] { return conway_arnold(corpus); });
    run(8, "mirror/orientation/connected-sum invariances", 0, [&] { return structural_invariances(corpus); });
    run(9, "R-length search equals breadth-first oracle", 60.0, search_oracle_equivalence);
    run(10, "decomposition structure at n=1,2", 0, decomposition_structure);

    int failures = 0;
    for (const Entry& e : entries) {
        const Criterion& c = e.result;
        std::printf("[%s] %2d. %s (%lld checks, %.2fs)%s%s\n", c.pass ? "PASS" : "FAIL", e.number,
                    e.label, c.checks, e.elapsed, c.pass ? "" : " -- ",
                    c.pass ? "" : c.detail.c_str());
        failures += !c.pass;
    }
    if (failures) std::printf("%d criteria failed\n", failures);
    else std::printf("all %zu criteria pass\n", entries.size());
    return failures == 0 ? 0 : 1;
}
