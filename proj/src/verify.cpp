#include "knotdelta/verify.hpp"

#include <random>
#include <set>
#include <unordered_map>

#include "knotdelta/bounds.hpp"
#include "knotdelta/conway.hpp"
#include "knotdelta/errors.hpp"
#include "knotdelta/family.hpp"
#include "knotdelta/moves.hpp"
#include "knotdelta/smoothing.hpp"

namespace knotdelta {

GroupElement mirror_conjugate(const GroupElement& v) {
    GroupElement out;
    for (const auto& [s, c] : v.terms())
        out.add(s.letter == Letter::X ? Letter::Y : Letter::X, -s.index, c);
    return out;
}

std::vector<std::pair<GroupElement, int>> bfs_oracle(int max_depth, int window_lo, int window_hi) {
    std::vector<Generator> gens = generators_in_window(window_lo, window_hi);
    std::unordered_map<GroupElement, int, GroupElementHash> dist;
    std::vector<GroupElement> frontier{GroupElement{}};
    dist[GroupElement{}] = 0;
    for (int depth = 1; depth <= max_depth; ++depth) {
        std::vector<GroupElement> next;
        for (const GroupElement& v : frontier)
            for (const Generator& g : gens) {
                GroupElement w = v + g.elem;
                if (dist.emplace(w, depth).second) next.push_back(w);
            }
        frontier = std::move(next);
    }
    std::vector<std::pair<GroupElement, int>> out;
    out.reserve(dist.size());
    for (auto& [v, d] : dist) out.push_back({v, d});
    return out;
}

namespace {

std::string describe(const std::string& diagram, const std::string& what) {
    return diagram + ": " + what;
}

void check_diagram_core(const std::vector<CorpusEntry>& corpus, std::vector<PropertyResult>& out) {
    PropertyResult roundtrip("pd-roundtrip");
    PropertyResult euler("euler-spherical");
    PropertyResult mirror("mirror-conjugation");
    PropertyResult reverse("orientation-independence");
    for (const auto& [name, d] : corpus) {
        roundtrip.note(is_isomorphic(Diagram::parse_pd(d.serialize()), d), describe(name, "serialize/parse round trip"));
        euler.note(d.face_count() - d.crossing_count() == 2, describe(name, "V-E+F != 2"));
        GroupElement ilk = invariant_ilk(d);
        mirror.note(invariant_ilk(d.mirrored()) == mirror_conjugate(ilk),
                    describe(name, "I_lk mirror conjugation"));
        Diagram rev = d.reversed();
        reverse.note(invariant_ilk(rev) == ilk && writhe(rev) == writhe(d),
                     describe(name, "I_lk under orientation reversal"));
    }
    out.push_back(roundtrip);
    out.push_back(euler);
    out.push_back(mirror);
    out.push_back(reverse);
}

void check_family(int max_n, std::vector<PropertyResult>& out) {
    PropertyResult fam("family-identity");
    PropertyResult mir("family-mirror");
    PropertyResult sw("family-middle-switch");
    for (int n = 0; n <= max_n; ++n) {
        Diagram dn = build_dn(n);
        Diagram en = build_en(n);
        GroupElement want_d, want_e;
        want_d.add(Letter::Y, 0, n + 1).add(Letter::X, -1, n);
        want_e.add(Letter::X, 0, n + 1).add(Letter::Y, 1, n);
        fam.note(dn.crossing_count() == 2 * n + 1 && invariant_ilk(dn) == want_d,
                 "D" + std::to_string(n) + ": crossing count or I_lk");
        fam.note(en.crossing_count() == 2 * n + 1 && invariant_ilk(en) == want_e,
                 "E" + std::to_string(n) + ": crossing count or I_lk");
        fam.note(writhe(dn) == -1 && cowrithe(dn) == n, "D" + std::to_string(n) + ": writhe/H");
        fam.note(writhe(en) == 1 && cowrithe(en) == n, "E" + std::to_string(n) + ": writhe/H");
        mir.note(is_isomorphic(dn.mirrored(), en), "mirror(D" + std::to_string(n) + ") vs E_n");
        if (n <= 5) {
            bool found = false;
            for (CrossingId c : dn.crossing_ids())
                if (is_isomorphic(dn.switched(c), en)) found = true;
            sw.note(found, "no single switch takes D" + std::to_string(n) + " to E_n");
        }
    }
    out.push_back(fam);
    out.push_back(mir);
    out.push_back(sw);
}

void check_smoothing(const std::vector<CorpusEntry>& corpus, std::vector<PropertyResult>& out) {
    PropertyResult structure("smoothing-structure");
    PropertyResult lk_even("linking-half-integer");
    PropertyResult cow("cowrithe-two-routes");
    PropertyResult wr("writhe-two-routes");
    PropertyResult skein("skein-relation");
    Functional f = builtin_functional("f");
    Functional h = builtin_functional("h");
    Functional k = builtin_functional("k");
    for (const auto& [name, d] : corpus) {
        GroupElement ilk = invariant_ilk(d);
        cow.note(cowrithe_direct(d) == cowrithe(d) && h(ilk) == cowrithe(d),
                 describe(name, "cowrithe_direct vs h(I_lk)"));
        wr.note(f(ilk) == writhe(d) && k(ilk) == crossing_number(d),
                describe(name, "writhe/crossing number via functionals"));
        for (CrossingId a : d.crossing_ids()) {
            SmoothedLink s = smooth(d, a);
            bool ok = s.first_component.size() + s.second_component.size() ==
                      static_cast<std::size_t>(d.walk_length() - 2);
            int inter_signed = 0, inter_count = 0;
            for (const auto& r : s.residual) {
                ok = ok && (r.inter_component == interleaved(d, a, r.crossing));
                if (r.inter_component) {
                    inter_signed += r.sign;
                    ++inter_count;
                }
            }
            // components hold every other crossing exactly once each side
            std::multiset<CrossingId> seen;
            for (const Visit& v : s.first_component) seen.insert(v.crossing);
            for (const Visit& v : s.second_component) seen.insert(v.crossing);
            for (const auto& r : s.residual) ok = ok && seen.count(r.crossing) == 2;
            structure.note(ok, describe(name, "smoothing at " + std::to_string(a)));
            lk_even.note(inter_signed % 2 == 0 && 2 * linking_number(d, a) == inter_signed,
                         describe(name, "interleaved signed count at " + std::to_string(a)));
            int hplus = cowrithe(d.sign(a) > 0 ? d : d.switched(a));
            int hminus = cowrithe(d.sign(a) > 0 ? d.switched(a) : d);
            skein.note(hplus - hminus == -4 * linking_number(d, a),
                       describe(name, "skein at " + std::to_string(a)));
        }
    }
    out.push_back(structure);
    out.push_back(lk_even);
    out.push_back(cow);
    out.push_back(wr);
    out.push_back(skein);
}

void check_moves(const std::vector<CorpusEntry>& corpus, const VerifyOptions& opts,
                 std::vector<PropertyResult>& out) {
    PropertyResult deltas("move-delta-classification");
    PropertyResult membership("delta-generator-membership");
    PropertyResult hrules("cowrithe-move-response");
    PropertyResult reversible("move-reversibility");
    PropertyResult commute("order-one-commutation");
    PropertyResult c2move("c2-move-invariance");

    std::mt19937 rng(opts.seed * 7919 + 17);
    long long commute_done = 0;

    for (const auto& [name, d] : corpus) {
        std::vector<MoveSite> sites = enumerate_moves(d);
        int c2_before = c2(d);
        for (const MoveSite& m : sites) {
            std::string where = describe(name, move_kind_name(m.kind));
            try {
                MoveDelta delta = classify_delta(d, m);
                deltas.note(true, where);
                membership.note(as_generator(delta.change).has_value(), where);
                int dh = static_cast<int>(builtin_functional("h")(delta.change));
                bool ok = false;
                switch (m.kind) {
                    case MoveKind::R1Insert:
                    case MoveKind::R1Remove: ok = dh == 0; break;
                    case MoveKind::R2Insert:
                        ok = dh == (std::get<R2InsertAnchor>(m.anchor).matched ? 1 : 0);
                        break;
                    case MoveKind::R2Remove:
                        ok = dh == (std::get<R2RemoveAnchor>(m.anchor).matched ? -1 : 0);
                        break;
                    case MoveKind::R3: ok = dh == 1 || dh == -1; break;
                }
                hrules.note(ok, where + ": dH=" + std::to_string(dh));
                Diagram moved = apply_move(d, m);
                c2move.note(c2(moved) == c2_before, where + ": c2 changed");
            } catch (const internal_inconsistency& ex) {
                deltas.note(false, where + ": " + ex.what());
            }
        }

        // insertion/removal and RIII round trips
        int budget = 12;
        for (const MoveSite& m : sites) {
            if (budget == 0) break;
            Diagram moved = apply_move(d, m);
            GroupElement back_delta;
            bool checked = false;
            if (m.kind == MoveKind::R1Insert) {
                CrossingId fresh = moved.max_crossing_id();
                for (const MoveSite& r : enumerate_moves(moved))
                    if (r.kind == MoveKind::R1Remove &&
                        std::get<R1RemoveAnchor>(r.anchor).crossing == fresh) {
                        Diagram back = apply_move(moved, r);
                        back_delta = classify_delta(d, m).change + classify_delta(moved, r).change;
                        reversible.note(is_isomorphic(back, d) && back_delta.is_zero(),
                                        describe(name, "RI insert/remove round trip"));
                        checked = true;
                    }
            } else if (m.kind == MoveKind::R2Insert) {
                CrossingId n2 = moved.max_crossing_id(), n1 = n2 - 1;
                for (const MoveSite& r : enumerate_moves(moved)) {
                    if (r.kind != MoveKind::R2Remove) continue;
                    const auto& a = std::get<R2RemoveAnchor>(r.anchor);
                    if (a.c1 == n1 && a.c2 == n2) {
                        Diagram back = apply_move(moved, r);
                        back_delta = classify_delta(d, m).change + classify_delta(moved, r).change;
                        reversible.note(is_isomorphic(back, d) && back_delta.is_zero(),
                                        describe(name, "RII insert/remove round trip"));
                        checked = true;
                        break;
                    }
                }
            } else if (m.kind == MoveKind::R3) {
                const auto& a = std::get<R3Anchor>(m.anchor);
                for (const MoveSite& r : enumerate_moves(moved)) {
                    if (r.kind != MoveKind::R3) continue;
                    if (std::get<R3Anchor>(r.anchor).corners == a.corners) {
                        Diagram back = apply_move(moved, r);
                        reversible.note(is_isomorphic(back, d),
                                        describe(name, "RIII involution"));
                        checked = true;
                        break;
                    }
                }
            }
            if (checked) --budget;
        }

        // disjoint pairs for the order-one property
        if (sites.size() >= 2 && !d.is_unknot()) {
            std::vector<MoveSupport> supports;
            supports.reserve(sites.size());
            for (const MoveSite& m : sites) supports.push_back(move_support(d, m));
            int attempts = 0, want = opts.commute_pairs / std::max<int>(1, corpus.size() - 1) + 1;
            int got = 0;
            while (attempts < 400 && got < want) {
                ++attempts;
                std::size_t i = rng() % sites.size(), j = rng() % sites.size();
                if (i == j || !supports_disjoint(supports[i], supports[j])) continue;
                commute.note(disjoint_commute_check(d, sites[i], sites[j]),
                             describe(name, "disjoint pair " + move_kind_name(sites[i].kind) +
                                                "/" + move_kind_name(sites[j].kind)));
                ++got;
                ++commute_done;
            }
        }
    }
    (void)commute_done;
    out.push_back(deltas);
    out.push_back(membership);
    out.push_back(hrules);
    out.push_back(reversible);
    out.push_back(commute);
    out.push_back(c2move);
}

void check_conway(const std::vector<CorpusEntry>& corpus, const VerifyOptions& opts,
                  std::vector<PropertyResult>& out) {
    PropertyResult base("c2-basepoint-independence");
    PropertyResult desc("descending-gives-zero");
    PropertyResult curve("arnold-curve-dependence");
    std::mt19937 rng(opts.seed * 104729 + 5);
    for (const auto& [name, d] : corpus) {
        int reference = c2(d);
        for (int start = 0; start < d.walk_length(); ++start)
            base.note(c2_from(d, start) == reference,
                      describe(name, "basepoint " + std::to_string(start)));
        for (int start = 0; start < std::max(1, d.walk_length()); ++start)
            if (is_descending_from(d, start))
                desc.note(c2_from(d, start) == 0, describe(name, "descending but c2 != 0"));

        int a_ref = arnold_a(d);
        auto ids = d.crossing_ids();
        const int v = d.crossing_count();
        if (v <= 8) {
            for (unsigned mask = 1; mask < (1u << v); ++mask) {
                Diagram s = d;
                for (int b = 0; b < v; ++b)
                    if (mask & (1u << b)) s = s.switched(ids[b]);
                curve.note(arnold_a(s) == a_ref, describe(name, "switch subset changes A"));
            }
        } else {
            for (int trial = 0; trial < opts.switch_subset_cap; ++trial) {
                Diagram s = d;
                for (int b = 0; b < v; ++b)
                    if (rng() % 2) s = s.switched(ids[b]);
                curve.note(arnold_a(s) == a_ref, describe(name, "switch subset changes A"));
            }
        }
    }
    out.push_back(base);
    out.push_back(desc);
    out.push_back(curve);
}

void check_connected_sum(const std::vector<CorpusEntry>& corpus, const VerifyOptions& opts,
                         std::vector<PropertyResult>& out) {
    PropertyResult add("connected-sum-additivity");
    std::mt19937 rng(opts.seed * 31337 + 3);
    for (std::size_t i = 0; i < corpus.size(); ++i)
        for (std::size_t j = i; j < corpus.size(); ++j) {
            const Diagram& a = corpus[i].diagram;
            const Diagram& b = corpus[j].diagram;
            EdgeLabel ea = a.is_unknot() ? 0 : a.labels()[rng() % a.labels().size()];
            EdgeLabel eb = b.is_unknot() ? 0 : b.labels()[rng() % b.labels().size()];
            Diagram s = connected_sum(a, ea, b, eb);
            bool ok = s.crossing_count() == a.crossing_count() + b.crossing_count() &&
                      invariant_ilk(s) == invariant_ilk(a) + invariant_ilk(b);
            add.note(ok, corpus[i].name + " # " + corpus[j].name);
        }
    out.push_back(add);
}

void check_bounds(const VerifyOptions& opts, std::vector<PropertyResult>& out) {
    PropertyResult certs("builtin-certificates");
    PropertyResult sandwich("family-bound-sandwich");
    PropertyResult oracle("rlength-search-oracle");

    certs.note(is_certificate(builtin_functional("f"), -2, 2), "f");
    certs.note(is_certificate(builtin_functional("g"), -2, 2), "g");
    certs.note(!is_certificate(builtin_functional("e"), -2, 2), "e is not 1-bounded on R");
    certs.note(is_certificate(builtin_functional("h"), -2, 2), "h");
    certs.note(!is_certificate(builtin_functional("k"), -2, 2), "k is not 1-bounded on R");
    Functional zero{"zero", 0, 0, 0, 0, {}};
    certs.note(is_certificate(zero, -2, 2), "zero functional");

    for (int n = 1; n <= opts.family_max_n; ++n) {
        GroupElement v = family_difference(n);
        LowerBoundResult lb = lower_bound(v, builtin_functionals());
        std::vector<MoveSite> seq = dn_to_en_sequence(n);
        sandwich.note(lb.bound == 2 * n + 2 && lb.certificate == "g" &&
                          static_cast<int>(seq.size()) == 2 * n + 2,
                      "n=" + std::to_string(n) + ": bound " + std::to_string(lb.bound) + " via " +
                          lb.certificate + ", sequence " + std::to_string(seq.size()));
    }

    // reduced-depth agreement with the breadth-first oracle
    int depth = opts.oracle_depth;
    for (const auto& [v, dist] : bfs_oracle(depth, -3, 3)) {
        if (v.is_zero()) continue;
        if (v.min_index() < -2 || v.max_index() > 2) continue;
        bool small = true;
        for (const auto& [s, c] : v.terms()) small = small && std::llabs(c) <= 2;
        if (!small) continue;
        RLengthResult r = rlength_exact(v, depth);
        oracle.note(!r.limit_hit && r.length == dist,
                    v.to_text() + ": oracle " + std::to_string(dist));
    }
    out.push_back(certs);
    out.push_back(sandwich);
    out.push_back(oracle);
}

}  // namespace

std::vector<PropertyResult> run_property_suites(const std::vector<CorpusEntry>& corpus,
                                                const VerifyOptions& opts) {
    std::vector<PropertyResult> out;
    check_diagram_core(corpus, out);
    if (opts.global_suites) check_family(opts.family_max_n, out);
    check_smoothing(corpus, out);
    check_moves(corpus, opts, out);
    check_conway(corpus, opts, out);
    check_connected_sum(corpus, opts, out);
    if (opts.global_suites) check_bounds(opts, out);
    return out;
}

}  // namespace knotdelta
