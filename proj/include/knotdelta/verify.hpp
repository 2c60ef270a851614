#ifndef KNOTDELTA_VERIFY_HPP
#define KNOTDELTA_VERIFY_HPP

#include <string>
#include <vector>

#include "knotdelta/corpus.hpp"
#include "knotdelta/group_element.hpp"

namespace knotdelta {

struct PropertyResult {
    std::string name;
    long long checks = 0;
    long long violations = 0;
    std::string counterexample;  // first violation

    PropertyResult() = default;
    explicit PropertyResult(std::string n) : name(std::move(n)) {}

    void note(bool ok, const std::string& where) {
        ++checks;
        if (!ok) {
            ++violations;
            if (counterexample.empty()) counterexample = where;
        }
    }
};

struct VerifyOptions {
    unsigned seed = 1;
    int commute_pairs = 220;   // disjoint move pairs to sample
    int family_max_n = 10;
    int oracle_depth = 3;      // reduced search-oracle depth; acceptance runs 4
    int switch_subset_cap = 256;
    bool global_suites = true;  // family/bounds checks that do not need a corpus
};

/// Runs every module's invariant/property suite over a corpus.  Returns one
/// result row per property; a row with violations > 0 carries its first
/// counterexample.
std::vector<PropertyResult> run_property_suites(const std::vector<CorpusEntry>& corpus,
                                                const VerifyOptions& opts);

/// Mirror conjugation X_n -> Y_{-n}, Y_n -> X_{-n}.
GroupElement mirror_conjugate(const GroupElement& v);

/// Breadth-first distances from 0 over generators materialized on
/// [window_lo, window_hi], up to max_depth.  The independent search oracle:
/// no pruning, no adaptive window.
std::vector<std::pair<GroupElement, int>> bfs_oracle(int max_depth, int window_lo, int window_hi);

}  // namespace knotdelta

#endif
