#ifndef KNOTDELTA_BOUNDS_HPP
#define KNOTDELTA_BOUNDS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "knotdelta/group_element.hpp"

namespace knotdelta {

/// Classes of the generator family R: the elements realizable as the change
/// of I_lk under one Reidemeister move, closed under negation.
enum class GenClass { X0, Y0, XYSame, XYNext, XXDiff, YYDiff };

struct Generator {
    GenClass cls;
    int n;     // index parameter; 0 for X0/Y0
    int sign;  // +1 for the listed element, -1 for its negative
    GroupElement elem;
    auto key() const { return std::tuple(static_cast<int>(cls), n, sign); }
    bool operator==(const Generator& o) const { return key() == o.key(); }
    bool operator<(const Generator& o) const { return key() < o.key(); }
};

std::string generator_label(const Generator& g);

/// All generators whose support lies within [lo, hi], deterministic order.
std::vector<Generator> generators_in_window(int lo, int hi);

/// Membership test for R.
std::optional<Generator> as_generator(const GroupElement& v);

/// Integer linear functional on the group: an affine-in-index rule per
/// letter (value(X_n) = ax*n + bx outside overrides) plus a finite override
/// table.  f, k need constant tails, h a linear one; g, e are pure tables.
struct Functional {
    std::string name;
    long long ax = 0, bx = 0, ay = 0, by = 0;
    std::map<BasisSymbol, long long> overrides;

    long long value(BasisSymbol s) const;
    long long operator()(const GroupElement& v) const;
    bool has_tail() const { return ax || bx || ay || by; }
};

/// The five functionals of the theory: f (writhe), g, e, h (H = negative
/// cowrithe), k (crossing number).
std::vector<Functional> builtin_functionals();
Functional builtin_functional(const std::string& name);

/// sup over r in R of |phi(r)|; nullopt when unbounded (ax + ay != 0).
std::optional<long long> r_bound(const Functional& phi);

/// Strict certificate test: |phi(r)| <= 1 for every r in R.  The window must
/// cover the override support expanded by one, else the check is declared
/// inconclusive and throws.
bool is_certificate(const Functional& phi, int window_lo, int window_hi);

long long eval(const Functional& phi, const GroupElement& v);

struct LowerBoundResult {
    long long bound;
    std::string certificate;  // name of an attaining functional
};

/// max over certs of ceil(|phi(v)| / r_bound(phi)).  Every functional must
/// have a finite R-bound; a strict certificate contributes |phi(v)| itself.
LowerBoundResult lower_bound(const GroupElement& v, const std::vector<Functional>& certs);

struct RLengthResult {
    int length;          // valid when !limit_hit
    bool limit_hit;
};

/// Minimum k with v a sum of k elements of R, by iterative-deepening search
/// over the window support(v) +- depth with certificate pruning.  Exact when
/// the result is <= limit.
RLengthResult rlength_exact(const GroupElement& v, int limit);

/// Every multiset of k generators summing to v (k small).  Sorted multisets
/// in deterministic order.
std::vector<std::vector<Generator>> decomposition_profile(const GroupElement& v, int k);

/// Best-effort local search for a strict certificate with values in
/// {-1,0,1} on the window maximizing |phi(v)|.  Not exhaustive.
Functional search_certificate(const GroupElement& v, int window_lo, int window_hi, unsigned seed);

}  // namespace knotdelta

#endif
