#include "knotdelta/bounds.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <stdexcept>

#include "knotdelta/errors.hpp"

namespace knotdelta {

namespace {

GroupElement generator_element(GenClass cls, int n, int sign) {
    GroupElement v;
    switch (cls) {
        case GenClass::X0: v.add(Letter::X, 0, 1); break;
        case GenClass::Y0: v.add(Letter::Y, 0, 1); break;
        case GenClass::XYSame: v.add(Letter::X, n, 1).add(Letter::Y, n, 1); break;
        case GenClass::XYNext: v.add(Letter::X, n, 1).add(Letter::Y, n + 1, 1); break;
        case GenClass::XXDiff: v.add(Letter::X, n, 1).add(Letter::X, n + 1, -1); break;
        case GenClass::YYDiff: v.add(Letter::Y, n, 1).add(Letter::Y, n + 1, -1); break;
    }
    return sign > 0 ? v : -v;
}

}  // namespace

std::string generator_label(const Generator& g) {
    std::string core;
    switch (g.cls) {
        case GenClass::X0: core = "X_0"; break;
        case GenClass::Y0: core = "Y_0"; break;
        case GenClass::XYSame: core = "X_" + std::to_string(g.n) + "+Y_" + std::to_string(g.n); break;
        case GenClass::XYNext: core = "X_" + std::to_string(g.n) + "+Y_" + std::to_string(g.n + 1); break;
        case GenClass::XXDiff: core = "X_" + std::to_string(g.n) + "-X_" + std::to_string(g.n + 1); break;
        case GenClass::YYDiff: core = "Y_" + std::to_string(g.n) + "-Y_" + std::to_string(g.n + 1); break;
    }
    if (g.cls == GenClass::X0 || g.cls == GenClass::Y0) return (g.sign > 0 ? "+" : "-") + core;
    return g.sign > 0 ? "+(" + core + ")" : "-(" + core + ")";
}

std::vector<Generator> generators_in_window(int lo, int hi) {
    std::vector<Generator> out;
    auto push = [&](GenClass cls, int n) {
        for (int sign : {1, -1}) out.push_back({cls, n, sign, generator_element(cls, n, sign)});
    };
    if (lo <= 0 && 0 <= hi) {
        push(GenClass::X0, 0);
        push(GenClass::Y0, 0);
    }
    for (int n = lo; n <= hi; ++n) push(GenClass::XYSame, n);
    for (int n = lo; n + 1 <= hi; ++n) {
        push(GenClass::XYNext, n);
        push(GenClass::XXDiff, n);
        push(GenClass::YYDiff, n);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Generator> as_generator(const GroupElement& v) {
    const auto& ts = v.terms();
    if (ts.size() == 1) {
        auto [s, c] = *ts.begin();
        if (s.index != 0 || (c != 1 && c != -1)) return std::nullopt;
        GenClass cls = s.letter == Letter::X ? GenClass::X0 : GenClass::Y0;
        return Generator{cls, 0, static_cast<int>(c), v};
    }
    if (ts.size() != 2) return std::nullopt;
    auto it = ts.begin();
    auto [s1, c1] = *it;
    auto [s2, c2] = *std::next(it);
    if (std::llabs(c1) != 1 || std::llabs(c2) != 1) return std::nullopt;
    if (s1.letter == Letter::X && s2.letter == Letter::Y) {
        if (c1 != c2) return std::nullopt;
        int sign = static_cast<int>(c1);
        if (s2.index == s1.index) return Generator{GenClass::XYSame, s1.index, sign, v};
        if (s2.index == s1.index + 1) return Generator{GenClass::XYNext, s1.index, sign, v};
        return std::nullopt;
    }
    if (s1.letter == s2.letter && s2.index == s1.index + 1 && c2 == -c1) {
        GenClass cls = s1.letter == Letter::X ? GenClass::XXDiff : GenClass::YYDiff;
        return Generator{cls, s1.index, static_cast<int>(c1), v};
    }
    return std::nullopt;
}

long long Functional::value(BasisSymbol s) const {
    auto it = overrides.find(s);
    if (it != overrides.end()) return it->second;
    return s.letter == Letter::X ? ax * s.index + bx : ay * s.index + by;
}

long long Functional::operator()(const GroupElement& v) const {
    long long acc = 0;
    for (const auto& [s, c] : v.terms()) acc += value(s) * c;
    return acc;
}

long long eval(const Functional& phi, const GroupElement& v) { return phi(v); }

std::vector<Functional> builtin_functionals() {
    Functional f{"f", 0, 1, 0, -1, {}};
    Functional g{"g", 0, 0, 0, 0, {{{Letter::X, 0}, 1}, {{Letter::Y, 0}, -1}}};
    Functional e{"e",
                 0,
                 0,
                 0,
                 0,
                 {{{Letter::X, 0}, 1},
                  {{Letter::Y, 1}, 1},
                  {{Letter::X, -1}, -1},
                  {{Letter::Y, 0}, -1}}};
    Functional h{"h", -1, 0, 1, 0, {}};
    Functional k{"k", 0, 1, 0, 1, {}};
    return {f, g, e, h, k};
}

Functional builtin_functional(const std::string& name) {
    for (const Functional& phi : builtin_functionals())
        if (phi.name == name) return phi;
    throw parse_error("unknown functional: " + name);
}

std::optional<long long> r_bound(const Functional& phi) {
    // Tail values of the generator families are affine in n; they stay
    // bounded exactly when ax + ay = 0 (the difference families are always
    // constant in the tail).
    if (phi.ax + phi.ay != 0) return std::nullopt;
    int lo = 0, hi = 0;
    for (const auto& [s, c] : phi.overrides) {
        lo = std::min(lo, s.index);
        hi = std::max(hi, s.index);
    }
    long long best = 0;
    for (const Generator& g : generators_in_window(lo - 2, hi + 2))
        if (g.sign > 0) best = std::max(best, std::llabs(phi(g.elem)));
    // pure-tail constants
    best = std::max(best, std::llabs(phi.bx + phi.by));             // X_n + Y_n
    best = std::max(best, std::llabs(phi.bx + phi.by + phi.ay));    // X_n + Y_{n+1}
    best = std::max(best, std::llabs(phi.ax));                      // X_n - X_{n+1}
    best = std::max(best, std::llabs(phi.ay));                      // Y_n - Y_{n+1}
    return best;
}

bool is_certificate(const Functional& phi, int window_lo, int window_hi) {
    // The window must cover the override table expanded by one; the affine
    // tails are checked symbolically and need no window.
    if (!phi.overrides.empty()) {
        int lo = phi.overrides.begin()->first.index, hi = lo;
        for (const auto& [s, c] : phi.overrides) {
            lo = std::min(lo, s.index);
            hi = std::max(hi, s.index);
        }
        if (window_lo > lo - 1 || window_hi < hi + 1)
            throw std::invalid_argument("certificate window too small to be conclusive");
    }
    auto rb = r_bound(phi);
    return rb.has_value() && *rb <= 1;
}

LowerBoundResult lower_bound(const GroupElement& v, const std::vector<Functional>& certs) {
    LowerBoundResult best{0, ""};
    for (const Functional& phi : certs) {
        auto rb = r_bound(phi);
        if (!rb.has_value())
            throw std::invalid_argument("functional " + phi.name +
                                        " is unbounded on R: invalid certificate");
        long long val = std::llabs(phi(v));
        long long contribution;
        if (*rb == 0) {
            if (val != 0)
                throw internal_inconsistency("functional vanishing on R is nonzero on the element");
            contribution = 0;
        } else {
            contribution = (val + *rb - 1) / *rb;
        }
        if (contribution > best.bound) best = {contribution, phi.name};
    }
    return best;
}

namespace {

long long l1_norm(const GroupElement& v) {
    long long n = 0;
    for (const auto& [s, c] : v.terms()) n += std::llabs(c);
    return n;
}

struct SearchContext {
    std::vector<Generator> gens;
    std::vector<Functional> certs;
    std::vector<long long> rbounds;

    long long residual_bound(const GroupElement& v) const {
        // every generator has L1 norm at most 2
        long long best = (l1_norm(v) + 1) / 2;
        for (std::size_t i = 0; i < certs.size(); ++i) {
            if (rbounds[i] == 0) continue;
            long long val = std::llabs(certs[i](v));
            best = std::max(best, (val + rbounds[i] - 1) / rbounds[i]);
        }
        return best;
    }

    bool dfs(const GroupElement& residual, int remaining, std::size_t min_gen) const {
        if (residual.is_zero()) return remaining == 0;
        if (remaining == 0) return false;
        if (residual_bound(residual) > remaining) return false;
        for (std::size_t i = min_gen; i < gens.size(); ++i) {
            if (dfs(residual - gens[i].elem, remaining - 1, i)) return true;
        }
        return false;
    }

    void collect(const GroupElement& residual, int remaining, std::size_t min_gen,
                 std::vector<Generator>& stack, std::vector<std::vector<Generator>>& out) const {
        if (remaining == 0) {
            if (residual.is_zero()) out.push_back(stack);
            return;
        }
        if (residual_bound(residual) > remaining) return;
        for (std::size_t i = min_gen; i < gens.size(); ++i) {
            stack.push_back(gens[i]);
            collect(residual - gens[i].elem, remaining - 1, i, stack, out);
            stack.pop_back();
        }
    }
};

SearchContext make_context(const GroupElement& v, int depth) {
    SearchContext ctx;
    int lo = 0, hi = 0;
    if (!v.is_zero()) {
        lo = v.min_index();
        hi = v.max_index();
    }
    // A depth-k decomposition only reaches indices within k of the support:
    // each generator couples adjacent indices only.
    ctx.gens = generators_in_window(lo - depth, hi + depth);
    for (const Functional& phi : builtin_functionals()) {
        auto rb = r_bound(phi);
        if (rb.has_value() && *rb > 0) {
            ctx.certs.push_back(phi);
            ctx.rbounds.push_back(*rb);
        }
    }
    return ctx;
}

}  // namespace

RLengthResult rlength_exact(const GroupElement& v, int limit) {
    if (limit < 0 || limit > 30)
        throw std::invalid_argument("rlength limit must be between 0 and 30 (desk scale)");
    if (v.is_zero()) return {0, false};
    long long start = std::max<long long>(1, lower_bound(v, builtin_functionals()).bound);
    start = std::max(start, (l1_norm(v) + 1) / 2);
    for (int k = static_cast<int>(start); k <= limit; ++k) {
        SearchContext ctx = make_context(v, k);
        if (ctx.dfs(v, k, 0)) return {k, false};
    }
    return {0, true};
}

std::vector<std::vector<Generator>> decomposition_profile(const GroupElement& v, int k) {
    if (k < 0 || k > 8) throw std::invalid_argument("decomposition profile is feasible for k <= 8");
    SearchContext ctx = make_context(v, k);
    std::vector<std::vector<Generator>> out;
    std::vector<Generator> stack;
    ctx.collect(v, k, 0, stack, out);
    return out;
}

Functional search_certificate(const GroupElement& v, int window_lo, int window_hi, unsigned seed) {
    if (window_lo > window_hi) throw std::invalid_argument("empty certificate window");
    std::vector<BasisSymbol> syms;
    for (int n = window_lo; n <= window_hi; ++n) {
        syms.push_back({Letter::X, n});
        syms.push_back({Letter::Y, n});
    }
    std::mt19937 rng(seed);
    Functional best{"searched", 0, 0, 0, 0, {}};
    long long best_val = 0;

    for (int restart = 0; restart < 24; ++restart) {
        Functional cur{"searched", 0, 0, 0, 0, {}};
        for (const BasisSymbol& s : syms) {
            int val = static_cast<int>(rng() % 3) - 1;
            if (val != 0) cur.overrides[s] = val;
        }
        auto feasible = [&](const Functional& phi) {
            auto rb = r_bound(phi);
            return rb.has_value() && *rb <= 1;
        };
        if (!feasible(cur)) cur.overrides.clear();
        long long cur_val = std::llabs(cur(v));
        bool improved = true;
        while (improved) {
            improved = false;
            for (const BasisSymbol& s : syms) {
                long long saved = cur.value(s);
                for (long long cand : {-1LL, 0LL, 1LL}) {
                    if (cand == saved) continue;
                    if (cand == 0) cur.overrides.erase(s);
                    else cur.overrides[s] = cand;
                    if (feasible(cur)) {
                        long long val = std::llabs(cur(v));
                        if (val > cur_val) {
                            cur_val = val;
                            improved = true;
                            saved = cand;
                            continue;
                        }
                    }
                    if (saved == 0) cur.overrides.erase(s);
                    else cur.overrides[s] = saved;
                }
            }
        }
        if (cur_val > best_val) {
            best_val = cur_val;
            best = cur;
        }
    }
    return best;
}

}  // namespace knotdelta
