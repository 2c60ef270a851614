#ifndef KNOTDELTA_CORPUS_HPP
#define KNOTDELTA_CORPUS_HPP

#include <random>
#include <string>
#include <vector>

#include "knotdelta/diagram.hpp"

namespace knotdelta {

struct CorpusEntry {
    std::string name;
    Diagram diagram;
};

extern const char* const kTrefoilPd;
extern const char* const kFigureEightPd;
extern const char* const kPositiveKinkPd;
extern const char* const kNegativeKinkPd;

/// Realizable pseudo-random diagram grown from the trivial diagram by
/// random insertions with occasional RIII shuffles.  Deterministic per rng
/// state.
Diagram random_diagram(std::mt19937& rng, int target_crossings);

/// The standard corpus: trivial diagram, both kinks, both trefoils, the
/// figure-eight knot, D_n/E_n for n <= 5, and seeded random diagrams.
std::vector<CorpusEntry> builtin_corpus(unsigned seed);

}  // namespace knotdelta

#endif
