#include "knotdelta/corpus.hpp"

#include "knotdelta/family.hpp"
#include "knotdelta/moves.hpp"

namespace knotdelta {

const char* const kTrefoilPd = "PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]";
const char* const kFigureEightPd = "PD[X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)]";
const char* const kPositiveKinkPd = "PD[X(1,2,2,1)]";
const char* const kNegativeKinkPd = "PD[X(1,1,2,2)]";

Diagram random_diagram(std::mt19937& rng, int target_crossings) {
    Diagram d = Diagram::unknot();
    while (d.crossing_count() < target_crossings) {
        std::vector<MoveSite> inserts;
        for (const MoveSite& m : enumerate_moves(d))
            if (m.kind == MoveKind::R1Insert || m.kind == MoveKind::R2Insert)
                inserts.push_back(m);
        d = apply_move(d, inserts[rng() % inserts.size()]);
        if (rng() % 3 == 0) {
            std::vector<MoveSite> shuffles;
            for (const MoveSite& m : enumerate_moves(d))
                if (m.kind == MoveKind::R3) shuffles.push_back(m);
            if (!shuffles.empty()) d = apply_move(d, shuffles[rng() % shuffles.size()]);
        }
    }
    return d;
}

std::vector<CorpusEntry> builtin_corpus(unsigned seed) {
    std::vector<CorpusEntry> out;
    out.push_back({"unknot-0", Diagram::unknot()});
    out.push_back({"kink-pos", Diagram::parse_pd(kPositiveKinkPd)});
    out.push_back({"kink-neg", Diagram::parse_pd(kNegativeKinkPd)});
    Diagram trefoil = Diagram::parse_pd(kTrefoilPd);
    out.push_back({"trefoil", trefoil});
    out.push_back({"trefoil-mirror", trefoil.mirrored()});
    out.push_back({"figure-eight", Diagram::parse_pd(kFigureEightPd)});
    for (int n = 1; n <= 5; ++n) {
        out.push_back({"D" + std::to_string(n), build_dn(n)});
        out.push_back({"E" + std::to_string(n), build_en(n)});
    }
    std::mt19937 rng(seed);
    const int sizes[] = {4, 5, 6, 7, 8, 8};
    for (int i = 0; i < 6; ++i)
        out.push_back({"random-" + std::to_string(i + 1), random_diagram(rng, sizes[i])});
    return out;
}

}  // namespace knotdelta
