// Command-line interface: batch computation of knot-diagram invariants,
// Reidemeister move enumeration/replay, R-length bounds, and the built-in
// verification suites.
//
// Exit codes: 0 ok, 1 usage, 2 parse error, 3 limit exceeded,
// 4 inapplicable move, 5 property violation.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "knotdelta/bounds.hpp"
#include "knotdelta/conway.hpp"
#include "knotdelta/corpus.hpp"
#include "knotdelta/errors.hpp"
#include "knotdelta/family.hpp"
#include "knotdelta/moves.hpp"
#include "knotdelta/smoothing.hpp"
#include "knotdelta/verify.hpp"

namespace kd = knotdelta;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitLimit = 3;
constexpr int kExitInapplicable = 4;
constexpr int kExitViolation = 5;

std::string fnv1a_digest(const std::string& text) {
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", h);
    return buf;
}

std::string read_stream(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Input may be a file path, "-" for stdin, or (for convenience) a literal
// PD / group-element string.
std::string read_input(const std::string& arg) {
    if (arg.empty() || arg == "-") return read_stream(std::cin);
    if (std::filesystem::exists(arg)) {
        std::ifstream f(arg);
        if (!f) throw kd::parse_error("cannot read input file: " + arg);
        return read_stream(f);
    }
    return arg;
}

std::string trimmed(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    auto e = s.find_last_not_of(" \t\r\n");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

struct Report {
    std::string command;
    std::string input;
    ordered_json result;
    std::vector<std::string> text_lines;
    int status = kExitOk;
};

void emit(const Report& r, bool json_format, double elapsed_s) {
    if (json_format) {
        ordered_json out;
        out["command"] = r.command;
        out["input_digest"] = fnv1a_digest(r.input);
        out["status"] = r.status;
        out["result"] = r.result;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const std::string& line : r.text_lines) std::cout << line << "\n";
        char buf[64];
        std::snprintf(buf, sizeof buf, "elapsed: %.3fs", elapsed_s);
        std::cout << buf << "\n";
    }
}

ordered_json invariant_payload(const kd::Diagram& d) {
    kd::GroupElement ilk = kd::invariant_ilk(d);
    ordered_json j;
    j["ilk"] = ilk.to_json();
    j["ilk_text"] = ilk.to_text();
    j["writhe"] = kd::writhe(d);
    j["crossing_number"] = kd::crossing_number(d);
    j["H"] = kd::cowrithe(d);
    return j;
}

void invariant_text(const kd::Diagram& d, std::vector<std::string>& lines) {
    lines.push_back("I_lk: " + kd::invariant_ilk(d).to_text());
    lines.push_back("writhe: " + std::to_string(kd::writhe(d)));
    lines.push_back("crossing number: " + std::to_string(kd::crossing_number(d)));
    lines.push_back("H (negative cowrithe): " + std::to_string(kd::cowrithe(d)));
}

int run_verify(Report& rep, const std::string& corpus_arg, bool builtin, unsigned seed) {
    std::vector<kd::CorpusEntry> corpus;
    kd::PropertyResult expectations("corpus-expectations");
    kd::VerifyOptions opts;
    opts.seed = seed;
    bool global_suites = builtin;

    if (builtin) {
        corpus = kd::builtin_corpus(seed);
    } else {
        std::ifstream f(corpus_arg);
        if (!f) throw kd::parse_error("cannot read corpus file: " + corpus_arg);
        json spec;
        try {
            f >> spec;
        } catch (const json::exception& ex) {
            throw kd::parse_error(std::string("corpus file is not valid JSON: ") + ex.what());
        }
        if (!spec.is_array()) throw kd::parse_error("corpus file must be a JSON array");
        int idx = 0;
        for (const json& entry : spec) {
            ++idx;
            std::string pd, name = "entry-" + std::to_string(idx);
            json expect;
            if (entry.is_string()) {
                pd = entry.get<std::string>();
            } else if (entry.is_object() && entry.contains("pd")) {
                pd = entry["pd"].get<std::string>();
                name = entry.value("name", name);
                if (entry.contains("expect")) expect = entry["expect"];
            } else {
                throw kd::parse_error("corpus entries must be PD strings or objects with \"pd\"");
            }
            kd::Diagram d = kd::Diagram::parse_pd(pd);
            corpus.push_back({name, d});
            if (expect.is_object()) {
                if (expect.contains("ilk"))
                    expectations.note(kd::invariant_ilk(d) == kd::GroupElement::from_json(expect["ilk"]),
                                      name + ": I_lk mismatch");
                if (expect.contains("writhe"))
                    expectations.note(kd::writhe(d) == expect["writhe"].get<int>(), name + ": writhe");
                if (expect.contains("H"))
                    expectations.note(kd::cowrithe(d) == expect["H"].get<int>(), name + ": H");
                if (expect.contains("c2"))
                    expectations.note(kd::c2(d) == expect["c2"].get<int>(), name + ": c2");
                if (expect.contains("A"))
                    expectations.note(kd::arnold_a(d) == expect["A"].get<int>(), name + ": A");
                if (expect.contains("deltas")) {
                    auto sites = kd::enumerate_moves(d);
                    for (const json& dj : expect["deltas"]) {
                        int mi = dj.at("move").get<int>();
                        if (mi < 0 || mi >= static_cast<int>(sites.size())) {
                            expectations.note(false, name + ": delta table move index out of range");
                            continue;
                        }
                        kd::GroupElement want = kd::GroupElement::from_json(dj.at("delta"));
                        kd::GroupElement got = kd::classify_delta(d, sites[mi]).change;
                        expectations.note(got == want,
                                          name + ": delta table mismatch at move " +
                                              std::to_string(mi) + " (got " + got.to_text() + ")");
                    }
                }
            }
        }
    }

    opts.global_suites = global_suites;
    std::vector<kd::PropertyResult> results = kd::run_property_suites(corpus, opts);
    if (!builtin) results.push_back(expectations);

    long long total_checks = 0, total_violations = 0;
    ordered_json props = ordered_json::array();
    std::string first_counterexample;
    for (const auto& r : results) {
        total_checks += r.checks;
        total_violations += r.violations;
        ordered_json pj;
        pj["name"] = r.name;
        pj["checks"] = r.checks;
        pj["violations"] = r.violations;
        if (r.violations > 0) pj["counterexample"] = r.counterexample;
        props.push_back(pj);
        if (!r.counterexample.empty() && first_counterexample.empty())
            first_counterexample = r.name + ": " + r.counterexample;
        char buf[160];
        std::snprintf(buf, sizeof buf, "%-28s %6lld checks  %lld violations", r.name.c_str(),
                      r.checks, r.violations);
        rep.text_lines.push_back(buf);
        if (r.violations > 0)
            rep.text_lines.push_back("  counterexample: " + r.counterexample);
    }
    rep.result["corpus"] = builtin ? "builtin" : corpus_arg;
    rep.result["diagrams"] = corpus.size();
    rep.result["properties"] = props;
    rep.result["total_checks"] = total_checks;
    rep.result["total_violations"] = total_violations;
    if (total_violations > 0) {
        rep.result["counterexample"] = first_counterexample;
        rep.text_lines.push_back("FAIL: " + first_counterexample);
        return kExitViolation;
    }
    rep.text_lines.push_back("all properties hold (" + std::to_string(total_checks) + " checks)");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"knot diagram invariants, Reidemeister move deltas, and move-count bounds"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    unsigned seed = 1;
    app.add_option("--seed", seed, "seed for randomized suites");

    std::string input;
    int limit = 12;
    bool bound_only = false;
    std::string moves_arg;
    int family_n = 0;
    std::string family_which;
    std::string corpus_path;
    bool builtin_corpus_flag = false;

    CLI::App* c_inv = app.add_subcommand("invariant", "I_lk, writhe, crossing number, H");
    c_inv->add_option("input", input, "PD file, '-' for stdin, or literal PD text");
    CLI::App* c_moves = app.add_subcommand("moves", "enumerate applicable moves with deltas");
    c_moves->add_option("input", input, "PD file, '-' for stdin, or literal PD text");
    CLI::App* c_apply = app.add_subcommand("apply", "replay a move or move sequence");
    c_apply->add_option("input", input, "PD file, '-' for stdin, or literal PD text");
    c_apply->add_option("--moves", moves_arg, "move JSON (object or array), or a path to one")
        ->required();
    CLI::App* c_rl = app.add_subcommand("rlength", "R-length bound and exact value");
    c_rl->add_option("element", input, "group element, e.g. \"2X_0 + Y_1 - 2Y_0 - X_-1\"");
    c_rl->add_option("--limit", limit, "search depth limit")->capture_default_str();
    c_rl->add_flag("--bound-only", bound_only, "report the certificate bound only");
    CLI::App* c_fam = app.add_subcommand("family", "emit D_n, E_n, or the D_n->E_n sequence");
    c_fam->add_option("n", family_n, "family index")->required()->check(CLI::Range(0, 10));
    c_fam->add_option("which", family_which, "Dn | En | sequence")
        ->required()
        ->check(CLI::IsMember({"Dn", "En", "sequence"}));
    CLI::App* c_c2 = app.add_subcommand("c2", "Conway coefficient c_2 (with H and A)");
    c_c2->add_option("input", input, "PD file, '-' for stdin, or literal PD text");
    CLI::App* c_ar = app.add_subcommand("arnold", "curve invariant A (with c_2 and H)");
    c_ar->add_option("input", input, "PD file, '-' for stdin, or literal PD text");
    CLI::App* c_ver = app.add_subcommand("verify", "run the property suites");
    c_ver->add_option("corpus", corpus_path, "corpus JSON file");
    c_ver->add_flag("--builtin", builtin_corpus_flag, "use the built-in corpus");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    bool json_format = format == "json";
    Report rep;
    auto t0 = std::chrono::steady_clock::now();

    try {
        if (c_inv->parsed() || c_c2->parsed() || c_ar->parsed()) {
            std::string text = trimmed(read_input(input));
            rep.input = text;
            kd::Diagram d = kd::Diagram::parse_pd(text);
            if (c_inv->parsed()) {
                rep.command = "invariant";
                rep.result = invariant_payload(d);
                invariant_text(d, rep.text_lines);
            } else {
                rep.command = c_c2->parsed() ? "c2" : "arnold";
                int cc = kd::c2(d);
                int h = kd::cowrithe(d);
                rep.result["c2"] = cc;
                rep.result["H"] = h;
                rep.result["A"] = h + 4 * cc;
                rep.text_lines.push_back("c2: " + std::to_string(cc));
                rep.text_lines.push_back("H (negative cowrithe): " + std::to_string(h));
                rep.text_lines.push_back("A: " + std::to_string(h + 4 * cc));
            }
        } else if (c_moves->parsed()) {
            rep.command = "moves";
            std::string text = trimmed(read_input(input));
            rep.input = text;
            kd::Diagram d = kd::Diagram::parse_pd(text);
            auto sites = kd::enumerate_moves(d);
            ordered_json arr = ordered_json::array();
            for (const auto& m : sites) {
                ordered_json mj = kd::move_to_json(d, m, true);
                arr.push_back(mj);
                rep.text_lines.push_back(mj.dump());
            }
            rep.result["count"] = sites.size();
            rep.result["moves"] = arr;
            rep.text_lines.push_back(std::to_string(sites.size()) + " applicable moves");
        } else if (c_apply->parsed()) {
            rep.command = "apply";
            std::string text = trimmed(read_input(input));
            rep.input = text;
            kd::Diagram d = kd::Diagram::parse_pd(text);
            std::string mtext = read_input(moves_arg);
            json mj;
            try {
                mj = json::parse(mtext);
            } catch (const json::exception& ex) {
                throw kd::parse_error(std::string("move JSON: ") + ex.what());
            }
            std::vector<kd::MoveSite> seq;
            if (mj.is_array())
                for (const json& one : mj) seq.push_back(kd::move_from_json(one));
            else
                seq.push_back(kd::move_from_json(mj));

            rep.result["before"] = invariant_payload(d);
            ordered_json deltas = ordered_json::array();
            kd::GroupElement total;
            kd::Diagram cur = d;
            for (const auto& m : seq) {
                kd::MoveDelta delta = kd::classify_delta(cur, m);
                cur = kd::apply_move(cur, m);
                total += delta.change;
                ordered_json dj;
                dj["kind"] = kd::move_kind_name(m.kind);
                dj["delta"] = delta.change.to_json();
                dj["case"] = kd::delta_case_label(delta);
                deltas.push_back(dj);
            }
            rep.result["moves_applied"] = seq.size();
            rep.result["deltas"] = deltas;
            rep.result["delta_total"] = total.to_json();
            rep.result["after"] = invariant_payload(cur);
            rep.result["after_pd"] = cur.serialize();
            rep.text_lines.push_back("before I_lk: " + kd::invariant_ilk(d).to_text());
            rep.text_lines.push_back("applied " + std::to_string(seq.size()) +
                                     " moves, total delta: " + total.to_text());
            rep.text_lines.push_back("after  I_lk: " + kd::invariant_ilk(cur).to_text());
            rep.text_lines.push_back("after  PD: " + cur.serialize());
        } else if (c_rl->parsed()) {
            rep.command = "rlength";
            std::string text = trimmed(read_input(input));
            rep.input = text;
            kd::GroupElement v = kd::GroupElement::from_text(text);
            auto lb = kd::lower_bound(v, kd::builtin_functionals());
            rep.result["lower_bound"] = lb.bound;
            rep.result["certificate"] = lb.certificate.empty() ? "-" : lb.certificate;
            rep.text_lines.push_back("element: " + v.to_text());
            rep.text_lines.push_back("lower bound: " + std::to_string(lb.bound) +
                                     (lb.certificate.empty() ? "" : " (certificate " + lb.certificate + ")"));
            if (bound_only) {
                rep.result["exact"] = nullptr;
                rep.result["limit_hit"] = false;
            } else {
                kd::RLengthResult r = kd::rlength_exact(v, limit);
                if (r.limit_hit) {
                    rep.result["exact"] = nullptr;
                    rep.result["limit_hit"] = true;
                    rep.text_lines.push_back("exact: exceeds limit " + std::to_string(limit));
                    rep.status = kExitLimit;
                } else {
                    rep.result["exact"] = r.length;
                    rep.result["limit_hit"] = false;
                    rep.text_lines.push_back("exact R-length: " + std::to_string(r.length));
                }
            }
        } else if (c_fam->parsed()) {
            rep.command = "family";
            rep.input = std::to_string(family_n) + " " + family_which;
            if (family_which == "sequence") {
                auto seq = kd::dn_to_en_sequence(family_n);
                kd::Diagram cur = kd::build_dn(family_n);
                ordered_json arr = ordered_json::array();
                for (const auto& m : seq) {
                    arr.push_back(kd::move_to_json(cur, m, true));
                    cur = kd::apply_move(cur, m);
                }
                rep.result["n"] = family_n;
                rep.result["count"] = seq.size();
                rep.result["moves"] = arr;
                rep.text_lines.push_back(std::to_string(seq.size()) + " moves from D_" +
                                         std::to_string(family_n) + " to E_" + std::to_string(family_n));
                for (const auto& m : arr) rep.text_lines.push_back(m.dump());
            } else {
                kd::Diagram d = family_which == "Dn" ? kd::build_dn(family_n) : kd::build_en(family_n);
                rep.result["n"] = family_n;
                rep.result["which"] = family_which;
                rep.result["pd"] = d.serialize();
                rep.result["crossings"] = d.crossing_count();
                rep.result["ilk"] = kd::invariant_ilk(d).to_json();
                rep.text_lines.push_back(d.serialize());
                rep.text_lines.push_back("I_lk: " + kd::invariant_ilk(d).to_text());
            }
        } else if (c_ver->parsed()) {
            rep.command = "verify";
            if (!builtin_corpus_flag && corpus_path.empty())
                throw CLI::ValidationError("verify", "need a corpus file or --builtin");
            rep.input = builtin_corpus_flag ? "builtin" : corpus_path;
            rep.status = run_verify(rep, corpus_path, builtin_corpus_flag, seed);
        }
    } catch (const kd::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const kd::inapplicable_move& e) {
        std::cerr << "inapplicable move: " << e.what() << "\n";
        return kExitInapplicable;
    } catch (const kd::internal_inconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kExitViolation;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(rep, json_format, elapsed);
    return rep.status;
}
