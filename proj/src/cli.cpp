#include "tmpart/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "CLI11.hpp"

#include "tmpart/constructions.hpp"
#include "tmpart/json_io.hpp"

namespace tmpart::cli {
namespace {

// TMPART_LOG=quiet suppresses the timing line on stderr.
bool quiet() {
    const char* v = std::getenv("TMPART_LOG");
    return v && std::string_view(v) == "quiet";
}

NatSet parse_int_list(const std::string& text) {
    std::vector<std::uint64_t> elems;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            if (item.front() == '-') throw std::invalid_argument("negative");
            v = std::stoull(item, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != item.size()) throw std::invalid_argument("bad integer in list: '" + item + "'");
        elems.push_back(v);
    }
    return NatSet::from_elements(elems);
}

struct Options {
    // construct
    std::string family;
    unsigned l = 0;
    std::string out_file;
    // solve / witness
    std::uint64_t m = 0;
    std::string intersection;
    bool trace = false;
    // search
    std::uint64_t m_min = 0, m_max = 0;
    unsigned k = 0;
    std::string mode;
    unsigned shards = 1;
    int shard_index = -1;
    // verify / gfcheck
    std::string pair_file;
    std::int64_t n_max = -1;
    // lemmas
    unsigned which = 0;
    std::uint64_t lemma_max = 0;
    bool include_boundary = false;
};

int cmd_construct(const Options& o, std::ostream& out) {
    const auto family = parse_family(o.family);
    if (!family) throw std::invalid_argument("unknown family '" + o.family + "'");
    const auto pair = build(*family, o.l);
    if (!o.out_file.empty()) write_json_file(o.out_file, to_json(pair));
    Json j;
    j["family"] = to_string(*family);
    j["l"] = o.l;
    j["m"] = pair.m();
    j["C"] = to_json(pair.c());
    j["D"] = to_json(pair.d());
    j["intersection"] = to_json(pair.intersection());
    out << j.dump() << '\n';
    return kExitOk;
}

int cmd_solve(const Options& o, std::ostream& out) {
    const auto outcome = solve_and_verify(o.m, parse_int_list(o.intersection), o.trace);
    out << to_json(outcome).dump() << '\n';
    return outcome.status == SolveStatus::Solved ? kExitOk : kExitFailed;
}

int cmd_search(const Options& o, std::ostream& out) {
    SearchParams p;
    p.m_min = o.m_min;
    p.m_max = o.m_max;
    p.k = o.k;
    p.mode = o.mode == "brute" ? SearchMode::Brute : SearchMode::Determinized;
    p.cross_check = p.mode == SearchMode::Brute;
    p.shard_count = o.shards;
    if (o.shard_index >= 0) p.shard_index = static_cast<unsigned>(o.shard_index);
    const auto cert = run_search(p);
    out << to_json(cert).dump() << '\n';
    return cert.uniqueness_violations.empty() && cert.solver_mismatches.empty() ? kExitOk : kExitFailed;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const auto pair = read_pair_file(o.pair_file);
    const std::uint64_t n_max = o.n_max >= 0 ? static_cast<std::uint64_t>(o.n_max) : 2 * pair.m();
    const auto pc = rep_profile(pair.c(), n_max);
    const auto pd = rep_profile(pair.d(), n_max);
    std::optional<std::uint64_t> diverge;
    for (std::uint64_t n = 0; n <= n_max && !diverge; ++n)
        if (pc.counts[n] != pd.counts[n]) diverge = n;
    Json j;
    j["m"] = pair.m();
    j["intersection"] = to_json(pair.intersection());
    j["n_max"] = n_max;
    j["equal"] = !diverge;
    j["first_divergence"] = diverge ? Json(*diverge) : Json(nullptr);
    j["profile_C"] = to_json(pc);
    j["profile_D"] = to_json(pd);
    out << j.dump() << '\n';
    return diverge ? kExitFailed : kExitOk;
}

int cmd_gfcheck(const Options& o, std::ostream& out) {
    const auto pair = read_pair_file(o.pair_file);
    const auto degree = 2 * pair.m() + 2;
    const bool c_ok = check_square_identity(pair.c(), degree);
    const bool d_ok = check_square_identity(pair.d(), degree);
    Json j;
    j["m"] = pair.m();
    j["intersection"] = to_json(pair.intersection());
    j["square_identity"] = Json{{"C", c_ok}, {"D", d_ok}};
    bool ok = c_ok && d_ok;
    // The pair identities are stated for two-point intersections only.
    if (pair.intersection().size() == 2) {
        const auto rep = check_pair_identities(pair);
        j["pair_identities"] = to_json(rep);
        ok = ok && rep.ok();
    } else {
        j["pair_identities"] = nullptr;
    }
    j["ok"] = ok;
    out << j.dump() << '\n';
    return ok ? kExitOk : kExitFailed;
}

int cmd_lemmas(const Options& o, std::ostream& out) {
    const auto cls = o.which == 3 ? TmClass::EvenOnes : TmClass::OddOnes;
    const auto rep = verify_digit_lemma(o.lemma_max, cls, o.include_boundary);
    out << to_json(rep).dump() << '\n';
    return rep.violations.empty() ? kExitOk : kExitFailed;
}

int cmd_witness(const Options& o, std::ostream& out) {
    const auto n = thue_morse_witness(o.m);
    const auto a = NatSet::tm_range(o.m, TmClass::EvenOnes);
    const auto b = NatSet::tm_range(o.m, TmClass::OddOnes);
    Json j;
    j["m"] = o.m;
    j["witness"] = n;
    j["R_A"] = rep_same(a, n);
    j["R_B"] = rep_same(b, n);
    out << j.dump() << '\n';
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Verification tools for partitions of [0, m] with equal representation functions", "tmpart"};
    app.require_subcommand(1);
    Options o;

    auto* construct = app.add_subcommand("construct", "Build an explicit solution family");
    construct->add_option("--family", o.family, "theorem11 | remark12 | theoremC | dombi")
        ->required()
        ->check(CLI::IsMember({"theorem11", "remark12", "theoremC", "dombi"}));
    construct->add_option("--l", o.l, "Family parameter l >= 1")->required();
    construct->add_option("--out", o.out_file, "Also write the pair file here");

    auto* solve = app.add_subcommand("solve", "Reconstruct the unique pair for (m, R)");
    solve->add_option("--m", o.m, "Upper end of [0, m]")->required();
    solve->add_option("--intersection", o.intersection, "Comma-separated intersection, e.g. 6,7");
    solve->add_flag("--trace", o.trace, "Include the per-step forcing log");

    auto* search = app.add_subcommand("search", "Scan m ranges for solutions");
    search->add_option("--m-min", o.m_min)->required();
    search->add_option("--m-max", o.m_max)->required();
    search->add_option("--k", o.k, "Intersection size (0, 1 or 2)")->required();
    search->add_option("--mode", o.mode, "brute | det")->required()->check(CLI::IsMember({"brute", "det"}));
    search->add_option("--shards", o.shards, "Number of shards")->check(CLI::PositiveNumber);
    search->add_option("--shard-index", o.shard_index, "Run only this shard")->check(CLI::NonNegativeNumber);

    auto* verify = app.add_subcommand("verify", "Compare R_C and R_D for a pair file");
    verify->add_option("--pair", o.pair_file)->required();
    verify->add_option("--n-max", o.n_max, "Defaults to 2m")->check(CLI::NonNegativeNumber);

    auto* gfcheck = app.add_subcommand("gfcheck", "Check the generating-function identities for a pair file");
    gfcheck->add_option("--pair", o.pair_file)->required();

    auto* lemmas = app.add_subcommand("lemmas", "Scan the binary-digit lemmas");
    lemmas->add_option("--which", o.which, "3 (set A) or 4 (set B)")->required()->check(CLI::IsMember({3, 4}));
    lemmas->add_option("--max", o.lemma_max, "Largest M scanned")->required();
    lemmas->add_flag("--include-boundary", o.include_boundary, "Also evaluate M = 1, 2");

    auto* witness = app.add_subcommand("witness", "Find n in (m, 2m) where the Thue-Morse halves differ");
    witness->add_option("--m", o.m)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    const auto* sub = app.get_subcommands().front();
    const auto t0 = std::chrono::steady_clock::now();
    int code = kExitUsage;
    try {
        if (sub == construct) code = cmd_construct(o, out);
        else if (sub == solve) code = cmd_solve(o, out);
        else if (sub == search) code = cmd_search(o, out);
        else if (sub == verify) code = cmd_verify(o, out);
        else if (sub == gfcheck) code = cmd_gfcheck(o, out);
        else if (sub == lemmas) code = cmd_lemmas(o, out);
        else if (sub == witness) code = cmd_witness(o, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::logic_error& e) {
        err << "check failed: " << e.what() << '\n';
        return kExitFailed;
    }
    if (!quiet()) {
        const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        err << "[tmpart] " << sub->get_name() << " finished in " << ms << " ms\n";
    }
    return code;
}

int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace tmpart::cli
