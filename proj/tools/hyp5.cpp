#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "hyp5/app.hpp"
#include "hyp5/cusps.hpp"

using namespace hyp5;

namespace {

struct Options {
    std::string work_dir = "census";
    int jobs = 1;
    std::string format = "tsv";
    std::string out;
    std::string checkpoint;
    std::string prefix;
    bool quiet = false;
};

void emit(const Options& o, const std::string& text) {
    if (o.out.empty())
        std::cout << text;
    else
        write_file(o.out, text);
}

StageProgress progress(const Options& o) {
    if (o.quiet) return {};
    return [last = std::string(), step = std::size_t(0)](const std::string& stage, std::size_t done,
                                                         std::size_t total) mutable {
        const std::size_t pct = total ? done * 100 / total : 100;
        if (stage != last || pct != step || done == total) {
            std::fprintf(stderr, "\r%s %zu/%zu", stage.c_str(), done, total);
            if (done == total) std::fprintf(stderr, "\n");
            last = stage;
            step = pct;
        }
    };
}

int cmd_polytope() {
    const auto r = polytope_report();
    std::cout << r.to_string();
    return r.pass() ? 0 : 1;
}

int cmd_enumerate(const Options& o) {
    EnumerationOptions e;
    e.jobs = o.jobs;
    e.checkpoint_path = o.checkpoint;
    e.prefix = o.prefix;
    e.keep_codes = false;
    if (auto p = progress(o))
        e.progress = [p](int done, int total, std::uint64_t) mutable {
            p("enumerate", static_cast<std::size_t>(done), static_cast<std::size_t>(total));
        };
    const std::filesystem::path out = o.out.empty() ? std::filesystem::path(o.work_dir) / "codes.txt" : std::filesystem::path(o.out);
    const auto res = enumeration_stage(out, e);
    std::cout << "codes " << res.count << "\n";
    std::cout << "nodes " << res.stats.nodes << "\n";
    std::cout << "log " << out.string() << "\n";
    return res.complete ? 0 : 1;
}

int cmd_classify(const Options& o) {
    CensusStore store(o.work_dir, o.jobs, progress(o));
    const auto codes = store.codes(o.checkpoint);
    const auto orbits = count_symmetry_classes(codes);
    const auto classes = store.classes();
    int twelve = 0;
    for (const auto& c : classes) twelve += c.cusps == 12;
    std::cout << "codes " << codes.size() << "\n";
    std::cout << "symmetry classes " << orbits.orbits << "\n";
    std::cout << "isometry classes " << classes.size() << "\n";
    std::cout << "twelve-cusped " << twelve << "\n";
    std::cout << "table " << store.classes_path().string() << "\n";
    return 0;
}

int cmd_invariants(const Options& o, const std::string& code) {
    auto r = invariants_record(parse_code(code));
    const auto tables = std::filesystem::path(o.work_dir) / "tables.tsv";
    if (read_provenance(tables).stage == "tables")
        for (const auto& t : parse_records_tsv(read_file(tables)))
            if (t.code == r.code) r.row = t.row;
    Provenance prov{"invariants", {{"input", code}}};
    if (o.format == "json")
        emit(o, records_json({r}, prov));
    else
        emit(o, records_tsv({r}, prov));
    return 0;
}

int cmd_tables(const Options& o) {
    CensusStore store(o.work_dir, o.jobs, progress(o));
    const auto records = store.records();
    Provenance prov{"tables", {{"classes", std::to_string(records.size())}}};
    if (o.format == "json")
        emit(o, records_json(records, prov));
    else
        emit(o, records_tsv(records, prov));
    return 0;
}

int cmd_verify_special() {
    bool ok = true;
    for (const auto& r : verify_special()) {
        std::cout << r.to_string();
        ok = ok && r.pass();
    }
    const auto cal = link_type_calibration();
    std::cout << "link type calibration\n";
    for (const auto& l : cal.lines) std::cout << "  " << l << "\n";
    std::cout << (cal.fg_separated ? "  PASS" : "  FAIL") << " F/G separated\n";
    std::cout << (cal.ij_separated ? "  PASS" : "  FAIL") << " I/J separated\n";
    ok = ok && cal.fg_separated && cal.ij_separated;
    std::cout << (ok ? "all checks passed\n" : "some checks failed\n");
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Census of cusped hyperbolic 5-manifolds glued from the polytope Q5"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--work-dir", o.work_dir, "Directory holding the census store")->capture_default_str();
    app.add_option("--jobs,-j", o.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"tsv", "json"}))->capture_default_str();
    app.add_option("--out,-o", o.out, "Output file (default: stdout, or the store for enumerate)");
    app.add_flag("--quiet,-q", o.quiet, "No progress output");
    app.fallthrough();

    auto* polytope = app.add_subcommand("polytope", "Face structure of Q5 and P5");
    auto* enumerate = app.add_subcommand("enumerate", "Enumerate proper orientation-preserving codes");
    enumerate->add_option("--checkpoint", o.checkpoint, "Checkpoint file (default: beside the output)");
    enumerate->add_option("--prefix", o.prefix, "Only codes starting with these digits");
    auto* classify = app.add_subcommand("classify", "Symmetry and isometry classes of the census");
    classify->add_option("--checkpoint", o.checkpoint, "Checkpoint file for the enumeration stage");
    auto* invariants = app.add_subcommand("invariants", "Invariants of one code");
    std::string code;
    invariants->add_option("CODE", code, "Eleven-digit side-pairing code")->required();
    auto* tables = app.add_subcommand("tables", "Census table of all isometry classes");
    auto* special = app.add_subcommand("verify-special", "Checks on the nonorientable example and the quotient N");

    CLI11_PARSE(app, argc, argv);
    try {
        if (*polytope) return cmd_polytope();
        if (*enumerate) return cmd_enumerate(o);
        if (*classify) return cmd_classify(o);
        if (*invariants) return cmd_invariants(o, code);
        if (*tables) return cmd_tables(o);
        if (*special) return cmd_verify_special();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
