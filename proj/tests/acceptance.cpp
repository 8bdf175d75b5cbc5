// Census acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "hyp5/app.hpp"
#include "hyp5/cusps.hpp"
#include "hyp5/homology.hpp"
#include "hyp5/reference_data.hpp"

using namespace hyp5;
namespace fs = std::filesystem;

namespace {

// Pinned targets.
constexpr std::uint64_t kProperOrientableCodes = 6616152;
constexpr std::uint64_t kSymmetryClasses = 55168;
constexpr std::size_t kIsometryClasses = 3607;
constexpr int kTwelveCusped = 26;
constexpr int kGoldenRows = 122;
constexpr int kHomologySamples = 100;
constexpr int kInvarianceSamples = 50;
constexpr std::uint32_t kSeed = 5115;
constexpr int kInterruptStride = 48;  // subtrees per simulated session

struct Criterion {
    int id;
    std::string name;
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("failed: " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

std::vector<Criterion> results;
auto started = std::chrono::steady_clock::now();

void report(const Criterion& c) {
    const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    std::printf("%s [%d] %s (t=%.0fs)\n", c.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), t);
    for (const auto& n : c.notes) std::printf("       %s\n", n.c_str());
    std::fflush(stdout);
    results.push_back(c);
}

template <class F>
void run(int id, const std::string& name, F&& body) {
    Criterion c{id, name};
    try {
        body(c);
    } catch (const std::exception& e) {
        c.require(false, std::string("exception: ") + e.what());
    }
    report(c);
}

void absorb(Criterion& c, const Report& r) {
    for (const auto& l : r.lines) {
        if (!l.pass) c.require(false, r.title + ": " + l.name + (l.detail.empty() ? "" : " (" + l.detail + ")"));
    }
    if (r.pass()) c.note(r.title + ": " + std::to_string(r.lines.size()) + " checks");
}

// Code log body without the revision line, for byte comparison across builds.
std::string without_revision(const std::string& text) {
    std::istringstream in(text);
    std::string out, line;
    while (std::getline(in, line))
        if (line.rfind("# revision: ", 0) != 0) out += line + "\n";
    return out;
}

struct GoldenRow {
    std::string code, s, h1, h2, h3, lt;
};

std::vector<GoldenRow> golden_rows() {
    std::ifstream in(HYP5_FIXTURES "/golden_rows.tsv");
    if (!in) throw std::runtime_error("golden fixture missing");
    std::vector<GoldenRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream is(line);
        std::string n;
        GoldenRow r;
        is >> n >> r.code >> r.s >> r.h1 >> r.h2 >> r.h3 >> r.lt;
        rows.push_back(r);
    }
    return rows;
}

std::string sorted(std::string s) {
    std::sort(s.begin(), s.end());
    return s;
}

bool same_link_types(const std::string& got, const std::string& want) {
    if (got.size() != want.size()) return false;
    if (want.size() == 12)
        return sorted(got.substr(0, 8)) == sorted(want.substr(0, 8)) && sorted(got.substr(8)) == sorted(want.substr(8));
    return sorted(got) == sorted(want);
}

int free_rank(const std::string& text) { return std::stoi(text.substr(0, text.find(','))); }

struct Signature {
    std::array<AbelianGroup, 6> homology;
    int cusps = 0;
    int symmetries = 0;
    std::string link_types;
    bool operator==(const Signature&) const = default;
};

Signature signature(const PairingCode& c) {
    return {homology(c).groups, cusp_count(c), symmetry_order(c), link_type_string(c)};
}

std::vector<PairingCode> sample(const std::vector<std::uint64_t>& codes, int n, std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, codes.size() - 1);
    std::vector<PairingCode> out;
    for (int i = 0; i < n; ++i) out.push_back(PairingCode::unpack(codes[pick(rng)]));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Census acceptance run"};
    std::string work_dir = "census";
    int jobs = 1;
    app.add_option("--work-dir", work_dir, "Store directory (stages are reused when present)");
    app.add_option("--jobs", jobs, "Worker threads for enumeration and classification");
    CLI11_PARSE(app, argc, argv);

    CensusStore store(work_dir, jobs);
    std::vector<std::uint64_t> codes;
    std::vector<ClassRecord> classes;
    std::vector<ManifoldRecord> records;

    run(1, "polytope structure of Q5 and P5", [&](Criterion& c) { absorb(c, polytope_report()); });

    run(2, "reflection matrices and symmetry group orders", [&](Criterion& c) {
        Mat6 diag = identity6();
        diag[4][4] = -1;
        c.require(reflection_matrix({0, 0, 0, 0, 1, 0}) == diag, "diagonal reflection");
        const Mat6 block{{{1, 0, 0, 0, 0, 0},
                          {0, 1, 0, 0, 0, 0},
                          {0, 0, 1, 0, 0, 0},
                          {0, 0, 0, -1, -2, 2},
                          {0, 0, 0, -2, -1, 2},
                          {0, 0, 0, -2, -2, 3}}};
        c.require(reflection_matrix({0, 0, 0, 1, 1, 1}) == block, "three-perpendicular reflection");
        const Mat6 far{{{-1, -2, -2, -2, -2, 4},
                        {-2, -1, -2, -2, -2, 4},
                        {-2, -2, -1, -2, -2, 4},
                        {-2, -2, -2, -1, -2, 4},
                        {-2, -2, -2, -2, -1, 4},
                        {-4, -4, -4, -4, -4, 9}}};
        c.require(reflection_matrix({1, 1, 1, 1, 1, 2}) == far, "far-side reflection");
        std::vector<Mat6> sig(sigma5_generators().begin(), sigma5_generators().end());
        const auto sigma = generate_group(sig, 4000);
        c.require(sigma.size() == 1920, "P5 symmetry closure order 1920");
        const auto q = generate_group(q5_symmetry_group(), 8000);
        c.require(q.size() == 3840, "Q5 symmetry closure order 3840");
        c.note("orders " + std::to_string(sigma.size()) + " and " + std::to_string(q.size()));
    });

    run(3, "enumeration count, determinism across workers and interruptions", [&](Criterion& c) {
        codes = store.codes();
        c.require(codes.size() == kProperOrientableCodes, "count " + std::to_string(codes.size()));
        c.note("codes " + std::to_string(codes.size()));

        const fs::path out = fs::path(work_dir) / "determinism" / "codes.txt";
        fs::remove_all(out.parent_path());
        EnumerationOptions o;
        o.jobs = std::max(2, jobs);
        o.keep_codes = false;
        o.max_subtrees = kInterruptStride;
        int sessions = 0;
        EnumerationResult r;
        do {
            r = enumeration_stage(out, o);
            ++sessions;
        } while (!r.complete && sessions < 10000);
        c.require(r.complete, "resumed run completes");
        c.require(sessions > 1, "run was interrupted");
        c.require(without_revision(read_file(out)) == without_revision(read_file(store.codes_path())),
                  "resumed multi-worker log identical to the store log");
        c.note(std::to_string(o.jobs) + " workers, " + std::to_string(sessions) + " sessions");
        fs::remove_all(out.parent_path());
    });

    run(4, "symmetry classes, isometry classes, twelve-cusped classes", [&](Criterion& c) {
        if (codes.empty()) codes = store.codes();
        const auto orbits = count_symmetry_classes(codes);
        c.require(orbits.orbits == kSymmetryClasses, "symmetry classes " + std::to_string(orbits.orbits));
        c.require(orbits.total == codes.size(), "orbits partition the codes");
        classes = store.classes();
        c.require(classes.size() == kIsometryClasses, "isometry classes " + std::to_string(classes.size()));
        std::uint64_t covered = 0;
        int twelve = 0;
        for (const auto& k : classes) {
            covered += k.orbit_size;
            twelve += k.cusps == 12;
        }
        c.require(covered == codes.size(), "classes cover the codes");
        c.require(twelve == kTwelveCusped, "twelve-cusped " + std::to_string(twelve));
        c.note(std::to_string(orbits.orbits) + " / " + std::to_string(classes.size()) + " / " +
               std::to_string(twelve));
    });

    run(5, "golden table rows and link type calibration", [&](Criterion& c) {
        const auto cal = link_type_calibration();
        c.require(cal.fg_separated, "F/G calibration");
        c.require(cal.ij_separated, "I/J calibration");
        c.note("calibration over " + std::to_string(cal.reference_groups) + " reference groups");

        records = store.records();
        std::map<std::string, const ManifoldRecord*> by_code;
        for (const auto& r : records) by_code[r.code] = &r;
        const auto rows = golden_rows();
        c.require(static_cast<int>(rows.size()) == kGoldenRows, "fixture rows " + std::to_string(rows.size()));
        int matched = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& g = rows[i];
            const auto key = emit_code(canonicalize(parse_code(g.code)).canonical);
            const auto it = by_code.find(key);
            if (it == by_code.end()) {
                c.require(false, g.code + " not in the census");
                continue;
            }
            const auto& r = *it->second;
            const int cusps = static_cast<int>(g.lt.size());
            const bool ok = std::to_string(r.symmetries) == g.s && r.h1 == g.h1 && r.h2 == g.h2 && r.h3 == g.h3 &&
                            r.h4 == cusps - 1 && r.cusps == cusps && same_link_types(r.link_types, g.lt);
            c.require(ok, g.code + ": got S " + std::to_string(r.symmetries) + " " + r.h1 + " " + r.h2 + " " +
                              r.h3 + " " + r.link_types);
            if (i < 26) c.require(r.row <= 26, g.code + " outside the twelve-cusped block");
            matched += ok;
        }
        c.note(std::to_string(matched) + " of " + std::to_string(rows.size()) + " rows match");
    });

    run(6, "homology by presentation and by chain complex; Euler characteristic and H4", [&](Criterion& c) {
        std::mt19937 rng(kSeed);
        if (codes.empty()) {
            c.require(false, "census codes unavailable");
            return;
        }
        int agree = 0;
        for (const auto& code : sample(codes, kHomologySamples, rng)) {
            const auto h = homology(code);
            const bool ok = h1_via_presentation(expand(code)) == h[1];
            c.require(ok, emit_code(code) + " H1 routes disagree");
            agree += ok;
        }
        c.note(std::to_string(agree) + " of " + std::to_string(kHomologySamples) + " sampled codes agree");
        int good = 0;
        for (const auto& r : records) {
            const int chi = 1 - free_rank(r.h1) + free_rank(r.h2) - free_rank(r.h3) + r.h4;
            const bool ok = chi == 0 && r.h4 == r.cusps - 1;
            c.require(ok, r.code + " chi " + std::to_string(chi));
            good += ok;
        }
        c.require(records.size() == kIsometryClasses, "all classes checked");
        c.note(std::to_string(good) + " classes with chi = 0 and H4 = cusps - 1");
    });

    run(7, "nonorientable example", [&](Criterion& c) { absorb(c, verify_nonorientable_example()); });

    run(8, "quotient group, the manifold N and the volume ledger", [&](Criterion& c) {
        absorb(c, verify_quotient_group());
        absorb(c, verify_n_side_pairing());
        absorb(c, verify_n_invariants());
        absorb(c, volume_ledger());
    });

    run(9, "invariance under symmetries and inside-out moves", [&](Criterion& c) {
        std::mt19937 rng(kSeed + 1);
        if (codes.empty()) {
            c.require(false, "census codes unavailable");
            return;
        }
        const auto& sa = SymmetryAction::get();
        std::uniform_int_distribution<std::size_t> sym(0, sa.elements.size() - 1);
        std::uniform_int_distribution<int> vertex(2, 16);
        int good = 0;
        for (const auto& code : sample(codes, kInvarianceSamples, rng)) {
            const auto base = signature(code);
            const bool by_symmetry = signature(act_symmetry(sa.elements[sym(rng)], code)) == base;
            const bool by_move = signature(inside_out(code, vertex(rng))) == base;
            c.require(by_symmetry, emit_code(code) + " changed by a symmetry");
            c.require(by_move, emit_code(code) + " changed by an inside-out move");
            good += by_symmetry && by_move;
        }
        c.note(std::to_string(good) + " of " + std::to_string(kInvarianceSamples) + " codes invariant");
    });

    const bool all = std::all_of(results.begin(), results.end(), [](const Criterion& c) { return c.pass; });
    std::printf("%s: %zu criteria\n", all ? "ALL PASS" : "SOME FAILED", results.size());
    return all ? 0 : 1;
}
