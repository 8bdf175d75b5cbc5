#include "hyp5/app.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hyp5/cusps.hpp"
#include "hyp5/homology.hpp"

#ifndef HYP5_REVISION
#define HYP5_REVISION "unknown"
#endif

namespace hyp5 {

namespace fs = std::filesystem;

std::string source_revision() { return HYP5_REVISION; }

std::string Provenance::header() const {
    std::ostringstream os;
    os << "# format: " << kStoreFormatVersion << "\n";
    os << "# stage: " << stage << "\n";
    os << "# revision: " << source_revision() << "\n";
    for (const auto& [k, v] : params) os << "# " << k << ": " << v << "\n";
    return os.str();
}

nlohmann::json Provenance::to_json() const {
    nlohmann::json j;
    j["format"] = kStoreFormatVersion;
    j["stage"] = stage;
    j["revision"] = source_revision();
    nlohmann::json p = nlohmann::json::object();
    for (const auto& [k, v] : params) p[k] = v;
    j["params"] = p;
    return j;
}

Provenance read_provenance(const fs::path& path) {
    std::ifstream in(path);
    Provenance p;
    std::string line;
    bool format_ok = false;
    while (std::getline(in, line) && line.rfind("# ", 0) == 0) {
        const auto colon = line.find(": ");
        if (colon == std::string::npos) continue;
        const std::string key = line.substr(2, colon - 2), value = line.substr(colon + 2);
        if (key == "format")
            format_ok = value == std::to_string(kStoreFormatVersion);
        else if (key == "stage")
            p.stage = value;
        else if (key != "revision")
            p.params.emplace_back(key, value);
    }
    if (!format_ok) p.stage.clear();
    return p;
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    const fs::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << text;
        if (!out.flush()) throw std::runtime_error("write failed: " + tmp.string());
    }
    fs::rename(tmp, path);
}

std::string homology_text(const AbelianGroup& g, bool compact_when_free) {
    const auto t = g.triple();
    if (!t) return g.to_string();
    if (compact_when_free && (*t)[1] == 0 && (*t)[2] == 0) return std::to_string((*t)[0]);
    return std::to_string((*t)[0]) + "," + std::to_string((*t)[1]) + "," + std::to_string((*t)[2]);
}

ManifoldRecord invariants_record(const PairingCode& code) {
    const auto mc = canonicalize(code);
    const auto h = homology(mc.canonical);
    ManifoldRecord r;
    r.code = emit_code(mc.canonical);
    r.symmetries = mc.symmetry_order;
    r.h1 = homology_text(h[1], false);
    r.h2 = homology_text(h[2], false);
    r.h3 = homology_text(h[3], true);
    r.h4 = h[4].rank;
    r.cusps = cusp_count(mc.canonical);
    r.link_types = link_type_string(mc.canonical);
    return r;
}

void order_records(std::vector<ManifoldRecord>& records) {
    std::sort(records.begin(), records.end(), [](const ManifoldRecord& a, const ManifoldRecord& b) {
        if (a.cusps != b.cusps) return a.cusps > b.cusps;
        if (a.symmetries != b.symmetries) return a.symmetries > b.symmetries;
        return a.code < b.code;
    });
    for (std::size_t i = 0; i < records.size(); ++i) records[i].row = static_cast<int>(i) + 1;
}

std::string records_tsv(const std::vector<ManifoldRecord>& records, const Provenance& prov) {
    std::ostringstream os;
    os << prov.header();
    os << "N\tSP\tS\tH1\tH2\tH3\tH4\tcusps\tLT\n";
    for (const auto& r : records)
        os << (r.row > 0 ? std::to_string(r.row) : "-") << '\t' << r.code << '\t' << r.symmetries << '\t'
           << r.h1 << '\t' << r.h2 << '\t' << r.h3 << '\t' << r.h4 << '\t' << r.cusps << '\t' << r.link_types
           << '\n';
    return os.str();
}

std::vector<ManifoldRecord> parse_records_tsv(const std::string& text) {
    std::istringstream in(text);
    std::vector<ManifoldRecord> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("N\t", 0) == 0) continue;
        std::istringstream is(line);
        ManifoldRecord r;
        std::string row;
        if (!(is >> row >> r.code >> r.symmetries >> r.h1 >> r.h2 >> r.h3 >> r.h4 >> r.cusps >> r.link_types))
            throw std::runtime_error("malformed table line: " + line);
        r.row = row == "-" ? 0 : std::stoi(row);
        out.push_back(std::move(r));
    }
    return out;
}

nlohmann::json record_json(const ManifoldRecord& r) {
    nlohmann::json j;
    if (r.row > 0) j["N"] = r.row;
    j["SP"] = r.code;
    j["S"] = r.symmetries;
    j["H1"] = r.h1;
    j["H2"] = r.h2;
    j["H3"] = r.h3;
    j["H4"] = r.h4;
    j["cusps"] = r.cusps;
    j["LT"] = r.link_types;
    j["volume_zeta3"] = r.volume_coefficient;
    return j;
}

std::string records_json(const std::vector<ManifoldRecord>& records, const Provenance& prov) {
    nlohmann::json j;
    j["provenance"] = prov.to_json();
    j["records"] = nlohmann::json::array();
    for (const auto& r : records) j["records"].push_back(record_json(r));
    return j.dump(1) + "\n";
}

namespace {

std::string codes_text(const std::vector<std::uint64_t>& codes, const Provenance& prov) {
    std::string s = prov.header();
    s.reserve(s.size() + codes.size() * 12);
    for (auto v : codes) {
        s += emit_code(PairingCode::unpack(v));
        s += '\n';
    }
    return s;
}

}  // namespace

EnumerationResult enumeration_stage(const fs::path& out, EnumerationOptions opts) {
    if (out.has_parent_path()) fs::create_directories(out.parent_path());
    const std::string partial = out.string() + ".partial";
    opts.out_path = partial;
    if (opts.checkpoint_path.empty()) opts.checkpoint_path = out.string() + ".ckpt";
    const bool keep = opts.keep_codes;
    opts.keep_codes = true;
    auto res = enumerate_proper_orientable(opts);
    if (!res.complete) return res;
    Provenance prov{"codes",
                    {{"prefix", opts.prefix},
                     {"orientable_prefilter", opts.orientable_prefilter ? "1" : "0"},
                     {"count", std::to_string(res.count)}}};
    write_file(out, codes_text(res.codes, prov));
    fs::remove(partial);
    fs::remove(opts.checkpoint_path);
    if (!keep) res.codes.clear();
    return res;
}

std::string classes_tsv(const std::vector<ClassRecord>& classes, const Provenance& prov) {
    std::ostringstream os;
    os << prov.header();
    os << "SP\tS\torbit\tcusps\n";
    for (const auto& c : classes)
        os << emit_code(c.canonical) << '\t' << c.symmetry_order << '\t' << c.orbit_size << '\t' << c.cusps << '\n';
    return os.str();
}

std::vector<ClassRecord> parse_classes_tsv(const std::string& text) {
    std::istringstream in(text);
    std::vector<ClassRecord> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("SP\t", 0) == 0) continue;
        std::istringstream is(line);
        std::string code;
        ClassRecord c;
        if (!(is >> code >> c.symmetry_order >> c.orbit_size >> c.cusps))
            throw std::runtime_error("malformed class line: " + line);
        c.canonical = parse_code(code);
        out.push_back(c);
    }
    return out;
}

CensusStore::CensusStore(fs::path dir, int jobs, StageProgress progress)
    : dir_(std::move(dir)), jobs_(jobs), progress_(std::move(progress)) {
    fs::create_directories(dir_);
}

std::vector<std::uint64_t> CensusStore::codes(const std::string& checkpoint) {
    if (read_provenance(codes_path()).stage == "codes") return read_code_log(codes_path().string());
    EnumerationOptions o;
    o.jobs = jobs_;
    o.checkpoint_path = checkpoint;
    if (progress_)
        o.progress = [this](int done, int total, std::uint64_t) {
            progress_("enumerate", static_cast<std::size_t>(done), static_cast<std::size_t>(total));
        };
    auto res = enumeration_stage(codes_path(), o);
    if (!res.complete) throw std::runtime_error("enumeration did not complete");
    return std::move(res.codes);
}

std::vector<ClassRecord> CensusStore::classes() {
    if (read_provenance(classes_path()).stage == "classes") return parse_classes_tsv(read_file(classes_path()));
    const auto all = codes();
    std::function<void(std::size_t, std::size_t)> cb;
    if (progress_) cb = [this](std::size_t d, std::size_t t) { progress_("classify", d, t); };
    auto classes = isometry_classes(all, cb);
    Provenance prov{"classes", {{"codes", std::to_string(all.size())}, {"classes", std::to_string(classes.size())}}};
    write_file(classes_path(), classes_tsv(classes, prov));
    return classes;
}

std::vector<ManifoldRecord> CensusStore::records() {
    if (read_provenance(tables_path()).stage == "tables") return parse_records_tsv(read_file(tables_path()));
    const auto classes = this->classes();
    std::vector<ManifoldRecord> records;
    records.reserve(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) {
        records.push_back(invariants_record(classes[i].canonical));
        if (progress_) progress_("invariants", i + 1, classes.size());
    }
    order_records(records);
    Provenance prov{"tables", {{"classes", std::to_string(records.size())}}};
    write_file(tables_path(), records_tsv(records, prov));
    return records;
}

Report polytope_report() {
    Report rep{"polytope structure", {}};
    const auto q = face_lattice(build_q5());
    const auto f = q.f_vector();
    rep.check("Q5 f-vector", f == std::array<long, 5>{250, 1120, 1360, 560, 72},
              std::to_string(f[0]) + " " + std::to_string(f[1]) + " " + std::to_string(f[2]) + " " +
                  std::to_string(f[3]) + " " + std::to_string(f[4]));
    rep.check("Q5 Euler sum", q.euler_sum() == 1, std::to_string(q.euler_sum()));
    auto t = q.typed_counts();
    auto typed = [&](std::string name, std::vector<std::pair<FaceType, long>> want) {
        bool ok = true;
        std::string detail;
        for (const auto& [type, n] : want) {
            ok = ok && t[type] == n;
            if (!detail.empty()) detail += ", ";
            detail += std::string(to_string(type)) + " " + std::to_string(t[type]);
        }
        rep.check(std::move(name), ok, detail);
    };
    typed("Q5 vertices", {{FaceType::ActualVertex, 160}, {FaceType::LargeIdealVertex, 10}, {FaceType::SmallIdealVertex, 80}});
    typed("Q5 edges", {{FaceType::RayEdge, 800}, {FaceType::LineEdge, 320}});
    typed("Q5 2-faces", {{FaceType::Triangle, 960}, {FaceType::Rhombus, 320}, {FaceType::IdealSquare, 80}});
    typed("Q5 ridges", {{FaceType::SmallRidge, 320}, {FaceType::LargeRidge, 240}});
    typed("Q5 sides", {{FaceType::SmallSide, 32}, {FaceType::LargeSide, 40}});

    const auto p = face_lattice(build_p5());
    const auto pf = p.f_vector();
    rep.check("P5 sides and vertices",
              p.polytope.sides.size() == 16 && p.polytope.actual_vertices.size() == 16 &&
                  p.polytope.ideal_vertices.size() == 10,
              "f-vector " + std::to_string(pf[0]) + " " + std::to_string(pf[1]) + " " + std::to_string(pf[2]) +
                  " " + std::to_string(pf[3]) + " " + std::to_string(pf[4]));
    rep.check("P5 Euler sum", p.euler_sum() == 1, std::to_string(p.euler_sum()));
    return rep;
}

}  // namespace hyp5
