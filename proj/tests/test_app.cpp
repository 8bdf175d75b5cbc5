#include <algorithm>
#include <filesystem>

#include "doctest.h"
#include "hyp5/app.hpp"

using namespace hyp5;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const auto d = fs::temp_directory_path() / ("hyp5_test_" + name);
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

std::string sorted(std::string s) {
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace

TEST_CASE("record of the most symmetric twelve-cusped manifold") {
    const auto r = invariants_record(parse_code("24B8DPGPDB1"));
    CHECK(r.code == emit_code(canonicalize(parse_code("24B8DPGPDB1")).canonical));
    CHECK(r.symmetries == 1536);
    CHECK(r.h1 == "4,7,0");
    CHECK(r.h2 == "12,4,6");
    CHECK(r.h3 == "20");
    CHECK(r.h4 == 11);
    CHECK(r.cusps == 12);
    CHECK(r.link_types.substr(0, 8) == "JJJJJJJJ");
    CHECK(r.link_types.substr(8) == "AAAA");
    CHECK(r.volume_coefficient == 28);
}

TEST_CASE("record of the most symmetric ten-cusped manifold") {
    const auto r = invariants_record(parse_code("2B7JB47JG81"));
    CHECK(r.symmetries == 1536);
    CHECK(r.h1 == "4,7,0");
    CHECK(r.h2 == "6,7,9");
    CHECK(r.h3 == "12");
    CHECK(r.h4 == 9);
    CHECK(r.cusps == 10);
    CHECK(sorted(r.link_types) == sorted("AADDDDDDDD"));
}

TEST_CASE("records are the same for every code of a class") {
    const auto mc = canonicalize(parse_code("2B7JB47JG81"), true);
    const auto a = invariants_record(mc.members.front());
    const auto b = invariants_record(mc.members.back());
    CHECK(a == b);
}

TEST_CASE("homology text") {
    CHECK(homology_text(AbelianGroup{4, {2, 2, 4}}, false) == "4,2,1");
    CHECK(homology_text(AbelianGroup{12, {}}, true) == "12");
    CHECK(homology_text(AbelianGroup{12, {}}, false) == "12,0,0");
    CHECK(homology_text(AbelianGroup{1, {8}}, true) == "Z+Z/8");
}

TEST_CASE("table order and round trip") {
    std::vector<ManifoldRecord> rs(4);
    rs[0] = {0, "1B", 32, "0,10,1", "1,2,3", "4", 9, 10, "AADDDDDDDD"};
    rs[1] = {0, "1A", 32, "0,10,1", "1,2,3", "4", 11, 12, "JJJJJJJJAAAA"};
    rs[2] = {0, "1C", 64, "0,10,1", "1,2,3", "4,1,0", 9, 10, "AADDDDDDDD"};
    rs[3] = {0, "1A", 16, "0,10,1", "1,2,3", "4", 9, 10, "AADDDDDDDD"};
    order_records(rs);
    CHECK(rs[0].cusps == 12);
    CHECK(rs[1].code == "1C");
    CHECK(rs[2].code == "1B");
    CHECK(rs[3].symmetries == 16);
    for (int i = 0; i < 4; ++i) CHECK(rs[i].row == i + 1);

    Provenance prov{"tables", {{"classes", "4"}}};
    const auto text = records_tsv(rs, prov);
    CHECK(text.rfind("# format: 1\n", 0) == 0);
    CHECK(parse_records_tsv(text) == rs);
    const auto j = nlohmann::json::parse(records_json(rs, prov));
    CHECK(j["records"].size() == 4);
    CHECK(j["records"][0]["N"] == 1);
    CHECK(j["records"][1]["SP"] == "1C");
    CHECK(j["provenance"]["stage"] == "tables");
}

TEST_CASE("store stages are cached and reproducible") {
    const auto dir = scratch("store");
    // A closed orbit stands in for the census.
    const auto mc = canonicalize(parse_code("PVSE8BBGEQ7"), true);
    std::vector<std::uint64_t> codes;
    for (const auto& m : mc.members) codes.push_back(m.pack());
    std::sort(codes.begin(), codes.end());
    std::string log = Provenance{"codes", {}}.header();
    for (auto v : codes) log += emit_code(PairingCode::unpack(v)) + "\n";
    write_file(dir / "codes.txt", log);

    CensusStore store(dir);
    CHECK(store.codes() == codes);
    const auto classes = store.classes();
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].symmetry_order == 512);
    CHECK(parse_classes_tsv(read_file(store.classes_path())).size() == 1);
    const auto records = store.records();
    REQUIRE(records.size() == 1);
    CHECK(records[0].row == 1);
    CHECK(records[0].h1 == "0,10,1");
    CHECK(records[0].h2 == "12,10,0");
    CHECK(records[0].h3 == "24");

    const auto tables = read_file(store.tables_path());
    const auto class_bytes = read_file(store.classes_path());
    fs::remove(store.tables_path());
    CensusStore again(dir);
    CHECK(again.records() == records);
    CHECK(read_file(again.tables_path()) == tables);
    fs::remove(store.classes_path());
    fs::remove(store.tables_path());
    CensusStore cold(dir);
    cold.records();
    CHECK(read_file(cold.classes_path()) == class_bytes);
    CHECK(read_file(cold.tables_path()) == tables);
    CHECK(read_provenance(cold.tables_path()).stage == "tables");
    CHECK(read_provenance(dir / "missing.tsv").stage.empty());
}

TEST_CASE("polytope report") {
    const auto r = polytope_report();
    CHECK(r.pass());
    CHECK(r.lines.size() == 9);
}
