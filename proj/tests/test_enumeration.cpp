#include <algorithm>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "hyp5/app.hpp"
#include "hyp5/enumeration.hpp"

using namespace hyp5;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
    const auto d = fs::temp_directory_path() / ("hyp5_test_" + name);
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

}  // namespace

TEST_CASE("emitted codes are proper, orientation preserving and ascending") {
    EnumerationOptions o;
    o.prefix = "24B";
    const auto r = enumerate_proper_orientable(o);
    REQUIRE(r.complete);
    REQUIRE(r.count == r.codes.size());
    REQUIRE(r.count > 0);
    CHECK(std::is_sorted(r.codes.begin(), r.codes.end()));
    CHECK(std::adjacent_find(r.codes.begin(), r.codes.end()) == r.codes.end());
    const auto conds = cycle_conditions(q5_lattice());
    for (std::size_t i = 0; i < r.codes.size(); i += 97) {
        const auto c = PairingCode::unpack(r.codes[i]);
        CAPTURE(emit_code(c));
        CHECK(emit_code(c).rfind("24B", 0) == 0);
        CHECK(is_orientation_preserving(c));
        CHECK(satisfies_cycle_conditions(c, conds));
        CHECK(is_proper(expand(c), q5_lattice()));
    }
}

TEST_CASE("the orientability prefilter only removes orientation-reversing codes") {
    EnumerationOptions with, without;
    with.prefix = without.prefix = "24B";
    without.orientable_prefilter = false;
    const auto a = enumerate_proper_orientable(with);
    const auto b = enumerate_proper_orientable(without);
    REQUIRE(b.codes.size() > a.codes.size());
    CHECK(std::includes(b.codes.begin(), b.codes.end(), a.codes.begin(), a.codes.end()));
    for (std::size_t i = 0; i < b.codes.size(); i += 997) {
        const auto c = PairingCode::unpack(b.codes[i]);
        CHECK(is_orientation_preserving(c) == std::binary_search(a.codes.begin(), a.codes.end(), b.codes[i]));
        if (i % 20 == 0) CHECK(is_proper(expand(c), q5_lattice()));
    }
}

TEST_CASE("interrupted multi-worker runs resume to the bytes of a cold run") {
    const auto dir = scratch("resume");
    EnumerationOptions cold;
    cold.prefix = "2";
    cold.out_path = (dir / "cold.log").string();
    const auto a = enumerate_proper_orientable(cold);
    REQUIRE(a.complete);

    EnumerationOptions warm = cold;
    warm.jobs = 3;
    warm.out_path = (dir / "warm.log").string();
    warm.checkpoint_path = (dir / "warm.ckpt").string();
    warm.max_subtrees = 4;
    int rounds = 0;
    EnumerationResult b;
    do {
        b = enumerate_proper_orientable(warm);
        ++rounds;
    } while (!b.complete && rounds < 100);
    CHECK(rounds > 2);
    REQUIRE(b.complete);
    CHECK(b.count == a.count);
    CHECK(b.codes == a.codes);
    CHECK(read_file(cold.out_path) == read_file(warm.out_path));
    CHECK(read_code_log(warm.out_path) == a.codes);
}

TEST_CASE("checkpoint validation") {
    const auto dir = scratch("ckpt");
    EnumerationOptions o;
    o.prefix = "24";
    o.out_path = (dir / "c.log").string();
    o.checkpoint_path = (dir / "c.ckpt").string();

    std::ofstream(o.checkpoint_path).close();
    const auto full = enumerate_proper_orientable(o);
    CHECK(full.complete);

    EnumerationOptions other = o;
    other.prefix = "25";
    CHECK_THROWS_AS(enumerate_proper_orientable(other), CheckpointError);

    std::ofstream(o.checkpoint_path) << "garbage\n";
    CHECK_THROWS_AS(enumerate_proper_orientable(o), CheckpointError);

    EnumerationOptions no_log = o;
    no_log.out_path.clear();
    fs::remove(o.checkpoint_path);
    o.max_subtrees = 0;
    enumerate_proper_orientable(o);
    CHECK_THROWS_AS(enumerate_proper_orientable(no_log), CheckpointError);
}

TEST_CASE("enumeration stage writes a headed log and clears its scratch files") {
    const auto dir = scratch("stage");
    EnumerationOptions o;
    o.prefix = "24B";
    const auto r = enumeration_stage(dir / "codes.txt", o);
    REQUIRE(r.complete);
    CHECK_FALSE(fs::exists(dir / "codes.txt.partial"));
    CHECK_FALSE(fs::exists(dir / "codes.txt.ckpt"));
    const auto p = read_provenance(dir / "codes.txt");
    CHECK(p.stage == "codes");
    CHECK(std::find(p.params.begin(), p.params.end(), std::pair<std::string, std::string>{"prefix", "24B"}) !=
          p.params.end());
    CHECK(read_code_log((dir / "codes.txt").string()) == r.codes);
    const auto first = read_file(dir / "codes.txt");
    enumeration_stage(dir / "codes.txt", o);
    CHECK(read_file(dir / "codes.txt") == first);
}
