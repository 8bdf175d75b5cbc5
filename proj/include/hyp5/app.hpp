#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hyp5/classification.hpp"
#include "hyp5/enumeration.hpp"
#include "hyp5/smith.hpp"
#include "hyp5/special.hpp"

namespace hyp5 {

inline constexpr int kStoreFormatVersion = 1;
inline constexpr int kVolumeCoefficient = 28;  // vol = 28 zeta(3) for every census manifold

// Build revision baked in at configure time.
std::string source_revision();

// Header carried by every file the app writes. Only parameters that affect the
// content belong here, so reruns reproduce identical bytes.
struct Provenance {
    std::string stage;
    std::vector<std::pair<std::string, std::string>> params;

    std::string header() const;  // "# ..." lines
    nlohmann::json to_json() const;
};

// Header of a store file; empty stage when absent or of another format.
Provenance read_provenance(const std::filesystem::path& path);

struct ManifoldRecord {
    int row = 0;  // 0 until placed in the census order
    std::string code;  // canonical
    int symmetries = 0;
    std::string h1, h2, h3;  // "a,b,c" = Z^a + Z/2^b + Z/4^c; H3 as "a" when torsion-free
    int h4 = 0;
    int cusps = 0;
    std::string link_types;  // as link_type_string
    int volume_coefficient = kVolumeCoefficient;

    bool operator==(const ManifoldRecord&) const = default;
};

// "a,b,c" for groups with only 2- and 4-torsion, else the generic form.
std::string homology_text(const AbelianGroup& g, bool compact_when_free);

// Invariants of a single code, computed from scratch; the code is canonicalized.
ManifoldRecord invariants_record(const PairingCode& code);

// Twelve-cusped block first; within a block S descending, then code. Assigns rows.
void order_records(std::vector<ManifoldRecord>& records);

std::string records_tsv(const std::vector<ManifoldRecord>& records, const Provenance& prov);
std::vector<ManifoldRecord> parse_records_tsv(const std::string& text);
nlohmann::json record_json(const ManifoldRecord& r);
std::string records_json(const std::vector<ManifoldRecord>& records, const Provenance& prov);

// Runs the enumerator into `out` (a code log with a provenance header). The raw log
// and checkpoint live beside it until the run completes; an interrupted run resumes.
// opts.out_path is overridden; an empty opts.checkpoint_path selects out + ".ckpt".
EnumerationResult enumeration_stage(const std::filesystem::path& out, EnumerationOptions opts);

std::string classes_tsv(const std::vector<ClassRecord>& classes, const Provenance& prov);
std::vector<ClassRecord> parse_classes_tsv(const std::string& text);

using StageProgress = std::function<void(const std::string& stage, std::size_t done, std::size_t total)>;

// Stage artifacts under a work directory, each reused when present:
// codes.txt (code log), classes.tsv (isometry classes), tables.tsv (records).
class CensusStore {
   public:
    explicit CensusStore(std::filesystem::path dir, int jobs = 1, StageProgress progress = {});

    std::filesystem::path codes_path() const { return dir_ / "codes.txt"; }
    std::filesystem::path classes_path() const { return dir_ / "classes.tsv"; }
    std::filesystem::path tables_path() const { return dir_ / "tables.tsv"; }

    std::vector<std::uint64_t> codes(const std::string& checkpoint = {});
    std::vector<ClassRecord> classes();
    std::vector<ManifoldRecord> records();

   private:
    std::filesystem::path dir_;
    int jobs_;
    StageProgress progress_;
};

std::string read_file(const std::filesystem::path& path);
// Writes through a temporary file and a rename.
void write_file(const std::filesystem::path& path, const std::string& text);

// Structure of Q5 and P5 against the expected counts.
Report polytope_report();

}  // namespace hyp5
