#pragma once
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dw/walls.hpp"

namespace dw {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parsed model configuration (JSON). Unknown fields are rejected with ConfigError.
struct BoundarySpec {
    std::vector<std::string> generators;
    std::vector<TwoCocycleTerm> twist;
    std::optional<std::string> thin_json;  // user thin cochain table
};
struct CondensationSpec {
    std::string kind;  // typeI | typeI_II
    int N = 2;
    long n = 1, m = 0;
};
struct WallSpec {
    std::optional<ModelSpec> left, right;
    BoundarySpec boundary;
    std::optional<CondensationSpec> condensation;
};
struct ModelConfig {
    std::optional<ModelSpec> model;
    std::optional<BoundarySpec> boundary;
    std::optional<WallSpec> wall;
    std::string mode = "anyons";  // anyons | boundary-anyons | fusion-table | lagrangian | tunneling | gsd
    std::string format = "csv";  // csv | markdown | json
};

Group parse_group_spec(const std::string& json_text);
ModelConfig parse_config(const std::string& json_text);

// Emits the requested artifact; returns the process exit status
// (0 ok, 2 config error, 3 invalid boundary, 4 non-integer multiplicity).
int run(const ModelConfig& cfg, std::ostream& out, std::ostream& err, bool oracle = false);

// Table serialization.
std::string table_csv(const std::vector<std::string>& rows, const std::vector<std::string>& cols,
                      const std::vector<std::vector<long>>& m, const std::vector<std::string>* extra = nullptr,
                      const std::string& extra_name = "");
std::string table_markdown(const std::vector<std::string>& rows, const std::vector<std::string>& cols,
                           const std::vector<std::vector<long>>& m, const std::vector<std::string>* extra = nullptr,
                           const std::string& extra_name = "");
std::string fusion_table_json(const FusionTable& t);
FusionTable fusion_table_from_json(const std::string& text);

// Golden tables bundled under data/golden.
struct GoldenResult {
    std::string table;
    bool pass = false;
    std::vector<std::string> diff;
};
std::string golden_dir();
std::vector<std::string> golden_suites();  // appendixA, s3, walls
std::vector<GoldenResult> verify_golden(const std::string& suite);
// Runs every suite when suite == "all"; prints a report and returns the number of failing tables.
int verify_golden_report(const std::string& suite, std::ostream& out);

}  // namespace dw
