#ifndef POLYDIST_JSON_IO_HPP
#define POLYDIST_JSON_IO_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "polydist/cantor.hpp"
#include "polydist/dioph.hpp"
#include "polydist/distset.hpp"
#include "polydist/polynorm.hpp"
#include "polydist/sepset.hpp"

namespace polydist {

using Json = nlohmann::json;

std::uint64_t fnv1a64(const std::string& bytes);
std::string digest_hex(const std::string& bytes);  // "fnv1a64:<16 hex digits>"

// Canonical text form used for every JSON artifact: sorted keys, two-space
// indent, trailing newline. Byte-for-byte stable across runs.
std::string json_text(const Json& j);

Json norm_json(const PolygonalNorm& norm);
Json set_json(const SeparatedSet& set);
Json cert_json(const CertificationReport& report);
Json margin_json(const MarginReport& report);
Json schedule_json(const ConstructionSchedule& schedule);
Json stage_json(const CantorStage& stage);
Json decay_json(const DecayReport& report);
Json manifest_json(const std::string& command, const Json& config,
                   std::uint64_t seed, std::optional<std::int64_t> wall_ms,
                   const std::map<std::string, std::string>& outputs);

std::string points_csv(const SeparatedSet& set);
std::string cover_csv(const IntervalCover& cover);
std::string estimates_csv(const std::vector<DimensionEstimate>& estimates,
                          const Rat& target);

void write_text_file(const std::filesystem::path& path,
                     const std::string& text);
std::string read_text_file(const std::filesystem::path& path);
Json read_json_file(const std::filesystem::path& path);

}  // namespace polydist

#endif
