#ifndef LRC_IO_HPP
#define LRC_IO_HPP

#include <string>

#include <json.hpp>

#include "lrc/analysis.hpp"
#include "lrc/lrc_code.hpp"

namespace lrc {

using json = nlohmann::json;

// JSON shapes are stable and 1-based where they name symbols or points; the
// in-memory structures stay 0-based.

json field_to_json(const FieldSpec& spec);
FieldSpec field_from_json(const json& j);

json membership_to_json(const MembershipMatrix& R);
MembershipMatrix membership_from_json(const json& j);

json design_to_json(const ResolvableDesign& d);
ResolvableDesign design_from_json(const json& j);

json generator_to_json(const GeneratorMatrix& gm);
GeneratorMatrix generator_from_json(const json& j);

/// Full code bundle: kind, params, field, generator rows, index sets, repair
/// groups, plus the provenance block needed to reload structured decoders.
json code_to_json(const LrcCode& code);
LrcCode code_from_json(const json& j);

json availability_to_json(const AvailabilityReport& rep);
json distance_to_json(const DistanceReport& rep);
json subcode_to_json(const SubcodeTrace& trace);
json assumption1_to_json(const Assumption1Report& rep);

/// One line of space-separated integers; erasures written as "?".
std::string erased_word_to_text(const ErasedWord& w);
ErasedWord erased_word_from_text(const std::string& line);

std::string message_to_text(const std::vector<uint64_t>& msg);
std::vector<uint64_t> message_from_text(const std::string& line);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace lrc

#endif
