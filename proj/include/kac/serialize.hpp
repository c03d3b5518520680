#pragma once

#include <json.hpp>

#include "kac/codes.hpp"
#include "kac/diagrams.hpp"
#include "kac/factors.hpp"
#include "kac/nqc.hpp"

namespace kac {

nlohmann::json to_json(const Weight& w);
nlohmann::json to_json(const NqcTable& table);
nlohmann::json to_json(const LoweringTrace& trace);
nlohmann::json to_json(const FactorSet& fs);
nlohmann::json codes_to_json(const Weight& w, const std::vector<Code>& codes);
nlohmann::json to_json(const CompositeDiagram& diagram);
nlohmann::json to_json(const StripLabeling& labeling);

} // namespace kac
