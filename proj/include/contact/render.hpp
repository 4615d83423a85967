#pragma once

#include <map>
#include <string>
#include <vector>

#include "contact/jet_oracle.hpp"
#include "contact/resolution_model.hpp"
#include "contact/separation.hpp"
#include "contact/spectral.hpp"

namespace contact
{

// Left-aligned columns separated by two spaces.
std::string render_table(const std::vector<std::vector<std::string>>& rows);

std::string render_configuration(const SncConfiguration& cfg);

// Rows are q ascending, columns p ascending; cells read "rank [E1:H0,E2:H0]".
std::string render_e1(const E1Page& page, const std::map<int, std::string>& labels = {});

std::string render_hc(const HcReport& report);

std::string render_count(const CountReport& report);

std::map<int, std::string> divisor_labels(const SncConfiguration& cfg);

} // namespace contact
