#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "phmon/presentation.hpp"

namespace phmon {

// Built-in presentations: the seventeen type labels A_i .. H_viii plus
// "B_ii_alt", the alternative three-generator presentation of the B_ii
// monoid. Lookup returns the presentation verbatim (length-1 relations
// included); call normalize() before handing it to the rewrite engine.
const std::vector<std::string>& catalog_types();
bool catalog_has(std::string_view type_name);
Presentation catalog_lookup(std::string_view type_name);

// The five Artin-type labels, useful for tests and scans.
const std::vector<std::string>& artin_types();

}  // namespace phmon
