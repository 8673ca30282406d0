#pragma once

#include <optional>
#include <string>
#include <vector>

#include "verlinde/root_system.hpp"

namespace verlinde::cache {

// Versioned on-disk cache for Weyl groups and dominant-weight lists, keyed by
// (family, rank[, level]). Disabled unless a directory is configured (CLI flag
// or environment). Loads are validated; anything malformed is recomputed.
void set_directory(std::optional<std::string> dir);
std::optional<std::string> directory();

bool load_weyl_group(const std::string& rs_name, std::vector<WeylElement>& out);
void store_weyl_group(const std::string& rs_name, const std::vector<WeylElement>& elems);

bool load_weight_list(const std::string& rs_name, long level, std::vector<Weight>& out);
void store_weight_list(const std::string& rs_name, long level, const std::vector<Weight>& weights);

}  // namespace verlinde::cache
