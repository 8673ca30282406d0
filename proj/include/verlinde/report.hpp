#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "verlinde/cyclotomic.hpp"
#include "verlinde/fusion_table.hpp"
#include "verlinde/root_system.hpp"

namespace verlinde {

using Json = nlohmann::json;

// Display precision (bits) for the float renderings that accompany exact
// witnesses. Exact data never depends on this.
void set_display_precision(int bits);
int display_precision();

// {"M": order, "coeffs": ["num/den", ...], "approx": "(re,im)"}
Json cyclo_json(const Cyclo& c);
Json weight_json(const Weight& w);
std::string rat_json(const Rat& q);

struct Check {
  std::string name;
  bool pass = true;
  Json detail;
};

// One verification run: every checked identity with its exact witnesses.
struct Report {
  std::string theorem;
  std::string algebra;
  int rank = 0;
  long u = 0;
  long v = 0;
  std::vector<Check> checks;
  Json extra;  // recorded conventions (sign choices, lattice levels, ...)

  bool pass() const;
  void check(const std::string& name, bool ok, Json detail = Json::object());
  Json to_json() const;
};

Json fusion_table_json(const std::string& algebra, int rank, const Json& level,
                       const Json& simples, const FusionTable& table);
std::string fusion_table_csv(const FusionTable& table);
std::string fusion_table_text(const std::vector<std::string>& labels, const FusionTable& table);

}  // namespace verlinde
