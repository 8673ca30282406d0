#include "verlinde/report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace verlinde {

namespace {
std::atomic<int> g_precision_bits{53};
}

void set_display_precision(int bits) { g_precision_bits = std::clamp(bits, 4, 60); }
int display_precision() { return g_precision_bits; }

Json cyclo_json(const Cyclo& c) {
  Json coeffs = Json::array();
  for (const auto& q : c.coeffs()) coeffs.push_back(rat_json(q));
  auto z = c.to_complex();
  int digits = std::max(1, static_cast<int>(std::floor(display_precision() * 0.30103)));
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.*g,%.*g)", digits, z.real(), digits, z.imag());
  return Json{{"M", c.order()}, {"coeffs", coeffs}, {"approx", std::string(buf)}};
}

Json weight_json(const Weight& w) { return Json(w.labels); }

std::string rat_json(const Rat& q) { return rat_str(q); }

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void Report::check(const std::string& name, bool ok, Json detail) {
  checks.push_back(Check{name, ok, std::move(detail)});
}

Json Report::to_json() const {
  Json jchecks = Json::array();
  for (const auto& c : checks)
    jchecks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  Json j{{"theorem", theorem}, {"algebra", algebra}, {"rank", rank},
         {"u", u},             {"v", v},             {"checks", jchecks},
         {"pass", pass()}};
  if (!extra.is_null()) j["conventions"] = extra;
  return j;
}

Json fusion_table_json(const std::string& algebra, int rank, const Json& level,
                       const Json& simples, const FusionTable& table) {
  Json entries = Json::array();
  std::size_t n = table.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (table.at(i, j, k) != 0) entries.push_back({i, j, k, table.at(i, j, k)});
  return Json{{"algebra", algebra}, {"rank", rank},       {"level", level},
              {"simples", simples}, {"entries", entries}};
}

std::string fusion_table_csv(const FusionTable& table) {
  std::ostringstream os;
  os << "i,j,k,N\n";
  std::size_t n = table.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (table.at(i, j, k) != 0)
          os << i << ',' << j << ',' << k << ',' << table.at(i, j, k) << '\n';
  return os.str();
}

std::string fusion_table_text(const std::vector<std::string>& labels, const FusionTable& table) {
  std::ostringstream os;
  std::size_t n = table.size();
  std::size_t width = 1;
  auto cell = [&](std::size_t i, std::size_t j) {
    std::ostringstream c;
    bool first = true;
    for (std::size_t k = 0; k < n; ++k) {
      auto m = table.at(i, j, k);
      if (m == 0) continue;
      if (!first) c << " + ";
      if (m != 1) c << m << '*';
      c << labels[k];
      first = false;
    }
    if (first) c << "0";
    return c.str();
  };
  std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cells[i][j] = cell(i, j);
      width = std::max(width, cells[i][j].size());
    }
  for (const auto& l : labels) width = std::max(width, l.size());
  auto pad = [&](const std::string& s) {
    return s + std::string(width + 2 - s.size(), ' ');
  };
  os << pad("x");
  for (std::size_t j = 0; j < n; ++j) os << pad(labels[j]);
  os << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    os << pad(labels[i]);
    for (std::size_t j = 0; j < n; ++j) os << pad(cells[i][j]);
    os << '\n';
  }
  return os.str();
}

}  // namespace verlinde
