#include "verlinde/cache.hpp"

#include <filesystem>
#include <fstream>
#include <mutex>

#include "json.hpp"

namespace verlinde::cache {

namespace {

constexpr int kVersion = 1;

std::mutex g_mutex;
std::optional<std::string> g_dir;

std::optional<std::filesystem::path> path_for(const std::string& stem) {
  std::lock_guard<std::mutex> lock(g_mutex);
  if (!g_dir) return std::nullopt;
  return std::filesystem::path(*g_dir) / (stem + "-v" + std::to_string(kVersion) + ".json");
}

bool read_json(const std::filesystem::path& p, nlohmann::json& out) {
  std::ifstream in(p);
  if (!in) return false;
  try {
    in >> out;
  } catch (const nlohmann::json::exception&) {
    return false;
  }
  return true;
}

void write_json(const std::filesystem::path& p, const nlohmann::json& j) {
  std::error_code ec;
  std::filesystem::create_directories(p.parent_path(), ec);
  std::ofstream out(p);
  if (!out) return;  // best effort; caching is an optimization
  out << j.dump();
}

}  // namespace

void set_directory(std::optional<std::string> dir) {
  std::lock_guard<std::mutex> lock(g_mutex);
  g_dir = std::move(dir);
}

std::optional<std::string> directory() {
  std::lock_guard<std::mutex> lock(g_mutex);
  return g_dir;
}

bool load_weyl_group(const std::string& rs_name, std::vector<WeylElement>& out) {
  auto p = path_for("weyl-" + rs_name);
  if (!p) return false;
  nlohmann::json j;
  if (!read_json(*p, j)) return false;
  try {
    if (j.at("version") != kVersion || j.at("name") != rs_name) return false;
    int rank = j.at("rank").get<int>();
    std::vector<WeylElement> elems;
    for (const auto& e : j.at("elements")) {
      WeylElement w;
      w.rank = rank;
      w.sign = e.at("s").get<int>();
      w.length = e.at("l").get<int>();
      w.mat = e.at("m").get<std::vector<long>>();
      if (w.mat.size() != static_cast<std::size_t>(rank * rank)) return false;
      elems.push_back(std::move(w));
    }
    if (elems.empty() || elems[0].length != 0) return false;
    out = std::move(elems);
    return true;
  } catch (const nlohmann::json::exception&) {
    return false;
  }
}

void store_weyl_group(const std::string& rs_name, const std::vector<WeylElement>& elems) {
  auto p = path_for("weyl-" + rs_name);
  if (!p || elems.empty()) return;
  nlohmann::json j;
  j["version"] = kVersion;
  j["name"] = rs_name;
  j["rank"] = elems[0].rank;
  auto& arr = j["elements"] = nlohmann::json::array();
  for (const auto& e : elems)
    arr.push_back({{"m", e.mat}, {"s", e.sign}, {"l", e.length}});
  write_json(*p, j);
}

bool load_weight_list(const std::string& rs_name, long level, std::vector<Weight>& out) {
  auto p = path_for("weights-" + rs_name + "-m" + std::to_string(level));
  if (!p) return false;
  nlohmann::json j;
  if (!read_json(*p, j)) return false;
  try {
    if (j.at("version") != kVersion || j.at("name") != rs_name || j.at("level") != level)
      return false;
    std::vector<Weight> ws;
    for (const auto& e : j.at("weights")) ws.emplace_back(e.get<std::vector<long>>());
    out = std::move(ws);
    return true;
  } catch (const nlohmann::json::exception&) {
    return false;
  }
}

void store_weight_list(const std::string& rs_name, long level, const std::vector<Weight>& weights) {
  auto p = path_for("weights-" + rs_name + "-m" + std::to_string(level));
  if (!p) return;
  nlohmann::json j;
  j["version"] = kVersion;
  j["name"] = rs_name;
  j["level"] = level;
  auto& arr = j["weights"] = nlohmann::json::array();
  for (const auto& w : weights) arr.push_back(w.labels);
  write_json(*p, j);
}

}  // namespace verlinde::cache
