#include "cli/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

namespace mmscli {

void Fnv1a::add(const void* data, std::size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h_ ^= p[i];
    h_ *= 1099511628211ULL;
  }
}

W2Cache::W2Cache() {
  if (const char* d = std::getenv("MMS_LAB_CACHE")) dir_ = d;
}

std::string W2Cache::key(const mms::FiniteSpace& space, const mms::Measure& mu0, const mms::Measure& mu1) const {
  Fnv1a h;
  h.add("w2-exact-v1");
  auto s0 = mu0.support(), s1 = mu1.support();
  for (auto i : s0) {
    h.add(&i, sizeof i);
    h.add(mu0.mass[i]);
  }
  h.add("|");
  for (auto j : s1) {
    h.add(&j, sizeof j);
    h.add(mu1.mass[j]);
  }
  for (auto i : s0)
    for (auto j : s1) h.add(space.distance(i, j));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h.value()));
  return buf;
}

std::optional<mms::W2Result> W2Cache::load(const std::string& key, std::size_t points) const {
  if (!enabled()) return std::nullopt;
  std::ifstream f(std::filesystem::path(dir_) / ("w2-" + key + ".json"));
  if (!f) return std::nullopt;
  try {
    auto j = nlohmann::json::parse(f);
    mms::W2Result r;
    r.cost = j.at("cost").get<double>();
    r.iterations = j.at("iterations").get<std::size_t>();
    r.plan.points = points;
    for (const auto& a : j.at("plan")) r.plan.atoms.push_back({a.at(0).get<std::size_t>(), a.at(1).get<std::size_t>(), a.at(2).get<double>()});
    return r;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;  // a corrupt entry is recomputed
  }
}

void W2Cache::store(const std::string& key, const mms::W2Result& r) const {
  if (!enabled()) return;
  std::filesystem::create_directories(dir_);
  nlohmann::json plan = nlohmann::json::array();
  for (const auto& a : r.plan.atoms) plan.push_back({a.from, a.to, a.mass});
  std::ofstream f(std::filesystem::path(dir_) / ("w2-" + key + ".json"));
  f << nlohmann::json{{"cost", r.cost}, {"iterations", r.iterations}, {"plan", plan}}.dump();
}

}  // namespace mmscli
