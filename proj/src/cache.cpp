#include "rowlab/cache.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>

namespace rowlab {

OrbitCache::OrbitCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path OrbitCache::default_dir() {
  if (const char* env = std::getenv("ROWLAB_CACHE_DIR")) return env;
  return ".rowlab-cache";
}

std::filesystem::path OrbitCache::entry_path(const Poset& p,
                                             const std::string& action) const {
  return dir_ / (poset_signature(p) + "-" + action + ".json");
}

void OrbitCache::store(const Poset& p, const std::string& action,
                       const OrbitDecomposition& dec) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  Json j;
  j["action"] = action;
  j["poset"] = poset_to_json(p);
  Json orbits = Json::array();
  for (const auto& orbit : dec.orbits) {
    Json o = Json::array();
    for (std::size_t idx : orbit) o.push_back(ideal_to_json(p, dec.ideals[idx]));
    orbits.push_back(o);
  }
  j["orbits"] = orbits;
  std::ofstream out(entry_path(p, action));
  out << j.dump(2) << "\n";
}

std::optional<OrbitDecomposition> OrbitCache::load(const Poset& p,
                                                   const std::string& action,
                                                   std::string* note) const {
  const auto path = entry_path(p, action);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    Json j = Json::parse(in);
    if (j.at("action").get<std::string>() != action)
      throw IoError("action mismatch");
    OrbitDecomposition dec;
    std::vector<std::vector<Bitset>> orbits;
    for (const auto& o : j.at("orbits")) {
      std::vector<Bitset> orbit;
      for (const auto& ideal : o) orbit.push_back(ideal_from_json(p, ideal));
      if (orbit.empty()) throw IoError("empty orbit");
      orbits.push_back(std::move(orbit));
    }
    // spot-check one rowmotion step per orbit
    if (action == "rowmotion") {
      for (const auto& orbit : orbits) {
        const Bitset next = rowmotion(p, orbit.front());
        const Bitset& expect = orbit.size() > 1 ? orbit[1] : orbit[0];
        if (next != expect) throw IoError("stale orbit step");
      }
    }
    dec.ideals = enumerate_ideals(p);
    std::size_t total = 0;
    for (auto& orbit : orbits) {
      std::vector<std::size_t> idxs;
      for (const Bitset& b : orbit) {
        const auto it =
            std::lower_bound(dec.ideals.begin(), dec.ideals.end(), b,
                             Bitset::lex_less);
        if (it == dec.ideals.end() || *it != b)
          throw IoError("orbit ideal missing from lattice");
        idxs.push_back(static_cast<std::size_t>(it - dec.ideals.begin()));
      }
      total += idxs.size();
      dec.orbits.push_back(std::move(idxs));
    }
    if (total != dec.ideals.size()) throw IoError("orbit cover mismatch");
    return dec;
  } catch (const std::exception& e) {
    if (note) *note = std::string("cache entry ignored: ") + e.what();
    return std::nullopt;
  }
}

}  // namespace rowlab
