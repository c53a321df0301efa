#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "rowlab/io.hpp"

namespace rowlab {

// Content-addressed orbit-decomposition cache.  Keys are
// (poset signature, action name); hits are re-validated by spot-checking one
// rowmotion step per orbit, and corrupt entries fall back to recomputation.
class OrbitCache {
 public:
  explicit OrbitCache(std::filesystem::path dir);

  static std::filesystem::path default_dir();

  std::optional<OrbitDecomposition> load(const Poset& p,
                                         const std::string& action,
                                         std::string* note = nullptr) const;
  void store(const Poset& p, const std::string& action,
             const OrbitDecomposition& dec) const;

  std::filesystem::path entry_path(const Poset& p,
                                   const std::string& action) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace rowlab
