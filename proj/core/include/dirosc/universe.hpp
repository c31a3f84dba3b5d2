#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dirosc/errors.hpp"

namespace dirosc {

// Spacetime dimension tag: `spatial` spatial dimensions plus one time
// dimension. Coordinates are named (t,x), (t,x,y), (t,x,y,z).
struct Dim {
  int spatial = 1;

  int total() const { return spatial + 1; }

  static Dim d1() { return Dim{1}; }
  static Dim d2() { return Dim{2}; }
  static Dim d3() { return Dim{3}; }

  std::string label() const { return std::to_string(spatial) + "+1"; }

  friend bool operator==(const Dim& a, const Dim& b) { return a.spatial == b.spatial; }
  friend bool operator!=(const Dim& a, const Dim& b) { return a.spatial != b.spatial; }
};

std::vector<std::string> coordinate_names(Dim dim);

// Immutable table of the symbols a polynomial may mention. The first
// `coordinate_count` entries are spacetime coordinates; the rest are
// symbolic constants. A constant may be paired with a declared inverse
// (q and q_inv), in which case q*q_inv reduces to 1 during
// canonicalization, keeping the ring free of rational functions.
class Universe {
 public:
  class Builder;

  std::size_t size() const { return names_.size(); }
  std::size_t coordinate_count() const { return coord_count_; }

  bool is_coordinate(std::size_t idx) const { return idx < coord_count_; }
  const std::string& name(std::size_t idx) const { return names_[idx]; }

  // -1 if this symbol has no declared inverse partner.
  int inverse_partner(std::size_t idx) const { return inverse_[idx]; }

  std::optional<std::size_t> find(const std::string& name) const;
  std::size_t index_of(const std::string& name) const;

  bool same_as(const Universe& other) const;

  static std::shared_ptr<const Universe> make(std::vector<std::string> coordinates,
                                              std::vector<std::string> constants,
                                              std::vector<std::pair<std::string, std::string>>
                                                  inverse_pairs = {});

 private:
  Universe() = default;
  std::vector<std::string> names_;
  std::size_t coord_count_ = 0;
  std::vector<int> inverse_;
};

using UniversePtr = std::shared_ptr<const Universe>;

// Coordinates for `dim` plus the constants used throughout: rho, zeta, m,
// omega, e, B, B_I, q, a, v, R and the inverses m_inv, e_inv, q_inv,
// v_inv, R_inv.
UniversePtr standard_universe(Dim dim);

// standard_universe plus the formal phase-gradient constants dtheta_*,
// dthetaR_*, dthetaL_* (one per coordinate) and momentum symbols p1..pd.
UniversePtr lagrangian_universe(Dim dim);

}  // namespace dirosc
