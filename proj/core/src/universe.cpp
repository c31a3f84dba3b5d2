#include "dirosc/universe.hpp"

#include <algorithm>

namespace dirosc {

std::vector<std::string> coordinate_names(Dim dim) {
  std::vector<std::string> names = {"t", "x", "y", "z"};
  names.resize(static_cast<std::size_t>(dim.total()));
  return names;
}

std::optional<std::size_t> Universe::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t Universe::index_of(const std::string& name) const {
  auto idx = find(name);
  if (!idx) throw InvalidVariableError("unknown symbol: " + name);
  return *idx;
}

bool Universe::same_as(const Universe& other) const {
  if (this == &other) return true;
  return coord_count_ == other.coord_count_ && names_ == other.names_ &&
         inverse_ == other.inverse_;
}

std::shared_ptr<const Universe> Universe::make(
    std::vector<std::string> coordinates, std::vector<std::string> constants,
    std::vector<std::pair<std::string, std::string>> inverse_pairs) {
  auto u = std::shared_ptr<Universe>(new Universe());
  u->coord_count_ = coordinates.size();
  u->names_ = std::move(coordinates);
  u->names_.insert(u->names_.end(), constants.begin(), constants.end());
  for (std::size_t i = 0; i < u->names_.size(); ++i) {
    for (std::size_t j = i + 1; j < u->names_.size(); ++j) {
      if (u->names_[i] == u->names_[j])
        throw Error("duplicate symbol in universe: " + u->names_[i]);
    }
  }
  u->inverse_.assign(u->names_.size(), -1);
  for (const auto& [a, b] : inverse_pairs) {
    std::size_t ia = u->index_of(a);
    std::size_t ib = u->index_of(b);
    if (u->is_coordinate(ia) || u->is_coordinate(ib))
      throw Error("inverse pairs may only relate constants");
    u->inverse_[ia] = static_cast<int>(ib);
    u->inverse_[ib] = static_cast<int>(ia);
  }
  return u;
}

UniversePtr standard_universe(Dim dim) {
  return Universe::make(
      coordinate_names(dim),
      {"rho", "zeta", "m", "omega", "e", "B", "B_I", "q", "a", "v", "R",
       "m_inv", "e_inv", "q_inv", "v_inv", "R_inv"},
      {{"m", "m_inv"}, {"e", "e_inv"}, {"q", "q_inv"}, {"v", "v_inv"}, {"R", "R_inv"}});
}

UniversePtr lagrangian_universe(Dim dim) {
  auto coords = coordinate_names(dim);
  std::vector<std::string> constants = {"rho",   "zeta", "m",     "omega", "e",
                                        "B",     "B_I",  "q",     "a",     "v",
                                        "R",     "m_inv", "e_inv", "q_inv", "v_inv",
                                        "R_inv"};
  for (const char* stem : {"dtheta", "dthetaR", "dthetaL"}) {
    for (const auto& c : coords) constants.push_back(std::string(stem) + "_" + c);
  }
  for (int j = 1; j <= dim.spatial; ++j) constants.push_back("p" + std::to_string(j));
  return Universe::make(
      coords, constants,
      {{"m", "m_inv"}, {"e", "e_inv"}, {"q", "q_inv"}, {"v", "v_inv"}, {"R", "R_inv"}});
}

}  // namespace dirosc
