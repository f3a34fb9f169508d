#pragma once

#include <functional>
#include <string>
#include <vector>

#include "homrand/liealg.hpp"

namespace homrand {

/// Built-in homogeneous space with a known classification rule.
struct CatalogEntry {
  std::string name;
  std::string description;
  ReductiveSpace space;
  /// Expected Berwald classification as a function of the invariant vector.
  std::function<bool(const VectorXd&)> expected_berwald;
};

const std::vector<CatalogEntry>& catalog_entries();

const CatalogEntry& catalog_entry(const std::string& name);

/// Admissible vectors: Ad(H)-fixed, |u| <= 0.9, uniform on that set.
/// Deterministic per seed; entries with a trivial fixed set yield u = 0.
std::vector<VectorXd> random_admissible_u(const CatalogEntry& entry, unsigned seed, int count);

/// Basis of the Ad(H)-fixed subspace of m (columns).
MatrixXd fixed_subspace(const ReductiveSpace& space);

}  // namespace homrand
