#pragma once

// Deformed weight multiplicities
//   H_{lambda+rho}(mu; q) = sum_{b in B(lambda+rho), wt(b) = lambda+rho-mu} C(b),
// computed over B(lambda+rho) directly or over B(lambda) (x) B(rho), and their
// specializations at q = infinity, -1 and 1.

#include <map>
#include <optional>
#include <vector>

#include "cscrystal/rootsys.hpp"
#include "cscrystal/tpoly.hpp"

namespace cscrystal {

/// mu outside the weight support of B(lambda+rho) yields the zero polynomial;
/// use in_weight_support to tell that apart from a genuine zero.
TPoly h_direct(const GLWeight& lam, const AlphaVector& mu);
TPoly h_tensor(const GLWeight& lam, const AlphaVector& mu);
bool in_weight_support(const GLWeight& lam, const AlphaVector& mu);

struct HRow {
  AlphaVector mu;
  TPoly h;
};

class HTable {
 public:
  HTable(GLWeight lam, std::vector<HRow> rows);

  const GLWeight& lambda() const { return lam_; }
  int rank() const { return lam_.rank(); }
  /// Sorted by height of mu, then by mu in decreasing lexicographic order.
  const std::vector<HRow>& rows() const { return rows_; }
  std::optional<TPoly> find(const AlphaVector& mu) const;

  friend bool operator==(const HTable&, const HTable&);

 private:
  GLWeight lam_;
  std::vector<HRow> rows_;
};

/// One row per weight of B(lambda+rho), summed over B(lambda+rho).
HTable h_table(const GLWeight& lam, unsigned threads = 1);
/// Same rows, summed over B(lambda) (x) B(rho).
HTable h_table_tensor(const GLWeight& lam, unsigned threads = 1);

/// QInf is the limit q -> infinity, i.e. t = 0.
enum class SpecialPoint { QInf, QMinusOne, QOne };

Integer specialize(const TPoly& h, SpecialPoint point);

/// Number of b in B(lambda) with content nu.
long weight_multiplicity(const GLWeight& lam, const GLWeight& nu);

/// Multiplicity of nu in V(lambda) (x) V(rho).
long tensor_weight_multiplicity(const GLWeight& lam, const GLWeight& nu);

/// Oracle value for a specialization of H_{lambda+rho}(mu) computed without
/// any coefficient C: weight multiplicity, tensor multiplicity or dot-orbit sign.
Integer specialization_oracle(const GLWeight& lam, const AlphaVector& mu, SpecialPoint point);

}  // namespace cscrystal
