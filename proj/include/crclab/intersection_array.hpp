#pragma once

#include <string>
#include <vector>

namespace crclab {

/// (b_0, ..., b_{rho-1}; c_1, ..., c_rho) together with the valency n
/// (code length or graph degree). Shared by codes and graphs.
struct IntersectionArray {
  int valency = 0;
  std::vector<int> b;
  std::vector<int> c;

  [[nodiscard]] int rho() const { return static_cast<int>(c.size()); }
  /// b_l with b_rho = 0.
  [[nodiscard]] int b_at(int l) const;
  /// c_l with c_0 = 0.
  [[nodiscard]] int c_at(int l) const;
  [[nodiscard]] int a_at(int l) const { return valency - b_at(l) - c_at(l); }

  /// Entries positive, |b| = |c|, and every a_l >= 0.
  [[nodiscard]] bool valid() const;
  /// "{b_0,...;c_1,...}"
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

long long binomial(long long n, long long k);

}  // namespace crclab
