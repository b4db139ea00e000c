#include "crclab/intersection_array.hpp"

#include <algorithm>

namespace crclab {

int IntersectionArray::b_at(int l) const {
  return (l >= 0 && l < static_cast<int>(b.size())) ? b[l] : 0;
}

int IntersectionArray::c_at(int l) const {
  return (l >= 1 && l <= static_cast<int>(c.size())) ? c[l - 1] : 0;
}

bool IntersectionArray::valid() const {
  if (b.size() != c.size()) {
    return false;
  }
  auto positive = [](int v) { return v > 0; };
  if (!std::all_of(b.begin(), b.end(), positive) || !std::all_of(c.begin(), c.end(), positive)) {
    return false;
  }
  for (int l = 0; l <= rho(); ++l) {
    if (a_at(l) < 0) {
      return false;
    }
  }
  return true;
}

std::string IntersectionArray::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < b.size(); ++i) {
    s += (i ? "," : "") + std::to_string(b[i]);
  }
  s += ";";
  for (std::size_t i = 0; i < c.size(); ++i) {
    s += (i ? "," : "") + std::to_string(c[i]);
  }
  return s + "}";
}

long long binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  long long result = 1;
  for (long long i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

}  // namespace crclab
