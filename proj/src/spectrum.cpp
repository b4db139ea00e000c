#include "crclab/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "crclab/errors.hpp"
#include "crclab/parallel.hpp"

namespace crclab {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

// Coefficients, constant term first.
using IntPoly = std::vector<cpp_int>;
using RatPoly = std::vector<cpp_rational>;

void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) {
    p.pop_back();
  }
}

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) {
    p.pop_back();
  }
}

IntPoly char_poly(const IntersectionArray& arr) {
  // Leading principal minors of xI - L:
  // p_{k+1} = (x - a_k) p_k - b_{k-1} c_k p_{k-1}.
  IntPoly prev{1};
  IntPoly cur{-arr.a_at(0), 1};
  for (int k = 1; k <= arr.rho(); ++k) {
    IntPoly next(cur.size() + 1, 0);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      next[i + 1] += cur[i];
      next[i] -= cur[i] * arr.a_at(k);
    }
    const cpp_int coupling = cpp_int(arr.b_at(k - 1)) * arr.c_at(k);
    for (std::size_t i = 0; i < prev.size(); ++i) {
      next[i] -= coupling * prev[i];
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  trim(cur);
  return cur;
}

cpp_int evaluate(const IntPoly& p, const cpp_int& x) {
  cpp_int acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

/// p / (x - root), assuming root is a root.
IntPoly deflate(const IntPoly& p, const cpp_int& root) {
  IntPoly q(p.size() - 1, 0);
  cpp_int carry = 0;
  for (std::size_t i = p.size() - 1; i > 0; --i) {
    carry = carry * root + p[i];
    q[i - 1] = carry;
  }
  return q;
}

cpp_rational evaluate(const RatPoly& p, const cpp_rational& x) {
  cpp_rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

RatPoly remainder(RatPoly num, const RatPoly& den) {
  while (num.size() >= den.size() && !num.empty()) {
    const cpp_rational factor = num.back() / den.back();
    const std::size_t shift = num.size() - den.size();
    for (std::size_t i = 0; i < den.size(); ++i) {
      num[i + shift] -= factor * den[i];
    }
    num.pop_back();
    trim(num);
  }
  return num;
}

std::vector<RatPoly> sturm_chain(const IntPoly& p) {
  std::vector<RatPoly> chain;
  RatPoly p0(p.begin(), p.end());
  RatPoly p1;
  for (std::size_t i = 1; i < p0.size(); ++i) {
    p1.push_back(p0[i] * static_cast<long long>(i));
  }
  chain.push_back(std::move(p0));
  chain.push_back(std::move(p1));
  while (chain.back().size() > 1) {
    RatPoly r = remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) {
      break;
    }
    for (auto& c : r) {
      c = -c;
    }
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_variations(const std::vector<RatPoly>& chain, const cpp_rational& x) {
  int variations = 0;
  int last = 0;
  for (const auto& poly : chain) {
    const auto v = evaluate(poly, x);
    const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) {
      continue;
    }
    if (last != 0 && s != last) {
      ++variations;
    }
    last = s;
  }
  return variations;
}

void isolate(const std::vector<RatPoly>& chain, const cpp_rational& lo, const cpp_rational& hi,
             std::vector<RootInterval>& out) {
  const int count = sign_variations(chain, lo) - sign_variations(chain, hi);
  if (count == 0) {
    return;
  }
  const cpp_rational width = hi - lo;
  if (count == 1 && width < cpp_rational(1, 1 << 20)) {
    out.push_back({static_cast<double>(lo), static_cast<double>(hi)});
    return;
  }
  const cpp_rational mid = (lo + hi) / 2;
  isolate(chain, lo, mid, out);
  isolate(chain, mid, hi, out);
}

SpectrumReport tally(std::span<const std::int32_t> values) {
  std::map<long long, std::uint64_t, std::greater<>> counts;
  for (auto v : values) {
    ++counts[v];
  }
  SpectrumReport report;
  report.source = kCharacterSource;
  for (const auto& [value, mult] : counts) {
    report.eigenvalues.push_back({value, mult});
  }
  return report;
}

std::int32_t character_value(std::span<const Syndrome> columns, Syndrome u) {
  std::int32_t lambda = 0;
  for (auto h : columns) {
    lambda += (std::popcount(u & h) & 1) != 0 ? -1 : 1;
  }
  return lambda;
}

std::vector<Syndrome> checked_columns(const LinearCode& code, std::size_t max_redundancy) {
  if (code.redundancy() > max_redundancy) {
    throw GuardExceeded("character spectrum (n-k)", code.redundancy(), max_redundancy);
  }
  return code.column_syndromes();
}

}  // namespace

std::set<long long> SpectrumReport::integer_values() const {
  std::set<long long> out;
  for (const auto& e : eigenvalues) {
    out.insert(e.value);
  }
  return out;
}

std::uint64_t SpectrumReport::total_multiplicity() const {
  std::uint64_t total = 0;
  for (const auto& e : eigenvalues) {
    total += e.multiplicity.value_or(0);
  }
  return total;
}

long long SpectrumReport::weighted_sum() const {
  long long total = 0;
  for (const auto& e : eigenvalues) {
    total += e.value * static_cast<long long>(e.multiplicity.value_or(0));
  }
  return total;
}

SpectrumReport character_spectrum(const LinearCode& code, std::size_t max_redundancy) {
  const auto columns = checked_columns(code, max_redundancy);
  const std::size_t size = std::size_t{1} << code.redundancy();
  std::vector<std::int32_t> values(size);
  const auto count = static_cast<std::int64_t>(size);
#pragma omp parallel for schedule(static) num_threads(thread_count())
  for (std::int64_t u = 0; u < count; ++u) {
    values[u] = character_value(columns, static_cast<Syndrome>(u));
  }
  return tally(values);
}

namespace serial {

SpectrumReport character_spectrum(const LinearCode& code, std::size_t max_redundancy) {
  const auto columns = checked_columns(code, max_redundancy);
  const std::size_t size = std::size_t{1} << code.redundancy();
  std::vector<std::int32_t> values(size);
  for (std::size_t u = 0; u < size; ++u) {
    values[u] = character_value(columns, static_cast<Syndrome>(u));
  }
  return tally(values);
}

}  // namespace serial

std::vector<long long> intersection_char_poly(const IntersectionArray& arr) {
  const auto poly = char_poly(arr);
  std::vector<long long> out;
  for (const auto& c : poly) {
    if (c > std::numeric_limits<long long>::max() || c < std::numeric_limits<long long>::min()) {
      throw std::overflow_error("characteristic polynomial coefficient exceeds 64 bits");
    }
    out.push_back(static_cast<long long>(c));
  }
  return out;
}

SpectrumReport array_spectrum(const IntersectionArray& arr) {
  if (arr.b.size() != arr.c.size()) {
    throw std::invalid_argument("intersection array has |b| != |c|");
  }
  IntPoly poly = char_poly(arr);
  SpectrumReport report;
  report.source = kIntersectionSource;

  // Rows of the intersection matrix sum to the valency and entries are
  // nonnegative, so every eigenvalue lies in [-valency, valency].
  const long long bound = std::max<long long>(arr.valency, 1);
  for (long long t = bound; t >= -bound && poly.size() > 1; --t) {
    bool root = false;
    while (poly.size() > 1 && evaluate(poly, cpp_int(t)) == 0) {
      poly = deflate(poly, cpp_int(t));
      root = true;
    }
    if (root) {
      report.eigenvalues.push_back({t, std::nullopt});
    }
  }
  if (poly.size() > 1) {
    // Monic integer polynomial with no integer roots: no rational roots at
    // all, so dyadic interval endpoints are never roots.
    const auto chain = sturm_chain(poly);
    isolate(chain, cpp_rational(-bound - 1), cpp_rational(bound + 1), report.irrational);
  }
  return report;
}

bool same_eigenvalue_set(const SpectrumReport& a, const SpectrumReport& b) {
  return a.irrational.empty() && b.irrational.empty() && a.integer_values() == b.integer_values();
}

std::vector<long long> printed_eigenvalue_formula(std::size_t m) {
  if (m % 2 != 0 || m < 6) {
    throw std::invalid_argument("eigenvalue formula is stated for even m >= 6");
  }
  const auto mm = static_cast<long long>(m);
  const long long n = binomial(mm, 2);
  const long long rho = mm / 4;
  std::vector<long long> out;
  for (long long i = 0; i <= rho; ++i) {
    if (m % 4 == 2) {
      out.push_back(n - 16 * i * (rho + 1 - i));
    } else {
      out.push_back(n - 8 * i * (2 * rho + 1 - i));
    }
  }
  return out;
}

FormulaAudit audit_eigenvalue_formula(std::size_t m, const SpectrumReport& oracle) {
  FormulaAudit audit;
  audit.formula = printed_eigenvalue_formula(m);
  const auto oracle_set = oracle.integer_values();
  audit.oracle.assign(oracle_set.rbegin(), oracle_set.rend());
  const std::set<long long> formula_set(audit.formula.begin(), audit.formula.end());
  for (auto v : formula_set) {
    if (!oracle_set.contains(v)) {
      audit.formula_only.push_back(v);
    }
  }
  for (auto v : oracle_set) {
    if (!formula_set.contains(v)) {
      audit.oracle_only.push_back(v);
    }
  }
  std::sort(audit.formula_only.rbegin(), audit.formula_only.rend());
  std::sort(audit.oracle_only.rbegin(), audit.oracle_only.rend());
  audit.agrees = audit.formula_only.empty() && audit.oracle_only.empty() && oracle.irrational.empty();
  return audit;
}

}  // namespace crclab
