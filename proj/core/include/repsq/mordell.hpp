#pragma once
// Mordell curves y^2 = x^3 + N attached to a family and the residue r of m mod 3.
//
// Writing m = 3l + r and t = b*10^n - (a+b), the family equation
// 9*(a_m + b_n) = a*10^m + t is multiplied by a^2*10^(2r), giving
//   (a*10^(l+r))^3 + a^2*10^(2r)*t = (3a*10^r*k)^2.
// When a is a cube (a = 8 = 2^3) the multiplier drops to 10^(2r) and x = 2*10^(l+r).

#include "repsq/arith.hpp"
#include "repsq/sieve.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace repsq {

struct MordellInstance {
  CaseFamily family;
  int r = 0;
  Natural t;           // b*10^n - (a+b)
  Natural multiplier;  // N / t
  Natural N;
  int x_coeff = 1;     // x = x_coeff * 10^(l+r)
  Natural y_coeff;     // y = y_coeff * k

  Integer x_for(int l) const;
  /// "2*10^(l+2)"
  std::string x_form() const;
  std::string y_form() const;
};

MordellInstance build_instance(const CaseFamily& family, int r);

struct IntegerPoint {
  Integer x;
  Natural y;  // non-negative representative
  friend bool operator==(const IntegerPoint&, const IntegerPoint&) = default;
};

bool on_curve(const IntegerPoint& p, const Natural& N);
inline bool on_curve(const IntegerPoint& p, const MordellInstance& inst) { return on_curve(p, inst.N); }

/// The point with this x, if x^3 + N is a square.
std::optional<IntegerPoint> point_at(const Integer& x, const Natural& N);

struct ScanOptions {
  unsigned workers = 1;
  /// Called after each finished chunk with (chunks done, chunks total). May be
  /// invoked from worker threads.
  std::function<void(std::size_t, std::size_t)> progress;
  /// When set, scan results are stored under this directory keyed by (N, bound)
  /// and reused. Cached points are re-verified on load.
  std::string cache_dir;
};

/// Every integer point with -ceil(N^(1/3)) <= x <= x_bound, ascending by x.
/// Complete only up to the bound; this is a scan, not a proof of completeness.
std::vector<IntegerPoint> search_integer_points(const Natural& N, std::uint64_t x_bound,
                                                const ScanOptions& options = {});

struct FormMatch {
  int l = 0;
  int m = 0;  // 3l + r
  Integer x;
  Natural y;
  Natural k;
  bool valid_repdigit = false;  // m >= 2
  bool below_m_min = false;     // m < family.m_min
  bool verified = false;        // a_m + b_n == k^2 recomputed from scratch
};

/// Tests x = x_coeff*10^p for r <= p <= p_max.
std::vector<FormMatch> form_search(const MordellInstance& inst, int p_max);

/// True when x has the instance's form x_coeff*10^(l+r) for some l >= 0.
bool is_in_form(const Integer& x, const MordellInstance& inst);

}  // namespace repsq
