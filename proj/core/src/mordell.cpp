#include "repsq/mordell.hpp"

#include "repsq/parallel.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace repsq {
namespace {

// Largest x for which x^3 + N is evaluated in 128-bit arithmetic.
constexpr std::uint64_t kFastXLimit = std::uint64_t{1} << 41;
const Natural kFastNLimit = Natural(1) << 125;

int cube_root_digit(int a) {
  for (int c = 1; c * c * c <= a; ++c)
    if (c * c * c == a) return c;
  return 0;
}

Integer pow10(int p) { return pow_natural(10, static_cast<unsigned>(p)); }

// Scans [lo, hi] with i128 arithmetic. Requires |x|^3 + N < 2^127.
void scan_fast(i128 N, std::int64_t lo, std::int64_t hi, std::vector<IntegerPoint>& out) {
  for (std::int64_t x = lo; x <= hi; ++x) {
    const i128 xx = x;
    const i128 v = xx * xx * xx + N;
    if (v < 0) continue;
    const auto uv = static_cast<u128>(v);
    if (uv >> 64 == 0) {
      const auto v64 = static_cast<std::uint64_t>(uv);
      if (!passes_square_filter(v64 % 2882880)) continue;
      const std::uint64_t root = isqrt_u64(v64);
      if (u128{root} * root == uv) out.push_back({Integer(x), Natural(root)});
    } else if (auto root = square_root_u128(uv)) {
      out.push_back({Integer(x), from_i128(static_cast<i128>(*root))});
    }
  }
}

void scan_big(const Natural& N, const Integer& lo, const Integer& hi,
              std::vector<IntegerPoint>& out) {
  for (Integer x = lo; x <= hi; ++x)
    if (auto p = point_at(x, N)) out.push_back(std::move(*p));
}

}  // namespace

Integer MordellInstance::x_for(int l) const { return x_coeff * pow10(l + r); }

std::string MordellInstance::x_form() const {
  std::string s = std::to_string(x_coeff) + "*10^";
  return r == 0 ? s + "l" : s + "(l+" + std::to_string(r) + ")";
}

std::string MordellInstance::y_form() const { return to_string(y_coeff) + "k"; }

MordellInstance build_instance(const CaseFamily& family, int r) {
  family.validate();
  if (r < 0 || r > 2) throw std::invalid_argument("r must be 0, 1 or 2");
  MordellInstance inst;
  inst.family = family;
  inst.r = r;
  inst.t = family.b * pow10(family.n) - (family.a + family.b);
  if (inst.t <= 0) throw std::logic_error("b*10^n - (a+b) must be positive");
  const Integer scale = pow10(r);
  if (const int root = cube_root_digit(family.a); root != 0) {
    inst.multiplier = scale * scale;
    inst.x_coeff = root;
    inst.y_coeff = 3 * scale;
  } else {
    inst.multiplier = family.a * family.a * scale * scale;
    inst.x_coeff = family.a;
    inst.y_coeff = 3 * family.a * scale;
  }
  inst.N = inst.multiplier * inst.t;
  return inst;
}

bool on_curve(const IntegerPoint& p, const Natural& N) {
  return p.y >= 0 && p.y * p.y == p.x * p.x * p.x + N;
}

std::optional<IntegerPoint> point_at(const Integer& x, const Natural& N) {
  const Integer v = x * x * x + N;
  if (v < 0) return std::nullopt;
  if (auto root = is_perfect_square(v)) return IntegerPoint{x, std::move(*root)};
  return std::nullopt;
}

namespace {

std::filesystem::path cache_path(const std::string& dir, const Natural& N, std::uint64_t bound) {
  return std::filesystem::path(dir) /
         ("points-N" + to_string(N) + "-x" + std::to_string(bound) + ".txt");
}

std::optional<std::vector<IntegerPoint>> load_cached(const std::filesystem::path& path,
                                                     const Natural& N) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::vector<IntegerPoint> points;
  std::string x, y;
  while (in >> x >> y) {
    IntegerPoint p;
    try {
      p = {from_string(x), from_string(y)};
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
    if (!on_curve(p, N)) return std::nullopt;
    points.push_back(std::move(p));
  }
  if (!in.eof()) return std::nullopt;
  return points;
}

void store_cached(const std::filesystem::path& path, const std::vector<IntegerPoint>& points) {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    for (const auto& p : points) out << to_string(p.x) << ' ' << to_string(p.y) << '\n';
  }
  std::filesystem::rename(tmp, path, ec);
}

std::vector<IntegerPoint> scan_points(const Natural& N, std::uint64_t x_bound,
                                      const ScanOptions& options);

}  // namespace

std::vector<IntegerPoint> search_integer_points(const Natural& N, std::uint64_t x_bound,
                                                const ScanOptions& options) {
  if (N <= 0) throw std::invalid_argument("search_integer_points expects N > 0");
  if (options.cache_dir.empty()) return scan_points(N, x_bound, options);
  const auto path = cache_path(options.cache_dir, N, x_bound);
  if (auto cached = load_cached(path, N)) return std::move(*cached);
  auto points = scan_points(N, x_bound, options);
  store_cached(path, points);
  return points;
}

namespace {

std::vector<IntegerPoint> scan_points(const Natural& N, std::uint64_t x_bound,
                                      const ScanOptions& options) {
  Natural cbrt = icbrt(N);
  if (cbrt * cbrt * cbrt != N) ++cbrt;
  const Integer lo = -cbrt;
  const Integer hi = Integer(x_bound);
  const bool fast = x_bound <= kFastXLimit && N < kFastNLimit && cbrt <= kFastXLimit;

  const auto width = static_cast<Integer>(hi - lo + 1);
  const std::size_t chunks =
      static_cast<std::size_t>(std::min<Integer>(width, Integer(std::max(1u, options.workers) * 16)));
  const Integer step = (width + chunks - 1) / chunks;
  std::atomic<std::size_t> done{0};

  auto parts = parallel_map(chunks, options.workers, [&](std::size_t i) {
    std::vector<IntegerPoint> found;
    const Integer a = lo + step * i;
    const Integer b = std::min<Integer>(hi, a + step - 1);
    if (a <= b) {
      if (fast) {
        scan_fast(static_cast<i128>(*to_u128(N)), static_cast<std::int64_t>(a),
                  static_cast<std::int64_t>(b), found);
      } else {
        scan_big(N, a, b, found);
      }
    }
    const std::size_t finished = ++done;
    if (options.progress) options.progress(finished, chunks);
    return found;
  });

  std::vector<IntegerPoint> points;
  for (auto& part : parts)
    for (auto& p : part) points.push_back(std::move(p));
  return points;
}

}  // namespace

std::vector<FormMatch> form_search(const MordellInstance& inst, int p_max) {
  if (p_max < 0) throw std::invalid_argument("p_max must be non-negative");
  std::vector<FormMatch> matches;
  for (int p = inst.r; p <= p_max; ++p) {
    const int l = p - inst.r;
    const Integer x = inst.x_for(l);
    auto point = point_at(x, inst.N);
    if (!point) continue;
    if (point->y % inst.y_coeff != 0) continue;
    FormMatch match;
    match.l = l;
    match.m = 3 * l + inst.r;
    match.x = x;
    match.y = point->y;
    match.k = point->y / inst.y_coeff;
    match.valid_repdigit = match.m >= 2;
    match.below_m_min = match.m < inst.family.m_min;
    match.verified = inst.family.value(match.m) == match.k * match.k;
    matches.push_back(std::move(match));
  }
  return matches;
}

bool is_in_form(const Integer& x, const MordellInstance& inst) {
  if (x <= 0 || x % inst.x_coeff != 0) return false;
  Integer rest = x / inst.x_coeff;
  int p = 0;
  while (rest % 10 == 0) {
    rest /= 10;
    ++p;
  }
  return rest == 1 && p >= inst.r;
}

}  // namespace repsq
