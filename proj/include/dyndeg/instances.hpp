#ifndef DYNDEG_INSTANCES_HPP
#define DYNDEG_INSTANCES_HPP

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "dyndeg/algebra.hpp"
#include "dyndeg/error.hpp"
#include "dyndeg/polynomial.hpp"
#include "dyndeg/random.hpp"

namespace dyndeg {

/// a + b*sqrt(D), kept symbolic so golden values are not truncated.
struct QuadSurd {
  long long a = 0;
  long long b = 0;
  long long D = 1;

  double value() const {
    return static_cast<double>(a) + static_cast<double>(b) * std::sqrt(static_cast<double>(D));
  }
};

struct Expectations {
  std::optional<IntPolynomial> p_alpha;
  std::optional<BigInt> degree;
  std::optional<QuadSurd> chi1;
  std::optional<QuadSurd> chi2;
  std::optional<QuadSurd> lambda1;
};

struct CatalogEntry {
  std::string key;
  EndInstance instance;
  Expectations expected;
};

// ---------------------------------------------------------------------------
// Single-factor builders

namespace catalog_detail {

inline IntPolynomial quadratic(long long c1, long long c0) { return IntPolynomial{BigInt(c0), BigInt(c1), BigInt(1)}; }

/// Companion matrix of t^2 + c1 t + c0.
inline IntMatrix companion(long long c1, long long c0) {
  return IntMatrix{{BigInt(0), BigInt(-c0)}, {BigInt(1), BigInt(-c1)}};
}

inline EndInstance single(std::string label, AlbertFactor f) {
  EndInstance inst;
  inst.label = std::move(label);
  inst.factors.push_back(std::move(f));
  inst.assert_theorem = true;
  return inst;
}

}  // namespace catalog_detail

/// alpha = a + b*i on an elliptic curve with CM by Z[i] (Type IV, e0 = d = n = 1).
inline AlbertFactor cm_elliptic_factor(long long a, long long b) {
  AlbertFactor f;
  f.albert_type = AlbertType::IV;
  f.blocks.push_back(ComplexMatrix{{Complex(static_cast<double>(a), static_cast<double>(b))}});
  return f;
}

/// alpha = a + b*i + c*j + d*k on a supersingular elliptic curve (Type III).
inline AlbertFactor supersingular_factor(long long a, long long b, long long c, long long d) {
  AlbertFactor f;
  f.albert_type = AlbertType::III;
  f.d = 2;
  f.blocks.push_back(QuaternionMatrix{{Quaternion(static_cast<double>(a), static_cast<double>(b),
                                                  static_cast<double>(c), static_cast<double>(d))}});
  return f;
}

/// alpha = a + b*sqrt(D) on an abelian surface with real multiplication
/// (Type I, e0 = 2, g_A = 2, so m = 2); blocks are the two real embeddings.
inline AlbertFactor rm_surface_factor(long long a, long long b, long long D) {
  if (b != 0) {
    const auto r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(D))));
    if (D < 2 || r * r == D) throw Error(ErrorCode::InvalidParameters, "rm_surface: D must be a non-square > 1");
  }
  AlbertFactor f;
  f.albert_type = AlbertType::I;
  f.e0 = 2;
  f.g_A = 2;
  const double root = std::sqrt(static_cast<double>(D));
  f.blocks.push_back(RealMatrix{{static_cast<double>(a) + static_cast<double>(b) * root}});
  f.blocks.push_back(RealMatrix{{static_cast<double>(a) - static_cast<double>(b) * root}});
  // action on Z[sqrt D] in the basis {1, sqrt D}
  f.rational_form = IntMatrix{{BigInt(a), BigInt(b * D)}, {BigInt(b), BigInt(a)}};
  return f;
}

/// alpha = x + y*i + z*j + w*k in the indefinite quaternion algebra (2, 3)_Q
/// on a QM abelian surface (Type II, g_A = 2, m = 2), realized in M_2(R) by
/// i -> diag(sqrt2, -sqrt2), j -> [[0, 3], [1, 0]].
inline AlbertFactor qm_surface_factor(long long x, long long y, long long z, long long w) {
  AlbertFactor f;
  f.albert_type = AlbertType::II;
  f.d = 2;
  f.g_A = 2;
  const double s = std::sqrt(2.0);
  const auto X = static_cast<double>(x);
  const auto Y = static_cast<double>(y);
  const auto Z = static_cast<double>(z);
  const auto W = static_cast<double>(w);
  // k = ij -> [[0, 3 sqrt2], [-sqrt2, 0]]
  f.blocks.push_back(RealMatrix{{X + Y * s, 3.0 * Z + 3.0 * s * W}, {Z - s * W, X - Y * s}});
  const long long trace = 2 * x;
  const long long nrd = x * x - 2 * y * y - 3 * z * z + 6 * w * w;
  f.rational_form = catalog_detail::companion(-trace, nrd);
  return f;
}

/// Frobenius of an ordinary elliptic curve over F_q with trace a; pi is the
/// Weil number (a + i*sqrt(4q - a^2)) / 2 (Type IV).
inline AlbertFactor frobenius_ordinary_factor(long long q, long long trace) {
  if (trace * trace >= 4 * q) {
    throw Error(ErrorCode::InvalidParameters, "frobenius_ordinary: need trace^2 < 4q");
  }
  AlbertFactor f;
  f.albert_type = AlbertType::IV;
  const double re = static_cast<double>(trace) / 2.0;
  const double im = std::sqrt(static_cast<double>(4 * q - trace * trace)) / 2.0;
  f.blocks.push_back(ComplexMatrix{{Complex(re, im)}});
  f.rational_form = catalog_detail::companion(-trace, q);
  return f;
}

/// E^n for a CM curve E with End(E^n) = M_n(Z[i]) (Type IV, n > 1 allowed).
inline AlbertFactor matrix_power_cm_factor(const ComplexMatrix& entries) {
  AlbertFactor f;
  f.albert_type = AlbertType::IV;
  f.n = static_cast<int>(entries.rows());
  f.blocks.push_back(entries);
  return f;
}

inline EndInstance product_instance(std::string label, const std::vector<EndInstance>& parts) {
  EndInstance out;
  out.label = std::move(label);
  out.assert_theorem = true;
  for (const auto& p : parts)
    for (const auto& f : p.factors) out.factors.push_back(f);
  return out;
}

/// Curated, realizable instances with hand-derived expectations.
inline std::vector<CatalogEntry> catalog() {
  using catalog_detail::quadratic;
  using catalog_detail::single;
  std::vector<CatalogEntry> out;
  auto add = [&](std::string key, AlbertFactor f, Expectations e) {
    out.push_back({key, single(key, std::move(f)), std::move(e)});
  };

  add("cm_elliptic(1,1)", cm_elliptic_factor(1, 1),
      {quadratic(-2, 2), BigInt(2), QuadSurd{0, 1, 2}, QuadSurd{2, 0, 1}, QuadSurd{2, 0, 1}});
  add("cm_elliptic(2,-1)", cm_elliptic_factor(2, -1),
      {quadratic(-4, 5), BigInt(5), QuadSurd{0, 1, 5}, QuadSurd{5, 0, 1}, QuadSurd{5, 0, 1}});
  add("supersingular(1,1,1,1)", supersingular_factor(1, 1, 1, 1),
      {quadratic(-2, 4), BigInt(4), QuadSurd{2, 0, 1}, QuadSurd{4, 0, 1}, QuadSurd{4, 0, 1}});
  add("supersingular(0,1,2,0)", supersingular_factor(0, 1, 2, 0),
      {quadratic(0, 5), BigInt(5), QuadSurd{0, 1, 5}, QuadSurd{5, 0, 1}, QuadSurd{5, 0, 1}});
  add("rm_surface(2,1,2)", rm_surface_factor(2, 1, 2),
      {poly_power(quadratic(-4, 2), 2), BigInt(4), QuadSurd{2, 1, 2}, QuadSurd{6, 4, 2}, QuadSurd{6, 4, 2}});
  add("rm_surface(1,1,5)", rm_surface_factor(1, 1, 5),
      {poly_power(quadratic(-2, -4), 2), BigInt(16), QuadSurd{1, 1, 5}, QuadSurd{6, 2, 5}, QuadSurd{6, 2, 5}});
  add("qm_surface(1,1,1,0)", qm_surface_factor(1, 1, 1, 0),
      {poly_power(quadratic(-2, -4), 2), BigInt(16), QuadSurd{1, 1, 5}, QuadSurd{6, 2, 5}, QuadSurd{6, 2, 5}});
  for (auto [q, a] : {std::pair{2LL, 1LL}, {3LL, 1LL}, {5LL, 1LL}, {7LL, 3LL}}) {
    add("frobenius_ordinary(" + std::to_string(q) + "," + std::to_string(a) + ")", frobenius_ordinary_factor(q, a),
        {quadratic(-a, q), BigInt(q), QuadSurd{0, 1, q}, QuadSurd{q, 0, 1}, QuadSurd{q, 0, 1}});
  }
  {
    const ComplexMatrix entries{{Complex(1, 1), Complex(1, 0)}, {Complex(0, 0), Complex(2, 0)}};
    // chi(A) = (t - (1+i))(t - 2); P = chi * conj(chi)
    add("matrix_power_cm(2)", matrix_power_cm_factor(entries),
        {quadratic(-2, 2) * quadratic(-4, 4), BigInt(8), QuadSurd{2, 0, 1}, QuadSurd{4, 0, 1},
         QuadSurd{4, 0, 1}});
  }

  // identity and multiplication by 2 on each base shape
  struct Base {
    std::string name;
    AlbertFactor (*make)(long long);
    int g;
  };
  const std::vector<Base> bases{
      {"cm_elliptic", [](long long m) { return cm_elliptic_factor(m, 0); }, 1},
      {"supersingular", [](long long m) { return supersingular_factor(m, 0, 0, 0); }, 1},
      {"rm_surface", [](long long m) { return rm_surface_factor(m, 0, 2); }, 2},
      {"qm_surface", [](long long m) { return qm_surface_factor(m, 0, 0, 0); }, 2},
  };
  for (const auto& base : bases) {
    for (long long m : {1LL, 2LL}) {
      const std::string key = (m == 1 ? "identity[" : "mult_by_2[") + base.name + "]";
      const auto two_g = static_cast<unsigned>(2 * base.g);
      const long long m_pow = m == 1 ? 1 : (1LL << two_g);
      add(key, base.make(m),
          {poly_power(IntPolynomial{BigInt(-m), BigInt(1)}, two_g), BigInt(m_pow), QuadSurd{m, 0, 1},
           QuadSurd{m * m, 0, 1}, QuadSurd{m * m, 0, 1}});
    }
  }

  // two-factor products
  {
    const auto a = single("cm_elliptic(1,1)", cm_elliptic_factor(1, 1));
    const auto b = single("supersingular(1,1,1,1)", supersingular_factor(1, 1, 1, 1));
    out.push_back({"product[cm_elliptic(1,1) x supersingular(1,1,1,1)]",
                   product_instance("product[cm_elliptic(1,1) x supersingular(1,1,1,1)]", {a, b}),
                   {quadratic(-2, 2) * quadratic(-2, 4), BigInt(8), QuadSurd{2, 0, 1}, QuadSurd{4, 0, 1},
                    QuadSurd{4, 0, 1}}});
  }
  {
    const auto a = single("rm_surface(2,1,2)", rm_surface_factor(2, 1, 2));
    const auto b = single("frobenius_ordinary(5,1)", frobenius_ordinary_factor(5, 1));
    out.push_back({"product[rm_surface(2,1,2) x frobenius_ordinary(5,1)]",
                   product_instance("product[rm_surface(2,1,2) x frobenius_ordinary(5,1)]", {a, b}),
                   {poly_power(quadratic(-4, 2), 2) * quadratic(-1, 5), BigInt(20), QuadSurd{2, 1, 2},
                    QuadSurd{6, 4, 2}, QuadSurd{6, 4, 2}}});
  }
  return out;
}

inline std::optional<CatalogEntry> catalog_entry(const std::string& key) {
  for (auto& e : catalog())
    if (e.key == key) return e;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Random generation

enum class EntryDistribution { Uniform, Normal };

struct IntRange {
  int lo = 1;
  int hi = 1;
};

struct GeneratorConfig {
  AlbertType albert_type = AlbertType::I;
  IntRange e0{1, 3};
  IntRange d{1, 2};  ///< Type IV only; I is forced to 1, II and III to 2
  IntRange n{1, 4};
  /// Cap on the side of the stored block (n, 2n, n, d*n for I..IV).
  int max_block_size = 4;
  EntryDistribution distribution = EntryDistribution::Uniform;
  double bound = 2.0;  ///< uniform entries lie in [-bound, bound]
  std::uint64_t seed = 0;
  int count = 1;
};

/// Largest quaternion block side whose Hermitian restriction fits the
/// floating characteristic-polynomial limit (n(2n-1) <= 64).
inline constexpr int kMaxQuaternionBlock = 5;
inline constexpr int kMaxBlockSize = 6;

namespace detail {

[[noreturn]] inline void config_invalid(const std::string& what) { throw Error(ErrorCode::ConfigInvalid, what); }

inline double draw_entry(Stream& s, const GeneratorConfig& cfg) {
  return cfg.distribution == EntryDistribution::Uniform ? s.uniform(-cfg.bound, cfg.bound) : s.normal();
}

}  // namespace detail

/// One single-factor instance, deterministic in cfg.seed.
///
/// Draw order: stream 0 yields e0, then d (Type IV only), then n; stream
/// 1 + b fills block b row-major, each entry's real components in order
/// (re, im) or (a, b, c, d). g_A is then the smallest value making m integral.
inline EndInstance random_instance(const GeneratorConfig& cfg) {
  using detail::config_invalid;
  auto check = [](const IntRange& r, const char* name) {
    if (r.lo < 1 || r.hi < r.lo) config_invalid(std::string(name) + " range is empty or non-positive");
  };
  check(cfg.e0, "e0");
  check(cfg.n, "n");
  if (cfg.albert_type == AlbertType::IV) check(cfg.d, "d");
  if (cfg.max_block_size < 1 || cfg.max_block_size > kMaxBlockSize) {
    config_invalid("max_block_size must lie in 1.." + std::to_string(kMaxBlockSize));
  }
  if (cfg.distribution == EntryDistribution::Uniform && !(cfg.bound > 0.0)) config_invalid("bound must be positive");

  Stream params(cfg.seed, 0);
  AlbertFactor f;
  f.albert_type = cfg.albert_type;
  f.e0 = params.integer(cfg.e0.lo, cfg.e0.hi);
  switch (cfg.albert_type) {
    case AlbertType::I: f.d = 1; break;
    case AlbertType::II:
    case AlbertType::III: f.d = 2; break;
    case AlbertType::IV: f.d = params.integer(cfg.d.lo, cfg.d.hi); break;
  }
  int n_cap = cfg.max_block_size;
  if (cfg.albert_type == AlbertType::II) n_cap = cfg.max_block_size / 2;
  if (cfg.albert_type == AlbertType::III) n_cap = std::min(cfg.max_block_size, kMaxQuaternionBlock);
  if (cfg.albert_type == AlbertType::IV) n_cap = cfg.max_block_size / f.d;
  const int n_hi = std::min(cfg.n.hi, n_cap);
  if (n_hi < cfg.n.lo) config_invalid("no n in range fits max_block_size");
  f.n = params.integer(cfg.n.lo, n_hi);
  const int ed = f.e() * f.d;
  f.g_A = ed / std::gcd(2, ed);

  const std::size_t side = detail::expected_block_size(f);
  for (int b = 0; b < f.e0; ++b) {
    Stream s(cfg.seed, 1 + static_cast<std::uint64_t>(b));
    switch (cfg.albert_type) {
      case AlbertType::I:
      case AlbertType::II: {
        RealMatrix m(side, side);
        for (auto& x : m.data()) x = detail::draw_entry(s, cfg);
        f.blocks.emplace_back(std::move(m));
        break;
      }
      case AlbertType::III: {
        QuaternionMatrix m(side, side);
        for (auto& q : m.data()) {
          q.a = detail::draw_entry(s, cfg);
          q.b = detail::draw_entry(s, cfg);
          q.c = detail::draw_entry(s, cfg);
          q.d = detail::draw_entry(s, cfg);
        }
        f.blocks.emplace_back(std::move(m));
        break;
      }
      case AlbertType::IV: {
        ComplexMatrix m(side, side);
        for (auto& z : m.data()) {
          const double re = detail::draw_entry(s, cfg);
          const double im = detail::draw_entry(s, cfg);
          z = Complex(re, im);
        }
        f.blocks.emplace_back(std::move(m));
        break;
      }
    }
  }
  EndInstance inst;
  inst.label = "random-" + std::string(to_string(cfg.albert_type)) + "-seed" + std::to_string(cfg.seed);
  inst.factors.push_back(std::move(f));
  return inst;
}

/// cfg.count instances with seeds cfg.seed, cfg.seed + 1, ...
inline std::vector<EndInstance> random_batch(const GeneratorConfig& cfg) {
  if (cfg.count < 0) throw Error(ErrorCode::ConfigInvalid, "count must be non-negative");
  std::vector<EndInstance> out;
  GeneratorConfig one = cfg;
  for (int k = 0; k < cfg.count; ++k) {
    one.seed = cfg.seed + static_cast<std::uint64_t>(k);
    out.push_back(random_instance(one));
  }
  return out;
}

}  // namespace dyndeg

#endif  // DYNDEG_INSTANCES_HPP
