#include "segre/strata.hpp"

#include <algorithm>
#include <random>

#include "forcing.hpp"

namespace segre {

using detail::Draft;

namespace {

constexpr int kAttempts = 400;

const FactorId kS0 = FactorId::slice_minor(0);
const FactorId kS1 = FactorId::slice_minor(1);
const FactorId kX0 = FactorId::face_x(0, 0, 1);
const FactorId kX1 = FactorId::face_x(1, 0, 1);
const FactorId kY0 = FactorId::face_y(0, 0, 1);
const FactorId kY1 = FactorId::face_y(1, 0, 1);
const FactorId kH = FactorId::hyp222(0, 1);

std::string recipe_for(const VanishingPattern& p, SymmetryClass c) {
  switch (c) {
    case SymmetryClass::Empty:
      return "random entries from the pool";
    case SymmetryClass::Single:
      if (p.contains(kH)) return "slice pencil built with a double root: T(y) = (y0 - t y1) P + y1 u v^T, tr(adj(uv^T) P) = 0";
      return "random entries, one entry of the minor solved linearly";
    case SymmetryClass::Pair:
      if (p.contains(kH)) return "rank-one layer a b^T, opposite layer solved to pass through its node; modes permuted onto the target face";
      return "random entries, minors solved in peel order through privately owned entries";
    case SymmetryClass::Corner:
      return "random entries, each corner minor solved through the entry it alone owns";
    case SymmetryClass::Frame:
      if (p.contains(kS0) && p.contains(kY0)) return "rows proportional in both slices: w[1][j][k] = mu w[0][j][k]";
      if (p.contains(kS0) && p.contains(kX0)) return "columns proportional in both slices: w[i][1][k] = nu w[i][0][k]";
      return "proportional slices: slice 1 = lambda slice 0 with slice 0 nonsingular";
    case SymmetryClass::Full:
      return "rank-one tensor w[i][j][k] = a_i b_j c_k";
  }
  return "";
}

// Fix `slot` so that the affine-linear function `f` of it vanishes.
template <class F>
bool solve_linear(Rational& slot, const F& f) {
  slot = Rational(0);
  const Rational at0 = f();
  slot = Rational(1);
  const Rational slope = f() - at0;
  if (slope.is_zero()) return false;
  slot = -at0 / slope;
  return !slot.is_zero();
}

// H = 0: det(y0 P + y1 Q) with Q = u v^T - t P has the double root y0 = t y1
// once det(u v^T) = 0 (automatic) and the mixed term tr(adj(uv^T) P) = 0.
// Here P[k][i] = w[i][0][k] and Q[k][i] = w[i][1][k].
std::optional<Draft> draft_h_only(std::mt19937_64& rng) {
  const Rational t = detail::pool_entry(rng) * (rng() % 2 ? 1 : -1);
  const std::array<Rational, 2> u{detail::pool_entry(rng), detail::pool_entry(rng)};
  const std::array<Rational, 2> v{detail::pool_entry(rng), detail::pool_entry(rng)};
  std::array<std::array<Rational, 2>, 2> p{};
  for (auto& row : p) {
    for (auto& e : row) e = detail::pool_entry(rng) * (rng() % 2 ? 1 : -1);
  }
  const auto mixed = [&] {
    // m11 p22 + m22 p11 - m12 p21 - m21 p12 for M = u v^T
    return u[0] * v[0] * p[1][1] + u[1] * v[1] * p[0][0] - u[0] * v[1] * p[1][0] - u[1] * v[0] * p[0][1];
  };
  if (!solve_linear(p[1][1], mixed)) return std::nullopt;
  Draft d(1);
  for (int k = 0; k < 2; ++k) {
    for (int i = 0; i < 2; ++i) {
      d(i, 0, k) = p[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
      d(i, 1, k) = u[static_cast<std::size_t>(k)] * v[static_cast<std::size_t>(i)] - t * p[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
    }
  }
  return d;
}

// {H, slice minor of `layer`}: a singular quadric is two lines; H vanishes
// when the other quadric passes through their crossing point.
std::optional<Draft> draft_h_and_slice(int layer, std::mt19937_64& rng) {
  Draft d = detail::random_draft(1, rng);
  const std::array<Rational, 2> a{detail::pool_entry(rng), detail::pool_entry(rng)};
  const std::array<Rational, 2> b{detail::pool_entry(rng), detail::pool_entry(rng)};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) d(i, j, layer) = a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
  }
  const std::array<Rational, 2> x{a[1], -a[0]};
  const std::array<Rational, 2> y{b[1], -b[0]};
  const int other = 1 - layer;
  const auto through_node = [&] {
    Rational s = 0;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) s += d(i, j, other) * x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
    }
    return s;
  };
  if (!solve_linear(d(1, 1, other), through_node)) return std::nullopt;
  return d;
}

// Relabel modes so that the slice minor of layer c becomes the face minor
// F[c*] (swap modes 1 and 3) or F[*c] (swap modes 2 and 3).
Draft swap_modes(const Draft& v, int mode) {
  Draft w(1);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) w(i, j, k) = mode == 1 ? v(k, j, i) : v(i, k, j);
    }
  }
  return w;
}

std::optional<Draft> draft_frame(const VanishingPattern& p, std::mt19937_64& rng) {
  Draft d = detail::random_draft(1, rng);
  const Rational s = detail::pool_entry(rng);
  if (p.contains(kX0) && p.contains(kY0)) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) d(i, j, 1) = s * d(i, j, 0);
    }
  } else if (p.contains(kY0)) {
    for (int j = 0; j < 2; ++j) {
      for (int k = 0; k < 2; ++k) d(1, j, k) = s * d(0, j, k);
    }
  } else {
    for (int i = 0; i < 2; ++i) {
      for (int k = 0; k < 2; ++k) d(i, 1, k) = s * d(i, 0, k);
    }
  }
  return d;
}

std::optional<Draft> draft_for(const VanishingPattern& p, SymmetryClass c, std::mt19937_64& rng) {
  switch (c) {
    case SymmetryClass::Frame:
      return draft_frame(p, rng);
    case SymmetryClass::Full: {
      Draft d(1);
      std::array<Rational, 6> f;
      for (auto& e : f) e = detail::pool_entry(rng);
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          for (int k = 0; k < 2; ++k) d(i, j, k) = f[static_cast<std::size_t>(i)] * f[static_cast<std::size_t>(2 + j)] * f[static_cast<std::size_t>(4 + k)];
        }
      }
      return d;
    }
    default:
      break;
  }
  if (p.contains(kH)) {
    if (p.vanishing.size() == 1) return draft_h_only(rng);
    const FactorId m = *std::find_if(p.vanishing.begin(), p.vanishing.end(), [](const FactorId& f) { return f.is_minor(); });
    if (m.kind == FactorKind::SliceMinor) return draft_h_and_slice(m.ks[0], rng);
    auto base = draft_h_and_slice(m.face, rng);
    if (!base) return std::nullopt;
    return swap_modes(*base, m.kind == FactorKind::FaceMinorX ? 1 : 2);
  }
  const auto minors = p.minors();
  const auto order = detail::solve_order(minors);
  if (!order) return std::nullopt;
  Draft d = detail::random_draft(1, rng);
  if (!detail::force_minors(d, *order)) return std::nullopt;
  return d;
}

}  // namespace

std::vector<Stratum> enumerate_strata_n1() {
  const auto factors = all_factors(1);
  std::vector<Stratum> out;
  for (unsigned mask = 0; mask < (1u << factors.size()); ++mask) {
    VanishingPattern p{1, {}};
    for (std::size_t f = 0; f < factors.size(); ++f) {
      if (mask & (1u << f)) p.vanishing.insert(factors[f]);
    }
    const auto cls = classify_pattern_n1(p);
    if (!cls.feasible) continue;
    out.push_back({p, cls.chi, recipe_for(p, cls.symmetry_class), cls.symmetry_class});
  }
  std::sort(out.begin(), out.end(), [](const Stratum& a, const Stratum& b) {
    if (a.chi != b.chi) return a.chi > b.chi;
    return a.pattern.vanishing < b.pattern.vanishing;
  });
  return out;
}

ScalingTensor witness_for_pattern_n1(const VanishingPattern& pattern, std::uint64_t seed) {
  const auto cls = classify_pattern_n1(pattern);
  if (!cls.feasible) throw InvalidArgument("pattern is not a feasible n = 1 stratum");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const auto d = draft_for(pattern, cls.symmetry_class, rng);
    if (!d || !d->all_nonzero()) continue;
    ScalingTensor w = d->tensor();
    if (vanishing_pattern(w) == pattern) return w;
  }
  throw GenerationFailed("no witness found for pattern after " + std::to_string(kAttempts) + " attempts");
}

ScalingTensor witness_for_stratum(const Stratum& s, std::uint64_t seed) { return witness_for_pattern_n1(s.pattern, seed); }

// ---------------------------------------------------------- sign patterns

namespace {

using Wide = __int128;

// Signs of the seven factors for integer entries e[k*4 + i*2 + j].
std::string signs_of(const std::array<long, 8>& e) {
  const auto w = [&](int i, int j, int k) { return static_cast<Wide>(e[static_cast<std::size_t>(k * 4 + i * 2 + j)]); };
  const Wide x0 = w(0, 0, 0) * w(0, 1, 1) - w(0, 1, 0) * w(0, 0, 1);
  const Wide x1 = w(1, 0, 0) * w(1, 1, 1) - w(1, 1, 0) * w(1, 0, 1);
  const Wide y0 = w(0, 0, 0) * w(1, 0, 1) - w(1, 0, 0) * w(0, 0, 1);
  const Wide y1 = w(0, 1, 0) * w(1, 1, 1) - w(1, 1, 0) * w(0, 1, 1);
  const Wide s0 = w(0, 0, 0) * w(1, 1, 0) - w(0, 1, 0) * w(1, 0, 0);
  const Wide s1 = w(0, 0, 1) * w(1, 1, 1) - w(0, 1, 1) * w(1, 0, 1);
  const Wide a = w(0, 0, 0) * w(1, 1, 1) - w(0, 0, 1) * w(1, 1, 0);
  const Wide b = w(0, 1, 0) * w(1, 0, 1) - w(0, 1, 1) * w(1, 0, 0);
  const Wide h = (a - b) * (a - b) - 4 * x0 * x1;
  std::string out;
  for (Wide v : {x0, x1, y0, y1, s0, s1, h}) out += v > 0 ? '+' : (v < 0 ? '-' : '0');
  return out;
}

int mismatch(const std::string& a, const std::string& b) {
  int m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m += a[i] != b[i];
  return m;
}

}  // namespace

std::string sign_pattern(const ScalingTensor& w) {
  if (w.n() != 1) throw InvalidArgument("sign patterns are defined for n = 1");
  const auto sign = [](const Rational& r) { return r.sign() > 0 ? '+' : (r.sign() < 0 ? '-' : '0'); };
  std::string out;
  for (const FactorId& f : {kX0, kX1, kY0, kY1, kS0, kS1}) out += sign(eval_minor(w, f));
  out += sign(eval_hyp222(w, 0, 1));
  return out;
}

const std::array<std::string, 4>& tabulated_negative_h_patterns() {
  static const std::array<std::string, 4> patterns{"++++++-", "++-----", "--++---", "----++-"};
  return patterns;
}

std::string flip_minor_signs(const std::string& pattern) {
  if (pattern.size() != 7) throw InvalidArgument("sign pattern must have seven characters");
  std::string out = pattern;
  for (std::size_t i = 0; i < 6; ++i) {
    if (out[i] == '+') {
      out[i] = '-';
    } else if (out[i] == '-') {
      out[i] = '+';
    }
  }
  return out;
}

std::array<std::string, 4> negative_h_patterns() {
  std::array<std::string, 4> out;
  const auto& tab = tabulated_negative_h_patterns();
  std::transform(tab.begin(), tab.end(), out.begin(), flip_minor_signs);
  return out;
}

SignSample sample_sign_patterns(long samples, int bound, std::uint64_t seed) {
  if (samples < 1) throw InvalidArgument("samples must be at least 1");
  if (bound < 2 || bound > 10000) throw InvalidArgument("bound must lie in [2, 10000]");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> magnitude(1, bound);
  SignSample out;
  out.samples = samples;
  std::array<long, 8> e{};
  for (long s = 0; s < samples; ++s) {
    for (auto& v : e) v = magnitude(rng) * ((rng() & 1) ? 1 : -1);
    const std::string p = signs_of(e);
    if (p.find('0') != std::string::npos) {
      ++out.skipped;
      continue;
    }
    ++out.discovered[p];
  }
  return out;
}

std::optional<ScalingTensor> search_sign_pattern(const std::string& target, std::uint64_t seed, long steps) {
  if (target.size() != 7 || target.find_first_not_of("+-") != std::string::npos) {
    throw InvalidArgument("target must be seven characters over {+,-}");
  }
  constexpr long kBound = 60;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> magnitude(1, kBound);
  std::uniform_int_distribution<std::size_t> slot(0, 7);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const auto fresh = [&] { return magnitude(rng) * ((rng() & 1) ? 1 : -1); };

  std::array<long, 8> e{};
  for (auto& v : e) v = fresh();
  int score = mismatch(signs_of(e), target);
  for (long step = 0; step < steps; ++step) {
    if (score == 0) {
      std::vector<std::array<Rational, 4>> slices;
      for (int k = 0; k < 2; ++k) {
        slices.push_back({Rational(e[static_cast<std::size_t>(4 * k)]), Rational(e[static_cast<std::size_t>(4 * k + 1)]),
                          Rational(e[static_cast<std::size_t>(4 * k + 2)]), Rational(e[static_cast<std::size_t>(4 * k + 3)])});
      }
      return ScalingTensor::from_slices(slices);
    }
    if (step % 5000 == 4999) {  // restart from a fresh point
      for (auto& v : e) v = fresh();
      score = mismatch(signs_of(e), target);
      continue;
    }
    const std::size_t at = slot(rng);
    const long before = e[at];
    e[at] = fresh();
    const int next = mismatch(signs_of(e), target);
    if (next <= score || coin(rng) < 0.05) {
      score = next;
    } else {
      e[at] = before;
    }
  }
  return std::nullopt;
}

}  // namespace segre
