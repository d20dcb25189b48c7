#include "segre/adet.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <map>

namespace segre {

namespace {

std::string join_ks(std::span<const int> ks) {
  std::string out;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(ks[i]);
  }
  return out;
}

std::vector<int> parse_int_list(std::string_view s, std::string_view whole) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t comma = std::min(s.find(',', pos), s.size());
    const std::string_view tok = s.substr(pos, comma - pos);
    int v = 0;
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || p != tok.data() + tok.size() || v < 0) {
      throw ParseError("bad factor name \"" + std::string(whole) + "\"");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

bool strictly_increasing(std::span<const int> ks) {
  return std::adjacent_find(ks.begin(), ks.end(), std::greater_equal<>()) == ks.end();
}

}  // namespace

std::string FactorId::name() const {
  switch (kind) {
    case FactorKind::SliceMinor:
      return "F[**" + std::to_string(ks[0]) + "]";
    case FactorKind::FaceMinorX:
      return "F[" + std::to_string(face) + "*(" + join_ks(slices()) + ")]";
    case FactorKind::FaceMinorY:
      return "F[*" + std::to_string(face) + "(" + join_ks(slices()) + ")]";
    case FactorKind::Hyp222:
    case FactorKind::Hyp223:
      return "H[" + join_ks(slices()) + "]";
  }
  return "?";
}

FactorId FactorId::parse(std::string_view name) {
  auto fail = [&]() -> FactorId { throw ParseError("bad factor name \"" + std::string(name) + "\""); };
  if (name.size() < 4 || name.back() != ']') return fail();
  if (name.starts_with("H[")) {
    const auto ks = parse_int_list(name.substr(2, name.size() - 3), name);
    if (ks.size() == 2 && ks[0] < ks[1]) return hyp222(ks[0], ks[1]);
    if (ks.size() == 3 && strictly_increasing(ks)) return hyp223(ks[0], ks[1], ks[2]);
    return fail();
  }
  if (!name.starts_with("F[")) return fail();
  const std::string_view body = name.substr(2, name.size() - 3);
  if (body.starts_with("**")) {
    const auto ks = parse_int_list(body.substr(2), name);
    if (ks.size() != 1) return fail();
    return slice_minor(ks[0]);
  }
  if (body.size() < 6 || body[2] != '(' || body.back() != ')') return fail();
  const auto ks = parse_int_list(body.substr(3, body.size() - 4), name);
  if (ks.size() != 2 || ks[0] >= ks[1]) return fail();
  if (body[1] == '*' && (body[0] == '0' || body[0] == '1')) return face_x(body[0] - '0', ks[0], ks[1]);
  if (body[0] == '*' && (body[1] == '0' || body[1] == '1')) return face_y(body[1] - '0', ks[0], ks[1]);
  return fail();
}

std::span<const int> FactorId::slices() const {
  switch (kind) {
    case FactorKind::SliceMinor:
      return {ks.data(), 1};
    case FactorKind::Hyp223:
      return {ks.data(), 3};
    default:
      return {ks.data(), 2};
  }
}

std::vector<std::array<int, 3>> FactorId::variables() const {
  const int k1 = ks[0];
  const int k2 = ks[1];
  switch (kind) {
    case FactorKind::SliceMinor:
      return {{0, 0, k1}, {0, 1, k1}, {1, 0, k1}, {1, 1, k1}};
    case FactorKind::FaceMinorX:
      return {{face, 0, k1}, {face, 1, k1}, {face, 0, k2}, {face, 1, k2}};
    case FactorKind::FaceMinorY:
      return {{0, face, k1}, {1, face, k1}, {0, face, k2}, {1, face, k2}};
    default:
      return {};
  }
}

std::vector<FactorId> all_factors(int n) {
  std::vector<FactorId> out;
  for (int k = 0; k <= n; ++k) out.push_back(FactorId::slice_minor(k));
  for (int i = 0; i < 2; ++i) {
    for (int a = 0; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) out.push_back(FactorId::face_x(i, a, b));
    }
  }
  for (int j = 0; j < 2; ++j) {
    for (int a = 0; a <= n; ++a) {
      for (int b = a + 1; b <= n; ++b) out.push_back(FactorId::face_y(j, a, b));
    }
  }
  for (int a = 0; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) out.push_back(FactorId::hyp222(a, b));
  }
  for (int a = 0; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (int c = b + 1; c <= n; ++c) out.push_back(FactorId::hyp223(a, b, c));
    }
  }
  return out;
}

std::size_t factor_count(int n) {
  const std::size_t m = static_cast<std::size_t>(n) + 1;
  const std::size_t pairs = m * (m - 1) / 2;
  const std::size_t triples = m * (m - 1) * (m - 2) / 6;
  return m + 4 * pairs + pairs + triples;
}

void validate_factor(const FactorId& id, int n) {
  const auto ks = id.slices();
  const bool ok_ks = std::all_of(ks.begin(), ks.end(), [n](int k) { return k >= 0 && k <= n; }) &&
                     strictly_increasing(ks);
  const bool ok_face = id.face == 0 || ((id.kind == FactorKind::FaceMinorX || id.kind == FactorKind::FaceMinorY) && id.face == 1);
  if (!ok_ks || !ok_face) throw InvalidArgument("factor " + id.name() + " is not valid for n=" + std::to_string(n));
}

std::vector<std::string> VanishingPattern::names() const {
  std::vector<std::string> out;
  for (const auto& f : vanishing) out.push_back(f.name());
  return out;
}

std::vector<FactorId> VanishingPattern::minors() const {
  std::vector<FactorId> out;
  for (const auto& f : vanishing) {
    if (f.is_minor()) out.push_back(f);
  }
  return out;
}

VanishingPattern make_pattern(int n, std::span<const FactorId> factors) {
  VanishingPattern p;
  p.n = n;
  for (const auto& f : factors) {
    validate_factor(f, n);
    p.vanishing.insert(f);
  }
  return p;
}

VanishingPattern parse_pattern(int n, std::span<const std::string> names) {
  std::vector<FactorId> ids;
  for (const auto& s : names) ids.push_back(FactorId::parse(s));
  return make_pattern(n, ids);
}

// ------------------------------------------------------------ evaluation

Rational eval_minor(const ScalingTensor& w, const FactorId& id) {
  if (!id.is_minor()) throw InvalidArgument("eval_minor called on " + id.name());
  validate_factor(id, w.n());
  return minor_value(id, w);
}

BinaryForm pair_determinant(const ScalingTensor& w, int k1, int k2) {
  // Rows of T(y) are (w00k y0 + w01k y1, w10k y0 + w11k y1).
  const BinaryForm a1 = BinaryForm::linear(w(0, 0, k1), w(0, 1, k1));
  const BinaryForm b1 = BinaryForm::linear(w(1, 0, k1), w(1, 1, k1));
  const BinaryForm a2 = BinaryForm::linear(w(0, 0, k2), w(0, 1, k2));
  const BinaryForm b2 = BinaryForm::linear(w(1, 0, k2), w(1, 1, k2));
  return a1 * b2 - b1 * a2;
}

Rational eval_hyp222(const ScalingTensor& w, int k1, int k2) {
  validate_factor(FactorId::hyp222(k1, k2), w.n());
  Rational h = hyp222_value(k1, k2, w);
  assert(h == pair_determinant(w, k1, k2).discriminant());
  return h;
}

bool hyp223_vanishes(const ScalingTensor& w, int k1, int k2, int k3) {
  validate_factor(FactorId::hyp223(k1, k2, k3), w.n());
  const BinaryForm g = binary_gcd({pair_determinant(w, k1, k2), pair_determinant(w, k1, k3),
                                   pair_determinant(w, k2, k3)});
  return g.is_zero() || g.degree() > 0;
}

bool factor_vanishes(const ScalingTensor& w, const FactorId& id) {
  switch (id.kind) {
    case FactorKind::Hyp222:
      return eval_hyp222(w, id.ks[0], id.ks[1]).is_zero();
    case FactorKind::Hyp223:
      return hyp223_vanishes(w, id.ks[0], id.ks[1], id.ks[2]);
    default:
      return eval_minor(w, id).is_zero();
  }
}

VanishingPattern vanishing_pattern(const ScalingTensor& w) {
  VanishingPattern p;
  p.n = w.n();
  for (const auto& f : all_factors(w.n())) {
    if (factor_vanishes(w, f)) p.vanishing.insert(f);
  }
  return p;
}

// ----------------------------------------------------------- structures

namespace {

using Var = std::array<int, 3>;

std::size_t shared_variables(const FactorId& a, const FactorId& b) {
  const auto va = a.variables();
  const auto vb = b.variables();
  std::size_t count = 0;
  for (const auto& x : va) count += static_cast<std::size_t>(std::count(vb.begin(), vb.end(), x));
  return count;
}

bool disjoint(const FactorId& a, const FactorId& b) { return shared_variables(a, b) == 0; }

bool same_face(const FactorId& a, const FactorId& b) {
  return a.kind == b.kind && a.face == b.face &&
         (a.kind == FactorKind::FaceMinorX || a.kind == FactorKind::FaceMinorY);
}

int max_slice(std::span<const FactorId> minors) {
  int n = 1;
  for (const auto& m : minors) {
    for (int k : m.slices()) n = std::max(n, k);
  }
  return n;
}

// A square cup is three minors in one cube, two of which are disjoint.
bool is_square_cup(const FactorId& a, const FactorId& b, const FactorId& c) {
  return disjoint(a, b) || disjoint(a, c) || disjoint(b, c);
}

bool is_cubic_frame(const std::array<FactorId, 4>& f) {
  return (disjoint(f[0], f[1]) && disjoint(f[2], f[3])) ||
         (disjoint(f[0], f[2]) && disjoint(f[1], f[3])) ||
         (disjoint(f[0], f[3]) && disjoint(f[1], f[2]));
}

}  // namespace

bool minor_in_cube(const FactorId& minor, int k1, int k2) {
  const auto s = minor.slices();
  return std::all_of(s.begin(), s.end(), [&](int k) { return k == k1 || k == k2; });
}

StructureReport detect_structures(const VanishingPattern& pattern) {
  const std::vector<FactorId> minors = pattern.minors();
  const int n = pattern.n;
  StructureReport out;
  for (std::size_t a = 0; a < minors.size(); ++a) {
    for (std::size_t b = a + 1; b < minors.size(); ++b) {
      if (!same_face(minors[a], minors[b]) && shared_variables(minors[a], minors[b]) == 2) {
        out.hooks.push_back({minors[a], minors[b]});
      }
    }
  }
  for (int k1 = 0; k1 <= n; ++k1) {
    for (int k2 = k1 + 1; k2 <= n; ++k2) {
      std::vector<FactorId> cube;
      for (const auto& m : minors) {
        if (minor_in_cube(m, k1, k2)) cube.push_back(m);
      }
      const std::size_t c = cube.size();
      for (std::size_t a = 0; a < c; ++a) {
        for (std::size_t b = a + 1; b < c; ++b) {
          if (disjoint(cube[a], cube[b])) out.mirrors.push_back({cube[a], cube[b]});
          for (std::size_t d = b + 1; d < c; ++d) {
            if (is_square_cup(cube[a], cube[b], cube[d])) out.square_cups.push_back({cube[a], cube[b], cube[d]});
            for (std::size_t e = d + 1; e < c; ++e) {
              if (is_cubic_frame({cube[a], cube[b], cube[d], cube[e]})) {
                out.cubic_frames.push_back({cube[a], cube[b], cube[d], cube[e]});
              }
            }
          }
        }
      }
    }
  }
  return out;
}

bool forces_H(std::span<const FactorId> minors) {
  for (const auto& m : minors) {
    if (!m.is_minor()) throw InvalidArgument("forces_H expects minors only, got " + m.name());
  }
  const int n = max_slice(minors);
  VanishingPattern p;
  p.n = n;
  p.vanishing.insert(minors.begin(), minors.end());
  if (!detect_structures(p).square_cups.empty()) return true;
  for (std::size_t a = 0; a < minors.size(); ++a) {
    for (std::size_t b = a + 1; b < minors.size(); ++b) {
      if (!same_face(minors[a], minors[b])) continue;
      std::set<int> ks(minors[a].slices().begin(), minors[a].slices().end());
      ks.insert(minors[b].slices().begin(), minors[b].slices().end());
      if (ks.size() <= 3) return true;
    }
  }
  return false;
}

// ------------------------------------------------------------------ n = 1

std::string_view to_string(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::Empty:
      return "empty";
    case SymmetryClass::Single:
      return "single";
    case SymmetryClass::Pair:
      return "pair";
    case SymmetryClass::Corner:
      return "corner";
    case SymmetryClass::Frame:
      return "frame";
    case SymmetryClass::Full:
      return "full";
  }
  return "?";
}

N1Classification classify_pattern_n1(const VanishingPattern& pattern) {
  if (pattern.n != 1) throw InvalidArgument("classify_pattern_n1 needs an n = 1 pattern");
  for (const auto& f : pattern.vanishing) validate_factor(f, 1);

  const auto has = [&](const FactorId& f) { return pattern.contains(f); };
  const FactorId s0 = FactorId::slice_minor(0), s1 = FactorId::slice_minor(1);
  const FactorId x0 = FactorId::face_x(0, 0, 1), x1 = FactorId::face_x(1, 0, 1);
  const FactorId y0 = FactorId::face_y(0, 0, 1), y1 = FactorId::face_y(1, 0, 1);
  const FactorId h = FactorId::hyp222(0, 1);

  switch (pattern.vanishing.size()) {
    case 0:
      return {true, 6, SymmetryClass::Empty};
    case 1:
      return {true, 5, SymmetryClass::Single};
    case 2:
      return {true, 4, SymmetryClass::Pair};
    case 3: {
      // One minor from each axis direction: they meet at a corner.
      const bool x = has(x0) != has(x1);
      const bool y = has(y0) != has(y1);
      const bool s = has(s0) != has(s1);
      if (x && y && s) return {true, 3, SymmetryClass::Corner};
      return {};
    }
    case 5: {
      if (!has(h)) return {};
      const int pairs = (has(x0) && has(x1)) + (has(y0) && has(y1)) + (has(s0) && has(s1));
      if (pairs == 2) return {true, 2, SymmetryClass::Frame};
      return {};
    }
    case 7:
      return {true, 1, SymmetryClass::Full};
    default:
      return {};
  }
}

}  // namespace segre
