#include "segre/euler.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace segre {

// -------------------------------------------------------------- pencils

PencilMatrix::PencilMatrix(const ScalingTensor& w, std::vector<int> slices) : slices_(std::move(slices)) {
  if (slices_.empty()) throw InvalidArgument("pencil needs a nonempty slice set");
  for (int k : slices_) {
    if (k < 0 || k > w.n()) throw IndexOutOfRange("pencil slice index " + std::to_string(k));
    entries_.push_back(BinaryForm::linear(w(0, 0, k), w(0, 1, k)));
    entries_.push_back(BinaryForm::linear(w(1, 0, k), w(1, 1, k)));
  }
}

std::size_t PencilMatrix::position(int k) const {
  const auto it = std::find(slices_.begin(), slices_.end(), k);
  if (it == slices_.end()) throw InvalidArgument("slice " + std::to_string(k) + " is not a pencil row");
  return static_cast<std::size_t>(it - slices_.begin());
}

BinaryForm PencilMatrix::minor(int ka, int kb) const {
  const std::size_t a = position(ka);
  const std::size_t b = position(kb);
  return entry(a, 0) * entry(b, 1) - entry(a, 1) * entry(b, 0);
}

std::vector<BinaryForm> PencilMatrix::all_minors() const {
  std::vector<BinaryForm> out;
  for (std::size_t a = 0; a < slices_.size(); ++a) {
    for (std::size_t b = a + 1; b < slices_.size(); ++b) out.push_back(minor(slices_[a], slices_[b]));
  }
  return out;
}

bool PencilMatrix::has_rank_zero_point() const {
  const BinaryForm& first = entries_.front();
  return std::all_of(entries_.begin() + 1, entries_.end(), [&](const BinaryForm& e) {
    return (first.coeff(0) * e.coeff(1) - first.coeff(1) * e.coeff(0)).is_zero();
  });
}

PencilMatrix pencil(const ScalingTensor& w, std::span<const int> slices) {
  return PencilMatrix(w, std::vector<int>(slices.begin(), slices.end()));
}

// ----------------------------------------------------------- pair types

std::string_view to_string(PairType t) {
  switch (t) {
    case PairType::I:
      return "I";
    case PairType::II:
      return "II";
    case PairType::III:
      return "III";
    case PairType::IV_rows:
      return "IV_rows";
    case PairType::IV_cols:
      return "IV_cols";
    case PairType::V:
      return "V";
  }
  return "?";
}

PairType classify_type(const ScalingTensor& w, int i, int j) {
  if (i >= j) throw InvalidArgument("classify_type needs i < j");
  if (!eval_hyp222(w, i, j).is_zero()) return PairType::I;
  const bool si = eval_minor(w, FactorId::slice_minor(i)).is_zero();
  const bool sj = eval_minor(w, FactorId::slice_minor(j)).is_zero();
  const bool x0 = eval_minor(w, FactorId::face_x(0, i, j)).is_zero();
  const bool x1 = eval_minor(w, FactorId::face_x(1, i, j)).is_zero();
  const bool y0 = eval_minor(w, FactorId::face_y(0, i, j)).is_zero();
  const bool y1 = eval_minor(w, FactorId::face_y(1, i, j)).is_zero();
  if (si && sj && x0 && x1 && y0 && y1) return PairType::III;
  if (si && sj && x0 && x1) return PairType::II;
  if (si && sj && y0 && y1) return PairType::IV_cols;
  if (x0 && x1 && y0 && y1) return PairType::IV_rows;
  return PairType::V;
}

// ------------------------------------------------------------- chi(V_I)

namespace {

void check_slices(const ScalingTensor& w, std::span<const int> slices) {
  if (slices.empty()) throw InvalidArgument("slice set must be nonempty");
  for (std::size_t a = 0; a < slices.size(); ++a) {
    if (slices[a] < 0 || slices[a] > w.n()) throw IndexOutOfRange("slice index " + std::to_string(slices[a]));
    if (a > 0 && slices[a] <= slices[a - 1]) throw InvalidArgument("slice set must be strictly increasing");
  }
}

// chi of {(x, y) : T(y) x = 0} from the gcd of the 2-minors and the
// rank-0 flag: each distinct root of g carries one x (rank 1) or a whole
// P^1 of them (rank 0); g == 0 means rank <= 1 on all of P^1.
int chi_from_gcd(const BinaryForm& g, bool rank_zero_point) {
  const int r0 = rank_zero_point ? 1 : 0;
  if (g.is_zero()) return 2 + r0;
  if (g.degree() == 0) return 0;
  return distinct_root_count(g).distinct + r0;
}

// Precomputed entry forms and pair determinants for one tensor, shared
// by every subset visited in the ML degree sum.
class PencilCache {
 public:
  explicit PencilCache(const ScalingTensor& w) : w_(w), m_(w.slice_count()) {
    for (int k = 0; k < m_; ++k) {
      col0_.push_back(BinaryForm::linear(w(0, 0, k), w(0, 1, k)));
      col1_.push_back(BinaryForm::linear(w(1, 0, k), w(1, 1, k)));
    }
    pair_det_.resize(static_cast<std::size_t>(m_ * m_));
    for (int a = 0; a < m_; ++a) {
      for (int b = a + 1; b < m_; ++b) {
        pair_det_[static_cast<std::size_t>(a * m_ + b)] = col0_[static_cast<std::size_t>(a)] * col1_[static_cast<std::size_t>(b)] -
                                                          col1_[static_cast<std::size_t>(a)] * col0_[static_cast<std::size_t>(b)];
      }
    }
  }

  int chi(std::span<const int> ks) const {
    if (ks.size() == 1) return 4 - static_cast<int>(rank(w_.slice(ks[0])));
    std::vector<BinaryForm> minors;
    BinaryForm g = BinaryForm::zero();
    for (std::size_t a = 0; a < ks.size(); ++a) {
      for (std::size_t b = a + 1; b < ks.size(); ++b) {
        const BinaryForm& d = pair_det_[static_cast<std::size_t>(ks[a] * m_ + ks[b])];
        g = binary_gcd({g, d});
        if (g.degree() == 0 && !g.is_zero()) return 0;
      }
    }
    return chi_from_gcd(g, rank_zero(ks));
  }

 private:
  bool rank_zero(std::span<const int> ks) const {
    const BinaryForm& first = col0_[static_cast<std::size_t>(ks[0])];
    auto proportional = [&](const BinaryForm& e) {
      return (first.coeff(0) * e.coeff(1) - first.coeff(1) * e.coeff(0)).is_zero();
    };
    return std::all_of(ks.begin(), ks.end(), [&](int k) {
      return proportional(col0_[static_cast<std::size_t>(k)]) && proportional(col1_[static_cast<std::size_t>(k)]);
    });
  }

  const ScalingTensor& w_;
  int m_;
  std::vector<BinaryForm> col0_, col1_, pair_det_;
};

}  // namespace

int chi_VI(const ScalingTensor& w, std::span<const int> slices) {
  check_slices(w, slices);
  if (slices.size() == 1) return 4 - static_cast<int>(rank(w.slice(slices[0])));
  const PencilMatrix t = pencil(w, slices);
  return chi_from_gcd(binary_gcd(t.all_minors()), t.has_rank_zero_point());
}

std::string_view to_string(ClosedFormCase c) {
  switch (c) {
    case ClosedFormCase::PairByType:
      return "pair-by-type";
    case ClosedFormCase::TripleEmpty:
      return "triple-empty";
    case ClosedFormCase::TripleAnyV:
      return "triple-any-V";
    case ClosedFormCase::TripleIIWithIIorIII:
      return "triple-II-with-II/III";
    case ClosedFormCase::TripleIIOther:
      return "triple-II-other";
    case ClosedFormCase::TripleAllIII:
      return "triple-all-III";
    case ClosedFormCase::TripleNoTypeI:
      return "triple-no-type-I";
    case ClosedFormCase::TripleOneOrTwoI:
      return "triple-one-or-two-I";
    case ClosedFormCase::TripleTwoIWithIVcols:
      return "triple-two-I-IV_cols";
    case ClosedFormCase::TripleThreeIRankDeficient:
      return "triple-three-I-rank<3";
    case ClosedFormCase::TripleThreeIFullRank:
      return "triple-three-I-rank3";
  }
  return "?";
}

ClosedFormResult chi_VI_closed_form_case(const ScalingTensor& w, std::span<const int> slices) {
  check_slices(w, slices);
  if (slices.size() == 2) {
    switch (classify_type(w, slices[0], slices[1])) {
      case PairType::III:
        return {3, ClosedFormCase::PairByType};
      case PairType::V:
        return {1, ClosedFormCase::PairByType};
      default:
        return {2, ClosedFormCase::PairByType};
    }
  }
  if (slices.size() != 3) throw InvalidArgument("closed form covers |I| = 2 or 3 only");

  const int a = slices[0], b = slices[1], c = slices[2];
  if (!hyp223_vanishes(w, a, b, c)) return {0, ClosedFormCase::TripleEmpty};

  const std::array<PairType, 3> t{classify_type(w, a, b), classify_type(w, a, c), classify_type(w, b, c)};
  const auto count = [&](PairType p) { return static_cast<int>(std::count(t.begin(), t.end(), p)); };
  const auto all_in = [&](std::initializer_list<PairType> ok) {
    return std::all_of(t.begin(), t.end(), [&](PairType p) { return std::find(ok.begin(), ok.end(), p) != ok.end(); });
  };

  if (count(PairType::V) > 0) return {1, ClosedFormCase::TripleAnyV};
  if (count(PairType::II) > 0) {
    if (all_in({PairType::II, PairType::III})) return {2, ClosedFormCase::TripleIIWithIIorIII};
    return {1, ClosedFormCase::TripleIIOther};
  }
  if (count(PairType::III) == 3) return {3, ClosedFormCase::TripleAllIII};
  const int type_i = count(PairType::I);
  if (type_i == 0) return {2, ClosedFormCase::TripleNoTypeI};
  if (type_i == 3) {
    const std::array<int, 3> ks{a, b, c};
    if (rank(w.flattening(3, ks)) < 3) return {2, ClosedFormCase::TripleThreeIRankDeficient};
    return {1, ClosedFormCase::TripleThreeIFullRank};
  }
  if (type_i == 2 && count(PairType::IV_cols) == 1) return {1, ClosedFormCase::TripleTwoIWithIVcols};
  return {2, ClosedFormCase::TripleOneOrTwoI};
}

int chi_VI_closed_form(const ScalingTensor& w, std::span<const int> slices) {
  return chi_VI_closed_form_case(w, slices).chi;
}

// ------------------------------------------------------ axis strata

std::string AxisZeros::str() const {
  std::string out = "[";
  if (x) out += "x" + std::to_string(*x);
  if (x && y) out += ",";
  if (y) out += "y" + std::to_string(*y);
  return out + "]";
}

std::vector<AxisZeros> all_axis_zeros() {
  std::vector<AxisZeros> out;
  const std::array<std::optional<int>, 3> choices{std::nullopt, 0, 1};
  for (const auto& x : choices) {
    for (const auto& y : choices) out.push_back({x, y});
  }
  return out;
}

namespace {

// 2 - rank of the |I| x 2 matrix of one face restricted to I.
int face_corank(const ScalingTensor& w, std::span<const int> slices, Axis axis, int index) {
  RatMatrix m(slices.size(), 2);
  for (std::size_t r = 0; r < slices.size(); ++r) {
    for (int c = 0; c < 2; ++c) {
      m(r, static_cast<std::size_t>(c)) = axis == Axis::X ? w(index, c, slices[r]) : w(c, index, slices[r]);
    }
  }
  return 2 - static_cast<int>(rank(m));
}

int chi_axis_part(const ScalingTensor& w, std::span<const int> slices, const AxisZeros& j) {
  if (j.size() == 2) return 0;
  if (j.x) return face_corank(w, slices, Axis::X, 1 - *j.x);
  return face_corank(w, slices, Axis::Y, 1 - *j.y);
}

void check_zeros(const AxisZeros& j) {
  const auto ok = [](const std::optional<int>& v) { return !v || *v == 0 || *v == 1; };
  if (!ok(j.x) || !ok(j.y)) throw InvalidArgument("malformed coordinate set J");
}

}  // namespace

int chi_VI_XJ(const ScalingTensor& w, std::span<const int> slices, const AxisZeros& j) {
  check_slices(w, slices);
  check_zeros(j);
  if (j.size() == 0) return chi_VI(w, slices);
  return chi_axis_part(w, slices, j);
}

std::string MLDegreeTerm::key() const {
  std::string out = "I=[";
  for (std::size_t a = 0; a < slices.size(); ++a) {
    if (a) out += ",";
    out += std::to_string(slices[a]);
  }
  return out + "];J=" + zeros.str();
}

// ------------------------------------------------------------ ML degree

MLDegreeReport mldeg(const ScalingTensor& w) {
  const int m = w.slice_count();
  if (m > 24) throw InvalidArgument("mldeg enumerates 2^(n+1) subsets; n is too large");
  const PencilCache cache(w);
  const auto zeros = all_axis_zeros();

  MLDegreeReport report;
  long total = 0;
  std::vector<int> ks;
  for (unsigned long mask = 1; mask < (1UL << m); ++mask) {
    ks.clear();
    for (int k = 0; k < m; ++k) {
      if (mask & (1UL << k)) ks.push_back(k);
    }
    const long sign_i = (ks.size() % 2 == 0) ? 1 : -1;
    for (const auto& j : zeros) {
      const int chi = j.size() == 0 ? cache.chi(ks) : chi_axis_part(w, ks, j);
      const long sign_j = (j.size() % 2 == 0) ? 1 : -1;
      total += sign_i * sign_j * chi;
      report.terms.push_back({ks, j, chi});
    }
  }
  report.mldeg = total;
  report.chi_Y = (w.n() % 2 == 1) ? total : -total;  // (-1)^(n+1) * mldeg
  report.factor_pattern = vanishing_pattern(w);
  return report;
}

long mldeg_value(const ScalingTensor& w) { return mldeg(w).mldeg; }

long mldeg_matrix(const RatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) throw InvalidArgument("empty matrix");
  if (m.rows() > 16 || m.cols() > 16) throw InvalidArgument("matrix too large for subset enumeration");
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c).is_zero()) {
        throw InvalidArgument("matrix entry (" + std::to_string(r) + "," + std::to_string(c) + ") is zero");
      }
    }
  }
  long total = 0;
  std::vector<std::size_t> rows, cols;
  for (unsigned long rm = 1; rm < (1UL << m.rows()); ++rm) {
    rows.clear();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (rm & (1UL << r)) rows.push_back(r);
    }
    for (unsigned long cm = 1; cm < (1UL << m.cols()); ++cm) {
      cols.clear();
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (cm & (1UL << c)) cols.push_back(c);
      }
      const long sign = ((rows.size() + cols.size()) % 2 == 0) ? 1 : -1;
      total += sign * static_cast<long>(rank(m.submatrix(rows, cols)));
    }
  }
  return total;
}

std::optional<long> mldeg_point_formula(const ScalingTensor& w) {
  const int m = w.slice_count();
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      for (int c = b + 1; c < m; ++c) {
        if (hyp223_vanishes(w, a, b, c)) return std::nullopt;
      }
    }
  }
  // A nonsingular quadric a + bx + cy + dxy in the torus is a hyperbola
  // minus its two axis points (chi = -2); a singular one is two lines
  // parallel to the axes meeting in one torus point (chi = -1).
  long quadrics = 0;
  for (int k = 0; k < m; ++k) quadrics += eval_minor(w, FactorId::slice_minor(k)).is_zero() ? -1 : -2;

  const auto zeros = all_axis_zeros();
  long pairs = 0;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      const std::array<int, 2> ks{a, b};
      long torus_chi = 0;
      for (const auto& j : zeros) {
        const long sign = (j.size() % 2 == 0) ? 1 : -1;
        torus_chi += sign * chi_VI_XJ(w, ks, j);
      }
      pairs += torus_chi;
    }
  }
  return -(quadrics - pairs);
}

}  // namespace segre
