#include "segre/polynomial.hpp"

#include <algorithm>
#include <map>

#include "segre/errors.hpp"

namespace segre {

// ------------------------------------------------------------ monomials

Monomial Monomial::var(int v, int power) {
  if (v < 0 || v >= kMaxVars) throw IndexOutOfRange("variable index " + std::to_string(v));
  Monomial m;
  m.e[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(power);
  m.degree = power;
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    const int s = e[v] + o.e[v];
    if (s > 255) throw ResourceBudgetExceeded("monomial exponent overflow");
    r.e[v] = static_cast<std::uint8_t>(s);
  }
  r.degree = degree + o.degree;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  if (degree > o.degree) return false;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    if (e[v] > o.e[v]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Monomial r;
  for (std::size_t v = 0; v < kMaxVars; ++v) r.e[v] = static_cast<std::uint8_t>(o.e[v] - e[v]);
  r.degree = o.degree - degree;
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    r.e[v] = std::max(e[v], o.e[v]);
    r.degree += r.e[v];
  }
  return r;
}

bool Monomial::coprime(const Monomial& o) const {
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    if (e[v] != 0 && o.e[v] != 0) return false;
  }
  return true;
}

std::optional<int> Monomial::pure_power_variable() const {
  std::optional<int> found;
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    if (e[v] == 0) continue;
    if (found) return std::nullopt;
    found = static_cast<int>(v);
  }
  return found;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree != b.degree) return a.degree > b.degree ? 1 : -1;
  for (int v = kMaxVars - 1; v >= 0; --v) {
    const auto av = a.e[static_cast<std::size_t>(v)];
    const auto bv = b.e[static_cast<std::size_t>(v)];
    if (av != bv) return av < bv ? 1 : -1;
  }
  return 0;
}

// ---------------------------------------------------------- polynomials

namespace {

// Merge two descending term lists as a + s * b.
std::vector<Term> merge(const std::vector<Term>& a, std::size_t a_from, const std::vector<Term>& b,
                        const mpq_class& s, const Monomial& shift) {
  std::vector<Term> out;
  out.reserve(a.size() - a_from + b.size());
  std::size_t i = a_from, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    const Monomial bm = b[j].m * shift;
    const int cmp = i == a.size() ? -1 : grevlex_compare(a[i].m, bm);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({bm, s * b[j].c});
      ++j;
    } else {
      mpq_class c = a[i].c + s * b[j].c;
      if (sgn(c) != 0) out.push_back({a[i].m, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial Polynomial::constant(const mpq_class& c) {
  Polynomial p;
  if (sgn(c) != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::from_sorted_terms(std::vector<Term> terms) {
  Polynomial p;
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::variable(int v) {
  Polynomial p;
  p.terms_.push_back({Monomial::var(v), mpq_class(1)});
  return p;
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.m.degree);
  return d;
}

std::size_t Polynomial::max_coeff_bits() const {
  std::size_t bits = 0;
  for (const auto& t : terms_) {
    bits = std::max(bits, mpz_sizeinbase(t.c.get_num_mpz_t(), 2) + mpz_sizeinbase(t.c.get_den_mpz_t(), 2));
  }
  return bits;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r;
  r.terms_ = merge(terms_, 0, o.terms_, mpq_class(1), Monomial{});
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r;
  r.terms_ = merge(terms_, 0, o.terms_, mpq_class(-1), Monomial{});
  return r;
}

void Polynomial::add_term(Monomial m, mpq_class c) { terms_.push_back({m, std::move(c)}); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  Polynomial acc;
  for (const auto& t : terms_) {
    Polynomial next;
    next.terms_ = merge(acc.terms_, 0, o.terms_, t.c, t.m);
    acc = std::move(next);
  }
  return acc;
}

Polynomial Polynomial::scaled(const mpq_class& c) const {
  Polynomial r;
  if (sgn(c) == 0) return r;
  for (const auto& t : terms_) r.add_term(t.m, t.c * c);
  return r;
}

Polynomial Polynomial::shifted(const Monomial& m) const {
  Polynomial r;
  for (const auto& t : terms_) r.add_term(t.m * m, t.c);
  return r;
}

Polynomial Polynomial::minus_multiple(const mpq_class& c, const Monomial& m, const Polynomial& g) const {
  Polynomial r;
  r.terms_ = merge(terms_, 0, g.terms_, -c, m);
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  const mpq_class lc = terms_.front().c;
  Polynomial r;
  for (const auto& t : terms_) r.add_term(t.m, t.c / lc);
  return r;
}

Polynomial Polynomial::derivative(int v) const {
  Polynomial r;
  const auto idx = static_cast<std::size_t>(v);
  for (const auto& t : terms_) {
    if (t.m.e[idx] == 0) continue;
    Monomial m = t.m;
    m.e[idx] = static_cast<std::uint8_t>(m.e[idx] - 1);
    m.degree -= 1;
    r.add_term(m, t.c * t.m.e[idx]);
  }
  // Differentiation preserves grevlex order among surviving terms only up
  // to ties in degree, so re-sort.
  std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& a, const Term& b) { return grevlex_compare(a.m, b.m) > 0; });
  return r;
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t t = 0; t < terms_.size(); ++t) {
    const auto& term = terms_[t];
    std::string c = term.c.get_str();
    if (t > 0) {
      if (c[0] == '-') {
        out += " - ";
        c.erase(0, 1);
      } else {
        out += " + ";
      }
    }
    std::string mono;
    for (std::size_t v = 0; v < kMaxVars; ++v) {
      if (term.m.e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += v < names.size() ? names[v] : "v" + std::to_string(v);
      if (term.m.e[v] > 1) mono += "^" + std::to_string(term.m.e[v]);
    }
    if (mono.empty()) {
      out += c;
    } else if (c == "1") {
      out += mono;
    } else if (c == "-1") {
      out += "-" + mono;
    } else {
      out += c + "*" + mono;
    }
  }
  return out;
}

// ----------------------------------------------------------- Buchberger

namespace {

// Integer polynomials used inside the completion: reductions are done
// fraction-free and each result is divided by its content, which keeps
// intermediate coefficients far smaller than monic rational arithmetic.
struct ZTerm {
  Monomial m;
  mpz_class c;
};
using ZPoly = std::vector<ZTerm>;

ZPoly to_integer(const Polynomial& p) {
  mpz_class den = 1;
  for (const auto& t : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.c.get_den_mpz_t());
  ZPoly out;
  for (const auto& t : p.terms()) {
    mpz_class c = t.c.get_num() * (den / t.c.get_den());
    out.push_back({t.m, std::move(c)});
  }
  return out;
}

Polynomial to_monic_rational(const ZPoly& p) {
  std::vector<Term> terms;
  const mpz_class& lc = p.front().c;
  for (const auto& t : p) {
    mpq_class c(t.c, lc);
    c.canonicalize();
    terms.push_back({t.m, std::move(c)});
  }
  return Polynomial::from_sorted_terms(std::move(terms));
}

void make_primitive(ZPoly& p) {
  if (p.empty()) return;
  mpz_class g = 0;
  for (const auto& t : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(p.front().c) < 0) g = -g;
  if (g != 1) {
    for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
  }
}

std::size_t max_bits(const ZPoly& p) {
  std::size_t bits = 0;
  for (const auto& t : p) bits = std::max(bits, mpz_sizeinbase(t.c.get_mpz_t(), 2));
  return bits;
}

// a * p[from..] - b * shift * g
ZPoly zcombine(const ZPoly& p, std::size_t from, const mpz_class& a, const ZPoly& g, const mpz_class& b,
               const Monomial& shift) {
  ZPoly out;
  out.reserve(p.size() - from + g.size());
  std::size_t i = from, j = 0;
  while (i < p.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back({p[i].m, a * p[i].c});
      ++i;
      continue;
    }
    const Monomial gm = g[j].m * shift;
    const int cmp = i == p.size() ? -1 : grevlex_compare(p[i].m, gm);
    if (cmp > 0) {
      out.push_back({p[i].m, a * p[i].c});
      ++i;
    } else if (cmp < 0) {
      out.push_back({gm, -(b * g[j].c)});
      ++j;
    } else {
      mpz_class c = a * p[i].c - b * g[j].c;
      if (sgn(c) != 0) out.push_back({p[i].m, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

struct Entry {
  ZPoly p;
  int sugar = 0;
  bool active = false;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  int sugar;
};

class Completion {
 public:
  explicit Completion(const GroebnerBudget& budget) : budget_(budget) {}

  void insert(const Polynomial& f, int sugar) {
    ZPoly h = reduce(to_integer(f), active_divisors());
    if (h.empty()) return;
    add(std::move(h), sugar);
  }

  void run() {
    while (!pairs_.empty()) {
      auto best = pairs_.begin();
      for (auto it = pairs_.begin(); it != pairs_.end(); ++it) {
        if (it->sugar < best->sugar || (it->sugar == best->sugar && grevlex_compare(it->lcm, best->lcm) < 0)) best = it;
      }
      const Pair pr = *best;
      pairs_.erase(best);
      const ZPoly& a = entries_[pr.i].p;
      const ZPoly& b = entries_[pr.j].p;
      // lc(b) * (lcm/lm a) * a - lc(a) * (lcm/lm b) * b, with the common gcd removed.
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), a.front().c.get_mpz_t(), b.front().c.get_mpz_t());
      const mpz_class ca = b.front().c / g;
      const mpz_class cb = a.front().c / g;
      ZPoly shifted_a;
      const Monomial sa = a.front().m.quotient_of(pr.lcm);
      for (const auto& t : a) shifted_a.push_back({t.m * sa, t.c});
      ZPoly s = zcombine(shifted_a, 0, ca, b, cb, b.front().m.quotient_of(pr.lcm));
      ZPoly h = reduce(std::move(s), active_divisors());
      if (h.empty()) continue;
      add(std::move(h), pr.sugar);
    }
  }

  std::vector<Polynomial> reduced_basis() {
    std::vector<ZPoly> basis;
    for (const auto& e : entries_) {
      if (e.active) basis.push_back(e.p);
    }
    std::sort(basis.begin(), basis.end(),
              [](const ZPoly& a, const ZPoly& b) { return grevlex_compare(a.front().m, b.front().m) < 0; });
    // Tail-reduce each element by the others; leading terms are already
    // pairwise non-dividing, so the leading term survives.
    for (std::size_t a = 0; a < basis.size(); ++a) {
      std::vector<const ZPoly*> others;
      for (std::size_t b = 0; b < basis.size(); ++b) {
        if (b != a) others.push_back(&basis[b]);
      }
      basis[a] = reduce(basis[a], others);
    }
    std::vector<Polynomial> out;
    for (const auto& p : basis) out.push_back(to_monic_rational(p));
    return out;
  }

 private:
  std::vector<const ZPoly*> active_divisors() const {
    std::vector<const ZPoly*> out;
    for (const auto& e : entries_) {
      if (e.active) out.push_back(&e.p);
    }
    return out;
  }

  ZPoly reduce(ZPoly work, const std::vector<const ZPoly*>& divisors) const {
    ZPoly done;
    std::size_t pos = 0;
    int steps = 0;
    while (pos < work.size()) {
      const ZTerm& lt = work[pos];
      const ZPoly* hit = nullptr;
      for (const ZPoly* g : divisors) {
        if (g->front().m.divides(lt.m)) {
          hit = g;
          break;
        }
      }
      if (hit == nullptr) {
        done.push_back(lt);
        ++pos;
        continue;
      }
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), lt.c.get_mpz_t(), hit->front().c.get_mpz_t());
      const mpz_class a = hit->front().c / g;
      const mpz_class b = lt.c / g;
      const Monomial shift = hit->front().m.quotient_of(lt.m);
      work = zcombine(work, pos, a, *hit, b, shift);
      if (a != 1) {
        for (auto& t : done) t.c *= a;
      }
      pos = 0;
      if (++steps % 8 == 0) shrink(done, work);
    }
    make_primitive(done);
    if (max_bits(done) > budget_.max_coeff_bits) {
      throw ResourceBudgetExceeded("coefficient size exceeds " + std::to_string(budget_.max_coeff_bits) + " bits");
    }
    return done;
  }

  // Divide the partial result and the remaining work by their joint content.
  void shrink(ZPoly& done, ZPoly& work) const {
    mpz_class g = 0;
    for (const auto* part : {&done, &work}) {
      for (const auto& t : *part) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
        if (g == 1) return;
      }
    }
    if (g == 0) return;
    for (auto* part : {&done, &work}) {
      for (auto& t : *part) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
    }
    const std::size_t bits = std::max(max_bits(done), max_bits(work));
    if (bits > budget_.max_coeff_bits) {
      throw ResourceBudgetExceeded("coefficient size exceeds " + std::to_string(budget_.max_coeff_bits) + " bits");
    }
  }

  // Gebauer-Moeller update: product criterion, chain criterion, and
  // retirement of basis elements whose leading term becomes redundant.
  void add(ZPoly h, int sugar) {
    const std::size_t hi = entries_.size();
    const Monomial hm = h.front().m;
    entries_.push_back({std::move(h), sugar, true});

    std::vector<Pair> fresh;
    for (std::size_t g = 0; g < hi; ++g) {
      if (!entries_[g].active) continue;
      const Monomial& gm = entries_[g].p.front().m;
      const Monomial l = hm.lcm(gm);
      const int s = std::max(sugar + l.degree - hm.degree, entries_[g].sugar + l.degree - gm.degree);
      fresh.push_back({g, hi, l, s});
    }
    // Drop a new pair whose lcm is a proper multiple of another new pair's
    // lcm, keeping one representative per lcm (a coprime one if present).
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      bool drop = false;
      for (std::size_t b = 0; b < fresh.size() && !drop; ++b) {
        if (a == b || !fresh[b].lcm.divides(fresh[a].lcm)) continue;
        if (!(fresh[b].lcm == fresh[a].lcm)) {
          drop = true;
        } else {
          const bool a_coprime = entries_[fresh[a].i].p.front().m.coprime(hm);
          const bool b_coprime = entries_[fresh[b].i].p.front().m.coprime(hm);
          drop = (b_coprime && !a_coprime) || (a_coprime == b_coprime && b < a);
        }
      }
      if (!drop) kept.push_back(fresh[a]);
    }
    // Product criterion.
    std::erase_if(kept, [&](const Pair& p) { return entries_[p.i].p.front().m.coprime(hm); });
    // Chain criterion on old pairs.
    std::erase_if(pairs_, [&](const Pair& p) {
      if (!hm.divides(p.lcm)) return false;
      const Monomial li = entries_[p.i].p.front().m.lcm(hm);
      const Monomial lj = entries_[p.j].p.front().m.lcm(hm);
      return !(li == p.lcm) && !(lj == p.lcm);
    });
    pairs_.insert(pairs_.end(), kept.begin(), kept.end());

    std::size_t active = 0;
    for (std::size_t g = 0; g <= hi; ++g) {
      if (g < hi && entries_[g].active && hm.divides(entries_[g].p.front().m)) entries_[g].active = false;
      active += entries_[g].active ? 1 : 0;
    }
    if (active > budget_.max_basis) {
      throw ResourceBudgetExceeded("Groebner basis exceeds " + std::to_string(budget_.max_basis) + " elements");
    }
  }

  GroebnerBudget budget_;
  std::vector<Entry> entries_;
  std::vector<Pair> pairs_;
};

}  // namespace

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& input, int num_vars, const GroebnerBudget& budget) {
  if (num_vars < 1 || num_vars > kMaxVars) throw InvalidArgument("unsupported number of variables");
  Completion c(budget);
  for (const auto& f : input) {
    if (!f.is_zero()) c.insert(f, f.total_degree());
  }
  c.run();
  return c.reduced_basis();
}


std::size_t standard_monomial_count(const std::vector<Polynomial>& basis, int num_vars) {
  std::vector<Monomial> leads;
  for (const auto& g : basis) {
    if (g.is_zero()) continue;
    if (g.leading().m.degree == 0) return 0;  // the unit ideal
    leads.push_back(g.leading().m);
  }
  std::vector<int> bound(static_cast<std::size_t>(num_vars), -1);
  for (const auto& m : leads) {
    if (const auto v = m.pure_power_variable()) {
      int& b = bound[static_cast<std::size_t>(*v)];
      const int a = m.e[static_cast<std::size_t>(*v)];
      if (b < 0 || a < b) b = a;
    }
  }
  double box = 1;
  for (int v = 0; v < num_vars; ++v) {
    if (bound[static_cast<std::size_t>(v)] < 0) {
      throw NotZeroDimensional("no pure power of variable " + std::to_string(v) + " among the leading terms");
    }
    box *= bound[static_cast<std::size_t>(v)];
  }
  if (box > 5e7) throw ResourceBudgetExceeded("standard monomial box too large");

  std::size_t count = 0;
  Monomial m;
  // Odometer over the exponent box, skipping multiples of leading terms.
  while (true) {
    const bool standard = std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
    if (standard) ++count;
    int v = 0;
    for (; v < num_vars; ++v) {
      auto& ev = m.e[static_cast<std::size_t>(v)];
      if (ev + 1 < bound[static_cast<std::size_t>(v)]) {
        ++ev;
        ++m.degree;
        break;
      }
      m.degree -= ev;
      ev = 0;
    }
    if (v == num_vars) break;
  }
  return count;
}

}  // namespace segre
