#include "kzres/exactalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace kzres {

namespace {

void check_label(int nvars, int label) {
  if (label < 1 || label > nvars) {
    throw std::out_of_range("variable label " + std::to_string(label) + " outside 1.." +
                            std::to_string(nvars));
  }
}

void normalize_terms(std::vector<SparsePolynomial::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Coefficient sum = terms[i].second;
    while (j < terms.size() && terms[j].first == terms[i].first) {
      sum += terms[j].second;
      ++j;
    }
    if (sum != 0) {
      terms[out].first = terms[i].first;
      terms[out].second = std::move(sum);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

struct ScaledTerms {
  std::vector<mpz_class> nums;
  mpz_class den{1};
};

ScaledTerms scale_to_integers(const std::vector<SparsePolynomial::Term>& terms) {
  ScaledTerms out;
  for (const auto& t : terms)
    if (t.second.get_den() != 1) mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(), t.second.get_den_mpz_t());
  out.nums.reserve(terms.size());
  for (const auto& t : terms) {
    if (out.den == 1) {
      out.nums.push_back(t.second.get_num());
    } else {
      out.nums.push_back(t.second.get_num() * (out.den / t.second.get_den()));
    }
  }
  return out;
}

using Wide = __int128;

bool fits_small_kernel(const ScaledTerms& a, const ScaledTerms& b) {
  auto bits = [](const ScaledTerms& t) {
    std::size_t most = 0;
    for (const auto& c : t.nums) {
      if (!c.fits_slong_p()) return std::size_t{200};
      most = std::max(most, mpz_sizeinbase(c.get_mpz_t(), 2));
    }
    return most;
  };
  std::size_t count_bits = 0;
  for (std::size_t n = std::min(a.nums.size(), b.nums.size()); n > 0; n >>= 1) ++count_bits;
  return bits(a) + bits(b) + count_bits + 1 < 126;
}

mpz_class to_mpz(Wide v) {
  const bool negative = v < 0;
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  mpz_class out(static_cast<unsigned long>(u >> 64));
  out <<= 64;
  out += mpz_class(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
  return negative ? mpz_class(-out) : out;
}

// Products whose coefficient sums provably fit in 128 bits. Dense
// accumulation when the key range is small, hashing otherwise. Emits
// (key, coefficient) in ascending key order.
template <class Emit>
void small_product(const ScaledTerms& a, const ScaledTerms& b, const std::vector<std::uint64_t>& ka,
                   const std::vector<std::uint64_t>& kb, std::uint64_t range, Emit emit) {
  std::vector<std::int64_t> na, nb;
  for (const auto& c : a.nums) na.push_back(c.get_si());
  for (const auto& c : b.nums) nb.push_back(c.get_si());
  const std::uint64_t pairs = static_cast<std::uint64_t>(na.size()) * nb.size();
  if (range <= std::max<std::uint64_t>(4 * pairs, 1 << 16) && range <= (std::uint64_t{1} << 25)) {
    std::vector<Wide> dense(range, 0);
    for (std::size_t i = 0; i < na.size(); ++i)
      for (std::size_t j = 0; j < nb.size(); ++j) dense[ka[i] + kb[j]] += static_cast<Wide>(na[i]) * nb[j];
    for (std::uint64_t key = 0; key < range; ++key)
      if (dense[key] != 0) emit(key, to_mpz(dense[key]));
    return;
  }
  std::unordered_map<std::uint64_t, Wide> acc;
  acc.reserve(std::min<std::uint64_t>(pairs, 1 << 20));
  for (std::size_t i = 0; i < na.size(); ++i)
    for (std::size_t j = 0; j < nb.size(); ++j) acc[ka[i] + kb[j]] += static_cast<Wide>(na[i]) * nb[j];
  std::vector<std::pair<std::uint64_t, Wide>> order;
  order.reserve(acc.size());
  for (const auto& [key, c] : acc)
    if (c != 0) order.emplace_back(key, c);
  std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (const auto& [key, c] : order) emit(key, to_mpz(c));
}

std::string monomial_string(const Monomial& m) {
  std::string s;
  for (int i = kMaxVars - 1; i >= 0; --i) {
    if (m.exp[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "z" + std::to_string(i + 1);
    if (m.exp[i] > 1) s += "^" + std::to_string(m.exp[i]);
  }
  return s;
}

}  // namespace

int Monomial::degree() const {
  int d = 0;
  for (auto e : exp) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  for (int i = 0; i < kMaxVars; ++i) {
    if (exp[i] > other.exp[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(exp[i] + other.exp[i]);
  return r;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<std::uint16_t>(exp[i] - divisor.exp[i]);
  return r;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (auto e : m.exp) {
    h ^= e;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

NotDivisibleError::NotDivisibleError(const std::string& what,
                                     std::vector<std::pair<Monomial, Coefficient>> remainder,
                                     int nvars)
    : std::runtime_error(what), remainder_(std::move(remainder)), nvars_(nvars) {}

SparsePolynomial NotDivisibleError::remainder() const { return SparsePolynomial(nvars_, remainder_); }

SparsePolynomial::SparsePolynomial(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw std::invalid_argument("unsupported number of variables");
}

SparsePolynomial::SparsePolynomial(int nvars, std::vector<Term> terms)
    : SparsePolynomial(nvars) {
  terms_ = std::move(terms);
  normalize_terms(terms_);
}

SparsePolynomial SparsePolynomial::constant(int nvars, const Coefficient& c) {
  SparsePolynomial p(nvars);
  if (c != 0) p.terms_.emplace_back(Monomial{}, c);
  return p;
}

SparsePolynomial SparsePolynomial::variable(int nvars, int label) {
  check_label(nvars, label);
  SparsePolynomial p(nvars);
  Monomial m;
  m.exp[label - 1] = 1;
  p.terms_.emplace_back(m, Coefficient(1));
  return p;
}

SparsePolynomial SparsePolynomial::difference(int nvars, int i, int j) {
  return variable(nvars, i) - variable(nvars, j);
}

SparsePolynomial SparsePolynomial::difference_power(int nvars, int i, int j, int k) {
  check_label(nvars, i);
  check_label(nvars, j);
  if (k < 0) throw std::invalid_argument("negative power of a point difference");
  if (i == j) return k == 0 ? constant(nvars, 1) : SparsePolynomial(nvars);
  std::vector<Term> terms;
  terms.reserve(static_cast<std::size_t>(k) + 1);
  for (int a = 0; a <= k; ++a) {
    Monomial m;
    m.exp[i - 1] = static_cast<std::uint16_t>(a);
    m.exp[j - 1] = static_cast<std::uint16_t>(k - a);
    Coefficient c(binomial(k, a));
    if ((k - a) % 2 == 1) c = -c;
    terms.emplace_back(m, c);
  }
  return SparsePolynomial(nvars, std::move(terms));
}

bool SparsePolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Monomial{});
}

Coefficient SparsePolynomial::constant_term() const { return coefficient(Monomial{}); }

Coefficient SparsePolynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return t.first < x; });
  if (it != terms_.end() && it->first == m) return it->second;
  return Coefficient(0);
}

int SparsePolynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool SparsePolynomial::is_homogeneous_of_degree(int degree) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [degree](const Term& t) { return t.first.degree() == degree; });
}

bool SparsePolynomial::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.second.get_den() == 1; });
}

const SparsePolynomial::Term& SparsePolynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  return terms_.back();
}

SparsePolynomial SparsePolynomial::partial_derivative(int label) const {
  check_label(nvars_, label);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    auto e = m.exp[label - 1];
    if (e == 0) continue;
    Monomial d = m;
    d.exp[label - 1] = static_cast<std::uint16_t>(e - 1);
    out.emplace_back(d, c * e);
  }
  return SparsePolynomial(nvars_, std::move(out));
}

SparsePolynomial SparsePolynomial::substitute(std::span<const int> target) const {
  if (static_cast<int>(target.size()) != nvars_) throw std::invalid_argument("substitution arity");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Monomial r;
    for (int k = 0; k < nvars_; ++k) {
      check_label(nvars_, target[k]);
      r.exp[target[k] - 1] = static_cast<std::uint16_t>(r.exp[target[k] - 1] + m.exp[k]);
    }
    out.emplace_back(r, c);
  }
  return SparsePolynomial(nvars_, std::move(out));
}

Coefficient SparsePolynomial::evaluate(std::span<const Coefficient> point) const {
  if (static_cast<int>(point.size()) < nvars_) throw std::invalid_argument("evaluation point too short");
  Coefficient acc = 0;
  for (const auto& [m, c] : terms_) {
    Coefficient v = c;
    for (int k = 0; k < nvars_; ++k)
      for (int e = 0; e < m.exp[k]; ++e) v *= point[k];
    acc += v;
  }
  return acc;
}

SparsePolynomial SparsePolynomial::pow(int exponent) const {
  if (exponent < 0) throw std::invalid_argument("negative exponent in polynomial power");
  SparsePolynomial result = constant(nvars_, 1);
  SparsePolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

SparsePolynomial SparsePolynomial::operator-() const {
  SparsePolynomial r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
  nvars_ = std::max(nvars_, other.nvars_);
  if (other.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Coefficient s = a->second + b->second;
      if (s != 0) merged.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& other) {
  return *this += -other;
}

SparsePolynomial& SparsePolynomial::operator*=(const Coefficient& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
  const int nvars = std::max(a.nvars_, b.nvars_);
  if (a.terms_.empty() || b.terms_.empty()) return SparsePolynomial(nvars);
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const auto& single = a.terms_.size() == 1 ? a.terms_[0] : b.terms_[0];
    const auto& other = a.terms_.size() == 1 ? b : a;
    SparsePolynomial r(nvars);
    r.terms_.reserve(other.terms_.size());
    // Multiplying by one monomial preserves the order.
    for (const auto& [m, c] : other.terms_) r.terms_.emplace_back(m * single.first, c * single.second);
    return r;
  }
  // Integer kernel: scale both factors to integer coefficients and
  // accumulate with fused multiply-add, dividing once at the end.
  const ScaledTerms sa = scale_to_integers(a.terms_);
  const ScaledTerms sb = scale_to_integers(b.terms_);
  const mpz_class den = sa.den * sb.den;
  std::vector<SparsePolynomial::Term> terms;

  std::array<int, kMaxVars> radix{};
  std::array<std::uint64_t, kMaxVars> stride{};
  bool packed = true;
  std::uint64_t total = 1;
  for (int k = 0; k < kMaxVars; ++k) {
    int ea = 0, eb = 0;
    for (const auto& t : a.terms_) ea = std::max<int>(ea, t.first.exp[k]);
    for (const auto& t : b.terms_) eb = std::max<int>(eb, t.first.exp[k]);
    radix[k] = ea + eb + 1;
    stride[k] = total;
    if (total > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(radix[k])) {
      packed = false;
      break;
    }
    total *= static_cast<std::uint64_t>(radix[k]);
  }

  if (packed) {
    // Mixed-radix keys with z_N most significant: key order is monomial
    // order and keys add under multiplication.
    auto keys = [&](const std::vector<SparsePolynomial::Term>& ts) {
      std::vector<std::uint64_t> out;
      out.reserve(ts.size());
      for (const auto& t : ts) {
        std::uint64_t key = 0;
        for (int k = 0; k < kMaxVars; ++k) key += t.first.exp[k] * stride[k];
        out.push_back(key);
      }
      return out;
    };
    const auto ka = keys(a.terms_);
    const auto kb = keys(b.terms_);
    if (fits_small_kernel(sa, sb)) {
      small_product(sa, sb, ka, kb, total, [&](std::uint64_t key, const mpz_class& c) {
        Monomial m;
        for (int k = 0; k < kMaxVars; ++k) m.exp[k] = static_cast<std::uint16_t>((key / stride[k]) % radix[k]);
        Coefficient q(c, den);
        q.canonicalize();
        terms.emplace_back(m, std::move(q));
      });
      SparsePolynomial r(nvars);
      r.terms_ = std::move(terms);
      return r;
    }
    std::unordered_map<std::uint64_t, mpz_class> acc;
    acc.reserve(std::min<std::size_t>(a.terms_.size() * b.terms_.size(), 1 << 20));
    for (std::size_t i = 0; i < ka.size(); ++i)
      for (std::size_t j = 0; j < kb.size(); ++j)
        mpz_addmul(acc[ka[i] + kb[j]].get_mpz_t(), sa.nums[i].get_mpz_t(), sb.nums[j].get_mpz_t());
    std::vector<std::pair<std::uint64_t, mpz_class*>> order;
    order.reserve(acc.size());
    for (auto& [key, c] : acc)
      if (c != 0) order.emplace_back(key, &c);
    std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    terms.reserve(order.size());
    for (const auto& [key, c] : order) {
      Monomial m;
      for (int k = 0; k < kMaxVars; ++k) m.exp[k] = static_cast<std::uint16_t>((key / stride[k]) % radix[k]);
      Coefficient q(*c, den);
      q.canonicalize();
      terms.emplace_back(m, std::move(q));
    }
  } else {
    std::unordered_map<Monomial, mpz_class, MonomialHash> acc;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      for (std::size_t j = 0; j < b.terms_.size(); ++j)
        mpz_addmul(acc[a.terms_[i].first * b.terms_[j].first].get_mpz_t(), sa.nums[i].get_mpz_t(),
                   sb.nums[j].get_mpz_t());
    terms.reserve(acc.size());
    for (auto& [m, c] : acc) {
      if (c == 0) continue;
      Coefficient q(c, den);
      q.canonicalize();
      terms.emplace_back(m, std::move(q));
    }
    std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  }
  SparsePolynomial r(nvars);
  r.terms_ = std::move(terms);
  return r;
}

bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) { return a.terms_ == b.terms_; }

std::string SparsePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Coefficient mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono = monomial_string(m);
    if (mono.empty()) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << mono;
    } else {
      os << mag.get_str() << "*" << mono;
    }
  }
  return os.str();
}

DivisionResult divide(const SparsePolynomial& p, const SparsePolynomial& q) {
  if (q.is_zero()) throw std::domain_error("division by the zero polynomial");
  const int nvars = std::max(p.nvars(), q.nvars());
  const auto& [lead_mono, lead_coeff] = q.leading_term();
  std::map<Monomial, Coefficient> work;
  for (const auto& [m, c] : p.terms()) work.emplace(m, c);
  std::vector<SparsePolynomial::Term> quotient;
  std::vector<SparsePolynomial::Term> remainder;
  Coefficient prod;
  while (!work.empty()) {
    auto top = std::prev(work.end());
    if (!lead_mono.divides(top->first)) {
      remainder.emplace_back(top->first, std::move(top->second));
      work.erase(top);
      continue;
    }
    const Monomial shift = top->first.quotient(lead_mono);
    const Coefficient factor = top->second / lead_coeff;
    quotient.emplace_back(shift, factor);
    for (const auto& [m, c] : q.terms()) {
      prod = c * factor;
      auto [it, inserted] = work.try_emplace(m * shift, 0);
      it->second -= prod;
      if (it->second == 0) work.erase(it);
    }
  }
  return {SparsePolynomial(nvars, std::move(quotient)), SparsePolynomial(nvars, std::move(remainder))};
}

SparsePolynomial exact_divide(const SparsePolynomial& p, const SparsePolynomial& q) {
  auto [quot, rem] = divide(p, q);
  if (!rem.is_zero()) {
    std::vector<SparsePolynomial::Term> terms(rem.terms().begin(), rem.terms().end());
    throw NotDivisibleError("polynomial is not divisible: remainder " + rem.to_string(),
                            std::move(terms), rem.nvars());
  }
  return quot;
}

namespace {

// Synthetic division by z_lo - z_hi in the variable z_hi. Returns false
// when the division leaves a remainder.
bool divide_by_difference(const SparsePolynomial& p, int lo, int hi, SparsePolynomial& out) {
  const int n = p.nvars();
  if (p.is_zero()) {
    out = p;
    return true;
  }
  std::vector<std::vector<SparsePolynomial::Term>> slice_terms;
  for (const auto& [m, c] : p.terms()) {
    const int e = m.exp[hi - 1];
    if (static_cast<int>(slice_terms.size()) <= e) slice_terms.resize(e + 1);
    Monomial rest = m;
    rest.exp[hi - 1] = 0;
    slice_terms[e].emplace_back(rest, c);
  }
  const int top = static_cast<int>(slice_terms.size()) - 1;
  if (top == 0) return false;
  std::vector<SparsePolynomial> slices;
  for (auto& ts : slice_terms) slices.emplace_back(n, std::move(ts));
  const SparsePolynomial z = SparsePolynomial::variable(n, lo);
  std::vector<SparsePolynomial> q(top, SparsePolynomial(n));
  q[top - 1] = -slices[top];
  for (int k = top - 1; k >= 1; --k) q[k - 1] = z * q[k] - slices[k];
  if (!(z * q[0] == slices[0])) return false;
  std::vector<SparsePolynomial::Term> terms;
  for (int k = 0; k < top; ++k)
    for (const auto& [m, c] : q[k].terms()) {
      Monomial shifted = m;
      shifted.exp[hi - 1] = static_cast<std::uint16_t>(k);
      terms.emplace_back(shifted, c);
    }
  out = SparsePolynomial(n, std::move(terms));
  return true;
}

}  // namespace

SparsePolynomial exact_divide_difference(SparsePolynomial p, int i, int j, int k) {
  if (k == 0) return p;
  if (i == j) throw std::domain_error("division by z_i - z_i");
  const int lo = std::min(i, j);
  const int hi = std::max(i, j);
  for (int step = 0; step < k; ++step) {
    SparsePolynomial q;
    if (!divide_by_difference(p, lo, hi, q)) {
      // Slow path only to produce the canonical remainder as witness.
      return exact_divide(p, SparsePolynomial::difference(p.nvars(), i, j));
    }
    p = i < j ? std::move(q) : -q;
  }
  return p;
}

SparsePolynomial euler_operator(const SparsePolynomial& p) {
  SparsePolynomial acc(p.nvars());
  for (int i = 1; i <= p.nvars(); ++i) acc += SparsePolynomial::variable(p.nvars(), i) * p.partial_derivative(i);
  return acc;
}

DifferenceFactorization factor_differences(const SparsePolynomial& p) {
  DifferenceFactorization out{{}, p};
  if (p.is_zero()) return out;
  const int n = p.nvars();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const SparsePolynomial d = SparsePolynomial::difference(n, i, j);
      int k = 0;
      while (!out.cofactor.is_constant()) {
        auto [quot, rem] = divide(out.cofactor, d);
        if (!rem.is_zero()) break;
        out.cofactor = std::move(quot);
        ++k;
      }
      if (k > 0) out.powers.push_back({{i, j}, k});
    }
  }
  return out;
}

std::string to_difference_string(const SparsePolynomial& p) {
  if (p.is_zero()) return "0";
  auto f = factor_differences(p);
  if (f.powers.empty()) return p.to_string();
  std::string s;
  if (f.cofactor.is_constant()) {
    const Coefficient c = f.cofactor.constant_term();
    if (c == -1) {
      s = "-";
    } else if (c != 1) {
      s = c.get_str() + "*";
    }
  }
  bool first = true;
  for (const auto& [ij, k] : f.powers) {
    if (!first) s += "*";
    first = false;
    s += "z" + std::to_string(ij.first) + std::to_string(ij.second);
    if (k > 1) s += "^" + std::to_string(k);
  }
  if (!f.cofactor.is_constant()) {
    if (f.cofactor.size() == 1) {
      s += "*" + f.cofactor.to_string();
    } else {
      s += "*(" + f.cofactor.to_string() + ")";
    }
  }
  return s;
}

mpz_class binomial(long e, long k) {
  if (k < 0) return 0;
  mpz_class num = 1;
  mpz_class den = 1;
  for (long i = 0; i < k; ++i) {
    num *= e - i;
    den *= i + 1;
  }
  return num / den;
}

}  // namespace kzres
