#include "gliderrep/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "gliderrep/error.hpp"

namespace glrep {

Rat rat_parse(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) fail_usage("malformed rational '" + s + "'");
  q.canonicalize();
  return q;
}

long rat_to_long(const Rat& r) {
  if (!rat_is_int(r)) fail_domain("expected integer, got " + rat_str(r));
  if (!r.get_num().fits_slong_p()) fail_domain("integer out of range: " + rat_str(r));
  return r.get_num().get_si();
}

long euler_phi(long n) {
  long result = n, m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

using Poly = std::vector<Rat>;  // ascending degree, trimmed

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rat(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  poly_trim(out);
  return out;
}

// Euclidean division over Q[x]: returns the quotient and reduces a to the
// remainder in place.
Poly poly_divmod(Poly& a, const Poly& b) {
  if (b.empty()) fail_domain("polynomial division by zero");
  Poly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rat(0));
  const Rat& lead = b.back();
  while (a.size() >= b.size()) {
    Rat c = a.back() / lead;
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    poly_trim(a);
    if (a.empty()) break;
  }
  return q;
}

// Extended gcd returning (g, u) with u*a = g modulo b, g monic.
std::pair<Poly, Poly> poly_half_ext_gcd(Poly a, Poly b) {
  Poly u{Rat(1)}, v{};
  while (!b.empty()) {
    Poly r = a;
    Poly q = poly_divmod(r, b);
    Poly nu = u;
    Poly qv = poly_mul(q, v);
    if (nu.size() < qv.size()) nu.resize(qv.size(), Rat(0));
    for (size_t i = 0; i < qv.size(); ++i) nu[i] -= qv[i];
    poly_trim(nu);
    a = std::move(b);
    u = std::move(v);
    b = std::move(r);
    v = std::move(nu);
  }
  if (!a.empty() && a.back() != 1) {
    Rat lead = a.back();
    for (auto& c : a) c /= lead;
    for (auto& c : u) c /= lead;
  }
  return {a, u};
}

std::mutex g_cyc_mutex;
std::map<long, Poly> g_cyclotomic;
std::map<long, std::vector<Poly>> g_powers;  // z^m mod Phi_N for 0 <= m < N

const Poly& cyclotomic_locked(long n) {
  auto it = g_cyclotomic.find(n);
  if (it != g_cyclotomic.end()) return it->second;
  Poly num(n + 1, Rat(0));
  num[0] = -1;
  num[n] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const Poly& phid = cyclotomic_locked(d);
    Poly quotient = poly_divmod(num, phid);
    if (!num.empty()) fail_domain("cyclotomic recursion produced a remainder");
    num = std::move(quotient);
  }
  return g_cyclotomic.emplace(n, std::move(num)).first->second;
}

const std::vector<Poly>& power_table_locked(long n) {
  auto it = g_powers.find(n);
  if (it != g_powers.end()) return it->second;
  const Poly& phi = cyclotomic_locked(n);
  size_t deg = phi.size() - 1;
  std::vector<Poly> table;
  table.reserve(n);
  Poly cur{Rat(1)};
  for (long m = 0; m < n; ++m) {
    table.push_back(cur);
    // cur *= z, reduce by the monic Phi_n
    cur.insert(cur.begin(), Rat(0));
    if (cur.size() > deg) {
      Rat lead = cur.back();
      cur.pop_back();
      if (lead != 0)
        for (size_t i = 0; i < deg; ++i) cur[i] -= lead * phi[i];
      poly_trim(cur);
    }
  }
  return g_powers.emplace(n, std::move(table)).first->second;
}

std::vector<Poly> power_table(long n) {
  std::lock_guard<std::mutex> lock(g_cyc_mutex);
  return power_table_locked(n);
}

long gcd_long(long a, long b) { return std::gcd(a, b); }
long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

}  // namespace

const std::vector<Rat>& cyclotomic_poly(long n) {
  if (n < 1) fail_domain("conductor must be positive");
  std::lock_guard<std::mutex> lock(g_cyc_mutex);
  return cyclotomic_locked(n);
}

CycNumber::CycNumber(const Rat& r, long conductor) : conductor_(conductor) {
  if (conductor < 1) fail_domain("conductor must be positive");
  coeffs_.assign(euler_phi(conductor), Rat(0));
  coeffs_[0] = r;
}

CycNumber CycNumber::zeta(long conductor, long k) {
  if (conductor < 1) fail_domain("conductor must be positive");
  k %= conductor;
  if (k < 0) k += conductor;
  auto table = power_table(conductor);
  CycNumber out = CycNumber::zero(conductor);
  const auto& poly = table[k];
  for (size_t i = 0; i < poly.size(); ++i) out.coeffs_[i] = poly[i];
  return out;
}

bool CycNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycNumber::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rat CycNumber::rational_part() const {
  if (!is_rational()) fail_domain("value is not rational: " + str());
  return coeffs_[0];
}

CycNumber CycNumber::to_conductor(long target) const {
  if (target == conductor_) return *this;
  if (target % conductor_ != 0)
    fail_domain("cannot embed conductor " + std::to_string(conductor_) +
                " into " + std::to_string(target));
  auto table = power_table(target);
  long step = target / conductor_;
  std::vector<Rat> acc(euler_phi(target), Rat(0));
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    const auto& pw = table[(k * step) % target];
    for (size_t i = 0; i < pw.size(); ++i) acc[i] += coeffs_[k] * pw[i];
  }
  CycNumber out = CycNumber::zero(target);
  out.coeffs_ = std::move(acc);
  return out;
}

void CycNumber::reduce_mod_cyclotomic(std::vector<Rat>& poly) const {
  const Poly& phi = cyclotomic_poly(conductor_);
  size_t deg = phi.size() - 1;
  Poly p = poly;
  poly_trim(p);
  if (p.size() > deg) poly_divmod(p, phi);
  poly.assign(deg, Rat(0));
  for (size_t i = 0; i < p.size(); ++i) poly[i] = p[i];
}

CycNumber CycNumber::operator-() const {
  CycNumber out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
  if (o.conductor_ != conductor_) {
    long n = lcm_long(conductor_, o.conductor_);
    *this = to_conductor(n);
    return *this += o.to_conductor(n);
  }
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& o) {
  if (o.conductor_ != conductor_) {
    long n = lcm_long(conductor_, o.conductor_);
    *this = to_conductor(n);
    return *this -= o.to_conductor(n);
  }
  for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycNumber& CycNumber::operator*=(const CycNumber& o) {
  if (o.conductor_ != conductor_) {
    long n = lcm_long(conductor_, o.conductor_);
    *this = to_conductor(n);
    return *this *= o.to_conductor(n);
  }
  if (is_zero() || o.is_zero()) {
    for (auto& c : coeffs_) c = 0;
    return *this;
  }
  if (o.is_rational()) {
    const Rat& r = o.coeffs_[0];
    for (auto& c : coeffs_) c *= r;
    return *this;
  }
  if (is_rational()) {
    Rat r = coeffs_[0];
    coeffs_ = o.coeffs_;
    for (auto& c : coeffs_) c *= r;
    return *this;
  }
  Poly a(coeffs_.begin(), coeffs_.end());
  Poly b(o.coeffs_.begin(), o.coeffs_.end());
  poly_trim(a);
  poly_trim(b);
  Poly prod = poly_mul(a, b);
  reduce_mod_cyclotomic(prod);
  coeffs_ = std::move(prod);
  return *this;
}

CycNumber CycNumber::inverse() const {
  if (is_zero()) fail_domain("division by zero in Q(zeta_" +
                             std::to_string(conductor_) + ")");
  if (is_rational()) {
    CycNumber out = *this;
    out.coeffs_[0] = Rat(1) / coeffs_[0];
    return out;
  }
  Poly f(coeffs_.begin(), coeffs_.end());
  poly_trim(f);
  auto [g, u] = poly_half_ext_gcd(f, cyclotomic_poly(conductor_));
  if (g.size() != 1) fail_domain("non-invertible cyclotomic element");
  // u*f = g (a nonzero constant) mod Phi, so inverse = u/g.
  CycNumber out = CycNumber::zero(conductor_);
  std::vector<Rat> poly(u.begin(), u.end());
  reduce_mod_cyclotomic(poly);
  out.coeffs_ = std::move(poly);
  for (auto& c : out.coeffs_) c /= g[0];
  return out;
}

CycNumber& CycNumber::operator/=(const CycNumber& o) {
  if (o.conductor_ != conductor_) {
    long n = lcm_long(conductor_, o.conductor_);
    *this = to_conductor(n);
    return *this /= o.to_conductor(n);
  }
  return *this *= o.inverse();
}

CycNumber CycNumber::galois(long a) const {
  long n = conductor_;
  a %= n;
  if (a < 0) a += n;
  if (gcd_long(a, n) != 1)
    fail_domain("galois exponent not coprime to conductor");
  auto table = power_table(n);
  std::vector<Rat> acc(coeffs_.size(), Rat(0));
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    const auto& pw = table[(k * a) % n];
    for (size_t i = 0; i < pw.size(); ++i) acc[i] += coeffs_[k] * pw[i];
  }
  CycNumber out = CycNumber::zero(n);
  out.coeffs_ = std::move(acc);
  return out;
}

CycNumber CycNumber::conj() const {
  if (conductor_ <= 2) return *this;
  return galois(conductor_ - 1);
}

int CycNumber::cmp(const CycNumber& o) const {
  if (conductor_ == o.conductor_) {
    for (size_t i = 0; i < coeffs_.size(); ++i) {
      int c = ::cmp(coeffs_[i], o.coeffs_[i]);
      if (c != 0) return c;
    }
    return 0;
  }
  long n = lcm_long(conductor_, o.conductor_);
  return to_conductor(n).cmp(o.to_conductor(n));
}

long CycNumber::root_of_unity_order() const {
  long m = conductor_ % 2 == 0 ? conductor_ : 2 * conductor_;
  CycNumber pow = *this;
  long order = 0;
  for (long k = 1; k <= m; ++k) {
    if (pow.is_rational() && pow.coeffs_[0] == 1) {
      order = k;
      break;
    }
    pow *= *this;
  }
  if (order == 0) return 0;
  return order;
}

CycNumber CycNumber::reduced() const {
  long n = conductor_;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool fixed = true;
    for (long a = 1; a < n && fixed; ++a) {
      if (a % d != 1 % d || gcd_long(a, n) != 1) continue;
      if (galois(a) != *this) fixed = false;
    }
    if (!fixed) continue;
    // Solve for coordinates in the power basis of Q(zeta_d) inside Q(zeta_n).
    long phi_d = euler_phi(d);
    long phi_n = euler_phi(n);
    // Columns: embeddings of z_d^j; last column: the value. Gaussian solve.
    std::vector<std::vector<Rat>> m(phi_n, std::vector<Rat>(phi_d + 1, Rat(0)));
    for (long j = 0; j < phi_d; ++j) {
      CycNumber e = CycNumber::zeta(d, j).to_conductor(n);
      for (long i = 0; i < phi_n; ++i) m[i][j] = e.coeffs()[i];
    }
    for (long i = 0; i < phi_n; ++i) m[i][phi_d] = coeffs_[i];
    long row = 0;
    std::vector<long> pivot_of_col(phi_d, -1);
    for (long col = 0; col < phi_d && row < phi_n; ++col) {
      long pr = -1;
      for (long r = row; r < phi_n; ++r)
        if (m[r][col] != 0) {
          pr = r;
          break;
        }
      if (pr < 0) continue;
      std::swap(m[row], m[pr]);
      Rat lead = m[row][col];
      for (auto& x : m[row]) x /= lead;
      for (long r = 0; r < phi_n; ++r) {
        if (r == row || m[r][col] == 0) continue;
        Rat f = m[r][col];
        for (long c2 = col; c2 <= phi_d; ++c2) m[r][c2] -= f * m[row][c2];
      }
      pivot_of_col[col] = row;
      ++row;
    }
    bool consistent = true;
    for (long r = row; r < phi_n; ++r)
      if (m[r][phi_d] != 0) consistent = false;
    if (!consistent) continue;
    CycNumber out = CycNumber::zero(d);
    for (long j = 0; j < phi_d; ++j)
      if (pivot_of_col[j] >= 0) out.coeffs_[j] = m[pivot_of_col[j]][phi_d];
    return out;
  }
  return *this;
}

std::string CycNumber::str() const {
  std::ostringstream os;
  bool first = true;
  for (long k = (long)coeffs_.size() - 1; k >= 0; --k) {
    const Rat& c = coeffs_[k];
    if (c == 0) continue;
    Rat mag = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (k == 0) {
      os << rat_str(mag);
    } else {
      if (mag != 1) os << rat_str(mag) << "*";
      os << "z";
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  os << " (N=" << conductor_ << ")";
  return os.str();
}

CycNumber CycNumber::parse(const std::string& text) {
  auto pos = text.rfind("(N=");
  if (pos == std::string::npos || text.back() != ')')
    fail_usage("cyclotomic literal missing conductor suffix: '" + text + "'");
  long n = 0;
  try {
    n = std::stol(text.substr(pos + 3, text.size() - pos - 4));
  } catch (const std::exception&) {
    fail_usage("malformed conductor in '" + text + "'");
  }
  if (n < 1) fail_usage("conductor must be positive in '" + text + "'");
  std::string body = text.substr(0, pos);
  CycNumber out = CycNumber::zero(n);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < body.size() && isspace((unsigned char)body[i])) ++i;
  };
  skip_ws();
  bool any = false;
  while (i < body.size()) {
    int sign = 1;
    if (body[i] == '+' || body[i] == '-') {
      if (body[i] == '-') sign = -1;
      ++i;
      skip_ws();
    } else if (any) {
      fail_usage("expected '+' or '-' in '" + text + "'");
    }
    // coefficient (optional when the term is a bare power of z)
    size_t start = i;
    while (i < body.size() && (isdigit((unsigned char)body[i]) || body[i] == '/')) ++i;
    Rat coeff(1);
    bool have_coeff = i > start;
    if (have_coeff) coeff = rat_parse(body.substr(start, i - start));
    skip_ws();
    if (i < body.size() && body[i] == '*') {
      ++i;
      skip_ws();
    }
    long power = 0;
    if (i < body.size() && body[i] == 'z') {
      ++i;
      power = 1;
      if (i < body.size() && body[i] == '^') {
        ++i;
        size_t ps = i;
        while (i < body.size() && isdigit((unsigned char)body[i])) ++i;
        if (i == ps) fail_usage("missing exponent in '" + text + "'");
        power = std::stol(body.substr(ps, i - ps));
      }
    } else if (!have_coeff) {
      fail_usage("empty term in '" + text + "'");
    }
    CycNumber term = CycNumber::zeta(n, power);
    term *= CycNumber(sign < 0 ? Rat(-coeff) : coeff, n);
    out += term;
    any = true;
    skip_ws();
  }
  return out;
}

}  // namespace glrep
