#include "g3/field.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace g3 {

namespace {

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t acc = 0;
  while (b) {
    if (b & 1) acc ^= a;
    a <<= 1;
    b >>= 1;
  }
  return acc;
}

std::uint64_t poly_rem(std::uint64_t a, std::uint64_t m) {
  const int dm = poly_degree(m);
  for (int d = poly_degree(a); d >= dm; d = poly_degree(a))
    a ^= m << (d - dm);
  return a;
}

}  // namespace

int poly_degree(std::uint64_t p) { return p ? 63 - std::countl_zero(p) : -1; }

std::optional<Fe> reducibility_witness(std::uint64_t p) {
  const int n = poly_degree(p);
  for (int d = 1; d <= n / 2; ++d)
    for (std::uint64_t c = std::uint64_t{1} << d; c < std::uint64_t{2} << d; ++c)
      if (poly_rem(p, c) == 0) return static_cast<Fe>(c);
  return std::nullopt;
}

Fe default_modulus(int n) {
  for (Fe p = Fe{1} << n; p < Fe{2} << n; ++p)
    if (!reducibility_witness(p)) return p;
  throw std::logic_error("no irreducible polynomial of degree " + std::to_string(n));
}

Field::Field(int n) {
  if (n < 1 || n > kMaxDegree)
    throw std::invalid_argument("field degree must be in [1, 30], got " + std::to_string(n));
  init(n, default_modulus(n));
}

Field::Field(int n, Fe modulus) {
  if (n < 1 || n > kMaxDegree)
    throw std::invalid_argument("field degree must be in [1, 30], got " + std::to_string(n));
  if (poly_degree(modulus) != n)
    throw std::invalid_argument("modulus " + hex(modulus) + " has degree " +
                                std::to_string(poly_degree(modulus)) + ", expected " +
                                std::to_string(n));
  if (auto w = reducibility_witness(modulus))
    throw std::invalid_argument("modulus " + hex(modulus) + " is reducible: divisible by " +
                                hex(*w));
  init(n, modulus);
}

void Field::init(int n, Fe modulus) {
  n_ = n;
  mod_ = modulus;
  q_ = std::uint64_t{1} << n;
  if (n >= 2 && n <= 16) build_tables();
  if (n % 2 == 1) {
    r0_ = 1;
  } else {
    r0_ = 0;
    while (trace(r0_) != 1) ++r0_;
  }
}

Fe Field::mul_notable(Fe a, Fe b) const {
  return static_cast<Fe>(poly_rem(clmul(a, b), mod_));
}

void Field::build_tables() {
  const std::uint32_t ord = static_cast<std::uint32_t>(q_ - 1);
  // Prime factors of q-1, for testing multiplicative order.
  std::vector<std::uint32_t> primes;
  std::uint32_t rest = ord;
  for (std::uint32_t p = 2; p * p <= rest; ++p)
    if (rest % p == 0) {
      primes.push_back(p);
      while (rest % p == 0) rest /= p;
    }
  if (rest > 1) primes.push_back(rest);

  auto pow_slow = [&](Fe a, std::uint32_t e) {
    Fe acc = 1;
    while (e) {
      if (e & 1) acc = mul_notable(acc, a);
      a = mul_notable(a, a);
      e >>= 1;
    }
    return acc;
  };
  Fe g = 2;
  for (;; ++g) {
    bool primitive = true;
    for (auto p : primes)
      if (pow_slow(g, ord / p) == 1) {
        primitive = false;
        break;
      }
    if (primitive) break;
  }

  exp_.assign(ord, 0);
  log_.assign(q_, 0);
  Fe cur = 1;
  for (std::uint32_t i = 0; i < ord; ++i) {
    exp_[i] = cur;
    log_[cur] = i;
    cur = mul_notable(cur, g);
  }
  has_tables_ = true;
}

Fe Field::mul(Fe a, Fe b) const {
  if (!has_tables_) return mul_notable(a, b);
  if (a == 0 || b == 0) return 0;
  std::uint32_t s = log_[a] + log_[b];
  const std::uint32_t ord = static_cast<std::uint32_t>(q_ - 1);
  if (s >= ord) s -= ord;
  return exp_[s];
}

Fe Field::inv(Fe a) const {
  if (a == 0) throw std::domain_error("division by zero in GF(2^n)");
  if (has_tables_) {
    const std::uint32_t ord = static_cast<std::uint32_t>(q_ - 1);
    return exp_[(ord - log_[a]) % ord];
  }
  return pow(a, q_ - 2);
}

Fe Field::pow(Fe a, std::uint64_t e) const {
  Fe acc = 1;
  while (e) {
    if (e & 1) acc = mul(acc, a);
    a = mul(a, a);
    e >>= 1;
  }
  return acc;
}

Fe Field::sqrt(Fe a) const {
  // a^(2^(n-1)): inverse of the squaring bijection.
  for (int i = 1; i < n_; ++i) a = sqr(a);
  return a;
}

int Field::trace(Fe a) const {
  Fe t = 0, cur = a;
  for (int i = 0; i < n_; ++i) {
    t ^= cur;
    cur = sqr(cur);
  }
  return static_cast<int>(t);  // t is 0 or 1
}

std::optional<Fe> Field::solve_as(Fe c) const {
  if (trace(c) != 0) return std::nullopt;
  if (n_ % 2 == 1) {
    // Half-trace: x = sum_{i=0}^{(n-1)/2} c^(2^(2i)).
    Fe x = c, term = c;
    for (int i = 1; i <= (n_ - 1) / 2; ++i) {
      term = sqr(sqr(term));
      x ^= term;
    }
    return x;
  }
  // Even n: solve the F_2-linear system (x^2 + x = c) on basis coordinates.
  // row[i] collects bit i of L(e_j) = e_j^2 + e_j over the unknowns j.
  std::vector<std::uint64_t> rows(n_, 0);
  for (int j = 0; j < n_; ++j) {
    const Fe col = sqr(Fe{1} << j) ^ (Fe{1} << j);
    for (int i = 0; i < n_; ++i)
      if ((col >> i) & 1) rows[i] |= std::uint64_t{1} << j;
  }
  for (int i = 0; i < n_; ++i)
    if ((c >> i) & 1) rows[i] |= std::uint64_t{1} << n_;  // augmented column

  Fe x = 0;
  std::vector<int> pivot_of_row(n_, -1);
  int r = 0;
  for (int col = 0; col < n_ && r < n_; ++col) {
    int p = -1;
    for (int i = r; i < n_; ++i)
      if ((rows[i] >> col) & 1) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(rows[r], rows[p]);
    for (int i = 0; i < n_; ++i)
      if (i != r && ((rows[i] >> col) & 1)) rows[i] ^= rows[r];
    pivot_of_row[r] = col;
    ++r;
  }
  for (int i = 0; i < r; ++i)
    if ((rows[i] >> n_) & 1) x |= Fe{1} << pivot_of_row[i];
  // trace(c) = 0 guarantees consistency; free variables are left at 0.
  return x;
}

std::vector<Fe> Field::cubic_roots(Fe f, Fe g) const {
  if (n_ > 20) throw std::invalid_argument("cubic_roots: exhaustive scan capped at n <= 20");
  std::vector<Fe> roots;
  for (std::uint64_t v = 0; v < q_; ++v) {
    const Fe y = static_cast<Fe>(v);
    if (mul(y, sqr(y)) ^ mul(f, y) ^ g) continue;
    // Multiplicity: the formal derivative of y^3 + f y + g is y^2 + f.
    if ((sqr(y) ^ f) != 0) {
      roots.push_back(y);
    } else if (f == 0 && g == 0) {
      roots.insert(roots.end(), 3, y);  // (y + 0)^3
    } else {
      roots.insert(roots.end(), 2, y);
    }
  }
  return roots;
}

}  // namespace g3
