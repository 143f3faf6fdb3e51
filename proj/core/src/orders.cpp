#include "pclose/orders.hpp"

#include <algorithm>
#include <cstdint>

#include "pclose/errors.hpp"

namespace cgt {

std::string order_to_string(BigOrder n) {
  if (n == 0) return "0";
  std::string s;
  while (n > 0) {
    s.push_back(char('0' + int(n % 10)));
    n /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

BigOrder order_from_u64(std::uint64_t n) { return BigOrder(n); }

BigOrder order_gcd(BigOrder a, BigOrder b) {
  while (b != 0) {
    BigOrder t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool order_divides(BigOrder a, BigOrder b) { return a != 0 && b % a == 0; }

BigOrder order_mul(BigOrder a, BigOrder b) {
  if (a == 0 || b == 0) return 0;
  BigOrder r = a * b;
  if (r / a != b) throw ResourceError("order arithmetic overflow (128-bit)");
  return r;
}

BigOrder order_pow(BigOrder base, unsigned exp) {
  BigOrder r = 1;
  for (unsigned i = 0; i < exp; ++i) r = order_mul(r, base);
  return r;
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return std::uint64_t((unsigned __int128)a * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin bases for 64-bit inputs.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace

std::map<std::uint64_t, int> factor_order(BigOrder n) {
  std::map<std::uint64_t, int> out;
  if (n <= 1) return out;
  for (std::uint64_t p = 2; p <= 1000000 && BigOrder(p) * p <= n; p = (p == 2 ? 3 : p + 2)) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) {
    if (n > BigOrder(UINT64_MAX) || !is_prime_u64(std::uint64_t(n)))
      throw ResourceError("order factorization: cofactor " + order_to_string(n) + " not a small prime");
    ++out[std::uint64_t(n)];
  }
  return out;
}

FactoredOrder FactoredOrder::of(BigOrder n) {
  FactoredOrder f;
  f.exps_ = factor_order(n);
  return f;
}

FactoredOrder& FactoredOrder::mul(const FactoredOrder& other) { return mul_pow(other, 1); }

FactoredOrder& FactoredOrder::mul_pow(const FactoredOrder& other, unsigned exp) {
  for (auto& [p, e] : other.exps_) exps_[p] += e * int(exp);
  return *this;
}

bool FactoredOrder::coprime_to(const FactoredOrder& other) const {
  for (auto& [p, e] : exps_)
    if (other.exps_.count(p)) return false;
  return true;
}

std::string FactoredOrder::to_string() const {
  // Schoolbook decimal bignum: digits little-endian, repeated multiply.
  std::vector<std::uint32_t> digits{1};
  auto mul_small = [&](std::uint64_t m) {
    std::uint64_t carry = 0;
    for (auto& d : digits) {
      std::uint64_t v = std::uint64_t(d) * m + carry;
      d = std::uint32_t(v % 10);
      carry = v / 10;
    }
    while (carry) {
      digits.push_back(std::uint32_t(carry % 10));
      carry /= 10;
    }
  };
  for (auto& [p, e] : exps_)
    for (int i = 0; i < e; ++i) mul_small(p);
  std::string s;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) s.push_back(char('0' + *it));
  return s;
}

std::string FactoredOrder::to_factored_string() const {
  if (exps_.empty()) return "1";
  std::string s;
  for (auto& [p, e] : exps_) {
    if (!s.empty()) s += " * ";
    s += std::to_string(p);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace cgt
