#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace cgt {

/// Group orders. 128 bits covers every instance this project materializes
/// (the largest direct-power wrappers stay below 2^80).
using BigOrder = unsigned __int128;

std::string order_to_string(BigOrder n);
BigOrder order_from_u64(std::uint64_t n);
BigOrder order_gcd(BigOrder a, BigOrder b);
bool order_divides(BigOrder a, BigOrder b);
BigOrder order_pow(BigOrder base, unsigned exp);

/// Checked multiply; throws ResourceError on 128-bit overflow.
BigOrder order_mul(BigOrder a, BigOrder b);

/// Prime factorization of an order. All orders occurring here are smooth
/// (small prime factors), so trial division plus a Miller-Rabin check on the
/// cofactor suffices.
std::map<std::uint64_t, int> factor_order(BigOrder n);

/// Exact nonnegative integer kept in factored form. Used for structural
/// bookkeeping on groups that are never materialized (direct powers with
/// hundreds of factors), where the order exceeds 128 bits.
class FactoredOrder {
 public:
  FactoredOrder() = default;  // the integer 1
  static FactoredOrder of(BigOrder n);

  FactoredOrder& mul(const FactoredOrder& other);
  FactoredOrder& mul_pow(const FactoredOrder& other, unsigned exp);
  bool coprime_to(const FactoredOrder& other) const;
  bool is_one() const { return exps_.empty(); }
  bool operator==(const FactoredOrder& other) const { return exps_ == other.exps_; }

  /// Digit string of the exact value (schoolbook bignum; sizes are tiny).
  std::string to_string() const;
  /// e.g. "2^305 * 3^60 * 5 * 11^60 * 31^60"
  std::string to_factored_string() const;

  const std::map<std::uint64_t, int>& exponents() const { return exps_; }

 private:
  std::map<std::uint64_t, int> exps_;
};

}  // namespace cgt
