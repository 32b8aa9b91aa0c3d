#include "finetree/counting.hpp"

#include <cassert>
#include <stdexcept>

namespace finetree {

BigInt binom(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  // r stays integral at every step: after multiplying by (n-k+i) the product
  // of i consecutive integers is divisible by i!.
  for (long long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

bool params_valid(const FineParams& pq) {
  return pq.p >= 0 && pq.p < pq.q;
}

BigInt ballot(long long n, long long k) {
  if (n < 1) return 0;
  return binom(2 * n - k - 1, n - 1) - binom(2 * n - k - 1, n);
}

BigInt catalan(long long n) {
  if (n < 0) return 0;
  return binom(2 * n, n) / (n + 1);
}

BigInt count_formula(long long n, const FineParams& pq) {
  if (!params_valid(pq))
    throw std::invalid_argument("count_formula: need 0 <= p < q");
  BigInt total = 0;
  for (long long k = 0; k * pq.q + pq.p <= n; ++k)
    total += ballot(n, k * pq.q + pq.p);
  return total;
}

BigInt fine(long long n) { return count_formula(n + 1, FineParams{0, 2}); }

ShapiroReport check_shapiro(long long n_max) {
  ShapiroReport rep;
  rep.checked_up_to = n_max;
  for (long long n = 2; n <= n_max; ++n) {
    if (2 * fine(n) + fine(n - 1) != catalan(n + 1)) {
      rep.ok = false;
      rep.first_failure = n;
      break;
    }
  }
  return rep;
}

}  // namespace finetree
