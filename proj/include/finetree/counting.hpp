#pragma once

#include "finetree/bigint.hpp"

namespace finetree {

// Word family parameters. Valid combinations satisfy 0 <= p < q.
struct FineParams {
  int p = 0;
  int q = 2;

  bool operator==(const FineParams&) const = default;
};

bool params_valid(const FineParams& pq);

// Number of Dyck paths of semilength n whose first rise is exactly k:
// C(2n-k-1, n-1) - C(2n-k-1, n).
BigInt ballot(long long n, long long k);

// C(2n, n) / (n + 1).
BigInt catalan(long long n);

// Sum of ballot(n, k*q + p) over k = 0 .. floor((n-p)/q). Counts the valid
// words of length n for the given parameters. The summation bound is
// inclusive; the top term is genuinely needed (n=4, p=0, q=2 already uses
// k=2).
BigInt count_formula(long long n, const FineParams& pq);

// The sequence 1, 2, 6, 18, 57, 186, 622, 2120, ... With the length
// convention used by count_formula the n-th entry is the number of valid
// (0,2)-words of length n+1.
BigInt fine(long long n);

struct ShapiroReport {
  bool ok = true;
  long long checked_up_to = 0;
  long long first_failure = -1;  // smallest n violating the identity
};

// Checks 2*fine(n) + fine(n-1) == catalan(n+1) for 2 <= n <= n_max.
ShapiroReport check_shapiro(long long n_max);

}  // namespace finetree
