#pragma once
#include "eqs/series.hpp"

namespace eqs {

// [n]_q = (q^n - q^-n)/(q - q^-1)
RatFunc q_int(long n, const RatFunc& q);
// q - q^-1
RatFunc q_diff(const RatFunc& q);

// (a;p)_n = prod_{k<n} (1 - a p^k). p is any series (typically a monomial).
Series poch_finite(const Series& a, const Series& p, int n);
// (a;p)_inf truncated; p must have zero constant term.
Series poch_infinite(const Series& a, const Series& p);
// sum_n (qa;p)_n (qb;p)_n / ((p;p)_n (qc;p)_n) x^n, x with zero constant term.
Series hyper_2phi1(const Series& qa, const Series& qb, const Series& qc, const Series& p,
                   const Series& x);

}  // namespace eqs
