#include "eqs/qseries.hpp"

#include "eqs/errors.hpp"

namespace eqs {

RatFunc q_diff(const RatFunc& q) { return q - q.inv(); }

RatFunc q_int(long n, const RatFunc& q) {
  if (n == 0) return RatFunc();
  long m = n < 0 ? -n : n;
  // q^{1-m} + q^{3-m} + ... + q^{m-1}
  RatFunc r;
  for (long k = 0; k < m; ++k) r += q.pow(m - 1 - 2 * k);
  return n < 0 ? -r : r;
}

Series poch_finite(const Series& a, const Series& p, int n) {
  if (n < 0) throw PreconditionViolation("poch_finite: negative length");
  Series one = Series::constant(a.shape(), RatFunc(1L));
  Series r = one;
  Series apk = a;
  for (int k = 0; k < n; ++k) {
    r = r * (one - apk);
    if (k + 1 < n) apk = apk * p;
  }
  return r;
}

Series poch_infinite(const Series& a, const Series& p) {
  if (!p.has_zero_constant())
    throw PreconditionViolation("poch_infinite: base has a nonzero constant term, product never stabilises");
  Series one = Series::constant(a.shape(), RatFunc(1L));
  Series r = one;
  Series apk = a;
  while (!apk.is_zero()) {
    r = r * (one - apk);
    apk = apk * p;
  }
  return r;
}

Series hyper_2phi1(const Series& qa, const Series& qb, const Series& qc, const Series& p,
                   const Series& x) {
  if (!x.has_zero_constant()) throw PreconditionViolation("hyper_2phi1: argument needs zero constant term");
  if (!p.has_zero_constant()) throw PreconditionViolation("hyper_2phi1: base needs zero constant term");
  Series one = Series::constant(x.shape(), RatFunc(1L));
  Series sum = one;
  Series term = one;  // ratio of Pochhammers times x^n
  Series pk = one;    // p^n
  Series xn = one;
  for (int n = 0;; ++n) {
    xn = xn * x;
    if (xn.is_zero()) break;
    Series den = (one - p * pk) * (one - qc * pk);
    if (den.has_zero_constant()) throw SingularParameter("hyper_2phi1: vanishing denominator Pochhammer");
    term = term * (one - qa * pk) * (one - qb * pk) * series_invert(den) * x;
    pk = pk * p;
    if (term.is_zero()) break;
    sum += term;
  }
  return sum;
}

}  // namespace eqs
