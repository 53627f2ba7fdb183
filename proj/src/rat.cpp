#include "eqs/rat.hpp"

#include <cctype>

#include "eqs/errors.hpp"

namespace eqs {

Rat parse_rat(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (ch != ' ') t += ch;
  if (t.empty()) throw ConfigError("empty rational");
  for (char ch : t)
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/'))
      throw ConfigError("not an exact rational: '" + s + "'");
  if (t[0] == '+') t.erase(0, 1);
  Rat r;
  if (r.set_str(t, 10) != 0) throw ConfigError("not an exact rational: '" + s + "'");
  if (r.get_den() == 0) throw ConfigError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

Rat rat_pow(const Rat& b, long e) {
  if (e < 0) {
    if (b == 0) throw NonInvertible("0 to a negative power");
    return rat_pow(Rat(1) / b, -e);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), b.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), b.get_den_mpz_t(), static_cast<unsigned long>(e));
  Rat r(n, d);
  r.canonicalize();
  return r;
}

bool admissible_q(const Rat& q) { return q != 0 && q != 1 && q != -1; }

}  // namespace eqs
