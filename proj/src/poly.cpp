#include "galois/poly.hpp"

namespace galois {

Integer content(const ZPoly& f) {
  Integer g = 0;
  for (const auto& c : f.coefficients()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive_part(const ZPoly& f) {
  if (f.is_zero()) return f;
  Integer g = content(f);
  if (sgn(f.leading()) < 0) g = -g;
  std::vector<Integer> v;
  v.reserve(f.size());
  for (const auto& c : f.coefficients()) v.push_back(exact_div(c, g));
  return ZPoly(std::move(v));
}

ContentPrimitive content_primitive(const QPoly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "content of the zero polynomial");
  Integer den_lcm = 1;
  for (const auto& c : f.coefficients()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<Integer> scaled;
  scaled.reserve(f.size());
  for (const auto& c : f.coefficients()) {
    Integer v = c.get_num() * exact_div(den_lcm, c.get_den());
    scaled.push_back(v);
  }
  ZPoly integral(std::move(scaled));
  Integer g = content(integral);
  if (sgn(integral.leading()) < 0) g = -g;
  ZPoly prim = primitive_part(integral);
  return {make_rational(g, den_lcm), std::move(prim)};
}

QPoly to_rational(const ZPoly& f) {
  std::vector<Rational> v;
  v.reserve(f.size());
  for (const auto& c : f.coefficients()) v.emplace_back(c);
  return QPoly(std::move(v));
}

FpPoly reduce_mod(const ZPoly& f, std::uint64_t p) {
  std::vector<FpScalar> v;
  v.reserve(f.size());
  const Integer mod(static_cast<unsigned long>(p));
  for (const auto& c : f.coefficients()) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), mod.get_mpz_t());
    v.emplace_back(static_cast<std::int64_t>(mpz_get_ui(r.get_mpz_t())), p);
  }
  return FpPoly(std::move(v));
}

QPoly qpoly(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  for (long c : coeffs) v.emplace_back(c);
  return QPoly(std::move(v));
}

ZPoly zpoly(std::initializer_list<long> coeffs) {
  std::vector<Integer> v;
  for (long c : coeffs) v.emplace_back(c);
  return ZPoly(std::move(v));
}

FpPoly fppoly(std::initializer_list<long> coeffs, std::uint64_t p) {
  std::vector<FpScalar> v;
  for (long c : coeffs) v.emplace_back(c, p);
  return FpPoly(std::move(v));
}

}  // namespace galois
