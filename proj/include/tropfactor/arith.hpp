// Exact arithmetic building blocks: arbitrary-precision integers and
// rationals (GMP-backed), lattice vectors, and small helpers shared by
// every other header.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropfactor {

using Int = mpz_class;
using Rat = mpq_class;

// Lattice vector in Z^n.
using ZVec = std::vector<Int>;
// Rational vector in Q^n.
using QVec = std::vector<Rat>;

using ZMat = std::vector<ZVec>;
using QMat = std::vector<QVec>;

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

inline std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << r.get_num();
  if (r.get_den() != 1) os << "/" << r.get_den();
  return os.str();
}

inline Int dot(const ZVec& a, const ZVec& b) {
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat dotq(const ZVec& a, const QVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

inline Rat dotqq(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline ZVec add(const ZVec& a, const ZVec& b) {
  ZVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline ZVec sub(const ZVec& a, const ZVec& b) {
  ZVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline ZVec neg(const ZVec& a) {
  ZVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline ZVec scale(const ZVec& a, const Int& c) {
  ZVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c;
  return r;
}

inline bool is_zero(const ZVec& a) {
  return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

inline int cmp_lex(const ZVec& a, const ZVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

struct LexLess {
  bool operator()(const ZVec& a, const ZVec& b) const { return cmp_lex(a, b) < 0; }
};

inline Int gcd_vec(const ZVec& a) {
  Int g = 0;
  for (const Int& x : a) g = gcd(g, x);
  return g;
}

// Divides out the gcd. The zero vector is returned unchanged.
inline ZVec primitive(const ZVec& a) {
  Int g = gcd_vec(a);
  if (g == 0 || g == 1) return a;
  ZVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] / g;
  return r;
}

// Flips sign so the first nonzero entry is positive.
inline ZVec canonical_sign(const ZVec& a) {
  for (const Int& x : a) {
    if (x > 0) return a;
    if (x < 0) return neg(a);
  }
  return a;
}

inline ZVec zvec_of(std::initializer_list<long> xs) {
  ZVec v;
  v.reserve(xs.size());
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline QVec to_qvec(const ZVec& v) {
  QVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

// Common denominator of a rational vector.
inline Int lcm_den(const QVec& v) {
  Int l = 1;
  for (const Rat& x : v) l = lcm(l, x.get_den());
  return l;
}

inline std::string zvec_to_string(const ZVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << ")";
  return os.str();
}

}  // namespace tropfactor
