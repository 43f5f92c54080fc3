#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <string>
#include <string_view>

namespace qf {

using Int = mpz_class;
using Rat = mpq_class;

/// "p/q", or bare "p" when q == 1.
std::string to_string(const Rat& r);
std::string to_string(const Int& z);

/// Parses "p/q", "-p/q" or "p" and canonicalizes. Throws DomainError on junk.
Rat parse_rat(std::string_view s);

/// p/q in lowest terms.
Rat frac(long p, long q);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// Integer power, non-negative exponent.
Int ipow(const Int& base, unsigned long e);
Rat rpow(const Rat& base, long e);

}  // namespace qf

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 200
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace qf {

using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

}  // namespace qf
