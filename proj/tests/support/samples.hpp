#pragma once

#include <random>

#include "gforms/field.hpp"
#include "test_support.hpp"

namespace gforms::testkit {

inline FieldElement random_element(const GaloisField& k, std::mt19937_64& g, long long bound = 5) {
  FieldElement x;
  for (std::size_t i = 0; i < k.degree(); ++i) x.coords.push_back(Rational(uniform(g, -bound, bound), uniform(g, 1, 3)));
  return x;
}

inline FieldElement random_nonzero(const GaloisField& k, std::mt19937_64& g, long long bound = 5) {
  for (;;) {
    auto x = random_element(k, g, bound);
    if (!k.is_zero(x)) return x;
  }
}

inline Rational random_rational(std::mt19937_64& g, long long bound) {
  long long num = 0;
  while (num == 0) num = uniform(g, -bound, bound);
  return Rational(num, uniform(g, 1, bound));
}

}  // namespace gforms::testkit
