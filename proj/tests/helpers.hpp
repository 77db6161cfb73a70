#pragma once

#include <random>

#include "ncalg/freealg.hpp"

namespace testing_helpers {

// Random NcPoly with up to `terms` words of length <= maxlen and small
// coefficients in Q(q).
inline ncalg::NcPoly random_ncpoly(std::mt19937_64& rng, const ncalg::Alphabet& gens, int terms,
                                   int maxlen) {
  using namespace ncalg;
  std::uniform_int_distribution<int> len(0, maxlen), letter(0, static_cast<int>(gens.size()) - 1),
      qexp(-2, 2);
  NcPoly f(gens);
  for (int i = 0; i < terms; ++i) {
    Word w;
    int n = len(rng);
    for (int k = 0; k < n; ++k) w.push_back(static_cast<char>(letter(rng)));
    Scalar c = Scalar(random_rational(rng)) * Scalar::var("q").pow(static_cast<long>(qexp(rng)));
    if (i % 3 == 0) c += Scalar::var("t");
    f.add_term(w, c);
  }
  return f;
}

}  // namespace testing_helpers
