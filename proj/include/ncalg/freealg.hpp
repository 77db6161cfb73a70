#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ncalg/scalar.hpp"

namespace ncalg {

// A word is a string of generator indices (0-based, one byte per letter).
using Word = std::string;

// Generator names, shared between polynomials of the same algebra.
using Alphabet = std::vector<std::string>;

Alphabet default_alphabet(char prefix = 'X', int n = 3);

class NcPoly {
 public:
  using TermMap = std::map<Word, Scalar>;

  NcPoly() = default;
  explicit NcPoly(Alphabet gens) : gens_(std::move(gens)) {}
  NcPoly(Alphabet gens, const Scalar& c);
  static NcPoly word(Alphabet gens, const Word& w, const Scalar& c = Scalar(1));
  static NcPoly gen(Alphabet gens, int i) { return word(std::move(gens), Word(1, char(i))); }
  // Generators are identifiers from the alphabet; anything else is a scalar.
  static NcPoly parse(const Alphabet& gens, std::string_view text);

  const Alphabet& gens() const { return gens_; }
  const TermMap& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  int degree() const;
  bool is_homogeneous() const;
  Scalar coeff(const Word& w) const;
  // Constant polynomial (possibly zero) -> its scalar.
  bool is_scalar() const;

  void add_term(const Word& w, const Scalar& c);

  NcPoly operator+(const NcPoly& o) const;
  NcPoly operator-(const NcPoly& o) const;
  NcPoly operator-() const;
  NcPoly operator*(const NcPoly& o) const;
  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  NcPoly scaled(const Scalar& c) const;
  // Coefficientwise map.
  template <class F>
  NcPoly map_coeffs(F f) const {
    NcPoly r(gens_);
    for (auto& [w, c] : t_) r.add_term(w, f(c));
    return r;
  }
  // Homogeneous component of the given length.
  NcPoly part(int len) const;

  friend bool operator==(const NcPoly& a, const NcPoly& b) {
    return a.gens_ == b.gens_ && a.t_ == b.t_;
  }

  std::string word_str(const Word& w) const;
  std::string str() const;

 private:
  Alphabet gens_;
  TermMap t_;
};

NcPoly nc_mul(const NcPoly& f, const NcPoly& g);
NcPoly commutator(const NcPoly& f, const NcPoly& g);

// Least rotation of a word (lexicographic on generator indices).
Word min_rotation(const Word& w);

class CyclicPotential {
 public:
  CyclicPotential() = default;
  explicit CyclicPotential(Alphabet gens) : gens_(std::move(gens)) {}

  const Alphabet& gens() const { return gens_; }
  const std::map<Word, Scalar>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add_class(const Word& w, const Scalar& c);
  CyclicPotential scaled(const Scalar& c) const;
  CyclicPotential operator+(const CyclicPotential& o) const;
  CyclicPotential operator-(const CyclicPotential& o) const;
  friend bool operator==(const CyclicPotential& a, const CyclicPotential& b) {
    return a.gens_ == b.gens_ && a.t_ == b.t_;
  }
  // Representative sum of class words as an NcPoly.
  NcPoly as_poly() const;
  std::string str() const { return as_poly().str(); }

 private:
  Alphabet gens_;
  std::map<Word, Scalar> t_;
};

CyclicPotential cyclic_reduce(const NcPoly& f);
NcPoly cyclic_derivative(const CyclicPotential& phi, int j);

// Generator j -> factor_j * generator j, then coefficient variables are
// substituted by `params`.  Factors are typically eps-powers.
struct Rescaling {
  std::vector<Scalar> gen_factor;
  Bindings params;

  static Rescaling identity(std::size_t ngens);
  // gen j -> eps^e_j * gen j for a named limit variable.
  static Rescaling eps_powers(const std::string& eps, const std::vector<mpq_class>& e);
};

NcPoly substitute_scale(const NcPoly& f, const Rescaling& r);

// Algebra map sending generator j to images[j].
NcPoly substitute_gens(const NcPoly& f, const std::vector<NcPoly>& images);

// True when g = u * f for some nonzero scalar u, which is returned.
std::optional<Scalar> proportional(const NcPoly& f, const NcPoly& g);

void check_alphabet(const Alphabet& a, const Alphabet& b);

}  // namespace ncalg
