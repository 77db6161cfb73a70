#include "ncalg/idealtools.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <type_traits>

#include "ncalg/error.hpp"

namespace ncalg {

std::size_t max_columns() {
  if (const char* s = std::getenv("NC_MAX_COLUMNS")) {
    long v = std::atol(s);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return 3000;
}

NcPoly expand_certificate(const RelationSet& rels, const std::vector<CertificateTerm>& cert) {
  NcPoly sum(rels.gens);
  for (auto& t : cert)
    sum += NcPoly::word(rels.gens, t.left, t.coeff) * rels.rels.at(t.relation) *
           NcPoly::word(rels.gens, t.right);
  return sum;
}

namespace {

bool is_zero(const mpq_class& x) { return sgn(x) == 0; }
bool is_zero(const Scalar& x) { return x.is_zero(); }
mpq_class inverse(const mpq_class& x) { return 1 / x; }
Scalar inverse(const Scalar& x) { return x.inverse(); }

template <class K>
K convert(const Scalar& s);
template <>
mpq_class convert<mpq_class>(const Scalar& s) {
  return s.rational();
}
template <>
Scalar convert<Scalar>(const Scalar& s) {
  return s;
}
Scalar to_scalar(const mpq_class& x) { return Scalar(x); }
Scalar to_scalar(const Scalar& x) { return x; }

// Words of length <= L over n letters, indexed so that a larger index means
// a larger word in deglex with X_n > ... > X_1.
struct WordIndex {
  std::size_t n;
  int L;
  std::vector<std::size_t> offset;  // offset[len]

  WordIndex(std::size_t n_, int L_) : n(n_), L(L_) {
    offset.push_back(0);
    std::size_t p = 1;
    for (int k = 0; k <= L; ++k) {
      offset.push_back(offset.back() + p);
      p *= n;
    }
  }
  std::size_t size() const { return offset.back(); }
  std::size_t index(const Word& w) const {
    std::size_t d = 0;
    for (char c : w) d = d * n + static_cast<unsigned char>(c);
    return offset[w.size()] + d;
  }
  Word word(std::size_t idx) const {
    std::size_t len = 0;
    while (offset[len + 1] <= idx) ++len;
    std::size_t d = idx - offset[len];
    Word w(len, 0);
    for (std::size_t i = len; i-- > 0;) {
      w[i] = static_cast<char>(d % n);
      d /= n;
    }
    return w;
  }
  int length(std::size_t idx) const {
    int len = 0;
    while (offset[len + 1] <= idx) ++len;
    return len;
  }
};

std::vector<Word> all_words(std::size_t n, int len) {
  std::vector<Word> out{Word()};
  for (int k = 0; k < len; ++k) {
    std::vector<Word> next;
    next.reserve(out.size() * n);
    for (auto& w : out)
      for (std::size_t g = 0; g < n; ++g) next.push_back(w + char(g));
    out = std::move(next);
  }
  return out;
}

}  // namespace

struct IdealSpan::Impl {
  virtual ~Impl() = default;
  virtual bool symbolic() const = 0;
  virtual std::size_t rank() const = 0;
  virtual std::size_t rank_at(int k) const = 0;
  virtual std::vector<NcPoly> basis(const Alphabet& gens) const = 0;
  virtual Membership contains(const NcPoly& f) const = 0;
  virtual std::size_t columns() const = 0;
  virtual std::size_t rows_generated() const = 0;
};

namespace {

struct Origin {
  Word left;
  std::size_t relation;
  Word right;
};

template <class K>
class Echelon : public IdealSpan::Impl {
 public:
  using Row = std::vector<std::pair<std::uint32_t, K>>;  // descending columns
  using Comb = std::vector<std::pair<std::uint32_t, K>>;  // origin -> coeff

  Echelon(const RelationSet& rels, int L, bool cert)
      : idx_(rels.gens.size(), L), cert_(cert), pivot_(idx_.size(), -1) {
    const std::size_t n = rels.gens.size();
    acc_.assign(idx_.size(), K());
    // Rows ordered by total length so low-degree pivots settle first.
    for (int total = 0; total <= L; ++total)
      for (std::size_t r = 0; r < rels.rels.size(); ++r) {
        const NcPoly& rel = rels.rels[r];
        int extra = total - rel.degree();
        if (extra < 0) continue;
        for (int a = 0; a <= extra; ++a) {
          auto lefts = all_words(n, a);
          auto rights = all_words(n, extra - a);
          for (auto& u : lefts)
            for (auto& v : rights) {
              Row row;
              for (auto& [w, c] : rel.terms())
                row.emplace_back(static_cast<std::uint32_t>(idx_.index(u + w + v)), convert<K>(c));
              std::sort(row.begin(), row.end(),
                        [](auto& x, auto& y) { return x.first > y.first; });
              Comb comb;
              if (cert_) {
                comb.emplace_back(static_cast<std::uint32_t>(origins_.size()), K(1));
                origins_.push_back({u, r, v});
              }
              ++generated_;
              insert(std::move(row), std::move(comb));
            }
        }
      }
  }

  bool symbolic() const override { return std::is_same_v<K, Scalar>; }
  std::size_t rank() const override { return rows_.size(); }
  std::size_t columns() const override { return idx_.size(); }
  std::size_t rows_generated() const override { return generated_; }

  std::size_t rank_at(int k) const override {
    std::size_t c = 0;
    for (auto& r : rows_)
      if (idx_.length(r.front().first) == k) ++c;
    return c;
  }

  std::vector<NcPoly> basis(const Alphabet& gens) const override {
    std::vector<NcPoly> out;
    for (auto& r : rows_) {
      NcPoly p(gens);
      for (auto& [c, v] : r) p.add_term(idx_.word(c), to_scalar(v));
      out.push_back(std::move(p));
    }
    return out;
  }

  Membership contains(const NcPoly& f) const override {
    Membership m;
    std::vector<K> acc(idx_.size());
    std::size_t top = 0;
    for (auto& [w, c] : f.terms()) {
      if (static_cast<int>(w.size()) > idx_.L) return m;
      std::size_t i = idx_.index(w);
      acc[i] = convert<K>(c);
      top = std::max(top, i + 1);
    }
    std::vector<std::pair<std::uint32_t, K>> used;
    for (std::size_t col = top; col-- > 0;) {
      if (is_zero(acc[col])) continue;
      int p = pivot_[col];
      if (p < 0) return m;
      K factor = acc[col];
      for (auto& [c, v] : rows_[p]) acc[c] -= factor * v;
      if (cert_) used.emplace_back(static_cast<std::uint32_t>(p), factor);
    }
    m.found = true;
    if (cert_) {
      std::map<std::uint32_t, K> total;
      for (auto& [p, factor] : used)
        for (auto& [o, v] : combs_[p]) total[o] += factor * v;
      for (auto& [o, v] : total)
        if (!is_zero(v))
          m.certificate.push_back({to_scalar(v), origins_[o].left, origins_[o].relation,
                                   origins_[o].right});
    }
    return m;
  }

 private:
  WordIndex idx_;
  bool cert_;
  std::vector<int> pivot_;  // column -> row
  std::vector<Row> rows_;
  std::vector<Comb> combs_;
  std::vector<Origin> origins_;
  std::vector<K> acc_;
  std::size_t generated_ = 0;

  void insert(Row row, Comb comb) {
    if (row.empty()) return;
    std::size_t top = row.front().first;
    for (auto& [c, v] : row) acc_[c] = std::move(v);
    std::map<std::uint32_t, K> cacc;
    if (cert_)
      for (auto& [o, v] : comb) cacc[o] = v;
    for (std::size_t col = top + 1; col-- > 0;) {
      if (is_zero(acc_[col])) continue;
      int p = pivot_[col];
      if (p >= 0) {
        K factor = acc_[col];
        for (auto& [c, v] : rows_[p]) acc_[c] -= factor * v;
        if (cert_)
          for (auto& [o, v] : combs_[p]) cacc[o] -= factor * v;
        continue;
      }
      // New pivot: normalize and store what is left.
      K inv = inverse(acc_[col]);
      Row out;
      for (std::size_t c = col + 1; c-- > 0;) {
        if (is_zero(acc_[c])) continue;
        out.emplace_back(static_cast<std::uint32_t>(c), acc_[c] * inv);
        acc_[c] = K();
      }
      pivot_[col] = static_cast<int>(rows_.size());
      rows_.push_back(std::move(out));
      if (cert_) {
        Comb cc;
        for (auto& [o, v] : cacc)
          if (!is_zero(v)) cc.emplace_back(o, v * inv);
        combs_.push_back(std::move(cc));
      }
      return;
    }
  }
};

bool all_rational(const RelationSet& rels) {
  for (auto& r : rels.rels)
    for (auto& [w, c] : r.terms())
      if (!c.is_rational()) return false;
  return true;
}

std::size_t count_columns(std::size_t n, int L) {
  std::size_t total = 0, p = 1;
  for (int k = 0; k <= L; ++k) {
    total += p;
    p *= n;
  }
  return total;
}

}  // namespace

IdealSpan::IdealSpan(const RelationSet& rels, int bound, int margin, bool certificates)
    : rels_(&rels), bound_(bound), margin_(margin) {
  for (auto& r : rels.rels) check_alphabet(rels.gens, r.gens());
  int L = bound + margin;
  std::size_t cols = count_columns(rels.gens.size(), L);
  if (cols > max_columns())
    throw Error(ErrorKind::SizeExceeded, std::to_string(cols) + " columns for degree " +
                                             std::to_string(L) + " exceed the cap of " +
                                             std::to_string(max_columns()));
  if (all_rational(rels))
    impl_ = std::make_unique<Echelon<mpq_class>>(rels, L, certificates);
  else
    impl_ = std::make_unique<Echelon<Scalar>>(rels, L, certificates);
}

IdealSpan::~IdealSpan() = default;
IdealSpan::IdealSpan(IdealSpan&&) noexcept = default;

bool IdealSpan::symbolic() const { return impl_->symbolic(); }
std::size_t IdealSpan::columns() const { return impl_->columns(); }
std::size_t IdealSpan::rows_generated() const { return impl_->rows_generated(); }
std::size_t IdealSpan::rank() const { return impl_->rank(); }
std::size_t IdealSpan::rank_at(int k) const { return impl_->rank_at(k); }
std::vector<NcPoly> IdealSpan::basis() const { return impl_->basis(rels_->gens); }

Membership IdealSpan::contains(const NcPoly& f) const {
  check_alphabet(rels_->gens, f.gens());
  if (f.is_zero()) return {true, {}};
  if (f.degree() > bound_ + margin_)
    throw Error(ErrorKind::InvalidArgument, "element degree exceeds the span window");
  return impl_->contains(f);
}

std::vector<NcPoly> ideal_basis(const RelationSet& rels, int bound, int margin) {
  IdealSpan s(rels, bound, margin);
  std::vector<NcPoly> out;
  for (auto& p : s.basis())
    if (p.degree() <= bound) out.push_back(std::move(p));
  return out;
}

Membership contains(const RelationSet& rels, const NcPoly& f, int bound, int margin,
                    bool certificate) {
  if (f.degree() > bound)
    throw Error(ErrorKind::InvalidArgument, "element degree exceeds the bound");
  return IdealSpan(rels, bound, margin, certificate).contains(f);
}

std::vector<std::size_t> graded_dims(const RelationSet& rels, int N) {
  if (!rels.homogeneous()) throw Error(ErrorKind::NotHomogeneous, "graded_dims needs homogeneous relations");
  IdealSpan s(rels, N, 0);
  std::vector<std::size_t> d;
  std::size_t p = 1;
  for (int k = 0; k <= N; ++k) {
    d.push_back(p - s.rank_at(k));
    p *= rels.gens.size();
  }
  return d;
}

std::vector<std::size_t> filtered_dims(const RelationSet& rels, int N, int margin) {
  IdealSpan s(rels, N, margin);
  std::vector<std::size_t> d;
  std::size_t p = 1, words = 0, pivots = 0, prev = 0;
  for (int k = 0; k <= N; ++k) {
    words += p;
    pivots += s.rank_at(k);
    std::size_t quotient = words - pivots;
    d.push_back(quotient - prev);
    prev = quotient;
    p *= rels.gens.size();
  }
  return d;
}

std::map<std::string, int> root_degrees(const std::vector<NcPoly>& polys) {
  std::map<std::string, int> out;
  auto visit = [&](const Poly& p) {
    for (auto& t : p.terms())
      for (auto& [v, u] : t.m.entries()) {
        int den = static_cast<int>(exp_value(u).get_den().get_si());
        int& d = out[var_name(v)];
        d = d == 0 ? den : std::lcm(d, den);
      }
  };
  for (auto& f : polys)
    for (auto& [w, c] : f.terms()) {
      visit(c.num());
      visit(c.den());
    }
  return out;
}

Bindings random_bindings(const std::map<std::string, int>& vars, std::mt19937_64& rng,
                         const std::vector<std::string>& keep) {
  Bindings b;
  for (auto& [name, deg] : vars) {
    if (std::find(keep.begin(), keep.end(), name) != keep.end()) continue;
    mpq_class s = random_rational(rng);
    mpq_class v = 1;
    for (int i = 0; i < deg; ++i) v *= s;
    b[name] = Scalar(v);
  }
  return b;
}

namespace {

std::vector<bool> commutation(const IdealSpan& span, const RelationSet& rels, const NcPoly& z) {
  std::vector<bool> out;
  for (std::size_t j = 0; j < rels.gens.size(); ++j) {
    NcPoly c = commutator(z, NcPoly::gen(rels.gens, static_cast<int>(j)));
    out.push_back(span.contains(c).found);
  }
  return out;
}

}  // namespace

CentralReport central_by_ideal(const RelationSet& rels, const NcPoly& z, int bound, int margin,
                               int trials, std::uint64_t seed,
                               const std::vector<std::string>& keep) {
  CentralReport rep;
  rep.bound = bound;
  rep.margin = margin;
  rep.kept_symbolic = keep;
  if (trials <= 0) {
    rep.symbolic = true;
    IdealSpan span(rels, bound, margin);
    TrialResult t;
    t.commutes = commutation(span, rels, z);
    rep.central = std::all_of(t.commutes.begin(), t.commutes.end(), [](bool b) { return b; });
    rep.trials.push_back(std::move(t));
    rep.verdict = rep.central ? "central (identical in parameters)" : "not found";
    return rep;
  }
  std::vector<NcPoly> all = rels.rels;
  all.push_back(z);
  auto vars = root_degrees(all);
  rep.central = true;
  for (int i = 0; i < trials; ++i) {
    TrialResult t;
    t.seed = seed + static_cast<std::uint64_t>(i);
    std::mt19937_64 rng(t.seed);
    // Redraw on accidental degeneracy (vanishing denominators).
    for (int attempt = 0; attempt < 8; ++attempt) {
      t.bindings = random_bindings(vars, rng, keep);
      try {
        RelationSet sr = rels.specialized(t.bindings);
        NcPoly sz = z.map_coeffs([&](const Scalar& c) { return specialize(c, t.bindings); });
        IdealSpan span(sr, bound, margin);
        t.commutes = commutation(span, sr, sz);
        t.error.clear();
        break;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::DenominatorVanishes) throw;
        t.error = e.what();
      }
    }
    bool ok = t.error.empty() &&
              std::all_of(t.commutes.begin(), t.commutes.end(), [](bool b) { return b; });
    rep.central = rep.central && ok;
    rep.trials.push_back(std::move(t));
  }
  rep.verdict = rep.central ? "central (generic, " + std::to_string(trials) + " witnesses)"
                            : "not found";
  return rep;
}

std::vector<std::vector<Scalar>> nullspace(std::vector<std::vector<Scalar>> m, std::size_t ncols) {
  std::vector<int> pivcol;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Scalar inv = m[r][c].inverse();
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Scalar f = m[i][c];
      for (std::size_t k = c; k < ncols; ++k)
        if (!m[r][k].is_zero()) m[i][k] -= f * m[r][k];
    }
    pivcol.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<bool> is_piv(ncols, false);
  for (int c : pivcol) is_piv[c] = true;
  std::vector<std::vector<Scalar>> out;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    std::vector<Scalar> v(ncols);
    v[f] = Scalar(1);
    for (std::size_t i = 0; i < pivcol.size(); ++i) v[pivcol[i]] = -m[i][f];
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

std::optional<PotentialResult> solve_potential(const RelationSet& rels, const std::vector<int>& perm) {
  const std::size_t n = rels.gens.size();
  int D = rels.max_degree() + 1;
  // Unknowns: one per cyclic class of degree 1..D, then lambda_1..lambda_3.
  std::vector<Word> classes;
  for (int len = 1; len <= D; ++len)
    for (auto& w : all_words(n, len))
      if (min_rotation(w) == w) classes.push_back(w);
  const std::size_t nc = classes.size(), nu = nc + 3;
  std::vector<std::vector<Scalar>> eqs;
  for (std::size_t j = 0; j < 3; ++j) {
    std::map<Word, std::vector<Scalar>> rows;
    auto row = [&](const Word& w) -> std::vector<Scalar>& {
      auto it = rows.find(w);
      if (it == rows.end()) it = rows.emplace(w, std::vector<Scalar>(nu)).first;
      return it->second;
    };
    for (std::size_t k = 0; k < nc; ++k) {
      CyclicPotential one(rels.gens);
      one.add_class(classes[k], Scalar(1));
      NcPoly d = cyclic_derivative(one, static_cast<int>(j));
      for (auto& [w, c] : d.terms()) row(w)[k] += c;
    }
    for (auto& [w, c] : rels.rels[perm[j]].terms()) row(w)[nc + j] -= c;
    for (auto& [w, r] : rows) eqs.push_back(std::move(r));
  }
  auto ns = nullspace(std::move(eqs), nu);
  auto good = [&](const std::vector<Scalar>& v) {
    for (std::size_t j = 0; j < 3; ++j)
      if (v[nc + j].is_zero()) return false;
    return true;
  };
  const std::vector<Scalar>* pick = nullptr;
  for (auto& v : ns)
    if (good(v)) {
      pick = &v;
      break;
    }
  std::vector<Scalar> combo;
  if (!pick && ns.size() > 1) {
    combo.assign(nu, Scalar());
    for (std::size_t i = 0; i < ns.size(); ++i)
      for (std::size_t k = 0; k < nu; ++k) combo[k] += ns[i][k] * Scalar(static_cast<long>(i + 1));
    if (good(combo)) pick = &combo;
  }
  if (!pick) return std::nullopt;
  PotentialResult res{CyclicPotential(rels.gens), {}, perm};
  for (std::size_t k = 0; k < nc; ++k) res.phi.add_class(classes[k], (*pick)[k]);
  for (std::size_t j = 0; j < 3; ++j) res.lambda.push_back((*pick)[nc + j]);
  return res;
}

}  // namespace

std::optional<PotentialResult> find_potential(const RelationSet& rels) {
  if (rels.gens.size() != 3 || rels.rels.size() != 3)
    throw Error(ErrorKind::WrongArity, "find_potential needs 3 generators and 3 relations");
  std::vector<int> perm{0, 1, 2};
  do {
    if (auto r = solve_potential(rels, perm)) return r;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

Json bindings_json(const Bindings& b) {
  Json j = Json::object();
  for (auto& [k, v] : b) j[k] = v.str();
  return j;
}

Json central_json(const CentralReport& r) {
  Json j;
  j["central"] = r.central;
  j["verdict"] = r.verdict;
  j["method"] = "ideal";
  j["symbolic"] = r.symbolic;
  j["bound"] = r.bound;
  j["margin"] = r.margin;
  if (!r.kept_symbolic.empty()) j["kept_symbolic"] = r.kept_symbolic;
  Json ts = Json::array();
  for (auto& t : r.trials) {
    Json e;
    if (!r.symbolic) {
      e["seed"] = t.seed;
      e["bindings"] = bindings_json(t.bindings);
    }
    e["commutes"] = t.commutes;
    if (!t.error.empty()) e["error"] = t.error;
    ts.push_back(e);
  }
  j["trials"] = ts;
  return j;
}

}  // namespace ncalg
