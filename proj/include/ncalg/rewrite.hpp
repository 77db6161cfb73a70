#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ncalg/freealg.hpp"
#include "ncalg/json_io.hpp"

namespace ncalg {

// Finite presentation: generators, relations (each read as "= 0"), and the
// parameter values they were instantiated with.
struct RelationSet {
  Alphabet gens;
  std::vector<NcPoly> rels;
  Bindings params;

  bool homogeneous() const;
  int max_degree() const;
  RelationSet specialized(const Bindings& b) const;
};

// Degree-lexicographic order; precedence lists generators from largest to
// smallest, e.g. {2,1,0} means X3 > X2 > X1.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  explicit MonomialOrder(const std::vector<int>& precedence);
  static MonomialOrder descending(int n);  // X_n > ... > X_1
  static MonomialOrder ascending(int n);   // X_1 > ... > X_n

  bool less(const Word& a, const Word& b) const;
  const std::vector<int>& precedence() const { return prec_; }
  std::string str(const Alphabet& gens) const;

 private:
  std::vector<int> prec_;
  std::vector<int> rank_;  // rank_[g]: larger = bigger
};

struct WordLess {
  const MonomialOrder* order;
  bool operator()(const Word& a, const Word& b) const { return order->less(a, b); }
};

// Largest word of f under the order; f must be nonzero.
Word leading_word(const NcPoly& f, const MonomialOrder& order);

struct Rule {
  Word lead;
  NcPoly tail;  // lead -> tail, every tail word smaller than lead
};

enum class Strategy { Leftmost, Rightmost, Random };

struct Ambiguity {
  Word word;
  bool resolved = false;
  NcPoly residual;
};

struct ConfluenceReport {
  enum class Status { Unknown, Confluent, NonConfluent };
  Status status = Status::Unknown;
  int bound = 0;
  std::vector<Ambiguity> ambiguities;
  std::vector<std::string> assumptions;
  std::string status_name() const;
};

class RewriteSystem {
 public:
  RewriteSystem(Alphabet gens, MonomialOrder order) : gens_(std::move(gens)), order_(std::move(order)) {}

  const Alphabet& gens() const { return gens_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const std::vector<std::string>& assumptions() const { return assumptions_; }
  ConfluenceReport::Status status() const { return status_; }

  void add_rule(Rule r);
  void add_assumption(const std::string& a);
  void set_status(ConfluenceReport::Status s) { status_ = s; }

  // Index of a rule whose lead occurs in w at position pos, or -1.
  int match_at(const Word& w, std::size_t pos) const;
  bool is_normal(const Word& w) const;

 private:
  Alphabet gens_;
  MonomialOrder order_;
  std::vector<Rule> rules_;
  std::vector<std::size_t> lead_lengths_;
  std::vector<std::string> assumptions_;
  ConfluenceReport::Status status_ = ConfluenceReport::Status::Unknown;
};

// Solve each relation for its largest word.  Relations sharing a leading word
// are combined first; a relation that becomes zero throws NotOrientable.
RewriteSystem orient(const RelationSet& rels, const MonomialOrder& order);

NcPoly reduce(const RewriteSystem& rs, const NcPoly& f, Strategy s = Strategy::Leftmost,
              std::uint64_t seed = 0);

// Resolve every overlap of leading words of length <= bound.  Sets rs status.
ConfluenceReport confluence_check(RewriteSystem& rs, int bound = 6);

// Throws NotConfluent unless rs was certified confluent.
bool central_by_rewrite(const RewriteSystem& rs, const NcPoly& z);

// Words of length k containing no leading word.
std::vector<Word> normal_words(const RewriteSystem& rs, int k);

Json confluence_json(const ConfluenceReport& r);

}  // namespace ncalg
