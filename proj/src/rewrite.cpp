#include "ncalg/rewrite.hpp"

#include <algorithm>
#include <random>

#include "ncalg/error.hpp"

namespace ncalg {

bool RelationSet::homogeneous() const {
  return std::all_of(rels.begin(), rels.end(), [](const NcPoly& r) { return r.is_homogeneous(); });
}

int RelationSet::max_degree() const {
  int d = 0;
  for (auto& r : rels) d = std::max(d, r.degree());
  return d;
}

RelationSet RelationSet::specialized(const Bindings& b) const {
  RelationSet out{gens, {}, params};
  for (auto& [k, v] : b) out.params[k] = v;
  for (auto& r : rels) {
    NcPoly s = r.map_coeffs([&](const Scalar& c) { return specialize(c, b); });
    if (!s.is_zero()) out.rels.push_back(std::move(s));
  }
  return out;
}

MonomialOrder::MonomialOrder(const std::vector<int>& precedence) : prec_(precedence) {
  rank_.assign(precedence.size(), 0);
  std::vector<bool> seen(precedence.size(), false);
  for (std::size_t i = 0; i < precedence.size(); ++i) {
    int g = precedence[i];
    if (g < 0 || g >= static_cast<int>(precedence.size()) || seen[g])
      throw Error(ErrorKind::InvalidArgument, "precedence is not a permutation");
    seen[g] = true;
    rank_[g] = static_cast<int>(precedence.size() - i);
  }
}

MonomialOrder MonomialOrder::descending(int n) {
  std::vector<int> p;
  for (int i = n - 1; i >= 0; --i) p.push_back(i);
  return MonomialOrder(p);
}

MonomialOrder MonomialOrder::ascending(int n) {
  std::vector<int> p;
  for (int i = 0; i < n; ++i) p.push_back(i);
  return MonomialOrder(p);
}

bool MonomialOrder::less(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    int ra = rank_[static_cast<unsigned char>(a[i])], rb = rank_[static_cast<unsigned char>(b[i])];
    if (ra != rb) return ra < rb;
  }
  return false;
}

std::string MonomialOrder::str(const Alphabet& gens) const {
  std::string s;
  for (std::size_t i = 0; i < prec_.size(); ++i) {
    if (i) s += ">";
    s += gens.at(prec_[i]);
  }
  return s;
}

Word leading_word(const NcPoly& f, const MonomialOrder& order) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "leading word of zero");
  const Word* best = nullptr;
  for (auto& [w, c] : f.terms())
    if (!best || order.less(*best, w)) best = &w;
  return *best;
}

std::string ConfluenceReport::status_name() const {
  switch (status) {
    case Status::Confluent:
      return "confluent";
    case Status::NonConfluent:
      return "non_confluent";
    default:
      return "unknown";
  }
}

void RewriteSystem::add_rule(Rule r) {
  if (std::find(lead_lengths_.begin(), lead_lengths_.end(), r.lead.size()) == lead_lengths_.end())
    lead_lengths_.push_back(r.lead.size());
  rules_.push_back(std::move(r));
}

void RewriteSystem::add_assumption(const std::string& a) {
  if (std::find(assumptions_.begin(), assumptions_.end(), a) == assumptions_.end())
    assumptions_.push_back(a);
}

int RewriteSystem::match_at(const Word& w, std::size_t pos) const {
  for (std::size_t len : lead_lengths_) {
    if (pos + len > w.size()) continue;
    for (std::size_t i = 0; i < rules_.size(); ++i)
      if (rules_[i].lead.size() == len && w.compare(pos, len, rules_[i].lead) == 0)
        return static_cast<int>(i);
  }
  return -1;
}

bool RewriteSystem::is_normal(const Word& w) const {
  for (std::size_t p = 0; p < w.size(); ++p)
    if (match_at(w, p) >= 0) return false;
  return true;
}

namespace {

// Nonvanishing of q-powers is automatic; anything else is recorded.
bool needs_assumption(const Scalar& lc) {
  if (lc.is_rational()) return false;
  if (!lc.is_monomial()) return true;
  for (VarId v : lc.vars()) {
    const std::string& n = var_name(v);
    if (n != "q" && n != "qh") return true;
  }
  return false;
}

NcPoly sandwich(const Word& pre, const NcPoly& p, const Word& post) {
  NcPoly r(p.gens());
  for (auto& [w, c] : p.terms()) r.add_term(pre + w + post, c);
  return r;
}

}  // namespace

RewriteSystem orient(const RelationSet& rels, const MonomialOrder& order) {
  RewriteSystem rs(rels.gens, order);
  std::vector<NcPoly> work;
  for (auto& r : rels.rels) {
    check_alphabet(rels.gens, r.gens());
    NcPoly f = r;
    // Combine with earlier relations sharing the leading word.
    bool again = true;
    while (again && !f.is_zero()) {
      again = false;
      Word lw = leading_word(f, order);
      for (auto& g : work) {
        Word gw = leading_word(g, order);
        if (gw == lw) {
          f -= g.scaled(f.coeff(lw) / g.coeff(gw));
          again = true;
          break;
        }
      }
    }
    if (f.is_zero())
      throw Error(ErrorKind::NotOrientable,
                  "relation " + r.str() + " is dependent on the preceding ones");
    work.push_back(std::move(f));
  }
  for (auto& f : work) {
    Word lw = leading_word(f, order);
    Scalar lc = f.coeff(lw);
    if (needs_assumption(lc)) rs.add_assumption(lc.str() + " != 0");
    NcPoly tail = (NcPoly::word(f.gens(), lw, lc) - f).scaled(lc.inverse());
    for (auto& [w, c] : tail.terms())
      if (!order.less(w, lw))
        throw Error(ErrorKind::NotOrientable, "tail word " + f.word_str(w) + " of " + f.str() +
                                                  " is not below " + f.word_str(lw));
    rs.add_rule({lw, std::move(tail)});
  }
  return rs;
}

NcPoly reduce(const RewriteSystem& rs, const NcPoly& f, Strategy s, std::uint64_t seed) {
  check_alphabet(rs.gens(), f.gens());
  WordLess cmp{&rs.order()};
  std::map<Word, Scalar, WordLess> todo(cmp);
  auto push = [&](const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = todo.emplace(w, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) todo.erase(it);
  };
  for (auto& [w, c] : f.terms()) push(w, c);
  std::mt19937_64 rng(seed);
  NcPoly out(f.gens());
  std::vector<std::pair<std::size_t, int>> hits;
  while (!todo.empty()) {
    auto it = std::prev(todo.end());
    Word w = it->first;
    Scalar c = std::move(it->second);
    todo.erase(it);
    hits.clear();
    for (std::size_t p = 0; p < w.size(); ++p) {
      int r = rs.match_at(w, p);
      if (r < 0) continue;
      hits.emplace_back(p, r);
      if (s == Strategy::Leftmost) break;
    }
    if (hits.empty()) {
      out.add_term(w, c);
      continue;
    }
    std::size_t pick = 0;
    if (s == Strategy::Rightmost) pick = hits.size() - 1;
    if (s == Strategy::Random) pick = std::uniform_int_distribution<std::size_t>(0, hits.size() - 1)(rng);
    auto [pos, ri] = hits[pick];
    const Rule& rule = rs.rules()[ri];
    Word pre = w.substr(0, pos), post = w.substr(pos + rule.lead.size());
    for (auto& [tw, tc] : rule.tail.terms()) push(pre + tw + post, tc * c);
  }
  return out;
}

ConfluenceReport confluence_check(RewriteSystem& rs, int bound) {
  ConfluenceReport rep;
  rep.bound = bound;
  rep.assumptions = rs.assumptions();
  bool skipped = false, failed = false;
  auto resolve = [&](const Word& word, const NcPoly& a, const NcPoly& b) {
    if (static_cast<int>(word.size()) > bound) {
      skipped = true;
      return;
    }
    Ambiguity amb;
    amb.word = word;
    amb.residual = reduce(rs, a) - reduce(rs, b);
    amb.resolved = amb.residual.is_zero();
    failed = failed || !amb.resolved;
    rep.ambiguities.push_back(std::move(amb));
  };
  const auto& rules = rs.rules();
  for (std::size_t i = 0; i < rules.size(); ++i)
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& l1 = rules[i].lead;
      const Word& l2 = rules[j].lead;
      // Proper overlaps: a suffix of l1 equals a prefix of l2.
      for (std::size_t k = 1; k < std::min(l1.size(), l2.size()); ++k) {
        if (l1.compare(l1.size() - k, k, l2, 0, k) != 0) continue;
        Word word = l1 + l2.substr(k);
        resolve(word, sandwich("", rules[i].tail, l2.substr(k)),
                sandwich(l1.substr(0, l1.size() - k), rules[j].tail, ""));
      }
      // Inclusions: l2 strictly inside l1.
      if (i != j && l2.size() < l1.size())
        for (std::size_t p = 0; p + l2.size() <= l1.size(); ++p)
          if (l1.compare(p, l2.size(), l2) == 0)
            resolve(l1, rules[i].tail,
                    sandwich(l1.substr(0, p), rules[j].tail, l1.substr(p + l2.size())));
    }
  using S = ConfluenceReport::Status;
  rep.status = failed ? S::NonConfluent : (skipped ? S::Unknown : S::Confluent);
  rs.set_status(rep.status);
  return rep;
}

bool central_by_rewrite(const RewriteSystem& rs, const NcPoly& z) {
  if (rs.status() != ConfluenceReport::Status::Confluent)
    throw Error(ErrorKind::NotConfluent, "rewriting system is not certified confluent");
  for (std::size_t j = 0; j < rs.gens().size(); ++j)
    if (!reduce(rs, commutator(z, NcPoly::gen(rs.gens(), static_cast<int>(j)))).is_zero())
      return false;
  return true;
}

std::vector<Word> normal_words(const RewriteSystem& rs, int k) {
  std::vector<Word> cur{Word()};
  const int n = static_cast<int>(rs.gens().size());
  for (int len = 1; len <= k; ++len) {
    std::vector<Word> next;
    for (auto& w : cur)
      for (int g = 0; g < n; ++g) {
        Word x = w + char(g);
        bool ok = true;
        // Only subwords ending at the new letter can be new matches.
        for (std::size_t p = 0; p < x.size() && ok; ++p) {
          int r = rs.match_at(x, p);
          if (r >= 0 && p + rs.rules()[r].lead.size() == x.size()) ok = false;
        }
        if (ok) next.push_back(std::move(x));
      }
    cur = std::move(next);
  }
  return cur;
}

Json confluence_json(const ConfluenceReport& r) {
  Json j;
  j["status"] = r.status_name();
  j["bound"] = r.bound;
  Json amb = Json::array();
  for (auto& a : r.ambiguities) {
    Json e;
    Json w = Json::array();
    for (char l : a.word) w.push_back(static_cast<unsigned char>(l) + 1);
    e["word"] = w;
    e["resolved"] = a.resolved;
    if (!a.resolved) e["residual"] = a.residual.str();
    amb.push_back(e);
  }
  j["ambiguities"] = amb;
  j["assumptions"] = r.assumptions;
  return j;
}

}  // namespace ncalg
