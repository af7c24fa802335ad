#include "mwall/group_model.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "mwall/errors.hpp"
#include "mwall/graph_group.hpp"

namespace mwall {

std::size_t GroupElementHash::operator()(const GroupElement& g) const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& s : g.word()) {
    h ^= std::hash<long long>()(static_cast<long long>(s.gen) * 1000003LL + s.exp) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

GroupModel GroupModel::free_abelian(int rank) {
  if (rank < 0) fail(ErrorCode::InvalidArgument, "negative rank");
  GroupModel m;
  m.kind_ = GroupKind::FreeAbelian;
  m.rank_ = rank;
  for (int i = 0; i < rank; ++i) {
    m.labels_.push_back("x" + std::to_string(i + 1));
    m.generators_.emplace_back(std::vector<Syllable>{{i, 1}});
  }
  return m;
}

GroupModel GroupModel::free_group(int rank) {
  if (rank < 0 || rank > 26) fail(ErrorCode::InvalidArgument, "free rank must be in [0,26]");
  GroupModel m;
  m.kind_ = GroupKind::Free;
  m.rank_ = rank;
  for (int i = 0; i < rank; ++i) {
    m.labels_.push_back(std::string(1, static_cast<char>('a' + i)));
    m.generators_.emplace_back(std::vector<Syllable>{{i, 1}});
  }
  return m;
}

GroupModel GroupModel::amalgam(std::shared_ptr<const GraphOfGroupsGroup> graph) {
  GroupModel m;
  m.kind_ = GroupKind::Amalgam;
  m.graph_ = std::move(graph);
  m.generators_ = m.graph_->generators();
  m.labels_ = m.graph_->generator_labels();
  m.rank_ = static_cast<int>(m.generators_.size());
  return m;
}

IntVec GroupModel::to_vector(const GroupElement& g) const {
  if (kind_ != GroupKind::FreeAbelian) fail(ErrorCode::InvalidArgument, "to_vector needs a free abelian model");
  IntVec v(static_cast<std::size_t>(rank_), 0);
  for (const auto& s : g.word()) {
    if (s.gen < 0 || s.gen >= rank_) fail(ErrorCode::MalformedWord, "generator out of range");
    v[static_cast<std::size_t>(s.gen)] += s.exp;
  }
  return v;
}

GroupElement GroupModel::from_vector(const IntVec& v) const {
  if (kind_ != GroupKind::FreeAbelian) fail(ErrorCode::InvalidArgument, "from_vector needs a free abelian model");
  if (v.size() != static_cast<std::size_t>(rank_)) fail(ErrorCode::MalformedWord, "vector has wrong rank");
  std::vector<Syllable> w;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) w.push_back({static_cast<int>(i), v[i]});
  return GroupElement(std::move(w));
}

Word GroupModel::to_word(const GroupElement& g) const {
  if (kind_ != GroupKind::Free) fail(ErrorCode::InvalidArgument, "to_word needs a free model");
  Word w;
  for (const auto& s : g.word()) {
    Letter l = s.gen + 1;
    for (std::int64_t k = 0; k < std::llabs(s.exp); ++k) w.push_back(s.exp > 0 ? l : -l);
  }
  return w;
}

GroupElement GroupModel::from_word(const Word& w0) const {
  if (kind_ != GroupKind::Free) fail(ErrorCode::InvalidArgument, "from_word needs a free model");
  Word w = words::reduce(w0);
  std::vector<Syllable> out;
  for (Letter l : w) {
    if (l == 0 || std::abs(l) > rank_) fail(ErrorCode::MalformedWord, "letter out of range");
    int gen = std::abs(l) - 1;
    int e = l > 0 ? 1 : -1;
    if (!out.empty() && out.back().gen == gen)
      out.back().exp += e;
    else
      out.push_back({gen, e});
  }
  return GroupElement(std::move(out));
}

bool GroupModel::is_normal(const GroupElement& g) const {
  const auto& w = g.word();
  switch (kind_) {
    case GroupKind::FreeAbelian:
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].gen < 0 || w[i].gen >= rank_ || w[i].exp == 0) return false;
        if (i > 0 && w[i - 1].gen >= w[i].gen) return false;
      }
      return true;
    case GroupKind::Free:
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].gen < 0 || w[i].gen >= rank_ || w[i].exp == 0) return false;
        if (i > 0 && w[i - 1].gen == w[i].gen) return false;
      }
      return true;
    case GroupKind::Amalgam:
      return graph_->is_normal(g);
  }
  return false;
}

void GroupModel::check(const GroupElement& g) const {
  if (!is_normal(g)) fail(ErrorCode::MalformedWord, "word is not in normal form");
}

GroupElement GroupModel::multiply(const GroupElement& a, const GroupElement& b) const {
  check(a);
  check(b);
  switch (kind_) {
    case GroupKind::FreeAbelian: {
      std::vector<Syllable> out;
      const auto& x = a.word();
      const auto& y = b.word();
      std::size_t i = 0, j = 0;
      while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].gen < y[j].gen)) {
          out.push_back(x[i++]);
        } else if (i == x.size() || y[j].gen < x[i].gen) {
          out.push_back(y[j++]);
        } else {
          auto e = x[i].exp + y[j].exp;
          if (e != 0) out.push_back({x[i].gen, e});
          ++i;
          ++j;
        }
      }
      return GroupElement(std::move(out));
    }
    case GroupKind::Free:
      return from_word(words::concat(to_word(a), to_word(b)));
    case GroupKind::Amalgam:
      return graph_->encode(graph_->normalize(graph_->concat(graph_->decode(a), graph_->decode(b))));
  }
  return {};
}

GroupElement GroupModel::invert(const GroupElement& a) const {
  check(a);
  switch (kind_) {
    case GroupKind::FreeAbelian: {
      std::vector<Syllable> w = a.word();
      for (auto& s : w) s.exp = -s.exp;
      return GroupElement(std::move(w));
    }
    case GroupKind::Free: {
      std::vector<Syllable> w(a.word().rbegin(), a.word().rend());
      for (auto& s : w) s.exp = -s.exp;
      return GroupElement(std::move(w));
    }
    case GroupKind::Amalgam:
      return graph_->encode(graph_->normalize(graph_->inverse(graph_->decode(a))));
  }
  return {};
}

GroupElement GroupModel::power(const GroupElement& a, std::int64_t k) const {
  if (kind_ == GroupKind::FreeAbelian) {
    check(a);
    std::vector<Syllable> w = a.word();
    if (k == 0) return {};
    for (auto& s : w) s.exp *= k;
    return GroupElement(std::move(w));
  }
  if (kind_ == GroupKind::Free) {
    check(a);
    return from_word(words::power(to_word(a), k));
  }
  GroupElement base = k < 0 ? invert(a) : a;
  GroupElement result;
  auto n = static_cast<std::uint64_t>(k < 0 ? -k : k);
  while (n > 0) {
    if (n & 1U) result = multiply(result, base);
    n >>= 1U;
    if (n > 0) base = multiply(base, base);
  }
  return result;
}

int GroupModel::compare(const GroupElement& a, const GroupElement& b) const {
  switch (kind_) {
    case GroupKind::FreeAbelian: {
      auto x = to_vector(a), y = to_vector(b);
      if (x == y) return 0;
      return x < y ? -1 : 1;
    }
    case GroupKind::Free:
      return words::lex_compare(to_word(a), to_word(b));
    case GroupKind::Amalgam: {
      auto c = a <=> b;
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
  }
  return 0;
}

std::optional<std::int64_t> GroupModel::word_length(const GroupElement& g) const {
  std::int64_t s = 0;
  switch (kind_) {
    case GroupKind::FreeAbelian:
    case GroupKind::Free:
      for (const auto& x : g.word()) s += std::llabs(x.exp);
      return s;
    case GroupKind::Amalgam:
      return std::nullopt;
  }
  return std::nullopt;
}

std::string GroupModel::format(const GroupElement& g) const {
  switch (kind_) {
    case GroupKind::FreeAbelian: {
      std::ostringstream os;
      os << "(";
      auto v = to_vector(g);
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
      os << ")";
      return os.str();
    }
    case GroupKind::Free:
      return words::format(to_word(g));
    case GroupKind::Amalgam:
      return graph_->format(g);
  }
  return {};
}

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

GroupElement GroupModel::parse(std::string_view text) const {
  switch (kind_) {
    case GroupKind::FreeAbelian: {
      std::string s;
      for (char c : text)
        if (c != '(' && c != ')' && c != '[' && c != ']') s.push_back(c);
      IntVec v;
      if (!s.empty()) {
        for (const auto& tok : split(s, ',')) {
          try {
            std::size_t used = 0;
            v.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
          } catch (const std::exception&) {
            fail(ErrorCode::MalformedWord, "bad integer '" + tok + "'");
          }
        }
      }
      if (v.size() != static_cast<std::size_t>(rank_))
        fail(ErrorCode::MalformedWord, "expected " + std::to_string(rank_) + " coordinates");
      return from_vector(v);
    }
    case GroupKind::Free:
      return from_word(words::parse(text, rank_));
    case GroupKind::Amalgam: {
      GroupElement g;
      if (text == "e" || text.empty()) return g;
      for (const auto& tok : split(text, '*')) {
        std::string label = tok;
        std::int64_t k = 1;
        auto hat = tok.find('^');
        if (hat != std::string::npos) {
          label = tok.substr(0, hat);
          try {
            k = std::stoll(tok.substr(hat + 1));
          } catch (const std::exception&) {
            fail(ErrorCode::MalformedWord, "bad exponent in '" + tok + "'");
          }
        }
        auto it = std::find(labels_.begin(), labels_.end(), label);
        if (it == labels_.end()) fail(ErrorCode::MalformedWord, "unknown generator '" + label + "'");
        g = multiply(g, power(generators_[static_cast<std::size_t>(it - labels_.begin())], k));
      }
      return g;
    }
  }
  return {};
}

GroupElement multiply(const GroupModel& m, const GroupElement& a, const GroupElement& b) { return m.multiply(a, b); }
GroupElement invert(const GroupModel& m, const GroupElement& a) { return m.invert(a); }

std::vector<BallEntry> enumerate_ball(const GroupModel& m, int radius, std::size_t cap) {
  if (radius < 0) fail(ErrorCode::InvalidArgument, "negative radius");
  std::vector<BallEntry> entries;
  std::unordered_map<GroupElement, std::size_t, GroupElementHash> seen;
  std::vector<GroupElement> steps;
  std::vector<int> step_letters;
  for (std::size_t i = 0; i < m.generator_count(); ++i) {
    steps.push_back(m.generator(i));
    step_letters.push_back(static_cast<int>(i) + 1);
    steps.push_back(m.invert(m.generator(i)));
    step_letters.push_back(-(static_cast<int>(i) + 1));
  }
  entries.push_back({m.identity(), 0, {}});
  seen.emplace(m.identity(), 0);
  std::size_t frontier_begin = 0;
  for (int r = 1; r <= radius; ++r) {
    std::size_t frontier_end = entries.size();
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (std::size_t s = 0; s < steps.size(); ++s) {
        GroupElement g = m.multiply(entries[i].element, steps[s]);
        if (seen.count(g)) continue;
        if (entries.size() >= cap)
          fail(ErrorCode::TruncationOverflow, "ball exceeds cap of " + std::to_string(cap) + " elements");
        BallEntry e{g, r, entries[i].word};
        e.word.push_back(step_letters[s]);
        seen.emplace(g, entries.size());
        entries.push_back(std::move(e));
      }
    }
    frontier_begin = frontier_end;
  }
  std::stable_sort(entries.begin(), entries.end(), [&](const BallEntry& a, const BallEntry& b) {
    if (a.length != b.length) return a.length < b.length;
    return m.compare(a.element, b.element) < 0;
  });
  return entries;
}

std::vector<GroupElement> ball(const GroupModel& m, int radius, std::size_t cap) {
  std::vector<GroupElement> out;
  for (auto& e : enumerate_ball(m, radius, cap)) out.push_back(std::move(e.element));
  return out;
}

std::string format_generator_word(const GroupModel& m, const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  std::size_t i = 0;
  while (i < word.size()) {
    std::size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    auto run = static_cast<long>(j - i);
    if (!s.empty()) s += "*";
    s += m.generator_labels().at(static_cast<std::size_t>(std::abs(word[i]) - 1));
    long exp = word[i] > 0 ? run : -run;
    if (exp != 1) s += "^" + std::to_string(exp);
    i = j;
  }
  return s;
}

SubgroupSpec SubgroupSpec::whole(const GroupModel& m) {
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < m.generator_count(); ++i) gens.push_back(m.generator(i));
  return SubgroupSpec(std::move(gens));
}

SubgroupSpec SubgroupSpec::intersect(const SubgroupSpec& other) const {
  SubgroupSpec s = *this;
  for (const auto& p : other.parts_) s.parts_.push_back(p);
  return s;
}

struct Membership::Part {
  std::optional<Lattice> lattice;
  std::optional<StallingsGraph> stallings;
  bool whole = false;
  bool complete = false;
  std::unordered_set<GroupElement, GroupElementHash> elements;
};

Membership::Membership(const GroupModel& m, const SubgroupSpec& h, std::size_t budget) : model_(&m) {
  for (const auto& gens : h.parts()) {
    for (const auto& g : gens) m.check(g);
    auto part = std::make_shared<Part>();
    switch (m.kind()) {
      case GroupKind::FreeAbelian: {
        IntMat rows;
        for (const auto& g : gens) rows.push_back(m.to_vector(g));
        part->lattice.emplace(static_cast<std::size_t>(m.rank()), rows);
        break;
      }
      case GroupKind::Free: {
        std::vector<Word> ws;
        for (const auto& g : gens) ws.push_back(m.to_word(g));
        part->stallings.emplace(ws, m.rank());
        break;
      }
      case GroupKind::Amalgam: {
        std::set<GroupElement> have(gens.begin(), gens.end());
        part->whole = true;
        for (std::size_t i = 0; i < m.generator_count(); ++i)
          if (!have.count(m.generator(i))) part->whole = false;
        if (part->whole) break;
        // Enumerate the subgroup breadth first up to the budget.
        std::deque<GroupElement> queue{m.identity()};
        part->elements.insert(m.identity());
        std::vector<GroupElement> steps;
        for (const auto& g : gens) {
          steps.push_back(g);
          steps.push_back(m.invert(g));
        }
        part->complete = true;
        while (!queue.empty()) {
          auto x = queue.front();
          queue.pop_front();
          for (const auto& s : steps) {
            auto y = m.multiply(x, s);
            if (part->elements.count(y)) continue;
            if (part->elements.size() >= budget) {
              part->complete = false;
              queue.clear();
              break;
            }
            part->elements.insert(y);
            queue.push_back(y);
          }
        }
        break;
      }
    }
    parts_.push_back(std::move(part));
  }
}

bool Membership::contains(const GroupElement& g) const {
  for (const auto& p : parts_) {
    bool in = false;
    if (p->lattice) {
      in = p->lattice->contains(model_->to_vector(g));
    } else if (p->stallings) {
      in = p->stallings->contains(model_->to_word(g));
    } else if (p->whole) {
      in = true;
    } else {
      in = p->elements.count(g) > 0;
      if (!in && !p->complete)
        fail(ErrorCode::UndecidableAtRadius, "membership of " + model_->format(g) + " not resolved within budget");
    }
    if (!in) return false;
  }
  return true;
}

std::optional<IntVec> Membership::coset_key(const GroupElement& g) const {
  if (parts_.size() != 1 || !parts_.front()->lattice) return std::nullopt;
  return parts_.front()->lattice->reduce(model_->to_vector(g));
}

bool in_subgroup(const GroupModel& m, const SubgroupSpec& h, const GroupElement& g) {
  return Membership(m, h).contains(g);
}

std::vector<GroupElement> coset_representatives(const GroupModel& m, const SubgroupSpec& h, int radius,
                                                const CosetOptions& options) {
  auto entries = enumerate_ball(m, radius, options.cap);
  Membership mem(m, h, options.membership_budget);
  std::optional<Membership> ambient;
  if (options.ambient) ambient.emplace(m, *options.ambient, options.membership_budget);
  std::vector<GroupElement> reps;
  std::map<IntVec, std::size_t> by_key;
  for (const auto& e : entries) {
    if (ambient && !ambient->contains(e.element)) continue;
    if (auto key = mem.coset_key(e.element)) {
      if (by_key.emplace(*key, reps.size()).second) reps.push_back(e.element);
      continue;
    }
    bool fresh = true;
    for (const auto& r : reps) {
      if (mem.contains(m.multiply(m.invert(r), e.element))) {
        fresh = false;
        break;
      }
    }
    if (fresh) reps.push_back(e.element);
  }
  return reps;
}

CyclicSplit split_by_cyclic(const GroupModel& m, const GroupElement& g, const GroupElement& z) {
  if (z.is_identity()) fail(ErrorCode::InvalidArgument, "cyclic subgroup generator is trivial");
  switch (m.kind()) {
    case GroupKind::FreeAbelian: {
      auto gv = m.to_vector(g), zv = m.to_vector(z);
      std::vector<std::int64_t> candidates{0};
      for (std::size_t i = 0; i < gv.size(); ++i) {
        if (zv[i] == 0) continue;
        std::int64_t num = -gv[i], den = zv[i];
        if (den < 0) {
          num = -num;
          den = -den;
        }
        std::int64_t f = num / den;
        if (num % den != 0 && num < 0) --f;
        candidates.push_back(f);
        candidates.push_back(f + 1);
      }
      std::int64_t best_k = 0;
      IntVec best;
      bool have = false;
      for (auto k : candidates) {
        IntVec t = add(gv, scaled(zv, k));
        if (!have || l1_norm(t) < l1_norm(best) || (l1_norm(t) == l1_norm(best) && t < best)) {
          best = t;
          best_k = k;
          have = true;
        }
      }
      return {m.from_vector(best), -best_k};
    }
    case GroupKind::Free: {
      Word gw = m.to_word(g), zw = m.to_word(z);
      auto bound = static_cast<std::int64_t>(2 * gw.size() + 1);
      Word best;
      std::int64_t best_k = 0;
      bool have = false;
      Word zk = words::power(zw, -bound);
      for (std::int64_t k = -bound; k <= bound; ++k) {
        Word t = words::concat(gw, zk);
        if (!have || t.size() < best.size() || (t.size() == best.size() && words::lex_less(t, best))) {
          best = t;
          best_k = k;
          have = true;
        }
        zk = words::concat(zk, zw);
      }
      return {m.from_word(best), -best_k};
    }
    case GroupKind::Amalgam:
      break;
  }
  fail(ErrorCode::InvalidArgument, "cyclic splitting is only defined in vertex groups");
}

}  // namespace mwall
