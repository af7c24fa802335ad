#include "mwall/free_word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>

#include "mwall/errors.hpp"

namespace mwall {
namespace words {

Word reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l = -l;
  return out;
}

Word concat(const Word& a, const Word& b) {
  std::size_t k = 0;
  while (k < a.size() && k < b.size() && a[a.size() - 1 - k] == -b[k]) ++k;
  Word out(a.begin(), a.end() - static_cast<long>(k));
  out.insert(out.end(), b.begin() + static_cast<long>(k), b.end());
  return out;
}

Word power(const Word& w, long k) {
  if (k == 0) return {};
  Word base = k > 0 ? w : inverse(w);
  auto split = cyclic_split(base);
  Word mid;
  for (long i = 0; i < std::labs(k); ++i) mid.insert(mid.end(), split.core.begin(), split.core.end());
  return concat(concat(split.conjugator, mid), inverse(split.conjugator));
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) return false;
    if (i + 1 < w.size() && w[i] == -w[i + 1]) return false;
  }
  return true;
}

int letter_rank(Letter l) { return 2 * (std::abs(l) - 1) + (l < 0 ? 1 : 0); }

int lex_compare(const Word& a, const Word& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int ra = letter_rank(a[i]), rb = letter_rank(b[i]);
    if (ra != rb) return ra < rb ? -1 : 1;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

bool lex_less(const Word& a, const Word& b) { return lex_compare(a, b) < 0; }

CyclicSplit cyclic_split(const Word& w) {
  Word r = reduce(w);
  std::size_t i = 0, j = r.size();
  while (j - i >= 2 && r[i] == -r[j - 1]) {
    ++i;
    --j;
  }
  CyclicSplit s;
  s.conjugator.assign(r.begin(), r.begin() + static_cast<long>(i));
  s.core.assign(r.begin() + static_cast<long>(i), r.begin() + static_cast<long>(j));
  return s;
}

std::size_t common_prefix(const Word& a, const Word& b) {
  std::size_t k = 0;
  while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
  return k;
}

long tree_distance(const Word& a, const Word& b) {
  auto k = common_prefix(a, b);
  return static_cast<long>(a.size() + b.size() - 2 * k);
}

Word parse(std::string_view text, int rank) {
  Word w;
  if (text == "e" || text == "1") return w;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (!std::isalpha(static_cast<unsigned char>(ch)))
      fail(ErrorCode::MalformedWord, "unexpected character '" + std::string(1, ch) + "' in word");
    int idx = std::tolower(static_cast<unsigned char>(ch)) - 'a';
    if (idx >= rank)
      fail(ErrorCode::MalformedWord, "letter '" + std::string(1, ch) + "' outside rank " + std::to_string(rank));
    w.push_back(std::isupper(static_cast<unsigned char>(ch)) ? -(idx + 1) : idx + 1);
  }
  return reduce(w);
}

std::string format(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (Letter l : w) {
    char c = static_cast<char>('a' + std::abs(l) - 1);
    s.push_back(l < 0 ? static_cast<char>(std::toupper(c)) : c);
  }
  return s;
}

}  // namespace words

StallingsGraph::StallingsGraph(const std::vector<Word>& generators, int rank) : rank_(rank) {
  add_vertex();
  for (const auto& g0 : generators) {
    Word g = words::reduce(g0);
    if (g.empty()) continue;
    int cur = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      int next = (i + 1 == g.size()) ? 0 : add_vertex();
      // Parallel edges are allowed here; fold() merges them.
      out_[cur].emplace(g[i], next);
      auto it = out_[cur].find(g[i]);
      if (it->second != next) {
        // Record the extra edge through a fresh pending list handled in fold.
        pending_.push_back({cur, g[i], next});
      }
      out_[next].emplace(-g[i], cur);
      auto jt = out_[next].find(-g[i]);
      if (jt->second != cur) pending_.push_back({next, -g[i], cur});
      cur = next;
    }
  }
  fold();
}

int StallingsGraph::add_vertex() {
  out_.emplace_back();
  return static_cast<int>(out_.size()) - 1;
}

void StallingsGraph::fold() {
  // Union-find over vertices; pending edges are identifications still to make.
  std::vector<int> parent(out_.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  std::vector<std::pair<int, int>> merges;
  for (auto& p : pending_) merges.push_back({out_[p.from].at(p.letter), p.to});
  pending_.clear();
  while (!merges.empty()) {
    auto [a, b] = merges.back();
    merges.pop_back();
    a = find(a);
    b = find(b);
    if (a == b) continue;
    if (out_[a].size() < out_[b].size()) std::swap(a, b);
    parent[b] = a;
    for (auto& [l, t] : out_[b]) {
      auto it = out_[a].find(l);
      if (it == out_[a].end())
        out_[a].emplace(l, t);
      else
        merges.push_back({it->second, t});
    }
    out_[b].clear();
  }
  // Rewrite targets to representatives and compact.
  std::vector<int> index(out_.size(), -1);
  std::vector<std::map<Letter, int>> compact;
  int root = find(0);
  index[root] = 0;
  compact.emplace_back();
  for (std::size_t v = 0; v < out_.size(); ++v) {
    if (find(static_cast<int>(v)) != static_cast<int>(v) || static_cast<int>(v) == root) continue;
    index[v] = static_cast<int>(compact.size());
    compact.emplace_back();
  }
  for (std::size_t v = 0; v < out_.size(); ++v) {
    if (find(static_cast<int>(v)) != static_cast<int>(v)) continue;
    for (auto& [l, t] : out_[v]) compact[index[v]][l] = index[find(t)];
  }
  out_ = std::move(compact);
}

bool StallingsGraph::contains(const Word& w) const {
  int cur = 0;
  for (Letter l : w) {
    auto it = out_[cur].find(l);
    if (it == out_[cur].end()) return false;
    cur = it->second;
  }
  return cur == 0;
}

}  // namespace mwall
