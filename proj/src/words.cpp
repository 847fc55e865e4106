#include "jts/words.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "jts/errors.hpp"

namespace jts {

namespace {

void check_letter(Letter l, int rank) {
  if (l == 0 || std::abs(l) > rank) {
    throw ValidationError("words.reduce: letter index " + std::to_string(l) +
                          " out of range for rank " + std::to_string(rank));
  }
}

bool letter_less(Letter a, Letter b) { return letter_key(a) < letter_key(b); }

}  // namespace

Word::Word(std::vector<Letter> letters, int rank) : rank_(rank) {
  if (rank <= 0) throw ValidationError("words: rank must be positive");
  letters_.reserve(letters.size());
  for (Letter l : letters) {
    check_letter(l, rank);
    if (!letters_.empty() && letters_.back() == inv(l)) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

Word Word::parse(std::string_view text, int rank) {
  std::vector<Letter> ls;
  ls.reserve(text.size());
  for (char c : text) {
    if (c >= 'a' && c <= 'z') {
      ls.push_back(c - 'a' + 1);
    } else if (c >= 'A' && c <= 'Z') {
      ls.push_back(-(c - 'A' + 1));
    } else {
      throw ValidationError(std::string("words.parse: invalid character '") + c + "'");
    }
  }
  return Word(std::move(ls), rank);
}

std::string Word::str() const {
  std::string s;
  s.reserve(letters_.size());
  for (Letter l : letters_) {
    s.push_back(l > 0 ? static_cast<char>('a' + l - 1) : static_cast<char>('A' - l - 1));
  }
  return s;
}

Word Word::inverse() const {
  Word w;
  w.rank_ = rank_;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(inv(*it));
  return w;
}

Word Word::operator*(const Word& o) const {
  if (rank_ != o.rank_) throw ValidationError("words.compose: rank mismatch");
  Word w;
  w.rank_ = rank_;
  w.letters_ = letters_;
  for (Letter l : o.letters_) {
    if (!w.letters_.empty() && w.letters_.back() == inv(l)) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(l);
    }
  }
  return w;
}

std::pair<Word, Word> Word::cyclic_reduce() const {
  size_t i = 0, j = letters_.size();
  while (j > i + 1 && letters_[i] == inv(letters_[j - 1])) {
    ++i;
    --j;
  }
  Word core, conj;
  core.rank_ = conj.rank_ = rank_;
  conj.letters_.assign(letters_.begin(), letters_.begin() + static_cast<long>(i));
  core.letters_.assign(letters_.begin() + static_cast<long>(i),
                       letters_.begin() + static_cast<long>(j));
  return {core, conj};
}

bool Word::is_cyclically_reduced() const {
  return letters_.size() < 2 || letters_.front() != inv(letters_.back());
}

Word Word::pow(int m) const {
  if (m == 0 || empty()) return identity(rank_);
  if (m < 0) return inverse().pow(-m);
  auto [core, conj] = cyclic_reduce();
  Word w;
  w.rank_ = rank_;
  w.letters_.reserve(conj.letters_.size() * 2 + core.letters_.size() * static_cast<size_t>(m));
  w.letters_ = conj.letters_;
  for (int k = 0; k < m; ++k)
    w.letters_.insert(w.letters_.end(), core.letters_.begin(), core.letters_.end());
  Word cinv = conj.inverse();
  w.letters_.insert(w.letters_.end(), cinv.letters_.begin(), cinv.letters_.end());
  return w;  // concatenation is already reduced: core cyclically reduced
}

Word Word::rotated(int k) const {
  if (empty()) return *this;
  int n = size();
  k = ((k % n) + n) % n;
  std::vector<Letter> ls;
  ls.reserve(letters_.size());
  ls.insert(ls.end(), letters_.begin() + k, letters_.end());
  ls.insert(ls.end(), letters_.begin(), letters_.begin() + k);
  return Word(std::move(ls), rank_);
}

Word Word::canonical_rotation() const {
  Word best = *this;
  for (int k = 1; k < size(); ++k) {
    Word r = rotated(k);
    if (r < best) best = r;
  }
  return best;
}

std::vector<long long> Word::exponent_sums() const {
  std::vector<long long> e(static_cast<size_t>(rank_), 0);
  for (Letter l : letters_) e[static_cast<size_t>(std::abs(l)) - 1] += (l > 0 ? 1 : -1);
  return e;
}

bool Word::operator<(const Word& o) const {
  if (letters_.size() != o.letters_.size()) return letters_.size() < o.letters_.size();
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] != o.letters_[i]) return letter_less(letters_[i], o.letters_[i]);
  }
  return false;
}

size_t WordHash::operator()(const Word& w) const {
  uint64_t h = 1469598103934665603ULL;
  for (Letter l : w.letters()) {
    h ^= static_cast<uint64_t>(l + 64);
    h *= 1099511628211ULL;
  }
  return static_cast<size_t>(h);
}

Word reduce(const std::vector<Letter>& letters, int rank) { return Word(letters, rank); }

// --- GenSet -----------------------------------------------------------------

GenSet GenSet::standard(int rank) {
  GenSet s;
  s.rank_ = rank;
  s.standard_ = true;
  for (int i = 1; i <= rank; ++i) {
    s.members_.push_back(Word({i}, rank));
    s.members_.push_back(Word({-i}, rank));
  }
  std::sort(s.members_.begin(), s.members_.end());
  s.key_ = 0x53544400u ^ static_cast<uint64_t>(rank);
  return s;
}

GenSet::GenSet(std::vector<Word> members, int rank) {
  rank_ = rank;
  members_ = std::move(members);
  for (const Word& w : members_) {
    if (w.rank() != rank) throw ValidationError("words.genset: member rank mismatch");
    if (w.empty()) throw ValidationError("words.genset: identity is not a valid member");
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  validate_and_close();
  WordHash wh;
  key_ = 0;
  for (const Word& w : members_) key_ = key_ * 0x100000001B3ULL + wh(w);
  standard_ = true;
  for (const Word& w : members_) standard_ &= (w.size() == 1);
  standard_ &= (members_.size() == 2 * static_cast<size_t>(rank));
}

void GenSet::validate_and_close() {
  std::unordered_set<Word, WordHash> set(members_.begin(), members_.end());
  for (const Word& w : members_) {
    if (!set.count(w.inverse())) {
      throw ValidationError("words.genset: not symmetric, missing inverse of " + w.str());
    }
    stretch_out_ = std::max(stretch_out_, w.size());
  }
  // Breadth-first closure: every standard generator must appear within a
  // bounded radius, which both certifies generation and records stretch_in.
  std::unordered_map<Word, int, WordHash> dist;
  std::deque<Word> queue;
  Word o = Word::identity(rank_);
  dist[o] = 0;
  queue.push_back(o);
  int needed = 2 * rank_;
  int found = 0;
  const int radius_cap = 10;
  const size_t size_cap = 2000000;
  while (!queue.empty() && found < needed) {
    Word cur = queue.front();
    queue.pop_front();
    int d = dist[cur];
    if (d >= radius_cap) break;
    for (const Word& s : members_) {
      Word nxt = cur * s;
      auto [it, fresh] = dist.emplace(nxt, d + 1);
      if (!fresh) continue;
      if (nxt.size() == 1) {
        ++found;
        stretch_in_ = std::max(stretch_in_, d + 1);
      }
      if (dist.size() > size_cap) {
        throw GuardError("words.genset: closure cap exceeded while verifying generation");
      }
      queue.push_back(nxt);
    }
  }
  if (found < needed) {
    throw ValidationError("words.genset: members do not generate the free group " +
                          std::string("(closure check failed within radius ") +
                          std::to_string(radius_cap) + ")");
  }
}

// --- word_length ------------------------------------------------------------

namespace {

// Per-GenSet memo of exact distances; append-only behind a mutex.
struct DistCache {
  std::mutex mu;
  std::unordered_map<Word, int, WordHash> dist;
};

DistCache& cache_for(const GenSet& S) {
  static std::mutex registry_mu;
  static std::unordered_map<uint64_t, std::unique_ptr<DistCache>> registry;
  std::lock_guard<std::mutex> lock(registry_mu);
  auto& slot = registry[S.key()];
  if (!slot) slot = std::make_unique<DistCache>();
  return *slot;
}

int common_prefix_len(const Word& a, const Word& b) {
  int n = std::min(a.size(), b.size());
  int i = 0;
  while (i < n && a.at(i) == b.at(i)) ++i;
  return i;
}

// Tree distance from y to the segment [o, x] (prefixes of x).
int seg_dist(const Word& y, const Word& x) { return y.size() - common_prefix_len(y, x); }

int corridor_bfs(const Word& x, const GenSet& S) {
  const int K = S.stretch_out();
  const int mu = S.stretch_in();
  const int B = mu * K * K + K;  // Morse corridor for S-geodesics in a tree
  const size_t node_cap = 50000000;

  std::unordered_map<Word, int, WordHash> df, db;
  std::vector<Word> f_frontier{Word::identity(x.rank())}, b_frontier{x};
  df[Word::identity(x.rank())] = 0;
  db[x] = 0;
  int rf = 0, rb = 0;
  int best = -1;

  auto scan_meet = [&](const std::vector<Word>& layer,
                       const std::unordered_map<Word, int, WordHash>& other, int own_d) {
    for (const Word& w : layer) {
      auto it = other.find(w);
      if (it != other.end()) {
        int total = own_d + it->second;
        if (best < 0 || total < best) best = total;
      }
    }
  };
  scan_meet(f_frontier, db, 0);

  while (best < 0 || rf + rb + 2 <= best) {
    bool forward = f_frontier.size() <= b_frontier.size();
    auto& frontier = forward ? f_frontier : b_frontier;
    auto& own = forward ? df : db;
    auto& other = forward ? db : df;
    int& radius = forward ? rf : rb;
    if (frontier.empty()) break;
    std::vector<Word> next;
    for (const Word& cur : frontier) {
      for (const Word& s : S.members()) {
        Word nxt = cur * s;
        if (seg_dist(nxt, x) > B) continue;
        auto [it, fresh] = own.emplace(nxt, radius + 1);
        if (!fresh) continue;
        next.push_back(nxt);
        if (df.size() + db.size() > node_cap) {
          throw GuardError("words.word_length: corridor search cap exceeded");
        }
      }
    }
    ++radius;
    scan_meet(next, other, radius);
    frontier = std::move(next);
    if (f_frontier.empty() && b_frontier.empty()) break;
  }
  if (best < 0) throw GuardError("words.word_length: search exhausted without meeting");
  return best;
}

}  // namespace

int word_length(const Word& x, const GenSet& S) {
  if (x.rank() != S.rank()) throw ValidationError("words.word_length: rank mismatch");
  if (S.is_standard()) return x.size();
  if (x.empty()) return 0;
  DistCache& cache = cache_for(S);
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.dist.find(x);
    if (it != cache.dist.end()) return it->second;
  }
  int d = corridor_bfs(x, S);
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    cache.dist.emplace(x, d);
    cache.dist.emplace(x.inverse(), d);  // symmetric S
  }
  return d;
}

std::vector<Word> sphere(const GenSet& S, int T, long long cap) {
  if (T < 0) throw ValidationError("words.sphere: negative radius");
  if (T == 0) return {Word::identity(S.rank())};
  if (S.is_standard()) {
    // 2r * (2r-1)^{T-1} elements on the tree.
    long long est = 2LL * S.rank();
    for (int t = 1; t < T && est <= cap; ++t) est *= (2LL * S.rank() - 1);
    if (est > cap) {
      throw GuardError("words.sphere: estimated count " + std::to_string(est) +
                       " exceeds cap; raise the cap to override");
    }
    std::vector<Word> out;
    out.reserve(static_cast<size_t>(est));
    ReducedWalkHooks hooks;
    hooks.visit = [&](const std::vector<Letter>& ls) {
      if (static_cast<int>(ls.size()) == T) out.emplace_back(ls, S.rank());
      return true;
    };
    walk_reduced_words(S.rank(), T, hooks);
    return out;
  }
  // Layered BFS ball; deterministic order within each layer via sorting.
  std::unordered_map<Word, int, WordHash> dist;
  std::vector<Word> layer{Word::identity(S.rank())};
  dist[layer[0]] = 0;
  for (int t = 1; t <= T; ++t) {
    long long projected = static_cast<long long>(layer.size()) * static_cast<long long>(S.members().size());
    if (projected > cap || static_cast<long long>(dist.size()) > cap) {
      throw GuardError("words.sphere: ball growth exceeds cap at radius " + std::to_string(t));
    }
    std::vector<Word> next;
    for (const Word& cur : layer) {
      for (const Word& s : S.members()) {
        Word nxt = cur * s;
        auto [it, fresh] = dist.emplace(nxt, t);
        if (fresh) next.push_back(nxt);
      }
    }
    std::sort(next.begin(), next.end());
    layer = std::move(next);
  }
  return layer;
}

Rat gromov_product(const Word& x, const Word& y, const GenSet& S) {
  long long dx = word_length(x, S);
  long long dy = word_length(y, S);
  long long dxy = word_length(x.inverse() * y, S);
  return Rat(dx + dy - dxy, 2);
}

bool is_proximal(const Word& x, const Rat& eps, const GenSet& S) {
  return gromov_product(x, x.inverse(), S) <= eps;
}

// --- enumeration ------------------------------------------------------------

void walk_reduced_words(int rank, int max_len, const ReducedWalkHooks& hooks,
                        bool visit_identity) {
  std::vector<Letter> ordered;
  for (int i = 1; i <= rank; ++i) {
    ordered.push_back(i);
    ordered.push_back(-i);
  }
  std::vector<Letter> stack;
  stack.reserve(static_cast<size_t>(max_len));
  if (visit_identity) {
    if (!hooks.visit(stack)) return;
  }
  // Iterative DFS in lex letter order.
  std::function<void()> descend = [&]() {
    if (static_cast<int>(stack.size()) >= max_len) return;
    for (Letter l : ordered) {
      if (!stack.empty() && stack.back() == inv(l)) continue;
      if (hooks.push) hooks.push(l);
      stack.push_back(l);
      bool go_deeper = hooks.visit(stack);
      if (go_deeper) descend();
      stack.pop_back();
      if (hooks.pop) hooks.pop();
    }
  };
  descend();
}

void for_each_cyclic_class(int rank, int L, const std::function<void(const Word&)>& visit) {
  ReducedWalkHooks hooks;
  hooks.visit = [&](const std::vector<Letter>& ls) {
    if (ls.size() >= 2 && ls.front() == inv(ls.back())) return true;  // not cyclically reduced
    if (ls.empty()) return true;
    // Keep the lex-least rotation only.
    int n = static_cast<int>(ls.size());
    bool least = true;
    for (int k = 1; k < n && least; ++k) {
      for (int i = 0; i < n; ++i) {
        Letter a = ls[static_cast<size_t>((i + k) % n)];
        Letter b = ls[static_cast<size_t>(i)];
        if (letter_key(a) != letter_key(b)) {
          least = letter_key(a) > letter_key(b);
          break;
        }
      }
    }
    if (least) visit(Word(std::vector<Letter>(ls), rank));
    return true;
  };
  walk_reduced_words(rank, L, hooks);
}

}  // namespace jts
