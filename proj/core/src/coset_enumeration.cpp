#include "evenfix/coset_enumeration.hpp"

#include <numeric>

#include "evenfix/errors.hpp"

namespace evenfix::detail {

Relator power(int generator_letter, int e) {
  const int letter = e >= 0 ? generator_letter : inverse_letter(generator_letter);
  return Relator(static_cast<std::size_t>(e >= 0 ? e : -e), letter);
}

Relator concat(std::initializer_list<Relator> parts) {
  Relator out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

int CosetTable::trace(int from, const std::vector<int>& word) const {
  int c = from;
  for (int l : word) c = next[static_cast<std::size_t>(c)][static_cast<std::size_t>(l)];
  return c;
}

namespace {

class Enumerator {
 public:
  explicit Enumerator(std::size_t max_cosets) : max_(max_cosets) { add_coset(); }

  void run(const std::vector<Relator>& relators) {
    for (std::size_t c = 0; c < table_.size(); ++c) {
      for (const auto& w : relators) {
        if (!live(c)) break;
        scan_and_fill(static_cast<int>(c), w);
      }
      for (int x = 0; x < 4 && live(c); ++x)
        if (table_[c][static_cast<std::size_t>(x)] < 0) define(static_cast<int>(c), x);
    }
  }

  CosetTable compact() const {
    std::vector<int> renum(table_.size(), -1);
    int n = 0;
    for (std::size_t c = 0; c < table_.size(); ++c)
      if (live(c)) renum[c] = n++;
    CosetTable t;
    t.next.resize(static_cast<std::size_t>(n));
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (!live(c)) continue;
      for (int x = 0; x < 4; ++x) {
        const int d = table_[c][static_cast<std::size_t>(x)];
        if (d < 0) throw InternalFault("coset table incomplete after enumeration");
        t.next[static_cast<std::size_t>(renum[c])][static_cast<std::size_t>(x)] = renum[static_cast<std::size_t>(rep(d))];
      }
    }
    return t;
  }

 private:
  bool live(std::size_t c) const { return parent_[c] == static_cast<int>(c); }

  int add_coset() {
    if (table_.size() >= max_) throw InternalFault("coset enumeration exceeded " + std::to_string(max_) + " cosets");
    table_.push_back({-1, -1, -1, -1});
    parent_.push_back(static_cast<int>(parent_.size()));
    return static_cast<int>(table_.size()) - 1;
  }

  int& at(int c, int x) { return table_[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)]; }

  void define(int c, int x) {
    const int d = add_coset();
    at(c, x) = d;
    at(d, inverse_letter(x)) = c;
  }

  int rep(int c) const {
    int r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    return r;
  }

  int find(int c) {
    const int r = rep(c);
    while (parent_[static_cast<std::size_t>(c)] != r) {
      const int next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(int a, int b, std::vector<int>& queue) {
    const int ra = find(a), rb = find(b);
    if (ra == rb) return;
    const int lo = std::min(ra, rb), hi = std::max(ra, rb);
    parent_[static_cast<std::size_t>(hi)] = lo;
    queue.push_back(hi);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int g = queue[i];
      for (int x = 0; x < 4; ++x) {
        const int d = at(g, x);
        if (d < 0) continue;
        const int xi = inverse_letter(x);
        if (at(d, xi) == g) at(d, xi) = -1;
        const int mu = find(g), nu = find(d);
        if (at(mu, x) >= 0) {
          merge(nu, at(mu, x), queue);
        } else if (at(nu, xi) >= 0) {
          merge(mu, at(nu, xi), queue);
        } else {
          at(mu, x) = nu;
          at(nu, xi) = mu;
        }
      }
    }
  }

  void scan_and_fill(int c, const Relator& w) {
    const int n = static_cast<int>(w.size());
    int f = c, b = c, i = 0, j = n - 1;
    for (;;) {
      while (i <= j && at(f, w[static_cast<std::size_t>(i)]) >= 0) f = at(f, w[static_cast<std::size_t>(i++)]);
      if (i > j) {
        if (f != c) coincidence(f, c);
        return;
      }
      while (j >= i && at(b, inverse_letter(w[static_cast<std::size_t>(j)])) >= 0)
        b = at(b, inverse_letter(w[static_cast<std::size_t>(j--)]));
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        at(f, w[static_cast<std::size_t>(i)]) = b;
        at(b, inverse_letter(w[static_cast<std::size_t>(i)])) = f;
        return;
      }
      define(f, w[static_cast<std::size_t>(i)]);
    }
  }

  std::size_t max_;
  std::vector<std::array<int, 4>> table_;
  std::vector<int> parent_;
};

}  // namespace

CosetTable enumerate_cosets(const std::vector<Relator>& relators, std::size_t max_cosets) {
  Enumerator e(max_cosets);
  e.run(relators);
  return e.compact();
}

}  // namespace evenfix::detail
