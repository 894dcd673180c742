#include "evenfix/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace evenfix {

const char* to_string(IsoStatus s) noexcept {
  switch (s) {
    case IsoStatus::isomorphic: return "isomorphic";
    case IsoStatus::not_isomorphic: return "not_isomorphic";
    case IsoStatus::undecided: return "undecided";
  }
  return "undecided";
}

std::map<std::size_t, std::size_t> order_histogram(const FiniteMatrixGroup& G) {
  std::map<std::size_t, std::size_t> h;
  for (std::size_t i = 0; i < G.order(); ++i) ++h[G.element_order(i)];
  return h;
}

std::vector<std::size_t> greedy_generators(const FiniteMatrixGroup& G) {
  std::vector<std::size_t> ords(G.order());
  for (std::size_t i = 0; i < G.order(); ++i) ords[i] = G.element_order(i);
  std::vector<std::size_t> by_order(G.order());
  for (std::size_t i = 0; i < by_order.size(); ++i) by_order[i] = i;
  std::stable_sort(by_order.begin(), by_order.end(), [&](std::size_t x, std::size_t y) { return ords[x] > ords[y]; });

  std::vector<std::size_t> gens;
  std::vector<char> in(G.order(), 0);
  in[G.identity()] = 1;
  std::size_t covered = 1;
  for (std::size_t cand : by_order) {
    if (covered == G.order()) break;
    if (in[cand]) continue;
    gens.push_back(cand);
    std::fill(in.begin(), in.end(), 0);
    const auto sub = subgroup_generated(G, gens);
    for (std::size_t x : sub) in[x] = 1;
    covered = sub.size();
  }
  return gens;
}

namespace {

constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();

// Extends gens -> imgs along the Cayley graph of <gens>. Fills phi and its
// reverse; returns false on any inconsistency or collision.
bool extend(const FiniteMatrixGroup& a, const FiniteMatrixGroup& b, const std::vector<std::size_t>& gens,
            const std::vector<std::size_t>& imgs, std::vector<std::size_t>& phi, std::vector<std::size_t>& rev) {
  std::fill(phi.begin(), phi.end(), unset);
  std::fill(rev.begin(), rev.end(), unset);
  phi[a.identity()] = b.identity();
  rev[b.identity()] = a.identity();
  std::vector<std::size_t> queue{a.identity()};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const std::size_t x = queue[h];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const std::size_t y = a.multiply(x, gens[s]);
      const std::size_t img = b.multiply(phi[x], imgs[s]);
      if (phi[y] == unset) {
        if (rev[img] != unset) return false;
        phi[y] = img;
        rev[img] = y;
        queue.push_back(y);
      } else if (phi[y] != img) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

IsomorphismResult find_isomorphism(const FiniteMatrixGroup& a, const FiniteMatrixGroup& b, std::size_t budget) {
  IsomorphismResult res;
  if (a.order() != b.order()) {
    res.status = IsoStatus::not_isomorphic;
    res.reason = "orders differ";
    return res;
  }
  if (order_histogram(a) != order_histogram(b)) {
    res.status = IsoStatus::not_isomorphic;
    res.reason = "element order histograms differ";
    return res;
  }
  res.generators = greedy_generators(a);
  const auto& gens = res.generators;

  std::vector<std::vector<std::size_t>> candidates(gens.size());
  for (std::size_t s = 0; s < gens.size(); ++s) {
    const std::size_t o = a.element_order(gens[s]);
    for (std::size_t y = 0; y < b.order(); ++y)
      if (b.element_order(y) == o) candidates[s].push_back(y);
  }

  std::vector<std::size_t> phi(a.order()), rev(b.order()), imgs;
  bool exhausted = false;
  std::function<bool(std::size_t)> search = [&](std::size_t depth) -> bool {
    if (depth == gens.size()) return true;
    for (std::size_t y : candidates[depth]) {
      if (++res.nodes > budget) {
        exhausted = true;
        return false;
      }
      imgs.push_back(y);
      std::vector<std::size_t> prefix(gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(depth) + 1);
      if (extend(a, b, prefix, imgs, phi, rev) && search(depth + 1)) return true;
      imgs.pop_back();
      if (exhausted) return false;
    }
    return false;
  };

  if (search(0)) {
    extend(a, b, gens, imgs, phi, rev);
    res.images = imgs;
    res.mapping = phi;
    res.status = IsoStatus::isomorphic;
    res.reason = "generator images extend to a bijective homomorphism";
  } else if (exhausted) {
    res.status = IsoStatus::undecided;
    res.reason = "search budget exhausted";
  } else {
    res.status = IsoStatus::not_isomorphic;
    res.reason = "no generator assignment extends";
  }
  return res;
}

}  // namespace evenfix
