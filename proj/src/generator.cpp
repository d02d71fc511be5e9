#include "psbck/generator.hpp"

#include <algorithm>
#include <numeric>

#include "psbck/error.hpp"

namespace psbck {
namespace {

using Table = std::vector<std::vector<Element>>;

// "0" for zero, "1" for one, letters for the rest in id order.
std::vector<std::string> plain_names(std::size_t n, Element one, std::optional<Element> zero) {
  std::vector<std::string> out(n);
  std::size_t next = 0;
  for (Element x = 0; x < n; ++x) {
    if (x == one) {
      out[x] = "1";
    } else if (zero && x == *zero) {
      out[x] = "0";
    } else {
      out[x] = next < 26 ? std::string(1, static_cast<char>('a' + next)) : "e" + std::to_string(next);
      ++next;
    }
  }
  return out;
}

RawAlgebra blank(std::string label, std::size_t n) {
  RawAlgebra r;
  r.name = std::move(label);
  r.arrow.assign(n, std::vector<Element>(n, 0));
  r.squig = r.arrow;
  return r;
}

AlgebraRef chain(std::string label, std::string prefix, std::size_t n, bool lukasiewicz) {
  if (n == 0) throw WorkbenchError(ErrorCode::kUsage, "chain needs at least one element");
  RawAlgebra r = blank(std::move(label), n);
  for (std::size_t i = 0; i < n; ++i) r.element_names.push_back(prefix + std::to_string(i));
  const auto top = static_cast<long>(n - 1);
  r.one = static_cast<Element>(top);
  r.zero = 0;
  for (long x = 0; x <= top; ++x)
    for (long y = 0; y <= top; ++y) {
      long v = lukasiewicz ? std::min(top, top - x + y) : (x <= y ? top : y);
      r.arrow[x][y] = static_cast<Element>(v);
    }
  r.squig = r.arrow;
  return certify(r);
}

class Search {
 public:
  Search(const std::vector<std::vector<bool>>& leq, std::mt19937_64& rng, std::size_t budget)
      : leq_(leq), n_(leq.size()), top_(static_cast<Element>(n_ - 1)), rng_(rng), budget_(budget) {
    unknown_ = static_cast<Element>(n_);
    tables_[0].assign(n_, std::vector<Element>(n_, unknown_));
    tables_[1] = tables_[0];
    for (Element x = 0; x < n_; ++x)
      for (Element y = 0; y < n_; ++y) {
        if (leq_[x][y]) {
          tables_[0][x][y] = tables_[1][x][y] = top_;
        } else {
          cells_.push_back({0, x, y});
          cells_.push_back({1, x, y});
        }
      }
  }

  bool run(std::string label) {
    label_ = std::move(label);
    return fill(0);
  }

  AlgebraRef result() const { return found_; }

 private:
  struct Cell {
    int table;
    Element x, y;
  };

  bool known(Element v) const { return v != unknown_; }
  bool le(Element x, Element y) const { return leq_[x][y]; }

  // Evaluates t[x][y], treating out-of-range inputs as unknown.
  Element at(int t, Element x, Element y) const {
    if (!known(x) || !known(y)) return unknown_;
    return tables_[t][x][y];
  }

  bool locally_consistent(const Cell& c) const {
    const auto& t = tables_[c.table];
    const Element v = t[c.x][c.y];
    for (Element w = 0; w < n_; ++w) {
      // antitone in the first argument, monotone in the second
      if (le(w, c.x) && known(t[w][c.y]) && !le(v, t[w][c.y])) return false;
      if (le(c.x, w) && known(t[w][c.y]) && !le(t[w][c.y], v)) return false;
      if (le(c.y, w) && known(t[c.x][w]) && !le(v, t[c.x][w])) return false;
      if (le(w, c.y) && known(t[c.x][w]) && !le(t[c.x][w], v)) return false;
    }
    return true;
  }

  bool triples_consistent() const {
    for (Element x = 0; x < n_; ++x)
      for (Element y = 0; y < n_; ++y) {
        for (int t = 0; t < 2; ++t) {
          // x <= (x->y)~>y and x <= (x~>y)->y
          Element back = at(1 - t, at(t, x, y), y);
          if (known(back) && !le(x, back)) return false;
        }
        for (Element z = 0; z < n_; ++z) {
          for (int t = 0; t < 2; ++t) {
            // (x->y) <= (y->z) ~> (x->z), and the mirror image
            Element lhs = at(t, x, y);
            Element rhs = at(1 - t, at(t, y, z), at(t, x, z));
            if (known(lhs) && known(rhs) && !le(lhs, rhs)) return false;
          }
          // x->(y~>z) = y~>(x->z)
          Element a = at(0, x, at(1, y, z));
          Element b = at(1, y, at(0, x, z));
          if (known(a) && known(b) && a != b) return false;
        }
      }
    return true;
  }

  bool fill(std::size_t i) {
    if (nodes_++ > budget_) return false;
    if (i == cells_.size()) {
      RawAlgebra r = blank(label_, n_);
      r.one = top_;
      r.zero = 0;
      r.element_names = plain_names(n_, top_, Element{0});
      r.arrow = tables_[0];
      r.squig = tables_[1];
      Validation v = validate(r);
      if (!v.ok()) return false;
      found_ = v.algebra;
      return true;
    }
    const Cell c = cells_[i];
    std::vector<Element> domain;
    if (c.x == top_) {
      domain.push_back(c.y);  // 1->y = y
    } else {
      for (Element z = 0; z < n_; ++z)
        if (z != top_ && le(c.y, z)) domain.push_back(z);
    }
    std::shuffle(domain.begin(), domain.end(), rng_);
    for (Element z : domain) {
      tables_[c.table][c.x][c.y] = z;
      if (locally_consistent(c) && triples_consistent() && fill(i + 1)) return true;
      if (nodes_ > budget_) break;
    }
    tables_[c.table][c.x][c.y] = unknown_;
    return false;
  }

  const std::vector<std::vector<bool>>& leq_;
  std::size_t n_;
  Element top_;
  Element unknown_ = 0;
  std::mt19937_64& rng_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::string label_;
  Table tables_[2];
  std::vector<Cell> cells_;
  AlgebraRef found_;
};

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

AlgebraRef relabel(RawAlgebra r) {
  r.element_names = plain_names(r.element_names.size(), r.one, r.zero);
  return certify(r);
}

}  // namespace

AlgebraRef goedel_chain(std::size_t n) { return chain("goedel" + std::to_string(n), "g", n, false); }

AlgebraRef lukasiewicz_chain(std::size_t n) { return chain("luk" + std::to_string(n), "l", n, true); }

AlgebraRef direct_product(const AlgebraRef& a, const AlgebraRef& b) {
  const std::size_t m = b->size();
  RawAlgebra r = blank(a->label() + "x" + b->label(), a->size() * m);
  auto pair = [m](Element x, Element y) { return static_cast<Element>(x * m + y); };
  for (Element x = 0; x < a->size(); ++x)
    for (Element y = 0; y < m; ++y) r.element_names.push_back(a->name(x) + "." + b->name(y));
  r.one = pair(a->one(), b->one());
  if (a->zero() && b->zero()) r.zero = pair(*a->zero(), *b->zero());
  for (Element x1 = 0; x1 < a->size(); ++x1)
    for (Element y1 = 0; y1 < m; ++y1)
      for (Element x2 = 0; x2 < a->size(); ++x2)
        for (Element y2 = 0; y2 < m; ++y2) {
          r.arrow[pair(x1, y1)][pair(x2, y2)] = pair(a->arrow(x1, x2), b->arrow(y1, y2));
          r.squig[pair(x1, y1)][pair(x2, y2)] = pair(a->squig(x1, x2), b->squig(y1, y2));
        }
  return certify(r);
}

AlgebraRef ordinal_sum(const AlgebraRef& a, const AlgebraRef& b) {
  // ids: a without its top first, then all of b
  std::vector<Element> lower;
  for (Element x = 0; x < a->size(); ++x)
    if (x != a->one()) lower.push_back(x);
  const auto k = static_cast<Element>(lower.size());
  const std::size_t n = k + b->size();
  RawAlgebra r = blank(a->label() + "+" + b->label(), n);
  for (Element x : lower) r.element_names.push_back("a" + a->name(x));
  for (Element x = 0; x < b->size(); ++x) r.element_names.push_back("b" + b->name(x));
  r.one = k + b->one();
  if (k > 0 && a->zero()) {
    r.zero = static_cast<Element>(std::find(lower.begin(), lower.end(), *a->zero()) - lower.begin());
  } else if (k == 0 && b->zero()) {
    r.zero = *b->zero();
  }
  auto from_a = [&](Element v) {
    return v == a->one() ? r.one : static_cast<Element>(std::find(lower.begin(), lower.end(), v) - lower.begin());
  };
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j) {
      if (i < k && j < k) {
        r.arrow[i][j] = from_a(a->arrow(lower[i], lower[j]));
        r.squig[i][j] = from_a(a->squig(lower[i], lower[j]));
      } else if (i < k) {
        r.arrow[i][j] = r.squig[i][j] = r.one;
      } else if (j < k) {
        r.arrow[i][j] = r.squig[i][j] = j;
      } else {
        r.arrow[i][j] = k + b->arrow(i - k, j - k);
        r.squig[i][j] = k + b->squig(i - k, j - k);
      }
    }
  return certify(r);
}

std::vector<std::vector<bool>> random_bounded_poset(std::size_t n, std::mt19937_64& rng) {
  if (n < 2) throw WorkbenchError(ErrorCode::kUsage, "a bounded poset needs two points");
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x) {
    leq[x][x] = true;
    leq[0][x] = true;
    leq[x][n - 1] = true;
  }
  // index order is a linear extension, so antisymmetry is automatic
  const double density = std::uniform_real_distribution<double>(0.15, 0.75)(rng);
  std::bernoulli_distribution edge(density);
  for (std::size_t x = 1; x + 1 < n; ++x)
    for (std::size_t y = x + 1; y + 1 < n; ++y)
      if (edge(rng)) leq[x][y] = true;
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (leq[x][m] && leq[m][y]) leq[x][y] = true;
  return leq;
}

AlgebraRef search_algebra(const std::vector<std::vector<bool>>& leq, std::mt19937_64& rng, std::string label,
                          std::size_t node_budget) {
  Search s(leq, rng, node_budget);
  if (s.run(label)) return s.result();
  const std::size_t n = leq.size();
  RawAlgebra r = blank(label + "-crisp", n);
  r.one = static_cast<Element>(n - 1);
  r.zero = 0;
  r.element_names = plain_names(n, r.one, r.zero);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) r.arrow[x][y] = leq[x][y] ? r.one : y;
  r.squig = r.arrow;
  return certify(r);
}

std::vector<AlgebraRef> generate_algebras(std::uint64_t seed, std::size_t count, std::size_t max_n) {
  if (max_n < 2) throw WorkbenchError(ErrorCode::kUsage, "max_n must be at least 2");
  std::mt19937_64 rng(seed);
  std::vector<AlgebraRef> out;
  auto searched = [&](std::size_t n, const std::string& label) {
    return search_algebra(random_bounded_poset(n, rng), rng, label);
  };
  auto small = [&](std::size_t n, const std::string& label) -> AlgebraRef {
    switch (pick(rng, 0, 2)) {
      case 0: return goedel_chain(n);
      case 1: return lukasiewicz_chain(n);
      default: return n >= 2 ? searched(n, label) : goedel_chain(n);
    }
  };
  for (std::size_t i = 0; i < count; ++i) {
    const std::string label = "gen" + std::to_string(i);
    AlgebraRef a;
    switch (i % 6) {
      case 2: {
        const std::size_t n = pick(rng, 1, max_n);
        a = pick(rng, 0, 1) == 0 ? goedel_chain(n) : lukasiewicz_chain(n);
        break;
      }
      case 3: {
        const std::size_t p = pick(rng, 2, std::max<std::size_t>(2, max_n / 2));
        const std::size_t q = pick(rng, 2, std::max<std::size_t>(2, max_n / p));
        if (p * q > max_n) {
          a = searched(max_n, label);
          break;
        }
        RawAlgebra r = direct_product(small(p, label + "l"), small(q, label + "r"))->to_raw();
        r.name = label + "-product";
        a = relabel(r);
        break;
      }
      case 4: {
        const std::size_t p = pick(rng, 2, max_n - 1);
        const std::size_t q = pick(rng, 2, max_n + 1 - p);
        RawAlgebra r = ordinal_sum(small(p, label + "l"), small(q, label + "r"))->to_raw();
        r.name = label + "-sum";
        a = relabel(r);
        break;
      }
      default:
        a = searched(pick(rng, 2, max_n), label + "-search");
        break;
    }
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace psbck
