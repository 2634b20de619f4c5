#include "taut/diagonals.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "taut/beta.hpp"
#include "taut/combinatorics.hpp"

namespace taut {

long DiagonalTermClass::degree() const {
  return std::accumulate(multiplicities.begin(), multiplicities.end(), 0L) + base_mult;
}

Rational SymmetricClassSum::coefficient(const DiagonalTermClass& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymmetricClassSum::add_term(const DiagonalTermClass& t, const Rational& c) {
  if (t.base_mult < 0)
    throw std::invalid_argument("DiagonalTermClass: negative base multiplicity");
  if (!std::is_sorted(t.multiplicities.begin(), t.multiplicities.end()) ||
      (!t.multiplicities.empty() && t.multiplicities.front() < 1))
    throw std::invalid_argument("DiagonalTermClass: multiplicities must be sorted and positive");
  if (t.degree() != n_)
    throw std::invalid_argument("SymmetricClassSum: term degree " + std::to_string(t.degree()) +
                                " != " + std::to_string(n_));
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

SymmetricClassSum& SymmetricClassSum::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, v] : terms_)
    v *= c;
  return *this;
}

DecoratedPartitionClass::DecoratedPartitionClass(int n, std::vector<PartitionBlock> blocks)
    : n_(n) {
  if (n < 0)
    throw std::invalid_argument("DecoratedPartitionClass: negative n");
  std::vector<int> seen(n + 1, 0);
  std::map<int, std::size_t> pinned_slot;
  for (auto& b : blocks) {
    if (b.elements.empty())
      throw std::invalid_argument("DecoratedPartitionClass: empty block");
    for (int e : b.elements) {
      if (e < 1 || e > n)
        throw std::invalid_argument("DecoratedPartitionClass: element out of range");
      if (seen[e]++)
        throw std::invalid_argument("DecoratedPartitionClass: element in two blocks");
    }
    if (b.label) {
      if (*b.label < 1)
        throw std::invalid_argument("DecoratedPartitionClass: labels start at 1");
      auto it = pinned_slot.find(*b.label);
      if (it != pinned_slot.end()) {
        auto& target = blocks_[it->second].elements;
        target.insert(target.end(), b.elements.begin(), b.elements.end());
        continue;
      }
      pinned_slot.emplace(*b.label, blocks_.size());
    }
    blocks_.push_back(std::move(b));
  }
  for (int e = 1; e <= n; ++e)
    if (!seen[e])
      throw std::invalid_argument("DecoratedPartitionClass: blocks do not cover {1..n}");
  for (auto& b : blocks_)
    std::sort(b.elements.begin(), b.elements.end());
  std::sort(blocks_.begin(), blocks_.end(),
            [](const PartitionBlock& x, const PartitionBlock& y) {
              return x.elements.front() < y.elements.front();
            });
}

Rational PartitionClassSum::coefficient(const DecoratedPartitionClass& c) const {
  auto it = terms_.find(c);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PartitionClassSum::add_term(const DecoratedPartitionClass& c, const Rational& coeff) {
  if (c.n() != n_)
    throw std::invalid_argument("PartitionClassSum: class on the wrong number of factors");
  for (const auto& b : c.blocks())
    if (b.label && *b.label > d_)
      throw std::invalid_argument("PartitionClassSum: label outside [1, d]");
  if (coeff.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(c, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

PartitionClassSum& PartitionClassSum::operator+=(const PartitionClassSum& o) {
  if (o.n_ != n_ || o.d_ != d_)
    throw std::invalid_argument("PartitionClassSum: shape mismatch");
  for (const auto& [c, v] : o.terms_)
    add_term(c, v);
  return *this;
}

namespace {

// Restricted growth strings over `items`: calls visit(blocks) for every
// partition of items into exactly k nonempty blocks.
void for_each_set_partition(const std::vector<int>& items, int k,
                            const std::function<void(const OrderedPartition&)>& visit) {
  const int n = static_cast<int>(items.size());
  if (k < 0 || k > n || (k == 0 && n > 0))
    return;
  OrderedPartition blocks;
  std::function<void(int)> place = [&](int pos) {
    int used = static_cast<int>(blocks.size());
    if (n - pos < k - used)
      return;
    if (pos == n) {
      if (used == k)
        visit(blocks);
      return;
    }
    for (int b = 0; b < used; ++b) {
      blocks[b].push_back(items[pos]);
      place(pos + 1);
      blocks[b].pop_back();
    }
    if (used < k) {
      blocks.push_back({items[pos]});
      place(pos + 1);
      blocks.pop_back();
    }
  };
  place(0);
}

void check_system(long d, long r, long n, const char* who) {
  if (!(1 <= r && r <= n && n <= d))
    throw std::invalid_argument(std::string(who) + ": need 1 <= r <= n <= d");
}

} // namespace

std::vector<OrderedPartition> set_partitions(int n, int k) {
  std::vector<int> items(n);
  std::iota(items.begin(), items.end(), 1);
  std::vector<OrderedPartition> out;
  for_each_set_partition(items, k, [&](const OrderedPartition& p) { out.push_back(p); });
  return out;
}

SymmetricClassSum truncated_system_class(long d, long r, long n) {
  check_system(d, r, n, "truncated_system_class");
  SymmetricClassSum out(n);
  std::vector<long> mult(r);
  std::function<void(long, long, long)> walk = [&](long pos, long lo, long sum) {
    if (pos == r) {
      Integer b = binomial(d, n - sum);
      if (b == 0)
        return;
      Rational c(b);
      for (long i : mult) {
        c /= Rational(i);
        if ((i - 1) % 2 != 0)
          c = -c;
      }
      out.add_term({mult, n - sum}, c);
      return;
    }
    // Later slots are at least i, so the remaining total is bounded.
    for (long i = lo; sum + i * (r - pos) <= n; ++i) {
      mult[pos] = i;
      walk(pos + 1, i, sum + i);
    }
  };
  walk(0, 1, 0);
  return out;
}

TautPolynomial jacobian_pushdown(const SymmetricClassSum& s, long g) {
  if (g < 2)
    throw std::invalid_argument("jacobian_pushdown: genus must be >= 2");
  std::map<long, TautPolynomial> curve_class;
  auto class_of = [&](long i) -> const TautPolynomial& {
    auto it = curve_class.find(i);
    if (it == curve_class.end())
      it = curve_class.emplace(i, multiplied_curve_class(g, i)).first;
    return it->second;
  };

  TautPolynomial out(g);
  for (const auto& [term, c] : s.terms()) {
    TautPolynomial acc = TautPolynomial::monomial(TautMonomial(g, {}));
    for (long i : term.multiplicities)
      acc = pontryagin_product(acc, class_of(i));
    out += acc * (c / Rational(gamma_multiplicity(term.multiplicities)));
  }
  return out;
}

PartitionClassSum sigma_pullback_class(int d, int r, int k) {
  check_system(d, r, k, "sigma_pullback_class");
  PartitionClassSum out(k, d);

  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> free_part, pinned_part;
    for (int e = 1; e <= k; ++e)
      (mask & (1u << (e - 1)) ? free_part : pinned_part).push_back(e);
    if (static_cast<int>(free_part.size()) < r || static_cast<int>(pinned_part.size()) > d)
      continue;

    for_each_set_partition(free_part, r, [&](const OrderedPartition& free_blocks) {
      Rational coeff = 1;
      for (const auto& b : free_blocks) {
        long sz = static_cast<long>(b.size());
        coeff *= Rational(factorial(sz - 1));
        if ((sz - 1) % 2 != 0)
          coeff = -coeff;
      }
      // Injective label assignments to the pinned positions.
      std::vector<int> labels(pinned_part.size());
      std::vector<bool> used(d + 1, false);
      std::function<void(std::size_t)> assign = [&](std::size_t pos) {
        if (pos == pinned_part.size()) {
          std::vector<PartitionBlock> blocks;
          for (const auto& b : free_blocks)
            blocks.push_back({b, std::nullopt});
          for (std::size_t j = 0; j < pinned_part.size(); ++j)
            blocks.push_back({{pinned_part[j]}, labels[j]});
          out.add_term(DecoratedPartitionClass(k, std::move(blocks)), coeff);
          return;
        }
        for (int l = 1; l <= d; ++l) {
          if (used[l])
            continue;
          used[l] = true;
          labels[pos] = l;
          assign(pos + 1);
          used[l] = false;
        }
      };
      assign(0);
    });
  }
  return out;
}

SymmetricClassSum sigma_pushforward(const PartitionClassSum& p) {
  SymmetricClassSum out(p.n());
  for (const auto& [c, coeff] : p.terms()) {
    DiagonalTermClass t;
    for (const auto& b : c.blocks()) {
      if (b.is_free())
        t.multiplicities.push_back(static_cast<long>(b.elements.size()));
      else
        t.base_mult += static_cast<long>(b.elements.size());
    }
    std::sort(t.multiplicities.begin(), t.multiplicities.end());
    out.add_term(t, coeff * Rational(gamma_multiplicity(t.multiplicities)));
  }
  return out;
}

DecoratedPartitionClass psi_pushforward(const OrderedPartition& partition,
                                        const DecoratedPartitionClass& c) {
  const int k = static_cast<int>(partition.size());
  if (k != c.n())
    throw std::invalid_argument("psi_pushforward: partition has " + std::to_string(k) +
                                " blocks, class lives on " + std::to_string(c.n()) + " factors");
  int n = 0;
  for (const auto& a : partition) {
    if (a.empty())
      throw std::invalid_argument("psi_pushforward: empty block in partition");
    n += static_cast<int>(a.size());
  }
  std::vector<PartitionBlock> blocks;
  blocks.reserve(c.blocks().size());
  for (const auto& b : c.blocks()) {
    PartitionBlock image{{}, b.label};
    for (int j : b.elements)
      image.elements.insert(image.elements.end(), partition[j - 1].begin(),
                            partition[j - 1].end());
    blocks.push_back(std::move(image));
  }
  // The constructor rejects partitions that overlap or miss elements.
  try {
    return DecoratedPartitionClass(n, std::move(blocks));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("psi_pushforward: malformed partition (") +
                                e.what() + ")");
  }
}

PartitionClassSum hyperplane_pullback_class(int d, int r, int n) {
  check_system(d, r, n, "hyperplane_pullback_class");
  PartitionClassSum out(n, d);
  const int pinned = n - r;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != pinned)
      continue;
    std::vector<int> positions;
    for (int e = 1; e <= n; ++e)
      if (mask & (1u << (e - 1)))
        positions.push_back(e);

    std::vector<int> labels(pinned, 1);
    while (true) {
      std::vector<PartitionBlock> blocks;
      std::size_t j = 0;
      for (int e = 1; e <= n; ++e) {
        if (j < positions.size() && positions[j] == e)
          blocks.push_back({{e}, labels[j++]});
        else
          blocks.push_back({{e}, std::nullopt});
      }
      out.add_term(DecoratedPartitionClass(n, std::move(blocks)), 1);

      // Odometer over {1..d}^pinned.
      int pos = pinned - 1;
      while (pos >= 0 && labels[pos] == d)
        labels[pos--] = 1;
      if (pos < 0)
        break;
      ++labels[pos];
    }
  }
  return out;
}

PartitionClassSum recursion_rhs(int d, int r, int n) {
  check_system(d, r, n, "recursion_rhs");
  PartitionClassSum out(n, d);
  for (int k = r; k <= n; ++k) {
    const PartitionClassSum pulled = sigma_pullback_class(d, r, k);
    const Rational weight = Rational(1) / Rational(factorial(k));
    for (OrderedPartition p : set_partitions(n, k)) {
      // Every ordering of the blocks gives a distinct ordered k-partition.
      std::sort(p.begin(), p.end());
      do {
        for (const auto& [c, coeff] : pulled.terms())
          out.add_term(psi_pushforward(p, c), coeff * weight);
      } while (std::next_permutation(p.begin(), p.end()));
    }
  }
  return out;
}

bool verify_recursion(int d, int r, int n, int max_n) {
  if (n > max_n)
    throw std::invalid_argument("verify_recursion: n = " + std::to_string(n) +
                                " exceeds the enumeration guard " + std::to_string(max_n));
  return hyperplane_pullback_class(d, r, n) == recursion_rhs(d, r, n);
}

nlohmann::json to_json(const SymmetricClassSum& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [t, c] : s.terms())
    terms.push_back({{"multiplicities", t.multiplicities},
                     {"base_mult", t.base_mult},
                     {"coeff", c.str()}});
  return {{"n", s.n()}, {"terms", std::move(terms)}};
}

nlohmann::json to_json(const PartitionClassSum& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [c, v] : p.terms()) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : c.blocks()) {
      nlohmann::json jb = {{"elements", b.elements}};
      jb["label"] = b.label ? nlohmann::json(*b.label) : nlohmann::json(nullptr);
      blocks.push_back(std::move(jb));
    }
    terms.push_back({{"blocks", std::move(blocks)}, {"coeff", v.str()}});
  }
  return {{"n", p.n()}, {"d", p.d()}, {"terms", std::move(terms)}};
}

} // namespace taut
