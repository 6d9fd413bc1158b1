#include "fuskit/group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "fuskit/error.hpp"

namespace fuskit {

namespace {

constexpr std::size_t kIsomorphismLimit = 64;

std::vector<int> element_orders(const GroupTable& g) {
  std::vector<int> out(g.order());
  for (std::size_t a = 0; a < g.order(); ++a) out[a] = g.element_order(static_cast<int>(a));
  return out;
}

}  // namespace

GroupTable::GroupTable(std::vector<std::string> labels, std::vector<std::vector<int>> table, int identity)
    : labels_(std::move(labels)), table_(std::move(table)), identity_(identity) {
  const std::size_t n = labels_.size();
  const auto fail = [](const std::string& why) { throw Error(Errc::InvalidArgument, "group table: " + why); };
  if (n == 0) fail("empty");
  if (identity_ < 0 || static_cast<std::size_t>(identity_) >= n) fail("identity out of range");
  if (table_.size() != n) fail("table has wrong number of rows");
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != n) fail("duplicate labels");
  for (const auto& row : table_) {
    if (row.size() != n) fail("ragged table");
    std::vector<bool> hit(n, false);
    for (int v : row) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) fail("entry out of range");
      if (hit[static_cast<std::size_t>(v)]) fail("not a Latin square");
      hit[static_cast<std::size_t>(v)] = true;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<bool> hit(n, false);
    for (std::size_t r = 0; r < n; ++r) {
      const auto v = static_cast<std::size_t>(table_[r][c]);
      if (hit[v]) fail("not a Latin square");
      hit[v] = true;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (mul(identity_, static_cast<int>(a)) != static_cast<int>(a) ||
        mul(static_cast<int>(a), identity_) != static_cast<int>(a))
      fail("identity law fails at " + labels_[a]);
  }
  for (int a = 0; a < static_cast<int>(n); ++a)
    for (int b = 0; b < static_cast<int>(n); ++b)
      for (int c = 0; c < static_cast<int>(n); ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("not associative");
  inverse_.assign(n, -1);
  for (int a = 0; a < static_cast<int>(n); ++a)
    for (int b = 0; b < static_cast<int>(n); ++b)
      if (mul(a, b) == identity_) inverse_[static_cast<std::size_t>(a)] = b;
}

int GroupTable::element_order(int a) const {
  int k = 1;
  for (int x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

bool GroupTable::is_abelian() const {
  for (int a = 0; a < static_cast<int>(order()); ++a)
    for (int b = a + 1; b < static_cast<int>(order()); ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int GroupTable::index_of(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error(Errc::UnknownElement, "no group element '" + std::string(label) + "'");
  return static_cast<int>(it - labels_.begin());
}

bool Subgroup::contains(int g) const { return std::binary_search(members.begin(), members.end(), g); }

// ---------------------------------------------------------------------------

GroupTable cyclic(int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "cyclic group order must be >= 1");
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  }
  return GroupTable(std::move(labels), std::move(table), 0);
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
  const int na = static_cast<int>(a.order());
  const int nb = static_cast<int>(b.order());
  std::vector<std::string> labels;
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) labels.push_back("(" + a.label(x) + "," + b.label(y) + ")");
  std::vector<std::vector<int>> table(labels.size(), std::vector<int>(labels.size()));
  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < nb; ++y1)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2)
          table[static_cast<std::size_t>(x1 * nb + y1)][static_cast<std::size_t>(x2 * nb + y2)] =
              a.mul(x1, x2) * nb + b.mul(y1, y2);
  return GroupTable(std::move(labels), std::move(table), a.identity() * nb + b.identity());
}

GroupTable symmetric(int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "symmetric group degree must be >= 1");
  if (n > 5) throw Error(Errc::SizeLimit, "symmetric(n) supports n <= 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, int> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    index[perms[i]] = static_cast<int>(i);
    std::string s;
    for (int v : perms[i]) s += static_cast<char>('0' + v);
    labels.push_back(s);
  }
  // (p*q)(x) = p(q(x))
  std::vector<std::vector<int>> table(perms.size(), std::vector<int>(perms.size()));
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::size_t j = 0; j < perms.size(); ++j) {
      std::vector<int> r(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x) r[static_cast<std::size_t>(x)] = perms[i][static_cast<std::size_t>(perms[j][static_cast<std::size_t>(x)])];
      table[i][j] = index.at(r);
    }
  return GroupTable(std::move(labels), std::move(table), 0);
}

Subgroup subgroup_generated(const GroupTable& g, std::span<const int> gens) {
  const int n = static_cast<int>(g.order());
  for (int x : gens)
    if (x < 0 || x >= n) throw Error(Errc::UnknownElement, "generator index out of range");
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  std::vector<int> queue{g.identity()};
  in[static_cast<std::size_t>(g.identity())] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int s : gens) {
      const int y = g.mul(queue[head], s);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = true;
        queue.push_back(y);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return Subgroup{std::move(queue)};
}

Subgroup trivial_subgroup(const GroupTable& g) { return Subgroup{{g.identity()}}; }

Subgroup whole_group(const GroupTable& g) {
  Subgroup s;
  s.members.resize(g.order());
  std::iota(s.members.begin(), s.members.end(), 0);
  return s;
}

bool is_subgroup(const GroupTable& g, std::span<const int> members) {
  std::vector<bool> in(g.order(), false);
  for (int x : members) {
    if (x < 0 || static_cast<std::size_t>(x) >= g.order()) return false;
    in[static_cast<std::size_t>(x)] = true;
  }
  if (!in[static_cast<std::size_t>(g.identity())]) return false;
  for (int a : members) {
    if (!in[static_cast<std::size_t>(g.inverse(a))]) return false;
    for (int b : members)
      if (!in[static_cast<std::size_t>(g.mul(a, b))]) return false;
  }
  return true;
}

bool is_normal(const GroupTable& g, const Subgroup& h) {
  for (int x = 0; x < static_cast<int>(g.order()); ++x)
    for (int m : h.members)
      if (!h.contains(g.mul(g.mul(x, m), g.inverse(x)))) return false;
  return true;
}

Quotient quotient(const GroupTable& g, const Subgroup& h) {
  if (!is_normal(g, h)) throw Error(Errc::NotNormal, "quotient by a non-normal subgroup");
  const std::size_t n = g.order();
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < static_cast<int>(n); ++x) {
    if (coset_of[static_cast<std::size_t>(x)] != -1) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int m : h.members) coset_of[static_cast<std::size_t>(g.mul(x, m))] = id;
  }
  std::vector<std::string> labels;
  for (int r : reps) labels.push_back("[" + g.label(r) + "]");
  std::vector<std::vector<int>> table(reps.size(), std::vector<int>(reps.size()));
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j)
      table[i][j] = coset_of[static_cast<std::size_t>(g.mul(reps[i], reps[j]))];
  const int id = coset_of[static_cast<std::size_t>(g.identity())];
  return Quotient{GroupTable(std::move(labels), std::move(table), id), std::move(coset_of)};
}

std::vector<Subgroup> all_subgroups(const GroupTable& g) {
  std::set<std::vector<int>> seen;
  std::vector<Subgroup> found{trivial_subgroup(g)};
  seen.insert(found.front().members);
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (int x = 0; x < static_cast<int>(g.order()); ++x) {
      if (found[head].contains(x)) continue;
      std::vector<int> gens = found[head].members;
      gens.push_back(x);
      Subgroup s = subgroup_generated(g, gens);
      if (seen.insert(s.members).second) found.push_back(std::move(s));
    }
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.members < b.members;
  });
  return found;
}

bool is_cyclic(const GroupTable& g) {
  for (int x = 0; x < static_cast<int>(g.order()); ++x)
    if (static_cast<std::size_t>(g.element_order(x)) == g.order()) return true;
  return false;
}

std::optional<std::vector<int>> find_isomorphism(const GroupTable& a, const GroupTable& b) {
  if (a.order() > kIsomorphismLimit || b.order() > kIsomorphismLimit)
    throw Error(Errc::SizeLimit, "isomorphism search supports order <= 64");
  if (a.order() != b.order()) return std::nullopt;
  const std::size_t n = a.order();
  const auto orders_a = element_orders(a);
  const auto orders_b = element_orders(b);
  {
    auto sa = orders_a, sb = orders_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  // Greedy generating set, largest element orders first.
  std::vector<int> by_order(n);
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](int x, int y) { return orders_a[static_cast<std::size_t>(x)] > orders_a[static_cast<std::size_t>(y)]; });
  std::vector<int> gens;
  Subgroup span = trivial_subgroup(a);
  for (int x : by_order) {
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = subgroup_generated(a, gens);
  }

  std::vector<int> phi(n, -1), used(n, 0);
  phi[static_cast<std::size_t>(a.identity())] = b.identity();

  // Extends phi over <gens[0..k]> along Cayley-graph edges; false on an
  // inconsistency or collision. `touched` records what to undo.
  const auto extend = [&](std::size_t k, std::vector<int>& touched) {
    std::vector<int> queue;
    for (std::size_t x = 0; x < n; ++x)
      if (phi[x] != -1) queue.push_back(static_cast<int>(x));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int x = queue[head];
      for (std::size_t s = 0; s <= k; ++s) {
        const int xs = a.mul(x, gens[s]);
        const int image = b.mul(phi[static_cast<std::size_t>(x)], phi[static_cast<std::size_t>(gens[s])]);
        int& slot = phi[static_cast<std::size_t>(xs)];
        if (slot == -1) {
          if (used[static_cast<std::size_t>(image)]) return false;
          slot = image;
          used[static_cast<std::size_t>(image)] = 1;
          touched.push_back(xs);
          queue.push_back(xs);
        } else if (slot != image) {
          return false;
        }
      }
    }
    return true;
  };

  used[static_cast<std::size_t>(b.identity())] = 1;
  std::function<bool(std::size_t)> search = [&](std::size_t k) -> bool {
    if (k == gens.size()) return true;
    const int gen = gens[k];
    if (phi[static_cast<std::size_t>(gen)] != -1) return search(k + 1);
    for (int cand = 0; cand < static_cast<int>(n); ++cand) {
      if (used[static_cast<std::size_t>(cand)] ||
          orders_b[static_cast<std::size_t>(cand)] != orders_a[static_cast<std::size_t>(gen)])
        continue;
      std::vector<int> touched{gen};
      phi[static_cast<std::size_t>(gen)] = cand;
      used[static_cast<std::size_t>(cand)] = 1;
      if (extend(k, touched) && search(k + 1)) return true;
      for (int t : touched) {
        used[static_cast<std::size_t>(phi[static_cast<std::size_t>(t)])] = 0;
        phi[static_cast<std::size_t>(t)] = -1;
      }
    }
    return false;
  };
  if (!search(0)) return std::nullopt;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (phi[static_cast<std::size_t>(a.mul(static_cast<int>(x), static_cast<int>(y)))] !=
          b.mul(phi[x], phi[y]))
        return std::nullopt;
  return phi;
}

bool is_isomorphic(const GroupTable& a, const GroupTable& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace fuskit
