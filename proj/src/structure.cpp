#include "fuskit/structure.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fuskit/error.hpp"

namespace fuskit {

bool Subring::contains(int i) const { return std::binary_search(basis.begin(), basis.end(), i); }

InvertibleGroup invertibles(const FusionRing& ring) {
  const int r = static_cast<int>(ring.rank());
  InvertibleGroup out{GroupTable({"1"}, {{0}}, 0), {}, std::vector<int>(static_cast<std::size_t>(r), -1)};
  for (int i = 0; i < r; ++i)
    if (is_invertible(ring, i)) {
      out.group_index[static_cast<std::size_t>(i)] = static_cast<int>(out.basis_index.size());
      out.basis_index.push_back(i);
    }
  const std::size_t n = out.basis_index.size();
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(ring.label(out.basis_index[a]));
    for (std::size_t b = 0; b < n; ++b) {
      const auto& p = ring.product(out.basis_index[a], out.basis_index[b]);
      if (p.size() != 1 || p[0].mult != 1 || out.group_index[static_cast<std::size_t>(p[0].index)] < 0)
        throw Error(Errc::InvalidArgument, "product of invertibles is not invertible; validate the ring first");
      table[a][b] = out.group_index[static_cast<std::size_t>(p[0].index)];
    }
  }
  out.group = GroupTable(std::move(labels), std::move(table), out.group_index[static_cast<std::size_t>(ring.unit())]);
  return out;
}

int act(const FusionRing& ring, int g, int i) {
  const auto& p = ring.product(g, i);
  if (p.size() != 1 || p[0].mult != 1)
    throw Error(Errc::InvalidArgument, ring.label(g) + " does not act by a simple object");
  return p[0].index;
}

ActionData action(const FusionRing& ring) {
  const int r = static_cast<int>(ring.rank());
  ActionData data{invertibles(ring), {}, std::vector<int>(static_cast<std::size_t>(r), -1), {}};
  const auto& inv = data.invertibles;
  for (int i = 0; i < r; ++i) {
    std::vector<int> stab;
    for (std::size_t g = 0; g < inv.basis_index.size(); ++g)
      if (act(ring, inv.basis_index[g], i) == i) stab.push_back(static_cast<int>(g));
    data.stabilizers.push_back(Subgroup{std::move(stab)});
    if (data.orbit_of[static_cast<std::size_t>(i)] != -1) continue;
    std::set<int> orbit;
    for (int g : inv.basis_index) orbit.insert(act(ring, g, i));
    const int id = static_cast<int>(data.orbits.size());
    for (int k : orbit) data.orbit_of[static_cast<std::size_t>(k)] = id;
    data.orbits.emplace_back(orbit.begin(), orbit.end());
  }
  return data;
}

bool is_subring(const FusionRing& ring, const std::vector<int>& members) {
  std::vector<bool> in(ring.rank(), false);
  for (int i : members) in.at(static_cast<std::size_t>(i)) = true;
  if (!in[static_cast<std::size_t>(ring.unit())]) return false;
  for (int i : members) {
    if (!in[static_cast<std::size_t>(ring.dual(i))]) return false;
    for (int j : members)
      for (const auto& t : ring.product(i, j))
        if (!in[static_cast<std::size_t>(t.index)]) return false;
  }
  return true;
}

Subring subring_closure(const FusionRing& ring, const std::vector<int>& seed) {
  std::vector<bool> in(ring.rank(), false);
  std::vector<int> members;
  const auto insert = [&](int i) {
    if (!in.at(static_cast<std::size_t>(i))) {
      in[static_cast<std::size_t>(i)] = true;
      members.push_back(i);
    }
  };
  insert(ring.unit());
  for (int i : seed) insert(i);
  // Every pair is multiplied once both are present, so the fixed point is
  // reached when the worklist is exhausted.
  for (std::size_t head = 0; head < members.size(); ++head) {
    const int x = members[head];
    insert(ring.dual(x));
    for (std::size_t other = 0; other <= head; ++other) {
      const int y = members[other];
      for (const auto& t : ring.product(x, y)) insert(t.index);
      for (const auto& t : ring.product(y, x)) insert(t.index);
    }
  }
  std::sort(members.begin(), members.end());
  return Subring{std::move(members)};
}

Subring pointed_subring(const FusionRing& ring) {
  std::vector<int> seed;
  for (int i = 0; i < static_cast<int>(ring.rank()); ++i)
    if (is_invertible(ring, i)) seed.push_back(i);
  return subring_closure(ring, seed);
}

Subring adjoint_subring(const FusionRing& ring) {
  std::vector<int> seed;
  for (int i = 0; i < static_cast<int>(ring.rank()); ++i)
    for (int k : self_decomp(ring, i).support()) seed.push_back(k);
  return subring_closure(ring, seed);
}

Subring whole_ring(const FusionRing& ring) {
  Subring s;
  s.basis.resize(ring.rank());
  std::iota(s.basis.begin(), s.basis.end(), 0);
  return s;
}

std::vector<int> commutator_set(const FusionRing& ring, const Subring& b) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(ring.rank()); ++i) {
    const auto support = self_decomp(ring, i).support();
    if (std::all_of(support.begin(), support.end(), [&](int k) { return b.contains(k); })) out.push_back(i);
  }
  return out;
}

Subring commutator_subring(const FusionRing& ring, const Subring& b) {
  return subring_closure(ring, commutator_set(ring, b));
}

FusionRing extract_subring(const FusionRing& ring, const Subring& s, std::string name) {
  if (!is_subring(ring, s.basis)) throw Error(Errc::NotClosed, "basis subset is not a subring");
  std::vector<int> local(ring.rank(), -1);
  std::vector<std::string> labels;
  for (std::size_t n = 0; n < s.basis.size(); ++n) {
    local[static_cast<std::size_t>(s.basis[n])] = static_cast<int>(n);
    labels.push_back(ring.label(s.basis[n]));
  }
  std::vector<int> duals;
  std::vector<StructureConstant> constants;
  for (int i : s.basis) {
    duals.push_back(local[static_cast<std::size_t>(ring.dual(i))]);
    for (int j : s.basis)
      for (const auto& t : ring.product(i, j))
        constants.push_back({local[static_cast<std::size_t>(i)], local[static_cast<std::size_t>(j)],
                             local[static_cast<std::size_t>(t.index)], t.mult});
  }
  return FusionRing(std::move(name), std::move(labels), local[static_cast<std::size_t>(ring.unit())],
                    std::move(duals), std::move(constants));
}

// ---------------------------------------------------------------------------

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

Error inconsistent(const std::string& why) { return Error(Errc::GradingInconsistency, "universal grading: " + why); }

}  // namespace

GradingData universal_grading(const FusionRing& ring) {
  const int r = static_cast<int>(ring.rank());
  const Subring ad = adjoint_subring(ring);

  // i ~ k whenever k is a summand of X_i A with A in the adjoint subring.
  DisjointSets sets(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i)
    for (int a : ad.basis)
      for (const auto& t : ring.product(i, a)) sets.unite(i, t.index);

  std::vector<int> component_of(static_cast<std::size_t>(r), -1);
  std::vector<std::vector<int>> components;
  for (int i = 0; i < r; ++i) {
    const int root = sets.find(i);
    if (component_of[static_cast<std::size_t>(root)] == -1) {
      component_of[static_cast<std::size_t>(root)] = static_cast<int>(components.size());
      components.emplace_back();
    }
    component_of[static_cast<std::size_t>(i)] = component_of[static_cast<std::size_t>(root)];
    components[static_cast<std::size_t>(component_of[static_cast<std::size_t>(i)])].push_back(i);
  }

  // Left multiplication by the adjoint subring must give the same classes.
  for (int i = 0; i < r; ++i)
    for (int a : ad.basis)
      for (const auto& t : ring.product(a, i))
        if (component_of[static_cast<std::size_t>(t.index)] != component_of[static_cast<std::size_t>(i)])
          throw inconsistent("left and right adjoint classes differ at " + ring.label(i));

  const std::size_t n = components.size();
  std::vector<std::vector<int>> table(n, std::vector<int>(n, -1));
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t d = 0; d < n; ++d)
      for (int i : components[c])
        for (int j : components[d])
          for (const auto& t : ring.product(i, j)) {
            int& slot = table[c][d];
            const int e = component_of[static_cast<std::size_t>(t.index)];
            if (slot == -1) slot = e;
            if (slot != e) throw inconsistent("component product is not well defined");
          }
  std::vector<std::string> labels;
  for (const auto& comp : components) labels.push_back(ring.label(comp.front()));
  const int trivial = component_of[static_cast<std::size_t>(ring.unit())];

  GradingData grading{GroupTable({"1"}, {{0}}, 0), std::move(components), std::move(component_of), trivial};
  try {
    grading.group = GroupTable(std::move(labels), std::move(table), trivial);
  } catch (const Error& e) {
    throw inconsistent(std::string("components do not form a group: ") + e.what());
  }
  if (grading.components[static_cast<std::size_t>(trivial)] != ad.basis)
    throw inconsistent("trivial component differs from the adjoint subring");
  return grading;
}

bool is_grading(const FusionRing& ring, const GradingData& grading) {
  const int r = static_cast<int>(ring.rank());
  if (grading.component_of.size() != ring.rank()) return false;
  if (grading.components.size() != grading.group.order()) return false;
  for (const auto& c : grading.components)
    if (c.empty()) return false;
  const auto comp = [&](int i) { return grading.component_of[static_cast<std::size_t>(i)]; };
  if (comp(ring.unit()) != grading.group.identity()) return false;
  for (int i = 0; i < r; ++i) {
    if (comp(ring.dual(i)) != grading.group.inverse(comp(i))) return false;
    for (int j = 0; j < r; ++j)
      for (const auto& t : ring.product(i, j))
        if (comp(t.index) != grading.group.mul(comp(i), comp(j))) return false;
  }
  return true;
}

std::vector<RealValue> graded_component_dims(const GradingData& grading, const FusionRing& ring) {
  std::vector<RealValue> out;
  for (const auto& c : grading.components) out.push_back(fpdim_of(ring, c));
  return out;
}

}  // namespace fuskit
