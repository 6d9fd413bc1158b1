#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fuskit {

// A finite group given by its full multiplication table. Elements are
// addressed by index; labels are for I/O only.
class GroupTable {
 public:
  // Throws InvalidArgument unless the table is a Latin square with a
  // two-sided identity and an associative product.
  GroupTable(std::vector<std::string> labels, std::vector<std::vector<int>> table, int identity);

  std::size_t order() const noexcept { return labels_.size(); }
  int identity() const noexcept { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int element_order(int a) const;
  bool is_abelian() const;

  const std::string& label(int a) const { return labels_[static_cast<std::size_t>(a)]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<std::vector<int>>& table() const noexcept { return table_; }
  // Throws UnknownElement.
  int index_of(std::string_view label) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

// Sorted element indices of a subgroup of some GroupTable.
struct Subgroup {
  std::vector<int> members;

  std::size_t size() const noexcept { return members.size(); }
  bool contains(int g) const;
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

GroupTable cyclic(int n);
GroupTable direct_product(const GroupTable& a, const GroupTable& b);
// Throws SizeLimit for n > 5.
GroupTable symmetric(int n);

// Smallest subgroup containing gens. Throws UnknownElement on a bad index.
Subgroup subgroup_generated(const GroupTable& g, std::span<const int> gens);
Subgroup trivial_subgroup(const GroupTable& g);
Subgroup whole_group(const GroupTable& g);
bool is_subgroup(const GroupTable& g, std::span<const int> members);

bool is_normal(const GroupTable& g, const Subgroup& h);

struct Quotient {
  GroupTable group;
  std::vector<int> coset_of;  // element index -> coset index
};
// Cosets are labelled "[r]" by their least-index representative r.
// Throws NotNormal.
Quotient quotient(const GroupTable& g, const Subgroup& h);

// Every subgroup, ordered by (size, members).
std::vector<Subgroup> all_subgroups(const GroupTable& g);

bool is_cyclic(const GroupTable& g);

// Bijection a -> b preserving the product, if any. Throws SizeLimit above 64.
std::optional<std::vector<int>> find_isomorphism(const GroupTable& a, const GroupTable& b);
bool is_isomorphic(const GroupTable& a, const GroupTable& b);

}  // namespace fuskit
