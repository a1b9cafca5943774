#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "weblog/log_record.hpp"
#include "weblog/ratio.hpp"

namespace weblog {

enum class Attribute { Ip, Url, Path };

std::string_view to_string(Attribute attribute);

struct Item {
  Attribute attribute = Attribute::Url;
  std::string value;

  friend bool operator==(const Item&, const Item&) = default;
  friend auto operator<=>(const Item&, const Item&) = default;
};

using ItemId = std::uint32_t;
// Strictly ascending item ids.
using Itemset = std::vector<ItemId>;

// Dense ids in (attribute, value) order, so sorting ids sorts items canonically.
class ItemDictionary {
 public:
  ItemDictionary() = default;
  explicit ItemDictionary(std::vector<Item> items);

  const Item& item(ItemId id) const { return items_.at(id); }
  ItemId id(const Item& item) const;  // throws std::out_of_range for unknown items
  std::size_t size() const { return items_.size(); }
  std::span<const Item> items() const { return items_; }

 private:
  std::vector<Item> items_;
  std::map<Item, ItemId> ids_;
};

struct Transaction {
  std::size_t id = 0;
  Itemset items;

  friend bool operator==(const Transaction&, const Transaction&) = default;
};

struct TransactionDb {
  std::vector<Transaction> transactions;
  ItemDictionary dictionary;
};

enum class TransactionScheme { PerIp };

// PerIp: one basket per ip holding the urls it requested successfully.
// Ips without a successful request contribute no transaction.
TransactionDb build_transactions(std::span<const LogRecord> records, TransactionScheme scheme = TransactionScheme::PerIp);

struct ItemsetSupport {
  Itemset itemset;
  std::size_t support = 0;

  friend bool operator==(const ItemsetSupport&, const ItemsetSupport&) = default;
};

// levels[k-1] holds the frequent k-itemsets, lexicographically sorted.
struct FrequentItemsets {
  std::vector<std::vector<ItemsetSupport>> levels;

  std::size_t count() const;
  // Flattened in level order.
  std::vector<ItemsetSupport> all() const;
};

// True iff some (k-1)-subset of `candidate` is missing from the sorted `frequent_prev`.
// Candidates of size <= 1 only have the empty subset, which is always frequent.
bool has_infrequent_subset(const Itemset& candidate, std::span<const Itemset> frequent_prev);

// Join of (k-1)-itemsets sharing their first k-2 items, then prune. Input
// must be sorted and uniform in length; mixed lengths raise DomainError.
std::vector<Itemset> apriori_gen(std::span<const Itemset> frequent_prev);

// Level-wise classic Apriori. min_support is an absolute transaction count >= 1.
FrequentItemsets apriori(std::span<const Transaction> transactions, std::size_t min_support);

struct AssociationRule {
  Itemset antecedent;
  Itemset consequent;
  std::size_t support = 0;             // support(antecedent ∪ consequent)
  std::size_t antecedent_support = 0;

  Ratio confidence() const { return Ratio(support, antecedent_support); }
  friend bool operator==(const AssociationRule&, const AssociationRule&) = default;
};

// Single-item-consequent rules (L \ {I}) => {I} for every frequent L with
// |L| >= 2, kept when confidence >= min_confidence, sorted by
// (antecedent, consequent). InternalError if a subset support is missing.
std::vector<AssociationRule> generate_rules(const FrequentItemsets& frequent, Ratio min_confidence);

// Convenience for fractional thresholds; the double is converted to an
// exact ratio over 10^9.
std::vector<AssociationRule> generate_rules(const FrequentItemsets& frequent, double min_confidence);

}  // namespace weblog
