#include "weblog/mining.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

#include "weblog/classification.hpp"
#include "weblog/errors.hpp"

namespace weblog {

namespace {

struct ItemsetHash {
  std::size_t operator()(const Itemset& s) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto id : s) {
      h ^= id;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

// n choose k, saturating at `cap`.
std::size_t choose_capped(std::size_t n, std::size_t k, std::size_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  long double r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    if (r > static_cast<long double>(cap)) return cap;
  }
  return static_cast<std::size_t>(std::llround(r));
}

template <typename F>
void for_each_subset_of_size(const Itemset& items, std::size_t k, F&& f) {
  Itemset current;
  current.reserve(k);
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (current.size() == k) {
      f(current);
      return;
    }
    for (std::size_t i = start; i + (k - current.size()) <= items.size(); ++i) {
      current.push_back(items[i]);
      self(self, i + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
}

// Support of every candidate. Per transaction, either enumerate its
// k-subsets against a hash of candidates or test each candidate directly,
// whichever is cheaper.
std::vector<std::size_t> count_supports(std::span<const Transaction> transactions, const std::vector<Itemset>& candidates,
                                        std::size_t k) {
  std::vector<std::size_t> counts(candidates.size(), 0);
  std::unordered_map<Itemset, std::size_t, ItemsetHash> index;
  index.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) index.emplace(candidates[i], i);

  for (const auto& t : transactions) {
    if (t.items.size() < k) continue;
    if (choose_capped(t.items.size(), k, candidates.size()) < candidates.size()) {
      for_each_subset_of_size(t.items, k, [&](const Itemset& s) {
        if (auto it = index.find(s); it != index.end()) ++counts[it->second];
      });
    } else {
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (std::includes(t.items.begin(), t.items.end(), candidates[i].begin(), candidates[i].end())) ++counts[i];
      }
    }
  }
  return counts;
}

}  // namespace

std::string_view to_string(Attribute attribute) {
  switch (attribute) {
    case Attribute::Ip:
      return "ip";
    case Attribute::Url:
      return "url";
    case Attribute::Path:
      return "path";
  }
  return "url";
}

ItemDictionary::ItemDictionary(std::vector<Item> items) : items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (items_[i].value.empty()) throw DomainError("item with empty value");
    ids_.emplace(items_[i], static_cast<ItemId>(i));
  }
}

ItemId ItemDictionary::id(const Item& item) const { return ids_.at(item); }

TransactionDb build_transactions(std::span<const LogRecord> records, TransactionScheme scheme) {
  (void)scheme;  // PerIp is the only scheme
  std::map<std::string_view, std::set<std::string_view>> baskets;
  for (const auto& r : records) {
    if (classify_status(r.status) == Outcome::Successful) baskets[r.ip].insert(r.url);
  }

  std::vector<Item> items;
  for (const auto& [ip, urls] : baskets) {
    for (auto url : urls) items.push_back({Attribute::Url, std::string(url)});
  }
  TransactionDb db;
  db.dictionary = ItemDictionary(std::move(items));

  std::size_t next_id = 0;
  for (const auto& [ip, urls] : baskets) {
    Transaction t{next_id++, {}};
    t.items.reserve(urls.size());
    for (auto url : urls) t.items.push_back(db.dictionary.id({Attribute::Url, std::string(url)}));
    std::sort(t.items.begin(), t.items.end());
    db.transactions.push_back(std::move(t));
  }
  return db;
}

std::size_t FrequentItemsets::count() const {
  std::size_t n = 0;
  for (const auto& level : levels) n += level.size();
  return n;
}

std::vector<ItemsetSupport> FrequentItemsets::all() const {
  std::vector<ItemsetSupport> out;
  out.reserve(count());
  for (const auto& level : levels) out.insert(out.end(), level.begin(), level.end());
  return out;
}

bool has_infrequent_subset(const Itemset& candidate, std::span<const Itemset> frequent_prev) {
  if (candidate.size() <= 1) return false;
  Itemset subset(candidate.size() - 1);
  for (std::size_t skip = 0; skip < candidate.size(); ++skip) {
    std::copy(candidate.begin(), candidate.begin() + static_cast<std::ptrdiff_t>(skip), subset.begin());
    std::copy(candidate.begin() + static_cast<std::ptrdiff_t>(skip) + 1, candidate.end(),
              subset.begin() + static_cast<std::ptrdiff_t>(skip));
    if (!std::binary_search(frequent_prev.begin(), frequent_prev.end(), subset)) return true;
  }
  return false;
}

std::vector<Itemset> apriori_gen(std::span<const Itemset> frequent_prev) {
  std::vector<Itemset> candidates;
  if (frequent_prev.empty()) return candidates;
  const std::size_t len = frequent_prev.front().size();
  if (len == 0) throw DomainError("apriori_gen needs itemsets of length >= 1");
  for (const auto& s : frequent_prev) {
    if (s.size() != len) throw DomainError("apriori_gen input mixes itemset lengths");
  }

  // Sorted input: itemsets sharing a (k-2)-prefix form contiguous runs.
  for (std::size_t i = 0; i < frequent_prev.size(); ++i) {
    const auto& a = frequent_prev[i];
    for (std::size_t j = i + 1; j < frequent_prev.size(); ++j) {
      const auto& b = frequent_prev[j];
      if (!std::equal(a.begin(), a.end() - 1, b.begin())) break;
      if (a.back() >= b.back()) continue;
      Itemset c = a;
      c.push_back(b.back());  // join
      if (!has_infrequent_subset(c, frequent_prev)) candidates.push_back(std::move(c));  // prune
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  return candidates;
}

FrequentItemsets apriori(std::span<const Transaction> transactions, std::size_t min_support) {
  if (min_support == 0) throw DomainError("min_support must be at least 1");
  FrequentItemsets out;

  std::map<ItemId, std::size_t> item_counts;
  for (const auto& t : transactions) {
    for (auto id : t.items) ++item_counts[id];
  }
  std::vector<ItemsetSupport> level;
  for (const auto& [id, n] : item_counts) {
    if (n >= min_support) level.push_back({{id}, n});
  }

  std::size_t k = 1;
  while (!level.empty()) {
    out.levels.push_back(level);
    ++k;
    std::vector<Itemset> prev;
    prev.reserve(level.size());
    for (const auto& s : level) prev.push_back(s.itemset);
    auto candidates = apriori_gen(prev);
    auto counts = count_supports(transactions, candidates, k);
    level.clear();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (counts[i] >= min_support) level.push_back({std::move(candidates[i]), counts[i]});
    }
  }
  return out;
}

std::vector<AssociationRule> generate_rules(const FrequentItemsets& frequent, Ratio min_confidence) {
  if (min_confidence.numerator() == 0 || min_confidence > Ratio(1, 1))
    throw DomainError("min_confidence must lie in (0, 1]");

  std::unordered_map<Itemset, std::size_t, ItemsetHash> support;
  for (const auto& level : frequent.levels) {
    for (const auto& s : level) support.emplace(s.itemset, s.support);
  }

  std::vector<AssociationRule> rules;
  for (std::size_t k = 2; k <= frequent.levels.size(); ++k) {
    for (const auto& s : frequent.levels[k - 1]) {
      for (std::size_t drop = 0; drop < s.itemset.size(); ++drop) {
        Itemset antecedent;
        antecedent.reserve(k - 1);
        for (std::size_t i = 0; i < s.itemset.size(); ++i) {
          if (i != drop) antecedent.push_back(s.itemset[i]);
        }
        auto it = support.find(antecedent);
        if (it == support.end()) throw InternalError("frequent itemset is missing the support of one of its subsets");
        AssociationRule rule{std::move(antecedent), {s.itemset[drop]}, s.support, it->second};
        if (rule.confidence() >= min_confidence) rules.push_back(std::move(rule));
      }
    }
  }
  std::sort(rules.begin(), rules.end(), [](const AssociationRule& a, const AssociationRule& b) {
    return std::tie(a.antecedent, a.consequent) < std::tie(b.antecedent, b.consequent);
  });
  return rules;
}

std::vector<AssociationRule> generate_rules(const FrequentItemsets& frequent, double min_confidence) {
  if (!(min_confidence > 0.0 && min_confidence <= 1.0)) throw DomainError("min_confidence must lie in (0, 1]");
  constexpr std::uint64_t scale = 1'000'000'000;
  auto num = static_cast<std::uint64_t>(std::llround(min_confidence * static_cast<double>(scale)));
  return generate_rules(frequent, Ratio(std::max<std::uint64_t>(num, 1), scale));
}

}  // namespace weblog
