#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "oidom/graph6.hpp"
#include "oidom/sweep.hpp"

namespace oidom {

namespace {

template <class Entry>
void trim(std::vector<Entry>& entries) {
  std::sort(entries.begin(), entries.end());
  if (entries.size() > kStoredCaseCap) entries.resize(kStoredCaseCap);
}

template <class Entry>
void push_bounded(std::vector<Entry>& entries, Entry entry) {
  entries.push_back(std::move(entry));
  if (entries.size() >= 4 * kStoredCaseCap) trim(entries);
}

bool is_c4_or_2p2(const Graph& g) {
  return g.order() == 4 && ((is_regular(g, 2) && is_connected(g)) || is_regular(g, 1));
}

nlohmann::ordered_json values_json(const std::vector<std::pair<std::string, int>>& values) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [k, v] : values) j[k] = v;
  return j;
}

// One unit of work: masks [begin, end) of a labeled order, or a slice of a
// graph list.
struct WorkItem {
  int order = 0;
  std::uint64_t begin = 0;
  std::uint64_t end = 0;
  const std::vector<Graph>* list = nullptr;
};

constexpr std::uint64_t kChunk = 2048;

class Worker {
 public:
  explicit Worker(const SweepOptions& options) : options_(options) {
    for (TheoremId id : options.theorems) {
      tallies_.emplace_back();
      tallies_.back().id = id;
    }
  }

  void run(const WorkItem& item) {
    for (std::uint64_t i = item.begin; i < item.end; ++i) {
      visit(item.list ? (*item.list)[i] : labeled_graph(item.order, i));
    }
  }

  std::vector<TheoremTally>& tallies() { return tallies_; }
  std::optional<ProductCensus>& census() { return census_; }
  std::uint64_t graphs() const { return graphs_; }

 private:
  void visit(const Graph& g) {
    ++graphs_;
    GraphFacts facts(g);
    for (TheoremTally& t : tallies_) {
      const TheoremOutcome outcome = check_theorem(t.id, facts, options_.check);
      t.record(outcome.outcome == Outcome::Pass || outcome.outcome == Outcome::Skipped ? empty_ : facts.g6(),
               outcome);
    }
    if (g.order() == 4) {
      if (!census_) census_.emplace();
      census_->record(facts);
    }
  }

  const SweepOptions& options_;
  std::vector<TheoremTally> tallies_;
  std::optional<ProductCensus> census_;
  std::uint64_t graphs_ = 0;
  const std::string empty_;
};

}  // namespace

void TheoremTally::record(const std::string& g6, const TheoremOutcome& outcome) {
  ++checked;
  switch (outcome.outcome) {
    case Outcome::Skipped: ++skipped; break;
    case Outcome::Pass: break;
    case Outcome::Fail:
      ++violations_total;
      push_bounded(violations, ViolationEntry{g6, outcome.reason, outcome.values});
      break;
    case Outcome::EqualityCase:
      ++equality_total;
      if (outcome.recognized.value_or(false)) ++equality_recognized;
      push_bounded(equality_cases, EqualityEntry{g6, outcome.bound, outcome.values, outcome.recognized});
      break;
  }
}

void TheoremTally::merge(const TheoremTally& other) {
  checked += other.checked;
  skipped += other.skipped;
  violations_total += other.violations_total;
  equality_total += other.equality_total;
  equality_recognized += other.equality_recognized;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  equality_cases.insert(equality_cases.end(), other.equality_cases.begin(), other.equality_cases.end());
  finish();
}

void TheoremTally::finish() {
  trim(violations);
  trim(equality_cases);
}

void ProductCensus::record(GraphFacts& facts) {
  if (!facts.isolate_free() || !facts.complement_isolate_free()) return;
  ++pairs;
  const int product = facts.defined_value(ParamKind::Toid) * facts.defined_value(ParamKind::Toid, true);
  ++products[product];
  const bool named = is_c4_or_2p2(facts.graph());
  if (named) ++c4_or_2p2;
  if ((product == 12) != named) ++mismatches;
}

void ProductCensus::merge(const ProductCensus& other) {
  pairs += other.pairs;
  for (const auto& [p, c] : other.products) products[p] += c;
  c4_or_2p2 += other.c4_or_2p2;
  mismatches += other.mismatches;
}

bool ProductCensus::holds() const {
  if (pairs == 0 || mismatches != 0) return false;
  return std::all_of(products.begin(), products.end(), [](const auto& kv) { return kv.first == 4 || kv.first == 12; });
}

bool SweepReport::passed() const {
  return std::all_of(theorems.begin(), theorems.end(), [](const TheoremTally& t) { return t.violations_total == 0; });
}

const TheoremTally* SweepReport::find(TheoremId id) const {
  for (const TheoremTally& t : theorems) {
    if (t.id == id) return &t;
  }
  return nullptr;
}

nlohmann::ordered_json SweepReport::to_json() const {
  using nlohmann::ordered_json;
  ordered_json meta;
  meta["orders"] = orders;
  meta["mode"] = std::string(mode_key(mode));
  meta["graphs"] = graphs;
  if (wall_ms) meta["wall_ms"] = *wall_ms;

  ordered_json list = ordered_json::array();
  for (const TheoremTally& t : theorems) {
    ordered_json j;
    j["id"] = std::string(theorem_key(t.id));
    j["equality_kind"] = std::string(equality_kind_key(equality_kind(t.id)));
    j["checked"] = t.checked;
    j["skipped"] = t.skipped;
    j["applicable"] = t.checked - t.skipped;
    ordered_json violations = ordered_json::array();
    ordered_json details = ordered_json::array();
    for (const ViolationEntry& v : t.violations) {
      violations.push_back(v.g6);
      details.push_back({{"g6", v.g6}, {"reason", v.reason}, {"values", values_json(v.values)}});
    }
    j["violations"] = violations;
    j["violations_total"] = t.violations_total;
    j["violation_details"] = details;
    ordered_json cases = ordered_json::array();
    for (const EqualityEntry& e : t.equality_cases) {
      ordered_json c;
      c["g6"] = e.g6;
      c["bound"] = e.bound;
      c["values"] = values_json(e.values);
      c["recognized"] = e.recognized.value_or(false);
      cases.push_back(std::move(c));
    }
    j["equality_cases"] = cases;
    j["equality_total"] = t.equality_total;
    j["equality_recognized"] = t.equality_recognized;
    if (equality_kind(t.id) != EqualityKind::None && t.equality_total == 0) {
      j["note"] = "no equality cases found";
    }
    list.push_back(std::move(j));
  }

  ordered_json out;
  out["meta"] = meta;
  out["theorems"] = list;
  if (census) {
    ordered_json c;
    c["order"] = 4;
    c["pairs"] = census->pairs;
    ordered_json products = ordered_json::object();
    for (const auto& [p, count] : census->products) products[std::to_string(p)] = count;
    c["products"] = products;
    c["c4_or_2p2"] = census->c4_or_2p2;
    c["mismatches"] = census->mismatches;
    c["holds"] = census->holds();
    out["toid_product_census"] = c;
  }
  return out;
}

std::string report_json_text(const SweepReport& report) { return report.to_json().dump(2) + "\n"; }

SweepReport sweep(const SweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (options.jobs < 1) throw EnumerationError("jobs must be at least 1");

  // Graph lists must outlive the workers.
  std::vector<std::vector<Graph>> lists;
  std::vector<WorkItem> items;
  std::vector<int> orders;
  if (options.mode == EnumerationMode::File) {
    std::vector<Graph> all = read_graph6_file(options.source);
    std::vector<Graph> kept;
    for (const Graph& g : all) {
      if (g.order() >= options.n_min && g.order() <= options.n_max) kept.push_back(g);
    }
    for (const Graph& g : kept) orders.push_back(g.order());
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
    lists.push_back(std::move(kept));
  } else {
    if (options.n_min > options.n_max) throw EnumerationError("empty order range");
    const int ceiling = enumeration_ceiling(options.allow_large);
    if (options.n_min < 0 || options.n_max > ceiling) {
      throw EnumerationError("orders must lie in 0.." + std::to_string(ceiling) +
                             (ceiling < kLargeEnumerationCeiling ? " (order 8 needs the large-order override)" : ""));
    }
    for (int n = options.n_min; n <= options.n_max; ++n) {
      orders.push_back(n);
      if (options.mode == EnumerationMode::Canonical) lists.push_back(canonical_graphs(n, options.allow_large));
    }
  }
  if (options.mode == EnumerationMode::Labeled) {
    for (int n : orders) {
      const std::uint64_t total = labeled_count(n);
      for (std::uint64_t b = 0; b < total; b += kChunk) items.push_back({n, b, std::min(total, b + kChunk), nullptr});
    }
  } else {
    for (const auto& list : lists) {
      for (std::uint64_t b = 0; b < list.size(); b += kChunk) {
        items.push_back({0, b, std::min<std::uint64_t>(list.size(), b + kChunk), &list});
      }
    }
  }

  const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(std::max<std::size_t>(items.size(), 1))));
  std::vector<Worker> workers;
  workers.reserve(jobs);
  for (int i = 0; i < jobs; ++i) workers.emplace_back(options);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto drain = [&](Worker& w) {
    try {
      for (std::size_t i = next++; i < items.size(); i = next++) w.run(items[i]);
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      next = items.size();
    }
  };
  if (jobs == 1) {
    drain(workers[0]);
  } else {
    std::vector<std::thread> threads;
    for (Worker& w : workers) threads.emplace_back(drain, std::ref(w));
    for (std::thread& t : threads) t.join();
  }
  if (error) std::rethrow_exception(error);

  SweepReport report;
  report.orders = orders;
  report.mode = options.mode;
  report.theorems = std::move(workers[0].tallies());
  report.census = workers[0].census();
  report.graphs = workers[0].graphs();
  for (int i = 1; i < jobs; ++i) {
    for (std::size_t k = 0; k < report.theorems.size(); ++k) report.theorems[k].merge(workers[i].tallies()[k]);
    if (auto& c = workers[i].census()) {
      if (report.census) {
        report.census->merge(*c);
      } else {
        report.census = c;
      }
    }
    report.graphs += workers[i].graphs();
  }
  for (TheoremTally& t : report.theorems) t.finish();
  if (options.timing) {
    report.wall_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  }
  return report;
}

}  // namespace oidom
