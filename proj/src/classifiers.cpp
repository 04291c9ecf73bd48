#include "partdist/classifiers.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdio>
#include <functional>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "partdist/errors.hpp"

namespace partdist {

namespace {

constexpr std::size_t kMeasures = kAllMeasures.size();
using Values = std::array<long long, kMeasures>;

std::size_t slot(MeasureId id) noexcept { return static_cast<std::size_t>(id); }

// Evaluates fn(i) for i in [0, count) on up to `jobs` threads; results land in
// index order, so the reduction that follows is independent of scheduling.
template <typename Row, typename Fn>
std::vector<Row> for_each_row(std::size_t count, unsigned jobs, Fn fn) {
  std::vector<Row> rows(count);
  const unsigned workers = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) rows[i] = fn(i);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) rows[i] = fn(i);
    });
  }
  for (auto& t : threads) t.join();
  return rows;
}

struct IndexPair {
  int i = -1;
  int j = -1;
  bool valid() const noexcept { return i >= 0; }
};

// First pair in scan order wins; rows arrive in increasing i, so only the
// first valid candidate is kept.
void keep_first(IndexPair& current, int i, int j) {
  if (!current.valid() && j >= 0) current = {i, j};
}

}  // namespace

std::string_view property_name(PropertyId id) noexcept {
  switch (id) {
    case PropertyId::ANTISYMMETRY: return "ANTISYMMETRY";
    case PropertyId::F_MAXIMALITY: return "F_MAXIMALITY";
    case PropertyId::F_MONOTONE: return "F_MONOTONE";
    case PropertyId::F_CONVEX: return "F_CONVEX";
    case PropertyId::MOD_MAX: return "MOD_MAX";
    case PropertyId::BOTTOP_MAX: return "BOTTOP_MAX";
    case PropertyId::CO_MAX: return "CO_MAX";
    case PropertyId::SUPERMODULAR: return "SUPERMODULAR";
    case PropertyId::SUBMODULAR: return "SUBMODULAR";
    case PropertyId::MODULAR: return "MODULAR";
  }
  return "?";
}

PropertyId parse_property(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (PropertyId id : kAllProperties) {
    if (upper == property_name(id)) return id;
  }
  throw ValidationError("unknown property '" + std::string(name) + "'");
}

std::optional<long long> reference_max(MeasureId id, int n) {
  switch (id) {
    case MeasureId::PD:
    case MeasureId::RB: return n - 1;
    case MeasureId::SB:
    case MeasureId::IH: return choose2(n);
    default: return std::nullopt;
  }
}

Expectation paper_expectation(MeasureId id, PropertyId property, int n) noexcept {
  using P = PropertyId;
  const Expectation fails = n >= 5 ? Expectation::FAILS : Expectation::UNSPECIFIED;
  if (property == P::ANTISYMMETRY) return Expectation::HOLDS;
  switch (id) {
    case MeasureId::PD:
      switch (property) {
        case P::F_MAXIMALITY:
        case P::F_MONOTONE:
        case P::SUPERMODULAR: return Expectation::HOLDS;
        case P::F_CONVEX: return Expectation::FAILS;
        case P::CO_MAX: return fails;
        default: return Expectation::UNSPECIFIED;
      }
    case MeasureId::SD:
      switch (property) {
        case P::SUPERMODULAR: return Expectation::HOLDS;
        case P::BOTTOP_MAX:
        case P::CO_MAX: return fails;
        default: return Expectation::UNSPECIFIED;
      }
    case MeasureId::RB:
      return property == P::F_CONVEX ? Expectation::FAILS : Expectation::HOLDS;
    case MeasureId::RBP:
      switch (property) {
        case P::SUPERMODULAR: return Expectation::HOLDS;
        case P::CO_MAX: return fails;
        default: return Expectation::UNSPECIFIED;
      }
    case MeasureId::SB:
      return Expectation::HOLDS;
    case MeasureId::IH:
      switch (property) {
        case P::CO_MAX: return fails;
        case P::SUBMODULAR:
        case P::MODULAR: return Expectation::UNSPECIFIED;
        default: return Expectation::HOLDS;
      }
  }
  return Expectation::UNSPECIFIED;
}

// ---------------------------------------------------------------------------

struct Classifier::Profile {
  Values max{};
  std::array<PartitionPair, kMeasures> argmax;
};

struct Classifier::Scan {
  int n = 0;
  std::vector<Partition> parts;
  Values max{};
  std::array<IndexPair, kMeasures> argmax{};
  Values mod_max{};
  std::array<IndexPair, kMeasures> mod_argmax{};
  Values bottop{};
  std::array<IndexPair, kMeasures> antisymmetry{}, super{}, sub{}, super_strict{}, sub_strict{}, co_max{};

  PartitionPair pair(IndexPair p) const {
    return {parts[static_cast<std::size_t>(p.i)], parts[static_cast<std::size_t>(p.j)]};
  }
};

Classifier::Classifier(ClassifierOptions options) : options_(options) {}
Classifier::~Classifier() = default;

const Classifier::Profile& Classifier::profile(int n) {
  if (auto it = profiles_.find(n); it != profiles_.end()) return *it->second;
  require_enumerable(n, options_.limit);
  const std::vector<Partition> parts = enumerate_partitions(n, options_.limit);

  struct Row {
    Values max{};
    std::array<int, kMeasures> arg{};
  };
  // Every measure is symmetric, so unordered pairs i <= j cover the maxima and
  // the first maximizer in ordered enumeration always has i <= j.
  auto rows = for_each_row<Row>(parts.size(), options_.jobs, [&](std::size_t i) {
    Row row;
    row.max.fill(-1);
    for (std::size_t j = i; j < parts.size(); ++j) {
      const Values v = evaluate_all(parts[i], parts[j]);
      for (std::size_t m = 0; m < kMeasures; ++m) {
        if (v[m] > row.max[m]) {
          row.max[m] = v[m];
          row.arg[m] = static_cast<int>(j);
        }
      }
    }
    return row;
  });

  auto result = std::make_unique<Profile>();
  result->max.fill(-1);
  std::array<IndexPair, kMeasures> arg{};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t m = 0; m < kMeasures; ++m) {
      if (rows[i].max[m] > result->max[m]) {
        result->max[m] = rows[i].max[m];
        arg[m] = {static_cast<int>(i), rows[i].arg[m]};
      }
    }
  }
  for (std::size_t m = 0; m < kMeasures; ++m) {
    result->argmax[m] = {parts[static_cast<std::size_t>(arg[m].i)], parts[static_cast<std::size_t>(arg[m].j)]};
  }
  return *profiles_.emplace(n, std::move(result)).first->second;
}

const Classifier::Scan& Classifier::scan(int n) {
  if (auto it = scans_.find(n); it != scans_.end()) return *it->second;
  require_enumerable(n, options_.limit);
  auto s = std::make_unique<Scan>();
  s->n = n;
  s->parts = enumerate_partitions(n, options_.limit);
  const auto& parts = s->parts;
  std::vector<char> modular(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) modular[i] = is_modular(parts[i]) ? 1 : 0;

  struct Row {
    Values max{}, mod_max{};
    std::array<int, kMeasures> arg{}, mod_arg{};
    std::array<int, kMeasures> antisymmetry{}, super{}, sub{}, super_strict{}, sub_strict{};
    std::vector<std::pair<int, Values>> complements;
  };
  auto rows = for_each_row<Row>(parts.size(), options_.jobs, [&](std::size_t i) {
    Row row;
    row.max.fill(-1);
    row.mod_max.fill(-1);
    for (auto* a : {&row.arg, &row.mod_arg, &row.antisymmetry, &row.super, &row.sub, &row.super_strict,
                    &row.sub_strict}) {
      a->fill(-1);
    }
    const Partition& p = parts[i];
    for (std::size_t j = i; j < parts.size(); ++j) {
      const Partition& q = parts[j];
      const Partition lo = meet(p, q);
      const Partition hi = join(p, q);
      const Values v = evaluate_all(p, q);
      const Values w = evaluate_all(lo, hi);
      const int jj = static_cast<int>(j);
      const bool both_modular = modular[i] && modular[j];
      for (std::size_t m = 0; m < kMeasures; ++m) {
        if (v[m] > row.max[m]) {
          row.max[m] = v[m];
          row.arg[m] = jj;
        }
        if (both_modular && v[m] > row.mod_max[m]) {
          row.mod_max[m] = v[m];
          row.mod_arg[m] = jj;
        }
        if ((v[m] == 0) != (i == j) && row.antisymmetry[m] < 0) row.antisymmetry[m] = jj;
        if (w[m] < v[m] && row.super[m] < 0) row.super[m] = jj;
        if (w[m] > v[m] && row.sub[m] < 0) row.sub[m] = jj;
        if (w[m] > v[m] && row.super_strict[m] < 0) row.super_strict[m] = jj;
        if (w[m] < v[m] && row.sub_strict[m] < 0) row.sub_strict[m] = jj;
      }
      if (lo.num_blocks() == static_cast<std::size_t>(n) && hi.num_blocks() == 1) {
        row.complements.emplace_back(jj, v);
      }
    }
    return row;
  });

  s->max.fill(-1);
  s->mod_max.fill(-1);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const int i = static_cast<int>(r);
    const Row& row = rows[r];
    for (std::size_t m = 0; m < kMeasures; ++m) {
      if (row.max[m] > s->max[m]) {
        s->max[m] = row.max[m];
        s->argmax[m] = {i, row.arg[m]};
      }
      if (row.mod_max[m] > s->mod_max[m]) {
        s->mod_max[m] = row.mod_max[m];
        s->mod_argmax[m] = {i, row.mod_arg[m]};
      }
      keep_first(s->antisymmetry[m], i, row.antisymmetry[m]);
      keep_first(s->super[m], i, row.super[m]);
      keep_first(s->sub[m], i, row.sub[m]);
      keep_first(s->super_strict[m], i, row.super_strict[m]);
      keep_first(s->sub_strict[m], i, row.sub_strict[m]);
    }
  }
  // Second pass: complements can only be judged once the global maximum is known.
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [j, v] : rows[r].complements) {
      for (std::size_t m = 0; m < kMeasures; ++m) {
        if (v[m] < s->max[m]) keep_first(s->co_max[m], static_cast<int>(r), j);
      }
    }
  }
  const Values bt = evaluate_all(Partition::bottom(n), Partition::top(n));
  s->bottop = bt;

  auto prof = std::make_unique<Profile>();
  prof->max = s->max;
  for (std::size_t m = 0; m < kMeasures; ++m) prof->argmax[m] = s->pair(s->argmax[m]);
  profiles_.try_emplace(n, std::move(prof));
  return *scans_.emplace(n, std::move(s)).first->second;
}

std::vector<long long> Classifier::max_profile(MeasureId id, int first, int last) {
  if (first < 1 || last < first) throw RangeError("max_profile needs 1 <= first <= last");
  require_enumerable(last, options_.limit);
  std::vector<long long> out;
  for (int n = first; n <= last; ++n) out.push_back(profile(n).max[slot(id)]);
  return out;
}

Verdict Classifier::check(MeasureId id, PropertyId property, int n) {
  const std::size_t m = slot(id);
  Verdict v;
  v.measure = id;
  v.property = property;
  v.n = n;

  if (property == PropertyId::F_MONOTONE || property == PropertyId::F_CONVEX) {
    const int span = property == PropertyId::F_MONOTONE ? 1 : 2;
    require_enumerable(n + span, options_.limit);
    v.profile = max_profile(id, n, n + span);
    v.observed_max = v.profile.front();
    v.holds = property == PropertyId::F_MONOTONE ? v.profile[1] > v.profile[0]
                                                  : v.profile[2] + v.profile[0] > 2 * v.profile[1];
    if (!v.holds) v.witness = profile(n).argmax[m];
    return v;
  }
  if (property == PropertyId::F_MAXIMALITY) {
    const Profile& prof = profile(n);
    v.observed_max = prof.max[m];
    v.witness = prof.argmax[m];
    const auto expected = reference_max(id, n);
    v.holds = !expected || *expected == prof.max[m];
    return v;
  }

  const Scan& s = scan(n);
  v.observed_max = s.max[m];
  auto failing = [&](IndexPair p) {
    v.holds = !p.valid();
    if (p.valid()) v.witness = s.pair(p);
  };
  switch (property) {
    case PropertyId::ANTISYMMETRY: failing(s.antisymmetry[m]); break;
    case PropertyId::MOD_MAX:
      v.holds = s.mod_max[m] == s.max[m];
      v.witness = s.pair(v.holds ? s.mod_argmax[m] : s.argmax[m]);
      break;
    case PropertyId::BOTTOP_MAX:
      v.holds = s.bottop[m] == s.max[m];
      v.witness = v.holds ? PartitionPair{Partition::bottom(n), Partition::top(n)} : s.pair(s.argmax[m]);
      break;
    case PropertyId::CO_MAX: failing(s.co_max[m]); break;
    case PropertyId::SUPERMODULAR:
      failing(s.super[m]);
      if (v.holds && s.super_strict[m].valid()) v.witness = s.pair(s.super_strict[m]);
      break;
    case PropertyId::SUBMODULAR:
      failing(s.sub[m]);
      if (v.holds && s.sub_strict[m].valid()) v.witness = s.pair(s.sub_strict[m]);
      break;
    case PropertyId::MODULAR: {
      IndexPair first = s.super[m];
      const IndexPair other = s.sub[m];
      if (other.valid() && (!first.valid() || std::pair(other.i, other.j) < std::pair(first.i, first.j))) {
        first = other;
      }
      failing(first);
      break;
    }
    default: break;
  }
  return v;
}

std::vector<Verdict> Classifier::classify(int n, std::span<const MeasureId> measures) {
  std::vector<Verdict> out;
  out.reserve(measures.size() * kAllProperties.size());
  for (MeasureId id : measures) {
    for (PropertyId p : kAllProperties) out.push_back(check(id, p, n));
  }
  return out;
}

std::vector<long long> max_profile(MeasureId id, int first, int last) {
  Classifier c;
  return c.max_profile(id, first, last);
}

Verdict check(MeasureId id, PropertyId property, int n) {
  Classifier c;
  return c.check(id, property, n);
}

const Verdict& ClassificationReport::at(MeasureId id, PropertyId property) const {
  for (const Verdict& v : verdicts) {
    if (v.measure == id && v.property == property) return v;
  }
  throw RangeError("measure " + std::string(measure_tag(id)) + " not in report");
}

ClassificationReport classify_all(int n, std::span<const MeasureId> measures, ClassifierOptions options) {
  if (options.limit < n + 2) {
    throw CapacityError("classification at n=" + std::to_string(n) + " needs maxima up to n+2=" +
                        std::to_string(n + 2) + ", above the pair-scan limit " + std::to_string(options.limit));
  }
  Classifier c(options);
  ClassificationReport report;
  report.n = n;
  report.measures.assign(measures.begin(), measures.end());
  report.verdicts = c.classify(n, measures);
  return report;
}

std::vector<Verdict> contradictions(const ClassificationReport& report) {
  std::vector<Verdict> out;
  for (const Verdict& v : report.verdicts) {
    const Expectation e = paper_expectation(v.measure, v.property, v.n);
    if ((e == Expectation::HOLDS && !v.holds) || (e == Expectation::FAILS && v.holds)) out.push_back(v);
  }
  return out;
}

namespace {

std::string short_name(PropertyId p) {
  switch (p) {
    case PropertyId::ANTISYMMETRY: return "anti";
    case PropertyId::F_MAXIMALITY: return "f-max";
    case PropertyId::F_MONOTONE: return "f-mono";
    case PropertyId::F_CONVEX: return "f-conv";
    case PropertyId::MOD_MAX: return "mod-max";
    case PropertyId::BOTTOP_MAX: return "bt-max";
    case PropertyId::CO_MAX: return "co-max";
    case PropertyId::SUPERMODULAR: return "super";
    case PropertyId::SUBMODULAR: return "sub";
    case PropertyId::MODULAR: return "modular";
  }
  return "?";
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

std::string render_text(const ClassificationReport& report) {
  std::ostringstream out;
  out << "n=" << report.n << "  (yes = holds, no = fails, * = disagrees with the paper)\n";
  out << pad("measure", 8) << pad("max", 6);
  for (PropertyId p : kAllProperties) out << pad(short_name(p), 9);
  out << '\n';
  for (MeasureId id : report.measures) {
    const Verdict& fmax = report.at(id, PropertyId::F_MAXIMALITY);
    out << pad(std::string(measure_tag(id)), 8) << pad(std::to_string(fmax.observed_max.value_or(-1)), 6);
    for (PropertyId p : kAllProperties) {
      const Verdict& v = report.at(id, p);
      const Expectation e = paper_expectation(id, p, report.n);
      const bool disagrees = (e == Expectation::HOLDS && !v.holds) || (e == Expectation::FAILS && v.holds);
      out << pad(std::string(v.holds ? "yes" : "no") + (disagrees ? "*" : ""), 9);
    }
    out << '\n';
  }
  for (const Verdict& v : report.verdicts) {
    if (v.holds || !v.witness) continue;
    out << measure_tag(v.measure) << ' ' << property_name(v.property) << " fails: ("
        << v.witness->first.to_string() << ", " << v.witness->second.to_string() << ")";
    if (!v.profile.empty()) {
      out << " profile";
      for (long long f : v.profile) out << ' ' << f;
    }
    out << '\n';
  }
  return out.str();
}

std::string render_json(const ClassificationReport& report) {
  nlohmann::ordered_json root;
  root["n"] = report.n;
  nlohmann::ordered_json measures = nlohmann::ordered_json::object();
  for (MeasureId id : report.measures) {
    nlohmann::ordered_json props = nlohmann::ordered_json::object();
    for (PropertyId p : kAllProperties) {
      const Verdict& v = report.at(id, p);
      nlohmann::ordered_json entry;
      entry["holds"] = v.holds;
      entry["witness"] = v.witness ? nlohmann::ordered_json::array({v.witness->first.to_string(),
                                                                    v.witness->second.to_string()})
                                   : nlohmann::ordered_json(nullptr);
      entry["observed_max"] = v.observed_max ? nlohmann::ordered_json(*v.observed_max) : nlohmann::ordered_json(nullptr);
      if (!v.profile.empty()) entry["profile"] = v.profile;
      switch (paper_expectation(id, p, report.n)) {
        case Expectation::HOLDS: entry["paper"] = "holds"; break;
        case Expectation::FAILS: entry["paper"] = "fails"; break;
        case Expectation::UNSPECIFIED: entry["paper"] = nullptr; break;
      }
      props[std::string(property_name(p))] = std::move(entry);
    }
    measures[std::string(measure_tag(id))] = std::move(props);
  }
  root["measures"] = std::move(measures);
  return root.dump(2) + "\n";
}

bool witness_confirms_failure(const Verdict& v) {
  if (v.holds || !v.witness) return false;
  const Partition& p = v.witness->first;
  const Partition& q = v.witness->second;
  const long long d = raw_distance(v.measure, p, q);
  const int n = p.n();
  auto lifted = [&] { return raw_distance(v.measure, meet(p, q), join(p, q)); };
  switch (v.property) {
    case PropertyId::ANTISYMMETRY: return (d == 0) != (p == q);
    case PropertyId::SUPERMODULAR: return lifted() < d;
    case PropertyId::SUBMODULAR: return lifted() > d;
    case PropertyId::MODULAR: return lifted() != d;
    case PropertyId::BOTTOP_MAX: return d > raw_distance(v.measure, Partition::bottom(n), Partition::top(n));
    case PropertyId::MOD_MAX: {
      long long best = 0;
      const auto mods = enumerate_modular(n, kDefaultPairScanLimit);
      for (const auto& a : mods) {
        for (const auto& b : mods) best = std::max(best, raw_distance(v.measure, a, b));
      }
      return d > best;
    }
    case PropertyId::CO_MAX:
      return meet(p, q) == Partition::bottom(n) && join(p, q) == Partition::top(n) && v.observed_max &&
             d < *v.observed_max;
    case PropertyId::F_MAXIMALITY: {
      const auto expected = reference_max(v.measure, n);
      return expected && v.observed_max && d == *v.observed_max && *expected != d;
    }
    case PropertyId::F_MONOTONE:
      return v.profile.size() == 2 && !(v.profile[1] > v.profile[0]);
    case PropertyId::F_CONVEX:
      return v.profile.size() == 3 && !(v.profile[2] + v.profile[0] > 2 * v.profile[1]);
  }
  return false;
}

}  // namespace partdist
