#include "verba/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <future>
#include <stdexcept>
#include <tuple>

#include "verba/caps.hpp"
#include "verba/catalog.hpp"
#include "verba/criteria.hpp"
#include "verba/structure.hpp"
#include "verba/values.hpp"
#include "verba/word.hpp"

namespace verba {
namespace {

using nlohmann::json;

const std::vector<std::string>& check_tokens() {
  static const std::vector<std::string> tokens = {
      "P", "corollary_a", "theorem_gamma", "theorem_delta", "frobenius",
      "lemmas"};
  return tokens;
}

// gamma:k / delta:k descriptors carry the series index.
std::optional<unsigned> series_index(const std::string& desc,
                                     const std::string& prefix) {
  if (desc.rfind(prefix, 0) != 0) return std::nullopt;
  return static_cast<unsigned>(std::stoul(desc.substr(prefix.size())));
}

struct SortKey {
  std::tuple<std::string, std::string, std::string, int, std::uint64_t> key;
  explicit SortKey(const CheckReport& r)
      : key(r.group, r.check, r.word.value_or(""), r.k.value_or(-1), r.p) {}
};

bool report_before(const CheckReport& a, const CheckReport& b) {
  return SortKey(a).key < SortKey(b).key;
}

}  // namespace

SweepConfig sweep_config_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("sweep config must be an object");
  SweepConfig cfg;
  if (j.contains("groups"))
    for (const auto& g : j.at("groups")) cfg.groups.push_back(g.get<std::string>());
  if (j.contains("words"))
    for (const auto& w : j.at("words")) {
      Word word = word_from_descriptor(w.get<std::string>());
      cfg.words.push_back(descriptor(word));
    }
  if (j.contains("primes") && !j.at("primes").is_string()) {
    for (const auto& p : j.at("primes")) {
      std::uint64_t v = p.get<std::uint64_t>();
      if (!is_prime(v)) throw std::invalid_argument("primes must be prime");
      cfg.primes.push_back(v);
    }
  } else if (j.contains("primes") && j.at("primes").get<std::string>() != "auto") {
    throw std::invalid_argument("primes must be a list or \"auto\"");
  }
  if (j.contains("checks"))
    for (const auto& c : j.at("checks")) {
      std::string tok = c.get<std::string>();
      const auto& known = check_tokens();
      if (std::find(known.begin(), known.end(), tok) == known.end())
        throw std::invalid_argument("unknown check: " + tok);
      cfg.checks.push_back(std::move(tok));
    }
  if (j.contains("expected_non_equivalences"))
    for (const auto& e : j.at("expected_non_equivalences")) {
      ExpectedNonEquivalence x;
      x.group = e.at("group").get<std::string>();
      x.word = descriptor(word_from_descriptor(e.at("word").get<std::string>()));
      if (e.contains("p")) x.p = e.at("p").get<std::uint64_t>();
      cfg.expected_non_equivalences.push_back(std::move(x));
    }
  if (j.contains("caps")) {
    const auto& caps = j.at("caps");
    if (caps.contains("enumeration"))
      cfg.enumeration_cap = caps.at("enumeration").get<std::uint64_t>();
    if (caps.contains("tuples"))
      cfg.tuple_cap = caps.at("tuples").get<std::uint64_t>();
  }
  if (j.contains("jobs")) {
    cfg.jobs = j.at("jobs").get<unsigned>();
    if (cfg.jobs == 0) throw std::invalid_argument("jobs must be positive");
  }
  bool needs_words =
      std::find_if(cfg.checks.begin(), cfg.checks.end(), [](const auto& c) {
        return c == "P" || c == "theorem_gamma" || c == "theorem_delta";
      }) != cfg.checks.end();
  if (needs_words && cfg.words.empty())
    throw std::invalid_argument("the configured checks need a words array");
  return cfg;
}

SweepConfig load_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open sweep config: " + path);
  return sweep_config_from_json(json::parse(in));
}

namespace {

bool declared_expected(const SweepConfig& cfg, const std::string& group,
                       const std::string& word, std::uint64_t p) {
  for (const auto& e : cfg.expected_non_equivalences)
    if (e.group == group && e.word == word && (!e.p || *e.p == p)) return true;
  return false;
}

// The property report plus the comparison against p-nilpotency of the
// verbal subgroup. Disagreement is recorded in the witness; undeclared
// disagreement, or a p-nilpotent verbal subgroup failing the property,
// counts as a mismatch later.
CheckReport sweep_property_check(const SweepConfig& cfg, const PermGroup& G,
                                 const std::string& name, const Word& w,
                                 std::uint64_t p) {
  CheckReport r = satisfies_p_property(G, name, w, p);
  bool pn = is_p_nilpotent(verbal_subgroup(G, w), p);
  json witness = r.witness.is_null() ? json::object() : r.witness;
  witness["pnilp"] = pn;
  if (r.holds != pn) {
    witness["non_equivalence"] = true;
    if (r.holds && !pn && declared_expected(cfg, name, *r.word, p))
      witness["expected"] = true;
  }
  r.witness = std::move(witness);
  return r;
}

struct TaskOutcome {
  std::vector<CheckReport> reports;
  std::vector<json> errors;
};

struct Task {
  json meta;  // check/group/word/p for the error record
  std::function<std::vector<CheckReport>()> run;
};

TaskOutcome run_task(const Task& t) {
  try {
    return {t.run(), {}};
  } catch (const std::exception& e) {
    json err = t.meta;
    err["error"] = e.what();
    return {{}, {err}};
  }
}

}  // namespace

SweepResult run_sweep(const SweepConfig& cfg) {
  if (cfg.enumeration_cap) global_caps().enumeration = *cfg.enumeration_cap;
  if (cfg.tuple_cap) global_caps().tuples = *cfg.tuple_cap;

  std::vector<json> errors;
  std::vector<std::pair<std::string, PermGroup>> groups;
  for (const auto& spec : cfg.groups) {
    try {
      NamedGroup ng = make_group(spec);
      groups.emplace_back(ng.name, std::move(ng.group));
    } catch (const std::exception& e) {
      errors.push_back(
          json{{"check", "construct"}, {"group", spec}, {"error", e.what()}});
    }
  }

  std::vector<Word> words;
  for (const auto& d : cfg.words) words.push_back(word_from_descriptor(d));

  std::vector<Task> tasks;
  for (const auto& entry : groups) {
    const std::string& name = entry.first;
    const PermGroup& G = entry.second;
    std::vector<std::uint64_t> primes =
        cfg.primes.empty() ? prime_divisors(G.order()) : cfg.primes;
    if (primes.empty()) primes.push_back(2);  // trivial group
    for (const auto& check : cfg.checks) {
      const PermGroup* Gp = &G;
      const SweepConfig* cfgp = &cfg;
      if (check == "P") {
        for (std::size_t wi = 0; wi < words.size(); ++wi)
          for (std::uint64_t p : primes) {
            json meta{{"check", "P"},
                      {"group", name},
                      {"word", cfg.words[wi]},
                      {"p", p}};
            const Word* w = &words[wi];
            tasks.push_back({std::move(meta), [cfgp, Gp, name, w, p] {
                               return std::vector<CheckReport>{
                                   sweep_property_check(*cfgp, *Gp, name, *w, p)};
                             }});
          }
      } else if (check == "corollary_a") {
        for (std::uint64_t p : primes)
          tasks.push_back({json{{"check", "corollary_a"}, {"group", name}, {"p", p}},
                           [Gp, name, p] {
                             return std::vector<CheckReport>{
                                 check_corollary_a(*Gp, name, p)};
                           }});
      } else if (check == "theorem_gamma" || check == "theorem_delta") {
        const bool gamma = check == "theorem_gamma";
        for (const auto& desc : cfg.words) {
          auto k = series_index(desc, gamma ? "gamma:" : "delta:");
          if (!k || (!gamma && *k < 2)) continue;
          for (std::uint64_t p : primes) {
            unsigned kk = *k;
            tasks.push_back(
                {json{{"check", check}, {"group", name}, {"word", desc}, {"p", p}},
                 [Gp, name, kk, p, gamma] {
                   return std::vector<CheckReport>{
                       gamma ? check_theorem_gamma(*Gp, name, kk, p)
                             : check_theorem_delta(*Gp, name, kk, p)};
                 }});
          }
        }
      } else if (check == "frobenius") {
        for (std::uint64_t p : primes)
          tasks.push_back({json{{"check", "frobenius"}, {"group", name}, {"p", p}},
                           [Gp, name, p] {
                             return std::vector<CheckReport>{
                                 frobenius_p_nilpotent(*Gp, name, p)};
                           }});
      } else if (check == "lemmas") {
        tasks.push_back({json{{"check", "lemmas"}, {"group", name}},
                         [Gp, name] { return lemma_suite(*Gp, name); }});
      }
    }
  }

  std::vector<TaskOutcome> outcomes(tasks.size());
  if (cfg.jobs <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) outcomes[i] = run_task(tasks[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> workers;
    for (unsigned j = 0; j < cfg.jobs; ++j)
      workers.push_back(std::async(std::launch::async, [&] {
        for (std::size_t i = next.fetch_add(1); i < tasks.size();
             i = next.fetch_add(1))
          outcomes[i] = run_task(tasks[i]);
      }));
    for (auto& w : workers) w.get();
  }

  SweepResult out;
  for (auto& o : outcomes) {
    for (auto& r : o.reports) out.reports.push_back(std::move(r));
    for (auto& e : o.errors) errors.push_back(std::move(e));
  }
  std::sort(out.reports.begin(), out.reports.end(), report_before);
  std::sort(errors.begin(), errors.end(),
            [](const json& a, const json& b) { return a.dump() < b.dump(); });
  out.errors = std::move(errors);

  std::uint64_t holds = 0, fails = 0, skipped = 0, mismatches = 0, expected = 0;
  for (const auto& r : out.reports) {
    if (r.skipped)
      ++skipped;
    else if (r.holds)
      ++holds;
    else
      ++fails;
    if (r.check == "P") {
      if (r.witness.is_object() && r.witness.value("non_equivalence", false)) {
        if (r.witness.value("expected", false))
          ++expected;
        else
          ++mismatches;
      }
    } else if (r.check == "corollary_a" || r.check == "frobenius") {
      if (r.witness.is_object() && r.witness.value("mismatch", false))
        ++mismatches;
    } else if (!r.skipped && !r.holds) {
      ++mismatches;  // theorem and lemma reports must hold
    }
  }
  out.summary = json{{"reports", out.reports.size()},
                     {"holds", holds},
                     {"fails", fails},
                     {"skipped", skipped},
                     {"mismatches", mismatches},
                     {"expected_non_equivalences", expected},
                     {"errors", out.errors.size()}};
  out.exit_code = (mismatches == 0 && out.errors.empty()) ? 0 : 1;
  return out;
}

std::string render_sweep(const SweepResult& r, bool pretty) {
  std::string out;
  for (const auto& rep : r.reports)
    out += pretty ? report_pretty(rep) + "\n" : report_line(rep) + "\n";
  for (const auto& err : r.errors) out += "error " + err.dump() + "\n";
  out += "summary " + r.summary.dump() + "\n";
  return out;
}

}  // namespace verba
