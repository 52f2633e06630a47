#include "matwalk/runner.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "matwalk/hypotheses.hpp"
#include "matwalk/verify.hpp"

namespace matwalk::runner {

namespace {

constexpr const char* kSchema = "matwalk-report/1";

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  const auto d = std::chrono::steady_clock::now() - start;
  return std::chrono::duration<double, std::milli>(d).count();
}

json instance_to_json(const IdentityInstance& inst) {
  return json{{"exponents", inst.exponents}, {"indices", inst.indices}};
}

json verification_to_json(const VerificationResult& r) {
  json j = instance_to_json(r.instance);
  j["lhs"] = r.lhs.str();
  j["rhs"] = r.rhs.str();
  j["equal"] = r.equal;
  return j;
}

json hypotheses_to_json(const HypothesisReport& h) {
  json j;
  json acyclic{{"status", to_string(h.acyclic.status)}};
  if (h.acyclic.witness_cycle) acyclic["witness_cycle"] = *h.acyclic.witness_cycle;
  j["acyclic"] = acyclic;

  json triangle{{"status", to_string(h.triangle.status)}};
  if (h.triangle.zero_entry) {
    triangle["zero_entry"] = {h.triangle.zero_entry->first, h.triangle.zero_entry->second};
  }
  if (h.triangle.violating_pair) {
    triangle["violating_pair"] = {h.triangle.violating_pair->first,
                                  h.triangle.violating_pair->second};
  }
  j["triangle"] = triangle;

  json cert{{"status", to_string(h.certificate.status)}};
  if (!h.certificate.reason.empty()) cert["reason"] = h.certificate.reason;
  if (h.certificate.failing_cycle) cert["failing_cycle"] = *h.certificate.failing_cycle;
  if (h.found_certificate) cert["cycles"] = h.found_certificate->cycles;
  j["certificate"] = cert;
  return j;
}

std::vector<IdentityInstance> collect_instances(const ExactMatrix& a, const RunOptions& opts) {
  std::vector<IdentityInstance> out = opts.instances;
  std::mt19937_64 rng(opts.seed);
  for (int i = 0; i < opts.random_count; ++i) {
    out.push_back(random_instance(rng, a.order()));
  }
  for (const IdentityInstance& inst : out) inst.validate(a.order());
  return out;
}

json oracle_comparisons(const ExactMatrix& a) {
  json j;
  const EnumerationLimits limits{5, 6};
  if (a.order() > limits.max_n) {
    j["checked"] = false;
    j["reason"] = "matrix too large for walk enumeration";
    return j;
  }
  int agreements = 0, mismatches = 0;
  for (int m = 1; m <= limits.max_len; ++m) {
    const ExactMatrix p = mat_pow(a, static_cast<unsigned>(m));
    for (int u = 1; u <= a.order(); ++u) {
      for (int v = 1; v <= a.order(); ++v) {
        if (walk_sum_oracle(a, u, v, m, limits) == p(u, v)) {
          ++agreements;
        } else {
          ++mismatches;
        }
      }
    }
  }
  j["checked"] = true;
  j["agreements"] = agreements;
  j["mismatches"] = mismatches;
  return j;
}

}  // namespace

ExactMatrix parse_matrix_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries")) {
    throw std::invalid_argument("matrix document needs keys 'n' and 'entries'");
  }
  const int n = doc["n"].get<int>();
  if (n <= 0) throw std::invalid_argument("matrix order must be positive");
  const auto& entries = doc["entries"];
  if (!entries.is_array() || static_cast<int>(entries.size()) != n) {
    throw std::invalid_argument("'entries' must be an array of n rows");
  }
  ExactMatrix a(n);
  for (int i = 1; i <= n; ++i) {
    const auto& row = entries[i - 1];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("row " + std::to_string(i) + " must have n entries");
    }
    for (int j = 1; j <= n; ++j) {
      if (!row[j - 1].is_string()) {
        throw std::invalid_argument("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") must be a string");
      }
      try {
        a.set(i, j, Scalar::parse(row[j - 1].get<std::string>()));
      } catch (const std::exception& e) {
        throw std::invalid_argument("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                    "): " + e.what());
      }
    }
  }
  return a;
}

ExactMatrix parse_matrix_plain(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::vector<std::string> row;
    std::string token;
    while (fields >> token) row.push_back(token);
    if (!row.empty()) rows.push_back(std::move(row));
  }
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw std::invalid_argument("empty matrix input");
  ExactMatrix a(n);
  for (int i = 1; i <= n; ++i) {
    if (static_cast<int>(rows[i - 1].size()) != n) {
      throw std::invalid_argument("row " + std::to_string(i) + " must have n entries");
    }
    for (int j = 1; j <= n; ++j) {
      try {
        a.set(i, j, Scalar::parse(rows[i - 1][j - 1]));
      } catch (const std::exception& e) {
        throw std::invalid_argument("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                    "): " + e.what());
      }
    }
  }
  return a;
}

json matrix_to_json(const ExactMatrix& a) {
  json entries = json::array();
  for (int i = 1; i <= a.order(); ++i) {
    json row = json::array();
    for (int j = 1; j <= a.order(); ++j) row.push_back(a(i, j).str());
    entries.push_back(std::move(row));
  }
  return json{{"n", a.order()}, {"entries", std::move(entries)}};
}

std::string input_digest(const ExactMatrix& a) {
  // FNV-1a 64 over the canonical JSON form.
  const std::string text = matrix_to_json(a).dump();
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << h;
  return os.str();
}

IdentityInstance parse_instance_text(const std::string& text) {
  const auto semi = text.find(';');
  if (semi == std::string::npos) {
    throw std::invalid_argument("instance syntax is 'm1,m2,...;i1,i2,...'");
  }
  const auto parse_list = [](const std::string& part) {
    std::vector<int> out;
    std::istringstream is(part);
    std::string token;
    while (std::getline(is, token, ',')) {
      size_t pos = 0;
      const int v = std::stoi(token, &pos);
      if (pos != token.size()) throw std::invalid_argument("bad integer in instance: " + token);
      out.push_back(v);
    }
    return out;
  };
  IdentityInstance inst;
  inst.exponents = parse_list(text.substr(0, semi));
  inst.indices = parse_list(text.substr(semi + 1));
  if (inst.exponents.empty() || inst.exponents.size() != inst.indices.size()) {
    throw std::invalid_argument("instance needs equal nonzero counts of exponents and indices");
  }
  return inst;
}

RunOptions options_from_json(const std::string& text, int order) {
  RunOptions opts;
  if (text.empty()) return opts;
  const json doc = json::parse(text);
  if (doc.contains("instances")) {
    for (const auto& item : doc["instances"]) {
      IdentityInstance inst;
      inst.exponents = item.at("exponents").get<std::vector<int>>();
      inst.indices = item.at("indices").get<std::vector<int>>();
      inst.validate(order);
      opts.instances.push_back(std::move(inst));
    }
  }
  opts.random_count = doc.value("random", 0);
  opts.seed = doc.value("seed", uint64_t{0});
  opts.oracle = doc.value("oracle", false);
  return opts;
}

json run_check(const ExactMatrix& a, const RunOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  json report;
  report["schema"] = kSchema;
  report["command"] = "check";
  report["seed"] = opts.seed;
  report["input"] = {{"n", a.order()}, {"digest", input_digest(a)}};

  const HypothesisReport hyp = check_all_hypotheses(a);
  report["hypotheses"] = hypotheses_to_json(hyp);
  report["any_hypothesis_holds"] = hyp.any_holds();

  json verifications = json::array();
  bool all_equal = true;
  for (const IdentityInstance& inst : collect_instances(a, opts)) {
    const VerificationResult r = verify_identity(a, inst);
    all_equal = all_equal && r.equal;
    verifications.push_back(verification_to_json(r));
  }
  report["verifications"] = std::move(verifications);
  report["all_equal"] = all_equal;

  if (opts.oracle) report["oracle"] = oracle_comparisons(a);
  report["timing_ms"] = elapsed_ms(start);
  return report;
}

json run_verify(const ExactMatrix& a, const RunOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  json report;
  report["schema"] = kSchema;
  report["command"] = "verify";
  report["seed"] = opts.seed;
  report["input"] = {{"n", a.order()}, {"digest", input_digest(a)}};
  json verifications = json::array();
  bool all_equal = true;
  for (const IdentityInstance& inst : collect_instances(a, opts)) {
    const VerificationResult r = verify_identity(a, inst);
    all_equal = all_equal && r.equal;
    verifications.push_back(verification_to_json(r));
  }
  report["verifications"] = std::move(verifications);
  report["all_equal"] = all_equal;
  report["timing_ms"] = elapsed_ms(start);
  return report;
}

json run_oracle(const ExactMatrix& a, const RunOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  json report;
  report["schema"] = kSchema;
  report["command"] = "oracle";
  report["seed"] = opts.seed;
  report["input"] = {{"n", a.order()}, {"digest", input_digest(a)}};
  report["oracle"] = oracle_comparisons(a);
  report["all_equal"] =
      !report["oracle"]["checked"].get<bool>() || report["oracle"]["mismatches"] == 0;
  report["timing_ms"] = elapsed_ms(start);
  return report;
}

json run_certificate(const ExactMatrix& a) {
  const auto start = std::chrono::steady_clock::now();
  json report;
  report["schema"] = kSchema;
  report["command"] = "certificate";
  report["input"] = {{"n", a.order()}, {"digest", input_digest(a)}};
  const CertificateSearchResult r = search_certificate(a);
  report["pattern_symmetric"] = r.pattern_symmetric;
  report["found"] = r.found;
  if (r.found) report["cycles"] = r.certificate.cycles;
  if (r.failing_cycle) report["failing_cycle"] = *r.failing_cycle;
  report["timing_ms"] = elapsed_ms(start);
  return report;
}

namespace {

bool instance_fails(const ExactMatrix& a, const IdentityInstance& inst) {
  return !verify_identity(a, inst).equal;
}

ExactMatrix drop_vertex(const ExactMatrix& a, int victim) {
  ExactMatrix b(a.order() - 1);
  for (int i = 1, bi = 1; i <= a.order(); ++i) {
    if (i == victim) continue;
    for (int j = 1, bj = 1; j <= a.order(); ++j) {
      if (j == victim) continue;
      b.set(bi, bj, a(i, j));
      ++bj;
    }
    ++bi;
  }
  return b;
}

// Greedy shrink: reduce k, then exponents, then n.
std::pair<ExactMatrix, IdentityInstance> shrink_counterexample(ExactMatrix a,
                                                               IdentityInstance inst) {
  bool improved = true;
  while (improved) {
    improved = false;
    // Drop cycle positions.
    for (int t = 0; t < inst.k() && inst.k() > 1; ++t) {
      IdentityInstance smaller = inst;
      smaller.exponents.erase(smaller.exponents.begin() + t);
      smaller.indices.erase(smaller.indices.begin() + t);
      if (instance_fails(a, smaller)) {
        inst = std::move(smaller);
        improved = true;
        t = -1;
      }
    }
    // Lower exponents.
    for (int t = 0; t < inst.k(); ++t) {
      while (inst.exponents[t] > 1) {
        IdentityInstance smaller = inst;
        --smaller.exponents[t];
        if (!instance_fails(a, smaller)) break;
        inst = std::move(smaller);
        improved = true;
      }
    }
    // Remove vertices unused by the index cycle.
    for (int victim = a.order(); victim >= 1 && a.order() > 1; --victim) {
      if (std::find(inst.indices.begin(), inst.indices.end(), victim) != inst.indices.end()) {
        continue;
      }
      ExactMatrix smaller_m = drop_vertex(a, victim);
      IdentityInstance smaller_i = inst;
      for (int& idx : smaller_i.indices) {
        if (idx > victim) --idx;
      }
      if (instance_fails(smaller_m, smaller_i)) {
        a = std::move(smaller_m);
        inst = std::move(smaller_i);
        improved = true;
      }
    }
  }
  return {std::move(a), std::move(inst)};
}

ExactMatrix random_dense_matrix(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> value(-3, 3);
  ExactMatrix a(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int v = value(rng);
      if (v != 0) a.set(i, j, Scalar::integer(v));
    }
  }
  return a;
}

}  // namespace

json run_fuzz(const FuzzOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  json report;
  report["schema"] = kSchema;
  report["command"] = "fuzz";
  report["class"] = opts.klass;
  report["count"] = opts.count;
  report["seed"] = opts.seed;

  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> order(2, 7);
  std::uniform_real_distribution<double> density(0.2, 0.9);

  const bool adversarial = opts.klass == "adversarial";
  int violations = 0;
  json counterexamples = json::array();

  for (int i = 0; i < opts.count; ++i) {
    const int n = order(rng);
    const uint64_t case_seed = rng();
    ExactMatrix a = [&]() {
      if (opts.klass == "acyclic") return gen_random_acyclic(n, case_seed, density(rng));
      if (opts.klass == "triangle") {
        return i % 2 == 0 ? gen_rank_one_ratio(n, case_seed, DomainVariant::Integer)
                          : gen_symmetric(n, case_seed, DomainVariant::Integer);
      }
      if (opts.klass == "certificate") {
        return i % 2 == 0 ? gen_family_one(std::max(n, 2), case_seed, DomainVariant::Integer)
                          : gen_family_two(std::max(n, 3), case_seed, DomainVariant::Integer);
      }
      if (adversarial) return random_dense_matrix(rng, n);
      throw std::invalid_argument("unknown fuzz class: " + opts.klass);
    }();
    const IdentityInstance inst = random_instance(rng, a.order());
    const VerificationResult r = verify_identity(a, inst);
    if (r.equal) continue;
    ++violations;
    if (adversarial) {
      if (counterexamples.size() < 5) {
        auto [sa, si] = shrink_counterexample(a, inst);
        const VerificationResult sr = verify_identity(sa, si);
        counterexamples.push_back(json{{"matrix", matrix_to_json(sa)},
                                       {"instance", instance_to_json(si)},
                                       {"lhs", sr.lhs.str()},
                                       {"rhs", sr.rhs.str()}});
      }
    } else {
      // A violation inside a hypothesis class contradicts a proven theorem;
      // surface the raw case loudly.
      counterexamples.push_back(json{{"matrix", matrix_to_json(a)},
                                     {"instance", instance_to_json(inst)},
                                     {"lhs", r.lhs.str()},
                                     {"rhs", r.rhs.str()}});
    }
  }

  report["violations"] = violations;
  report["counterexamples"] = std::move(counterexamples);
  if (adversarial) {
    report["status"] = "ok";
  } else {
    report["status"] = violations == 0 ? "ok" : "theorem-violation";
  }
  report["timing_ms"] = elapsed_ms(start);
  return report;
}

}  // namespace matwalk::runner
