#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "matwalk/genlab.hpp"
#include "matwalk/matrix.hpp"

namespace matwalk::runner {

using json = nlohmann::ordered_json;

// Input format: UTF-8 JSON with keys `n` and `entries` (array of arrays of
// strings in the integer/rational grammar).
ExactMatrix parse_matrix_json(const std::string& text);

// Plain shorthand: n lines of n whitespace-separated entries.
ExactMatrix parse_matrix_plain(const std::string& text);

json matrix_to_json(const ExactMatrix& a);
std::string input_digest(const ExactMatrix& a);

struct RunOptions {
  std::vector<IdentityInstance> instances;
  int random_count = 0;
  uint64_t seed = 0;
  bool oracle = false;
};

RunOptions options_from_json(const std::string& text, int order);

json run_check(const ExactMatrix& a, const RunOptions& opts);
json run_verify(const ExactMatrix& a, const RunOptions& opts);
json run_oracle(const ExactMatrix& a, const RunOptions& opts);
json run_certificate(const ExactMatrix& a);

struct FuzzOptions {
  std::string klass = "acyclic";  // acyclic | triangle | certificate | adversarial
  int count = 100;
  uint64_t seed = 0;
};

json run_fuzz(const FuzzOptions& opts);

// Parses the CLI instance syntax "m1,m2,...;i1,i2,...".
IdentityInstance parse_instance_text(const std::string& text);

}  // namespace matwalk::runner
