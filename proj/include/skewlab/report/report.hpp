#pragma once

#include <string>
#include <utility>
#include <vector>

namespace skewlab {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

enum class Status { pass, fail, out_of_scope, open_in_paper };

const char* status_name(Status s);

/// One verification outcome. `paper_ref` is a theorem/lemma label key from
/// the source text, or "plumbing".
struct CheckRecord {
  std::string name;
  std::string paper_ref;
  std::string case_desc;
  Status status = Status::pass;
  std::string witness;
};

inline CheckRecord make_check(std::string name, std::string paper_ref, std::string case_desc, bool ok,
                              std::string witness = {}) {
  return {std::move(name), std::move(paper_ref), std::move(case_desc), ok ? Status::pass : Status::fail,
          std::move(witness)};
}

bool all_pass(const std::vector<CheckRecord>& checks);

struct Report {
  std::string command;
  std::string case_desc;
  std::vector<CheckRecord> checks;
  // Extra top-level JSON members (verdict, witness, ...), already serialized.
  std::vector<std::pair<std::string, std::string>> extras;

  void add(CheckRecord c) { checks.push_back(std::move(c)); }
  void add_all(const std::vector<CheckRecord>& cs) { checks.insert(checks.end(), cs.begin(), cs.end()); }
  bool failed() const;
  int exit_code() const { return failed() ? 1 : 0; }
};

enum class Format { json, text };

/// Stable serialization: identical reports give identical bytes.
std::string emit(const Report& r, Format f);

}  // namespace skewlab
