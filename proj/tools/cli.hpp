#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tistar/diophantine.hpp"
#include "tistar/trees.hpp"

namespace tistar::cli {

enum class Format { Json, Text };

struct RunConfig {
  Format format = Format::Json;
  unsigned threads = 1;
  std::int64_t max_oracle_n = 400;
  std::int64_t max_box = kDefaultBoxCap;

  // Applies TISTAR_MAX_ORACLE_N and TISTAR_MAX_BOX when set.
  RunConfig with_env() const;
  void validate() const;
};

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  // not TI / unsolvable / not certified
inline constexpr int kError = 2;
inline constexpr int kDisagreement = 3;
}  // namespace exit_code

int cmd_check(const std::string& spec, bool oracle, bool explain, const RunConfig& cfg,
              std::ostream& out, std::ostream& err);

struct EnumerateOptions {
  TreeKind kind = TreeKind::Starlike;
  std::int64_t max_order = 0;
  std::vector<std::int64_t> branches;  // {k} or {k, m}
  std::string out_path;                // empty means the provided stream
  bool verify = false;
};

// Specs in lexicographic order of (n, spec tuple).  Double starlike specs
// with k == m list each tree once: (sum A, A) >= (sum B, B).
std::vector<StarlikeSpec> enumerate_starlike(std::int64_t k, std::int64_t max_order);
std::vector<DoubleStarlikeSpec> enumerate_double(std::int64_t k, std::int64_t m,
                                                 std::int64_t max_order);

int cmd_enumerate(const EnumerateOptions& opts, const RunConfig& cfg, std::ostream& out,
                  std::ostream& err);

int cmd_certify(const std::string& path, std::optional<std::int64_t> spot_check,
                const RunConfig& cfg, std::ostream& out, std::ostream& err);

int cmd_solve_dio(const BoxDioProblem& problem, const RunConfig& cfg, std::ostream& out,
                  std::ostream& err);

int cmd_transmissions(const std::string& spec, const RunConfig& cfg, std::ostream& out,
                      std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tistar::cli
