#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace entcol::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kRejected = 1;  // budget exhausted or verifier rejection
inline constexpr int kUsage = 2;     // bad arguments, I/O or parse errors

// Raised for anything the user must fix; mapped to kUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string input;
  std::string format = "edge-list";
};

struct ColorOptions {
  InputOptions in;
  std::uint64_t seed = 0;
  std::uint64_t max_steps = 0;
  std::optional<std::uint32_t> colors;
  std::optional<double> gamma;
  std::optional<std::string> girth;  // overrides the measured girth for the default bound
  std::string output;
};

struct StarOptions {
  InputOptions in;
  std::uint64_t seed = 0;
  std::uint64_t max_steps = 0;
  std::uint32_t k = 2;
  std::optional<std::uint32_t> colors;  // rank bound K; palette is K + delta
  std::string output;
};

struct BoundOptions {
  std::optional<std::size_t> delta;
  std::optional<std::string> girth;
  std::optional<std::uint32_t> k;
  std::optional<std::string> e;
  bool csv = false;
};

struct DyckOptions {
  std::uint32_t t = 0;
  std::string e;
  std::string method = "tree";
  bool csv = false;
  bool enumerate = false;
};

struct VerifyOptions {
  InputOptions in;
  std::string coloring;
  std::optional<std::string> mode;  // defaults to the file's "mode", then acyclic
  std::optional<std::uint32_t> k;   // defaults to the file's "k", then 2
};

struct BenchOptions {
  InputOptions in;
  std::uint64_t seed = 0;
  std::uint32_t runs = 100;
  std::uint64_t max_steps = 0;
  unsigned threads = 0;
  bool json = false;
};

struct GenerateOptions {
  std::string model = "random";
  std::size_t n = 0;
  std::size_t n2 = 0;
  std::size_t delta = 0;
  std::size_t edges = 0;
  std::size_t min_girth = 3;
  std::uint64_t seed = 0;
  std::string format = "edge-list";
  std::string output;
};

int cmd_color(const ColorOptions& opt);
int cmd_star(const StarOptions& opt);
int cmd_bound(const BoundOptions& opt);
int cmd_dyck(const DyckOptions& opt);
int cmd_verify(const VerifyOptions& opt);
int cmd_bench(const BenchOptions& opt);
int cmd_generate(const GenerateOptions& opt);

}  // namespace entcol::cli
