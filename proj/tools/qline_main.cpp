// Copyright 2026 The qline Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qline: commutation structure of the single-qudit Pauli group via the
// projective line over Z_d.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage or budget error.

#include <CLI11.hpp>

#include <charconv>
#include <cstdint>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>

#include "qline/error.hpp"
#include "qline/pauli.hpp"
#include "qline/proj_line.hpp"
#include "qline/report.hpp"
#include "qline/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_u64(const std::string& text, const char* what) {
  std::uint64_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw UsageError(std::string("invalid ") + what + ": '" + text + "'");
  }
  return value;
}

std::int64_t parse_i64(const std::string& text, const char* what) {
  std::int64_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw UsageError(std::string("invalid ") + what + ": '" + text + "'");
  }
  return value;
}

qline::Modulus parse_modulus(const std::string& text) {
  const std::uint64_t d = parse_u64(text, "modulus");
  if (d < 2 || d > qline::kMaxModulus) {
    throw UsageError("modulus must satisfy 2 <= d <= 2^63-1, got " + text);
  }
  return qline::Modulus(d);
}

qline::Residue reduce_signed(std::int64_t x, std::uint64_t d) {
  const auto sd = static_cast<std::int64_t>(d);
  const std::int64_t r = x % sd;
  return static_cast<qline::Residue>(r < 0 ? r + sd : r);
}

qline::Vec2 parse_vector(const std::string& text, const qline::Modulus& m) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw UsageError("vector must be given as b,c: '" + text + "'");
  }
  const std::uint64_t d = m.value();
  return qline::Vec2(m, reduce_signed(parse_i64(text.substr(0, comma), "vector"), d),
                     reduce_signed(parse_i64(text.substr(comma + 1), "vector"), d));
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  const std::uint64_t first = parse_u64(text.substr(0, dots), "range");
  const std::uint64_t last =
      dots == std::string::npos ? first : parse_u64(text.substr(dots + 2), "range");
  if (first < 2 || last < first) {
    throw UsageError("range must satisfy 2 <= first <= last, got " + text);
  }
  return {first, last};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Commutation structure of the single-qudit Pauli group over Z_d"};
  app.require_subcommand(1);

  std::string d_text;
  std::string vector_text;
  std::string range_text;
  bool as_json = false;
  bool as_dot = false;
  bool with_matrix = false;
  unsigned threads = 1;
  std::optional<std::uint64_t> budget;

  auto* analyze = app.add_subcommand("analyze", "Layer table and per-vector counts");
  analyze->add_option("d", d_text, "Modulus d >= 2")->required();
  analyze->add_option("--vector", vector_text, "Vector b,c (reduced mod d)");
  analyze->add_flag("--json", as_json, "Emit the JSON report");
  analyze->add_flag("--dot", as_dot, "Emit the DOT layer diagram instead");
  analyze->add_option("--budget", budget, "Cap on d^2 for --dot");

  auto* points = app.add_subcommand("points", "List the points of P1(Z_d)");
  points->add_option("d", d_text, "Modulus d >= 2")->required();
  points->add_flag("--json", as_json, "Emit JSON");
  points->add_option("--budget", budget, "Cap on the number of points");

  auto* verify = app.add_subcommand("verify", "Closed forms versus enumeration");
  verify->add_option("range", range_text, "d or first..last")->required();
  verify->add_flag("--matrix", with_matrix, "Include the dense matrix oracle (d <= 16)");
  verify->add_option("--threads", threads, "Worker threads");
  verify->add_option("--budget", budget, "Cap on d^2 per modulus");

  auto* dot = app.add_subcommand("layers-dot", "DOT diagram of vectors and points");
  dot->add_option("d", d_text, "Modulus d >= 2")->required();
  dot->add_option("--budget", budget, "Cap on d^2");

  auto* maximal = app.add_subcommand("maximal-sets",
                                     "Maximal sets of mutually commuting operators");
  maximal->add_option("d", d_text, "Modulus d >= 2")->required();
  maximal->add_option("--budget", budget, "Cap on d^2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) {
      const qline::Modulus m = parse_modulus(d_text);
      if (as_dot) {
        std::cout << qline::report::layers_dot(m, budget.value_or(qline::report::kDotScanCap));
        return kExitOk;
      }
      std::optional<qline::Vec2> v;
      if (!vector_text.empty()) v = parse_vector(vector_text, m);
      const auto r = qline::report::analyze(m, v);
      if (as_json) {
        std::cout << qline::report::to_json(r).dump(2) << "\n";
      } else {
        std::cout << qline::report::render_text(r);
      }
    } else if (points->parsed()) {
      const qline::Modulus m = parse_modulus(d_text);
      const auto cat = qline::enumerate_points(m, budget.value_or(qline::kPointCap));
      if (as_json) {
        std::cout << qline::report::points_json(cat).dump(2) << "\n";
      } else {
        std::cout << qline::report::points_text(cat);
      }
    } else if (verify->parsed()) {
      const auto [first, last] = parse_range(range_text);
      qline::VerifyOptions options;
      options.matrix = with_matrix;
      options.threads = threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                     : threads;
      options.scan_cap = budget.value_or(qline::kVerifyScanCap);
      const auto r = qline::verify_range(first, last, options);
      std::cout << qline::report::verify_text(r);
      if (!r.ok()) {
        for (const auto& t : r.checks) {
          if (!t.ok()) std::cerr << "counterexample: " << t.first_counterexample << "\n";
        }
        return kExitFailure;
      }
    } else if (dot->parsed()) {
      const qline::Modulus m = parse_modulus(d_text);
      std::cout << qline::report::layers_dot(m, budget.value_or(qline::report::kDotScanCap));
    } else if (maximal->parsed()) {
      const qline::Modulus m = parse_modulus(d_text);
      const auto sets =
          qline::maximal_commuting_sets(m, budget.value_or(qline::kCliqueVertexCap));
      std::cout << qline::report::maximal_sets_text(m, sets);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const qline::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << " (raise with --budget)\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
