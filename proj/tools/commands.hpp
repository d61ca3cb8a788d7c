#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mla/algebra.hpp"
#include "mla/morphism.hpp"

namespace mla::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidAlgebra = 1,  // verify found a violated axiom
  kInputError = 2,      // unreadable input, bad flags
  kDomainError = 3,     // the request does not apply (not an ideal, size caps, ...)
  kRedAlert = 4,        // a computation contradicts a result that should always hold
};

// Command output: an echo of the inputs and a list of named findings, printed
// either as indented text or as JSON.
struct Report {
  std::string command;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  nlohmann::ordered_json findings = nlohmann::ordered_json::array();
  std::optional<double> timing_ms;

  nlohmann::ordered_json& add(const std::string& name);
  std::string text() const;
  std::string json() const;
};

// Cycle notation "(0 1)(2 3)", an image list "1,0,3,2" or "id".
Perm parse_perm(const std::string& text, int n);
// "0,1" or "{0,1}".
std::vector<Elem> parse_index_list(const std::string& text);

// A path to an algebra file, or a catalog name looked up in $MLA_CATALOG or
// the bundled catalog directory.
std::string resolve_algebra_path(const std::string& arg);
std::string catalog_dir();

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mla::cli
