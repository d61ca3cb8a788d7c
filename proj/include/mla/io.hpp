#pragma once

#include <string>
#include <vector>

#include "mla/algebra.hpp"
#include "mla/errors.hpp"

namespace mla {

class ParseError : public MlaError {
 public:
  using MlaError::MlaError;
};

// On-disk form of an algebra: a JSON object with keys name, order, identity,
// mul, star (order x order integer matrices) and optionally elements.
struct AlgebraFile {
  std::string name;
  int order = 0;
  Elem identity = 0;
  std::vector<Elem> mul;  // row-major
  std::vector<Elem> star;
  std::vector<std::string> elements;
};

// Shape and range checks only; `source` prefixes error messages.
AlgebraFile parse_algebra_file(const std::string& text, const std::string& source = "<input>");
AlgebraFile load_algebra_file(const std::string& path);

// Group checks happen here (InvalidAlgebra); the star axioms are left to verify_mla.
AlgebraPtr to_algebra(const AlgebraFile& file, const AlgebraLimits& limits = {});

AlgebraFile to_file(const MultLieAlgebra& a, const std::string& name);
std::string to_json_text(const AlgebraFile& file);

}  // namespace mla
