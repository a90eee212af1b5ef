#pragma once

// Plain-text module dumps: a self-contained record of dimension, parity
// vector, labels and one action matrix per acting generator.
//
//   glmn-module 1
//   field <p> <k> <modulus c0 ... ck>
//   algebra <m> <n>
//   dim <d>
//   parity <b_0> ... <b_{d-1}>
//   label <i> <text>            (d lines)
//   gen <E(i,j)>                (then d rows of field elements)

#include <iosfwd>
#include <string>
#include <vector>

#include "glmn/module.hpp"

namespace glmn {

struct ModuleDump {
  std::uint32_t p = 0;
  unsigned k = 0;
  std::vector<Coeff> modulus;
  int m = 0, n = 0;
  std::size_t dim = 0;
  std::vector<std::uint8_t> parity;
  std::vector<std::string> labels;
  std::vector<std::string> gens;
  std::vector<Matrix> action;
};

void write_module(std::ostream& out, const ModuleRep& M);
std::string dump_module(const ModuleRep& M);
/// Throws ParseError.
ModuleDump parse_module_dump(const std::string& text);

/// Parses "E(i,j)" (1-based) into a basis index. Throws ParseError.
int parse_unit_label(const SuperAlgebra& A, const std::string& label);

}  // namespace glmn
