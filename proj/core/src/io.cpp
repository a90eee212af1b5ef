#include "glmn/io.hpp"

#include <ostream>
#include <regex>
#include <sstream>

#include "glmn/error.hpp"

namespace glmn {

void write_module(std::ostream& out, const ModuleRep& M) {
  const Field& F = M.field();
  out << "glmn-module 1\n";
  out << "field " << F.characteristic() << ' ' << F.degree();
  for (Coeff c : F.modulus()) out << ' ' << c;
  out << "\nalgebra " << M.algebra.m() << ' ' << M.algebra.n() << "\ndim " << M.dim << "\nparity";
  for (auto b : M.parity) out << ' ' << int(b);
  out << '\n';
  for (std::size_t i = 0; i < M.dim; ++i)
    out << "label " << i << ' ' << (i < M.labels.size() ? M.labels[i] : std::string("-")) << '\n';
  for (std::size_t g = 0; g < M.gens.size(); ++g) {
    out << "gen " << M.algebra.label(M.gens[g]) << '\n';
    for (std::size_t r = 0; r < M.dim; ++r) {
      for (std::size_t c = 0; c < M.dim; ++c) out << (c ? " " : "") << F.format(M.action[g](r, c));
      out << '\n';
    }
  }
}

std::string dump_module(const ModuleRep& M) {
  std::ostringstream os;
  write_module(os, M);
  return os.str();
}

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, "module dump: " + what); }

std::string expect_line(std::istringstream& in, const std::string& key) {
  std::string line;
  if (!std::getline(in, line)) fail("missing '" + key + "' line");
  if (line.rfind(key, 0) != 0) fail("expected '" + key + "', got '" + line + "'");
  return line.substr(key.size());
}

}  // namespace

ModuleDump parse_module_dump(const std::string& text) {
  std::istringstream in(text);
  ModuleDump d;
  if (expect_line(in, "glmn-module") != " 1") fail("unsupported version");
  {
    std::istringstream ls(expect_line(in, "field"));
    if (!(ls >> d.p >> d.k)) fail("bad field line");
    Coeff c;
    while (ls >> c) d.modulus.push_back(c);
  }
  {
    std::istringstream ls(expect_line(in, "algebra"));
    if (!(ls >> d.m >> d.n)) fail("bad algebra line");
  }
  {
    std::istringstream ls(expect_line(in, "dim"));
    if (!(ls >> d.dim)) fail("bad dim line");
  }
  {
    std::istringstream ls(expect_line(in, "parity"));
    int b;
    while (ls >> b) d.parity.push_back(static_cast<std::uint8_t>(b));
    if (d.parity.size() != d.dim) fail("parity length differs from dim");
  }
  for (std::size_t i = 0; i < d.dim; ++i) {
    std::istringstream ls(expect_line(in, "label"));
    std::size_t idx;
    if (!(ls >> idx) || idx != i) fail("label index out of order");
    std::string rest;
    std::getline(ls >> std::ws, rest);
    d.labels.push_back(rest);
  }
  const Field F = [&] {
    try {
      return Field::make(d.p, d.k, d.modulus);
    } catch (const Error& e) {
      fail(std::string("bad field: ") + e.what());
    }
  }();
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("gen ", 0) != 0) fail("expected 'gen', got '" + line + "'");
    d.gens.push_back(line.substr(4));
    Matrix a(F, d.dim, d.dim);
    for (std::size_t r = 0; r < d.dim; ++r) {
      if (!std::getline(in, line)) fail("truncated matrix");
      std::istringstream ls(line);
      for (std::size_t c = 0; c < d.dim; ++c) {
        std::string tok;
        if (!(ls >> tok)) fail("short matrix row");
        try {
          a(r, c) = F.parse(tok);
        } catch (const Error& e) {
          fail(std::string("bad element: ") + e.what());
        }
      }
    }
    d.action.push_back(std::move(a));
  }
  return d;
}

int parse_unit_label(const SuperAlgebra& A, const std::string& label) {
  static const std::regex re(R"(\s*E\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
  std::smatch mt;
  if (!std::regex_match(label, mt, re)) throw Error(ErrorCode::ParseError, "bad unit label '" + label + "'");
  const int i = std::stoi(mt[1]) - 1, j = std::stoi(mt[2]) - 1;
  if (i < 0 || j < 0 || i >= A.size() || j >= A.size())
    throw Error(ErrorCode::ParseError, "unit label out of range '" + label + "'");
  return A.index(i, j);
}

}  // namespace glmn
