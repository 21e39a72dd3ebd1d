#pragma once

// Text formats. One directive per line, '#' starts a comment.
//
// Arrangement:
//   field rational | field cyclotomic N
//   dim L
//   hyperplane c1 ... cL            (central)
//   hyperplane c1 ... cL = c0       (affine: c . x = c0)
//
// Group:
//   field rational | field cyclotomic N
//   dim 2n
//   symplectic_form                 followed by 2n rows of 2n scalars
//   generator                       followed by 2n rows, repeated per generator

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symres/arrangement.hpp"
#include "symres/error.hpp"
#include "symres/exact_arith.hpp"
#include "symres/group.hpp"
#include "symres/matrix.hpp"

namespace symres {

inline constexpr unsigned max_conductor = 1000;
inline constexpr std::size_t max_ambient_dim = 4096;

namespace detail {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    Line line{number, {}};
    for (std::string tok; ss >> tok;) line.tokens.push_back(std::move(tok));
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] inline void fail_at(const Line& line, const std::string& what) {
  throw InvalidInput("line " + std::to_string(line.number) + ": " + what);
}

inline std::size_t parse_count(const Line& line, const std::string& token, std::size_t max) {
  if (token.empty() || token.size() > 9 || token.find_first_not_of("0123456789") != std::string::npos) {
    fail_at(line, "expected a nonnegative integer, got '" + token + "'");
  }
  const auto v = static_cast<std::size_t>(std::stoul(token));
  if (v > max) fail_at(line, "value " + token + " exceeds the limit " + std::to_string(max));
  return v;
}

inline FieldDescriptor parse_field(const Line& line) {
  const auto& t = line.tokens;
  if (t.size() == 2 && t[1] == "rational") return FieldDescriptor::rational();
  if (t.size() == 3 && t[1] == "cyclotomic") {
    const auto n = parse_count(line, t[2], max_conductor);
    if (n == 0) fail_at(line, "cyclotomic conductor must be positive");
    return FieldDescriptor::cyclotomic(static_cast<unsigned>(n));
  }
  fail_at(line, "expected 'field rational' or 'field cyclotomic N'");
}

inline Scalar parse_scalar_at(const Line& line, const std::string& token, const FieldDescriptor& f) {
  try {
    return parse_scalar(token, f);
  } catch (const InvalidInput& e) {
    fail_at(line, e.what());
  }
}

inline std::string join_row(const std::vector<Scalar>& row) {
  std::string s;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (j) s += ' ';
    s += row[j].to_string();
  }
  return s;
}

}  // namespace detail

inline Arrangement parse_arrangement(std::istream& in) {
  FieldDescriptor field = FieldDescriptor::rational();
  bool field_seen = false;
  std::optional<std::size_t> dim;
  std::vector<RawHyperplane> raw;
  std::vector<std::size_t> raw_lines;
  for (const auto& line : detail::tokenize(in)) {
    const auto& t = line.tokens;
    if (t[0] == "field") {
      if (field_seen || !raw.empty()) detail::fail_at(line, "'field' must appear once, before any hyperplane");
      field = detail::parse_field(line);
      field_seen = true;
    } else if (t[0] == "dim") {
      if (dim) detail::fail_at(line, "duplicate 'dim'");
      if (t.size() != 2) detail::fail_at(line, "expected 'dim L'");
      dim = detail::parse_count(line, t[1], max_ambient_dim);
    } else if (t[0] == "hyperplane") {
      if (!dim) detail::fail_at(line, "'dim' must precede the first hyperplane");
      const std::size_t index = raw.size();
      std::size_t ncoef = t.size() - 1;
      std::optional<Scalar> offset;
      if (t.size() >= 3 && t[t.size() - 2] == "=") {
        offset = detail::parse_scalar_at(line, t.back(), field);
        ncoef = t.size() - 3;
      }
      if (ncoef != *dim) {
        detail::fail_at(line, "hyperplane " + std::to_string(index) + " has " + std::to_string(ncoef) +
                                  " coefficients, expected " + std::to_string(*dim));
      }
      RawHyperplane h;
      for (std::size_t k = 1; k <= ncoef; ++k) {
        if (t[k] == "=") detail::fail_at(line, "misplaced '=' in hyperplane " + std::to_string(index));
        h.normal.push_back(detail::parse_scalar_at(line, t[k], field));
      }
      h.offset = std::move(offset);
      raw.push_back(std::move(h));
      raw_lines.push_back(line.number);
    } else {
      detail::fail_at(line, "unknown directive '" + t[0] + "'");
    }
  }
  if (!dim) throw InvalidInput("missing 'dim' directive");
  for (std::size_t i = 0; i < raw.size(); ++i) {
    bool zero = true;
    for (const auto& c : raw[i].normal) zero = zero && c.is_zero();
    if (zero) {
      throw InvalidInput("line " + std::to_string(raw_lines[i]) + ": hyperplane " + std::to_string(i) +
                         " has a zero normal vector");
    }
  }
  return build_arrangement(field, *dim, raw);
}

inline Arrangement parse_arrangement_text(const std::string& text) {
  std::istringstream in(text);
  return parse_arrangement(in);
}

inline Arrangement parse_arrangement_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open arrangement file '" + path + "'");
  return parse_arrangement(in);
}

inline std::string serialize_arrangement(const Arrangement& a) {
  std::string s = "field " + a.field().to_string() + "\n";
  s += "dim " + std::to_string(a.ambient_dim()) + "\n";
  for (const auto& h : a.hyperplanes()) {
    s += "hyperplane";
    if (!h.normal().empty()) s += " " + detail::join_row(h.normal());
    if (!h.is_linear()) s += " = " + h.offset().to_string();
    s += "\n";
  }
  return s;
}

inline MatrixGroup parse_group(std::istream& in) {
  const auto lines = detail::tokenize(in);
  FieldDescriptor field = FieldDescriptor::rational();
  bool field_seen = false;
  std::optional<std::size_t> dim;
  std::optional<ExactMatrix> form;
  std::vector<ExactMatrix> generators;

  std::size_t i = 0;
  auto read_matrix = [&](const detail::Line& header) {
    if (!dim) detail::fail_at(header, "'dim' must precede matrices");
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t r = 0; r < *dim; ++r) {
      if (i >= lines.size()) detail::fail_at(header, "matrix ends early: expected " + std::to_string(*dim) + " rows");
      const auto& line = lines[i++];
      if (line.tokens.size() != *dim) {
        detail::fail_at(line, "matrix row has " + std::to_string(line.tokens.size()) + " entries, expected " +
                                  std::to_string(*dim));
      }
      std::vector<Scalar> row;
      for (const auto& tok : line.tokens) row.push_back(detail::parse_scalar_at(line, tok, field));
      rows.push_back(std::move(row));
    }
    return ExactMatrix::from_rows(field, rows);
  };

  while (i < lines.size()) {
    const auto& line = lines[i++];
    const auto& t = line.tokens;
    if (t[0] == "field") {
      if (field_seen || dim) detail::fail_at(line, "'field' must appear once, before 'dim'");
      field = detail::parse_field(line);
      field_seen = true;
    } else if (t[0] == "dim") {
      if (dim) detail::fail_at(line, "duplicate 'dim'");
      if (t.size() != 2) detail::fail_at(line, "expected 'dim 2n'");
      dim = detail::parse_count(line, t[1], 64);
      if (*dim == 0 || *dim % 2 != 0) detail::fail_at(line, "symplectic dimension must be positive and even");
    } else if (t[0] == "symplectic_form" && t.size() == 1) {
      if (form) detail::fail_at(line, "duplicate 'symplectic_form'");
      form = read_matrix(line);
    } else if (t[0] == "generator" && t.size() == 1) {
      generators.push_back(read_matrix(line));
    } else {
      detail::fail_at(line, "unknown directive '" + t[0] + "'");
    }
  }
  if (!dim) throw InvalidInput("missing 'dim' directive");
  if (!form) throw InvalidInput("missing 'symplectic_form'");
  return MatrixGroup(field, *dim, std::move(*form), std::move(generators));
}

inline MatrixGroup parse_group_text(const std::string& text) {
  std::istringstream in(text);
  return parse_group(in);
}

inline MatrixGroup parse_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open group file '" + path + "'");
  return parse_group(in);
}

inline std::string serialize_group(const FieldDescriptor& field, const ExactMatrix& form,
                                   const std::vector<ExactMatrix>& generators) {
  std::string s = "field " + field.to_string() + "\n";
  s += "dim " + std::to_string(form.rows()) + "\n";
  auto matrix = [&](const ExactMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) s += detail::join_row(m.row(r)) + "\n";
  };
  s += "symplectic_form\n";
  matrix(form);
  for (const auto& g : generators) {
    s += "generator\n";
    matrix(g);
  }
  return s;
}

inline std::string serialize_group(const MatrixGroup& g) { return serialize_group(g.field(), g.form(), g.generators()); }

}  // namespace symres
