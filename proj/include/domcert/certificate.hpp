#pragma once

#include <iosfwd>

#include "domcert/polytope.hpp"

namespace domcert {

// Plain-text certificate, byte-stable for identical inputs:
//   domcert certificate v1
//   FIELD minpoly: [c0,...,cd]; interval: lo hi
//   ALPHA <polynomial in a>
//   PROBLEM sigma=...; rho=...; mode=...; class=pw1|pw2|tree|forest
//   SYSTEM-HASH <16 hex digits>
//   CONSTANT <polynomial in a>
//   SEEDS <count>            (one vector per line, coordinates comma separated)
//   X <count>
//   END
// Lines starting with '#' are comments and are ignored by the parser.
std::string format_certificate(const Certificate &cert);
Certificate parse_certificate(std::istream &in);
Certificate load_certificate(const std::string &path);
void save_certificate(const Certificate &cert, const std::string &path);

FieldPtr parse_field_header(const std::string &text);
AlgVector parse_alg_vector(const FieldPtr &f, const std::string &line);
std::string format_alg_vector(const AlgVector &v);

// Seed file: one vector per line, same coordinate syntax; '#' comments allowed.
std::vector<AlgVector> parse_vector_lines(std::istream &in, const FieldPtr &f);
std::vector<AlgVector> load_vector_file(const std::string &path, const FieldPtr &f);

}  // namespace domcert
