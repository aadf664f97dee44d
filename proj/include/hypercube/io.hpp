#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "hypercube/boolean_function.hpp"
#include "hypercube/fourier.hpp"

// Two plain-text formats.
//
// Truth table (.bfn):        Spectrum (.spec):
//   n 3                        n 2
//   00010111                   0 0.5
//                              1 0.5
//                              2 0.5
//                              3 -0.5
// The table line has one character per point, index 0 first, '1' marking
// f = -1.  Spectrum lines are "mask coefficient" with masks in increasing
// order; coefficients are written with shortest round-trip formatting, so
// write/read is bit-exact.
namespace hypercube {

// Malformed input; what() reads "origin:line: message".
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& origin, int line, const std::string& message)
        : std::runtime_error(origin + ":" + std::to_string(line) + ": " + message) {}
};

BooleanFunction read_bfn(std::istream& in, const std::string& origin = "<stream>");
BooleanFunction read_bfn_file(const std::string& path);
void write_bfn(std::ostream& out, const BooleanFunction& f);
void write_bfn_file(const std::string& path, const BooleanFunction& f);
std::string to_bfn_string(const BooleanFunction& f);
std::string table_bits(const BooleanFunction& f);  // just the 0/1 line

Spectrum read_spec(std::istream& in, const std::string& origin = "<stream>");
Spectrum read_spec_file(const std::string& path);
void write_spec(std::ostream& out, const Spectrum& s);
void write_spec_file(const std::string& path, const Spectrum& s);

std::string format_double(double v);  // shortest round-trip decimal

}  // namespace hypercube
