#pragma once

#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>

#include "agd/agcode.hpp"

namespace agd {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A code-spec file resolved into the live objects. `hash` is a 16-hex-digit
// FNV-1a digest of the canonical (key-sorted, whitespace-free) JSON text.
struct CodeBundle {
  std::string name;
  FieldSpec field;
  CurveSpec curve;
  int m = 0;
  int t = -1;  // optional in the file
  std::string canonical;
  std::string hash;
  std::shared_ptr<const Field> F;
  std::shared_ptr<const Curve> C;
  std::shared_ptr<const Code> code;
};

CodeBundle parse_code_spec(const std::string& json_text);
CodeBundle load_code_spec(const std::string& path);
std::string fnv1a_hex(const std::string& s);

// Words are n whitespace-separated logs (-1 for zero); '#' starts a comment.
Word parse_word(const std::string& text, const Code& code);
Word load_word(const std::string& path, const Code& code);
void write_word(std::ostream& os, const Word& w);

// Error files hold one `index value_log` pair per line.
ErrorPattern parse_errors(const std::string& text, const Code& code);
ErrorPattern load_errors(const std::string& path, const Code& code);
void write_errors(std::ostream& os, const ErrorPattern& e);

std::string read_file(const std::string& path);

}  // namespace agd
