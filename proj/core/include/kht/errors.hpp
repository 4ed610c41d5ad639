#pragma once

#include <stdexcept>
#include <string>

namespace kht {

enum class Errc {
  duplicate_label,
  not_a_topology,
  not_continuous,
  not_clopen,
  space_mismatch,
  size_cap,
  not_clopen_map,
  not_discrete_base,
  syntax,
  unknown_space,
  unbound_variable,
  type_error,
  io,
  schema,
  validation,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::duplicate_label: return "DuplicateLabel";
    case Errc::not_a_topology: return "NotATopology";
    case Errc::not_continuous: return "NotContinuous";
    case Errc::not_clopen: return "NotClopen";
    case Errc::space_mismatch: return "SpaceMismatch";
    case Errc::size_cap: return "SizeCap";
    case Errc::not_clopen_map: return "NotClopenMap";
    case Errc::not_discrete_base: return "NotDiscreteBase";
    case Errc::syntax: return "SyntaxError";
    case Errc::unknown_space: return "UnknownSpace";
    case Errc::unbound_variable: return "UnboundVariable";
    case Errc::type_error: return "TypeError";
    case Errc::io: return "IoError";
    case Errc::schema: return "SchemaError";
    case Errc::validation: return "ValidationError";
  }
  return "Error";
}

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}
  Error(Errc code, const std::string& message, int line, int col)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message + " (line " +
                           std::to_string(line) + ", col " + std::to_string(col) + ")"),
        code_(code), line_(line), col_(col) {}

  Errc code() const { return code_; }
  int line() const { return line_; }  // 1-based, 0 when not positional
  int col() const { return col_; }

private:
  Errc code_;
  int line_ = 0;
  int col_ = 0;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace kht
