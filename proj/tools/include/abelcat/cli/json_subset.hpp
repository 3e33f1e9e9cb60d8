#pragma once

// A strict JSON subset: objects, arrays, strings, integers of any size and
// booleans. No null, no fractions or exponents, no duplicate keys. Every
// value remembers where it started so later validation can point at it.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "abelcat/errors.hpp"

namespace abelcat::cli {

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

/// An input error tied to a place in the input text.
class LocatedError : public InputError {
 public:
  LocatedError(const std::string& message, SourcePos pos);
  const std::string& message() const { return message_; }
  SourcePos pos() const { return pos_; }

 private:
  std::string message_;
  SourcePos pos_;
};

struct Value {
  enum class Kind { Bool, Integer, String, Array, Object };

  Kind kind = Kind::Bool;
  SourcePos pos;
  bool boolean = false;
  std::string text;  // string contents, or the integer's decimal digits
  std::vector<Value> items;
  std::vector<std::pair<std::string, Value>> members;  // in file order

  const Value* find(std::string_view key) const;
};

std::string_view kind_name(Value::Kind k);

/// Throws LocatedError on the first syntax error.
Value parse_json_subset(std::string_view text);

}  // namespace abelcat::cli
