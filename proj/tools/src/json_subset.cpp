#include "abelcat/cli/json_subset.hpp"

#include <cstdint>

namespace abelcat::cli {

LocatedError::LocatedError(const std::string& message, SourcePos pos)
    : InputError(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message),
      message_(message),
      pos_(pos) {}

const Value* Value::find(std::string_view key) const {
  for (const auto& [k, v] : members)
    if (k == key) return &v;
  return nullptr;
}

std::string_view kind_name(Value::Kind k) {
  switch (k) {
    case Value::Kind::Bool:
      return "boolean";
    case Value::Kind::Integer:
      return "integer";
    case Value::Kind::String:
      return "string";
    case Value::Kind::Array:
      return "array";
    case Value::Kind::Object:
      return "object";
  }
  return "value";
}

namespace {

constexpr std::size_t kMaxDepth = 64;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Value document() {
    skip_space();
    Value v = value(0);
    skip_space();
    if (!at_end()) fail("unexpected trailing content");
    return v;
  }

 private:
  bool at_end() const { return i_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[i_]; }

  void advance() {
    const auto c = static_cast<unsigned char>(text_[i_++]);
    if (c == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else if ((c & 0xC0) != 0x80) {
      ++pos_.column;  // count code points, not continuation bytes
    }
  }

  [[noreturn]] void fail(const std::string& message) const { throw LocatedError(message, pos_); }

  void skip_space() {
    while (!at_end()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        advance();
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  Value value(std::size_t depth) {
    if (depth > kMaxDepth) fail("nesting too deep");
    if (at_end()) fail("unexpected end of input");
    const char c = peek();
    if (c == '{') return object(depth);
    if (c == '[') return array(depth);
    if (c == '"') {
      Value v;
      v.kind = Value::Kind::String;
      v.pos = pos_;
      v.text = string();
      return v;
    }
    if (c == '-' || (c >= '0' && c <= '9')) return integer();
    if (text_.substr(i_, 4) == "true" || text_.substr(i_, 5) == "false") {
      Value v;
      v.kind = Value::Kind::Bool;
      v.pos = pos_;
      v.boolean = c == 't';
      for (std::size_t k = 0, n = v.boolean ? 4 : 5; k < n; ++k) advance();
      return v;
    }
    if (text_.substr(i_, 4) == "null") fail("null is not allowed");
    fail(std::string("unexpected character '") + c + "'");
  }

  Value object(std::size_t depth) {
    Value v;
    v.kind = Value::Kind::Object;
    v.pos = pos_;
    expect('{');
    skip_space();
    if (peek() == '}') {
      advance();
      return v;
    }
    while (true) {
      skip_space();
      if (peek() != '"') fail("expected a string key");
      const SourcePos key_pos = pos_;
      std::string key = string();
      if (v.find(key)) throw LocatedError("duplicate key \"" + key + "\"", key_pos);
      skip_space();
      expect(':');
      skip_space();
      v.members.emplace_back(std::move(key), value(depth + 1));
      skip_space();
      if (peek() == ',') {
        advance();
        continue;
      }
      if (peek() == '}') {
        advance();
        return v;
      }
      fail("expected ',' or '}'");
    }
  }

  Value array(std::size_t depth) {
    Value v;
    v.kind = Value::Kind::Array;
    v.pos = pos_;
    expect('[');
    skip_space();
    if (peek() == ']') {
      advance();
      return v;
    }
    while (true) {
      skip_space();
      v.items.push_back(value(depth + 1));
      skip_space();
      if (peek() == ',') {
        advance();
        continue;
      }
      if (peek() == ']') {
        advance();
        return v;
      }
      fail("expected ',' or ']'");
    }
  }

  Value integer() {
    Value v;
    v.kind = Value::Kind::Integer;
    v.pos = pos_;
    if (peek() == '-') {
      v.text += '-';
      advance();
    }
    if (!(peek() >= '0' && peek() <= '9')) fail("expected a digit");
    if (peek() == '0') {
      v.text += '0';
      advance();
      if (peek() >= '0' && peek() <= '9') fail("leading zeros are not allowed");
    }
    while (peek() >= '0' && peek() <= '9') {
      v.text += peek();
      advance();
    }
    if (peek() == '.' || peek() == 'e' || peek() == 'E') fail("only integers are allowed");
    if (v.text == "-0") v.text = "0";
    return v;
  }

  static void append_utf8(std::string& out, std::uint32_t cp) {
    if (cp < 0x80) {
      out += static_cast<char>(cp);
    } else if (cp < 0x800) {
      out += static_cast<char>(0xC0 | (cp >> 6));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
      out += static_cast<char>(0xE0 | (cp >> 12));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    }
  }

  std::string string() {
    expect('"');
    std::string out;
    while (true) {
      if (at_end()) fail("unterminated string");
      const char c = peek();
      if (c == '"') {
        advance();
        return out;
      }
      if (static_cast<unsigned char>(c) < 0x20) fail("control character in string");
      if (c != '\\') {
        out += c;
        advance();
        continue;
      }
      advance();
      const char e = peek();
      if (at_end()) fail("unterminated escape");
      advance();
      switch (e) {
        case '"':
          out += '"';
          break;
        case '\\':
          out += '\\';
          break;
        case '/':
          out += '/';
          break;
        case 'n':
          out += '\n';
          break;
        case 't':
          out += '\t';
          break;
        case 'r':
          out += '\r';
          break;
        case 'b':
          out += '\b';
          break;
        case 'f':
          out += '\f';
          break;
        case 'u': {
          std::uint32_t cp = 0;
          for (int k = 0; k < 4; ++k) {
            const char h = peek();
            int digit;
            if (h >= '0' && h <= '9') {
              digit = h - '0';
            } else if (h >= 'a' && h <= 'f') {
              digit = h - 'a' + 10;
            } else if (h >= 'A' && h <= 'F') {
              digit = h - 'A' + 10;
            } else {
              fail("bad \\u escape");
            }
            cp = cp * 16 + static_cast<std::uint32_t>(digit);
            advance();
          }
          if (cp >= 0xD800 && cp <= 0xDFFF) fail("surrogate escapes are not supported");
          append_utf8(out, cp);
          break;
        }
        default:
          fail(std::string("unknown escape '\\") + e + "'");
      }
    }
  }

  std::string_view text_;
  std::size_t i_ = 0;
  SourcePos pos_;
};

}  // namespace

Value parse_json_subset(std::string_view text) { return Parser(text).document(); }

}  // namespace abelcat::cli
