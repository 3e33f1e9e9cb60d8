#include "abelcat/cli/diagram_file.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "abelcat/fgab.hpp"
#include "abelcat/vecfp.hpp"

namespace abelcat::cli {

using intlin::BigInt;

std::string_view to_string(AssertionKind k) {
  switch (k) {
    case AssertionKind::Commutes:
      return "commutes";
    case AssertionKind::ExactAt:
      return "exact_at";
    case AssertionKind::ShortExact:
      return "short_exact";
    case AssertionKind::ShortFive:
      return "short_five";
    case AssertionKind::ShortFiveTrace:
      return "short_five_trace";
    case AssertionKind::NineLemma:
      return "nine_lemma";
  }
  return "unknown";
}

const std::vector<std::string>& ladder_keys() {
  static const std::vector<std::string> keys{"f", "g", "f_prime", "g_prime", "alpha", "beta", "gamma"};
  return keys;
}

const std::vector<std::string>& grid_keys() {
  static const std::vector<std::string> keys{"f1",     "g1",     "f2",    "g2",    "f3",     "g3",
                                             "alpha1", "alpha2", "beta1", "beta2", "gamma1", "gamma2"};
  return keys;
}

const ObjectDecl& DiagramFile::object(std::string_view name) const {
  for (const auto& o : objects)
    if (o.name == name) return o;
  throw InputError("unknown object '" + std::string(name) + "'");
}

const MorphismDecl& DiagramFile::morphism(std::string_view name) const {
  for (const auto& m : morphisms)
    if (m.name == name) return m;
  throw InputError("unknown morphism '" + std::string(name) + "'");
}

namespace {

[[noreturn]] void fail(const std::string& message, SourcePos pos) { throw LocatedError(message, pos); }

const Value& require_kind(const Value& v, Value::Kind kind, const std::string& what) {
  if (v.kind != kind) {
    fail(what + " must be " + std::string(kind_name(kind)) + ", found " + std::string(kind_name(v.kind)), v.pos);
  }
  return v;
}

void reject_unknown_keys(const Value& obj, const std::vector<std::string>& allowed, const std::string& where) {
  for (const auto& [key, val] : obj.members) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      fail("unknown key \"" + key + "\" in " + where, val.pos);
    }
  }
}

const Value& require_key(const Value& obj, const std::string& key, const std::string& where) {
  const Value* v = obj.find(key);
  if (!v) fail("missing key \"" + key + "\" in " + where, obj.pos);
  return *v;
}

BigInt to_bigint(const Value& v, const std::string& what) {
  require_kind(v, Value::Kind::Integer, what);
  return BigInt(v.text);
}

std::uint64_t to_count(const Value& v, const std::string& what) {
  const BigInt n = to_bigint(v, what);
  if (n < 0) fail(what + " must be nonnegative", v.pos);
  if (n > std::numeric_limits<std::uint32_t>::max()) fail(what + " is too large", v.pos);
  return static_cast<std::uint64_t>(n);
}

std::size_t object_rank(const DiagramFile& df, const ObjectDecl& o) {
  return df.category == CategoryTag::Fgab ? o.factors.size() : o.dim;
}

void parse_objects(const Value& v, DiagramFile& df) {
  require_kind(v, Value::Kind::Object, "\"objects\"");
  for (const auto& [name, val] : v.members) {
    if (name.empty()) fail("object names must be nonempty", val.pos);
    ObjectDecl o;
    o.name = name;
    o.pos = val.pos;
    if (df.category == CategoryTag::Fgab) {
      require_kind(val, Value::Kind::Array, "object '" + name + "'");
      for (const auto& item : val.items) {
        BigInt d = to_bigint(item, "invariant factor of '" + name + "'");
        if (d < 0) fail("invariant factors must be nonnegative", item.pos);
        o.factors.push_back(d);
      }
      try {
        fgab::FgGroup::from_canonical(o.factors);
      } catch (const InputError& e) {
        const auto canon = fgab::normalize_object(o.factors);
        fail("object '" + name + "' is not in canonical invariant-factor form (" + e.what() + "; canonical form is " +
                 canon.to_string() + ")",
             val.pos);
      }
    } else {
      o.dim = static_cast<std::size_t>(to_count(val, "dimension of '" + name + "'"));
    }
    df.objects.push_back(std::move(o));
  }
}

void parse_morphisms(const Value& v, DiagramFile& df) {
  require_kind(v, Value::Kind::Object, "\"morphisms\"");
  for (const auto& [name, val] : v.members) {
    if (name.empty()) fail("morphism names must be nonempty", val.pos);
    const std::string where = "morphism '" + name + "'";
    require_kind(val, Value::Kind::Object, where);
    reject_unknown_keys(val, {"src", "dst", "matrix"}, where);
    MorphismDecl m;
    m.name = name;
    m.pos = val.pos;
    const Value& src = require_kind(require_key(val, "src", where), Value::Kind::String, where + " src");
    const Value& dst = require_kind(require_key(val, "dst", where), Value::Kind::String, where + " dst");
    m.src = src.text;
    m.dst = dst.text;
    const ObjectDecl* so = nullptr;
    const ObjectDecl* dso = nullptr;
    for (const auto& o : df.objects) {
      if (o.name == m.src) so = &o;
      if (o.name == m.dst) dso = &o;
    }
    if (!so) fail(where + " references undeclared object '" + m.src + "'", src.pos);
    if (!dso) fail(where + " references undeclared object '" + m.dst + "'", dst.pos);

    const Value& matrix = require_kind(require_key(val, "matrix", where), Value::Kind::Array, where + " matrix");
    m.matrix_pos = matrix.pos;
    const std::size_t rows = object_rank(df, *dso);
    const std::size_t cols = object_rank(df, *so);
    if (matrix.items.size() != rows) {
      fail(where + " matrix has " + std::to_string(matrix.items.size()) + " rows, expected " + std::to_string(rows) +
               " (rank of " + m.dst + ")",
           matrix.pos);
    }
    for (const auto& row : matrix.items) {
      require_kind(row, Value::Kind::Array, where + " matrix row");
      if (row.items.size() != cols) {
        fail(where + " matrix row has " + std::to_string(row.items.size()) + " entries, expected " +
                 std::to_string(cols) + " (rank of " + m.src + ")",
             row.pos);
      }
      std::vector<BigInt> entries;
      std::vector<SourcePos> positions;
      for (const auto& e : row.items) {
        entries.push_back(to_bigint(e, where + " matrix entry"));
        positions.push_back(e.pos);
      }
      m.rows.push_back(std::move(entries));
      m.entry_pos.push_back(std::move(positions));
    }
    df.morphisms.push_back(std::move(m));
  }
}

std::string morphism_ref(const Value& v, const DiagramFile& df) {
  require_kind(v, Value::Kind::String, "assertion argument");
  for (const auto& m : df.morphisms)
    if (m.name == v.text) return v.text;
  fail("assertion references undeclared morphism '" + v.text + "'", v.pos);
}

AssertionKind parse_kind(const Value& v) {
  require_kind(v, Value::Kind::String, "\"kind\"");
  for (auto k : {AssertionKind::Commutes, AssertionKind::ExactAt, AssertionKind::ShortExact, AssertionKind::ShortFive,
                 AssertionKind::ShortFiveTrace, AssertionKind::NineLemma}) {
    if (v.text == to_string(k)) return k;
  }
  fail("unknown assertion kind \"" + v.text + "\"", v.pos);
}

AssertionDecl parse_assertion(const Value& v, const DiagramFile& df) {
  require_kind(v, Value::Kind::Object, "assertion");
  AssertionDecl a;
  a.pos = v.pos;
  a.kind = parse_kind(require_key(v, "kind", "assertion"));
  const std::string where = std::string(to_string(a.kind)) + " assertion";
  const Value& args = require_key(v, "args", where);

  switch (a.kind) {
    case AssertionKind::Commutes:
    case AssertionKind::ExactAt:
    case AssertionKind::ShortExact: {
      reject_unknown_keys(v, {"kind", "args"}, where);
      require_kind(args, Value::Kind::Array, where + " args");
      const bool pair = a.kind != AssertionKind::Commutes;
      if (pair && args.items.size() != 2) fail(where + " takes exactly two morphisms", args.pos);
      if (!pair && args.items.empty()) fail(where + " needs at least one morphism", args.pos);
      std::set<std::string> seen;
      for (const auto& item : args.items) {
        a.args.push_back(morphism_ref(item, df));
        if (!pair && !seen.insert(a.args.back()).second) fail("morphism listed twice", item.pos);
      }
      break;
    }
    case AssertionKind::ShortFive:
    case AssertionKind::ShortFiveTrace:
    case AssertionKind::NineLemma: {
      std::vector<std::string> allowed{"kind", "args"};
      if (a.kind == AssertionKind::ShortFive) allowed.push_back("mode");
      if (a.kind == AssertionKind::NineLemma) allowed.push_back("direction");
      reject_unknown_keys(v, allowed, where);
      require_kind(args, Value::Kind::Object, where + " args");
      const auto& keys = a.kind == AssertionKind::NineLemma ? grid_keys() : ladder_keys();
      reject_unknown_keys(args, keys, where + " args");
      for (const auto& key : keys) a.args.push_back(morphism_ref(require_key(args, key, where + " args"), df));
      if (const Value* mode = v.find("mode")) {
        require_kind(*mode, Value::Kind::String, "\"mode\"");
        try {
          a.mode = parse_short_five_mode(mode->text);
        } catch (const InputError& e) {
          fail(e.what(), mode->pos);
        }
      }
      if (const Value* dir = v.find("direction")) {
        require_kind(*dir, Value::Kind::String, "\"direction\"");
        try {
          a.direction = parse_nine_direction(dir->text);
        } catch (const InputError& e) {
          fail(e.what(), dir->pos);
        }
      }
      break;
    }
  }
  return a;
}

}  // namespace

DiagramFile parse_diagram_file(std::string_view text) {
  const Value root = parse_json_subset(text);
  require_kind(root, Value::Kind::Object, "the document");
  reject_unknown_keys(root, {"category", "prime", "objects", "morphisms", "assertions"}, "the document");

  DiagramFile df;
  const Value& cat = require_kind(require_key(root, "category", "the document"), Value::Kind::String, "\"category\"");
  if (cat.text == "fgab") {
    df.category = CategoryTag::Fgab;
    if (const Value* p = root.find("prime")) fail("\"prime\" is only allowed with category \"vecfp\"", p->pos);
  } else if (cat.text == "vecfp") {
    df.category = CategoryTag::Vecfp;
    const Value& p = require_key(root, "prime", "a vecfp document");
    const BigInt prime = to_bigint(p, "\"prime\"");
    if (prime < 2 || prime > std::numeric_limits<std::uint64_t>::max() ||
        !vecfp::is_prime(static_cast<std::uint64_t>(prime))) {
      fail("\"prime\" must be a prime that fits in 64 bits", p.pos);
    }
    df.prime = static_cast<std::uint64_t>(prime);
  } else {
    fail("unknown category \"" + cat.text + "\" (expected \"fgab\" or \"vecfp\")", cat.pos);
  }

  parse_objects(require_key(root, "objects", "the document"), df);
  if (const Value* ms = root.find("morphisms")) parse_morphisms(*ms, df);
  if (const Value* as = root.find("assertions")) {
    require_kind(*as, Value::Kind::Array, "\"assertions\"");
    for (const auto& item : as->items) df.assertions.push_back(parse_assertion(item, df));
  }
  return df;
}

}  // namespace abelcat::cli
