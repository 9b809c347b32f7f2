#include "homhopf/structfile.hpp"

#include "homhopf/corpus.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <sstream>

#include "json.hpp"

namespace homhopf::cli {

using nlohmann::json;

LocatedError::LocatedError(const std::string& kind, const std::string& what, std::size_t line, std::size_t column)
    : Error(line > 0 ? kind + " at " + std::to_string(line) + ":" + std::to_string(column) + ": " + what
                     : kind + ": " + what),
      line_(line),
      column_(column) {}

namespace {

// ---------------------------------------------------------------------------
// JSON reading with source positions

/// Forward iterator over the text that publishes how far the lexer has read.
struct TrackingIterator {
  using iterator_category = std::forward_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  const char* p = nullptr;
  const char** cursor = nullptr;

  reference operator*() const { return *p; }
  TrackingIterator& operator++() {
    ++p;
    if (cursor) *cursor = p;
    return *this;
  }
  TrackingIterator operator++(int) {
    TrackingIterator old = *this;
    ++*this;
    return old;
  }
  friend bool operator==(const TrackingIterator& a, const TrackingIterator& b) { return a.p == b.p; }
  friend bool operator!=(const TrackingIterator& a, const TrackingIterator& b) { return a.p != b.p; }
};

struct Position {
  std::size_t line = 0;
  std::size_t column = 0;
};

class Locator {
 public:
  explicit Locator(std::string_view text) : text_(text) {
    line_starts_.push_back(0);
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '\n') line_starts_.push_back(i + 1);
    }
  }

  Position at_offset(std::size_t offset) const {
    auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
    std::size_t line = static_cast<std::size_t>(it - line_starts_.begin());
    return {line, offset - line_starts_[line - 1] + 1};
  }

  void record(const std::string& pointer, std::size_t offset) { offsets_[pointer] = offset; }

  /// Position of the value at a JSON pointer, falling back to its closest recorded ancestor.
  Position at(std::string pointer) const {
    while (true) {
      auto it = offsets_.find(pointer);
      if (it != offsets_.end()) return at_offset(it->second);
      auto slash = pointer.rfind('/');
      if (slash == std::string::npos) return {};
      pointer.erase(slash);
    }
  }

 private:
  std::string_view text_;
  std::vector<std::size_t> line_starts_;
  std::map<std::string, std::size_t> offsets_;
};

std::string escape_pointer_token(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

/// SAX handler that builds the DOM, rejects duplicate keys and records where every value starts.
class LocatingSax {
 public:
  LocatingSax(json& root, std::string_view text, const char** cursor, Locator& locator)
      : dom_(root, false), text_(text), cursor_(cursor), locator_(locator) {}

  bool null() { return value(), dom_.null(); }
  bool boolean(bool v) { return value(), dom_.boolean(v); }
  bool number_integer(json::number_integer_t v) { return value(), dom_.number_integer(v); }
  bool number_unsigned(json::number_unsigned_t v) { return value(), dom_.number_unsigned(v); }
  bool number_float(json::number_float_t v, const std::string& s) { return value(), dom_.number_float(v, s); }
  bool string(std::string& v) { return value(), dom_.string(v); }
  bool binary(json::binary_t& v) { return value(), dom_.binary(v); }

  bool start_object(std::size_t n) {
    value();
    frames_.push_back(Frame{true, {}, 0, {}, current_pointer_});
    return dom_.start_object(n);
  }
  bool key(std::string& k) {
    Frame& f = frames_.back();
    std::size_t start = token_start();
    if (!f.keys.insert(k).second) {
      Position p = locator_.at_offset(start);
      throw SyntaxError("duplicate key \"" + k + "\"", p.line, p.column);
    }
    f.key = k;
    last_end_ = consumed();
    return dom_.key(k);
  }
  bool end_object() {
    frames_.pop_back();
    last_end_ = consumed();
    return dom_.end_object();
  }
  bool start_array(std::size_t n) {
    value();
    frames_.push_back(Frame{false, {}, 0, {}, current_pointer_});
    return dom_.start_array(n);
  }
  bool end_array() {
    frames_.pop_back();
    last_end_ = consumed();
    return dom_.end_array();
  }

  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception& ex) {
    std::string msg = ex.what();
    auto colon = msg.find("syntax error");
    if (colon != std::string::npos) msg = msg.substr(colon);
    Position p = locator_.at_offset(consumed() > 0 ? consumed() - 1 : 0);
    throw SyntaxError(msg, p.line, p.column);
  }

 private:
  struct Frame {
    bool object;
    std::string key;
    std::size_t index;
    std::set<std::string> keys;
    std::string pointer;
  };

  std::size_t consumed() const { return static_cast<std::size_t>(*cursor_ - text_.data()); }

  std::size_t token_start() const {
    std::size_t i = last_end_;
    while (i < text_.size() && (text_[i] == ' ' || text_[i] == '\t' || text_[i] == '\n' || text_[i] == '\r' ||
                                text_[i] == ',' || text_[i] == ':')) {
      ++i;
    }
    return i;
  }

  void value() {
    std::string pointer;
    if (!frames_.empty()) {
      Frame& f = frames_.back();
      pointer = f.pointer + "/" + (f.object ? escape_pointer_token(f.key) : std::to_string(f.index++));
    }
    locator_.record(pointer, token_start());
    current_pointer_ = pointer;
    last_end_ = consumed();
  }

  nlohmann::detail::json_sax_dom_parser<json> dom_;
  std::string_view text_;
  const char** cursor_;
  Locator& locator_;
  std::vector<Frame> frames_;
  std::string current_pointer_;
  std::size_t last_end_ = 0;
};

// ---------------------------------------------------------------------------
// Semantic reading

class Reader {
 public:
  explicit Reader(const Locator& loc) : loc_(loc) {}

  template <class E>
  [[noreturn]] void fail(const std::string& pointer, const std::string& what) const {
    Position p = loc_.at(pointer);
    throw E(what + (pointer.empty() ? "" : " (at " + pointer + ")"), p.line, p.column);
  }

  const json& member(const json& obj, const std::string& key, const std::string& ptr) const {
    auto it = obj.find(key);
    if (it == obj.end()) fail<ShapeError>(ptr, "missing key \"" + key + "\"");
    return *it;
  }

  void only_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& ptr) const {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
      bool ok = false;
      for (const char* a : allowed) ok = ok || it.key() == a;
      if (!ok) fail<ShapeError>(ptr + "/" + escape_pointer_token(it.key()), "unexpected key \"" + it.key() + "\"");
    }
  }

  const json& object(const json& v, const std::string& ptr) const {
    if (!v.is_object()) fail<ShapeError>(ptr, "expected an object");
    return v;
  }
  const json& array(const json& v, const std::string& ptr) const {
    if (!v.is_array()) fail<ShapeError>(ptr, "expected an array");
    return v;
  }
  std::string string(const json& v, const std::string& ptr) const {
    if (!v.is_string()) fail<ShapeError>(ptr, "expected a string");
    return v.get<std::string>();
  }
  long integer(const json& v, const std::string& ptr) const {
    if (!v.is_number_integer()) fail<ShapeError>(ptr, "expected an integer");
    return v.get<long>();
  }
  std::size_t index(const json& v, const std::string& ptr) const {
    if (!v.is_number_unsigned()) fail<ShapeError>(ptr, "expected a non-negative integer");
    return v.get<std::size_t>();
  }
  std::vector<std::string> strings(const json& v, const std::string& ptr) const {
    std::vector<std::string> out;
    std::size_t i = 0;
    for (const auto& e : array(v, ptr)) out.push_back(string(e, ptr + "/" + std::to_string(i++)));
    return out;
  }
  Scalar rational(const json& v, Field field, const std::string& ptr) const {
    std::string s = string(v, ptr);
    try {
      return Scalar::parse(s, field);
    } catch (const homhopf::Error& e) {
      fail<BadRationalAt>(ptr, e.what());
    }
  }

 private:
  const Locator& loc_;
};

std::string key_ptr(const std::string& base, const std::string& key) { return base + "/" + escape_pointer_token(key); }

void read_tensor_values(const Reader& r, const json& v, const std::vector<std::size_t>& dims, std::size_t depth,
                        Field field, const std::string& ptr, std::vector<Scalar>& out) {
  if (depth == dims.size()) {
    out.push_back(r.rational(v, field, ptr));
    return;
  }
  const json& arr = r.array(v, ptr);
  if (arr.size() != dims[depth]) {
    r.fail<ShapeError>(ptr, "expected " + std::to_string(dims[depth]) + " entries, found " +
                                std::to_string(arr.size()));
  }
  for (std::size_t i = 0; i < arr.size(); ++i) {
    read_tensor_values(r, arr[i], dims, depth + 1, field, ptr + "/" + std::to_string(i), out);
  }
}

StructureFile read_file(const json& root, const Locator& loc) {
  Reader r(loc);
  r.object(root, "");
  r.only_keys(root, {"bundles", "field", "format_version", "main", "maps", "spaces", "tensors"}, "");
  StructureFile file;
  file.format_version = r.integer(r.member(root, "format_version", ""), "/format_version");
  if (file.format_version != 1) r.fail<ShapeError>("/format_version", "unsupported format_version");
  try {
    file.field = Field::parse(r.string(r.member(root, "field", ""), "/field"));
  } catch (const LocatedError&) {
    throw;
  } catch (const homhopf::Error& e) {
    r.fail<ShapeError>("/field", e.what());
  }
  if (root.contains("main")) file.main = r.string(root["main"], "/main");

  const json& spaces = r.object(r.member(root, "spaces", ""), "/spaces");
  for (auto it = spaces.begin(); it != spaces.end(); ++it) {
    std::string p = key_ptr("/spaces", it.key());
    r.object(it.value(), p);
    r.only_keys(it.value(), {"basis", "fuse"}, p);
    SpaceDecl d;
    if (it.value().contains("basis") == it.value().contains("fuse")) {
      r.fail<ShapeError>(p, "a space has exactly one of \"basis\" or \"fuse\"");
    }
    if (it.value().contains("basis")) d.basis = r.strings(it.value()["basis"], p + "/basis");
    else d.fuse = r.strings(it.value()["fuse"], p + "/fuse");
    file.spaces.emplace(it.key(), std::move(d));
  }

  if (root.contains("maps")) {
    const json& maps = r.object(root["maps"], "/maps");
    for (auto it = maps.begin(); it != maps.end(); ++it) {
      std::string p = key_ptr("/maps", it.key());
      r.object(it.value(), p);
      r.only_keys(it.value(), {"codomain", "domain", "entries"}, p);
      MapDecl d;
      d.domain = r.strings(r.member(it.value(), "domain", p), p + "/domain");
      d.codomain = r.strings(r.member(it.value(), "codomain", p), p + "/codomain");
      const json& entries = r.array(r.member(it.value(), "entries", p), p + "/entries");
      for (std::size_t i = 0; i < entries.size(); ++i) {
        std::string ep = p + "/entries/" + std::to_string(i);
        const json& e = r.array(entries[i], ep);
        if (e.size() != 3) r.fail<ShapeError>(ep, "an entry is [row, col, \"value\"]");
        MapEntry m{r.index(e[0], ep + "/0"), r.index(e[1], ep + "/1"), r.rational(e[2], file.field, ep + "/2")};
        d.entries.push_back(std::move(m));
      }
      file.maps.emplace(it.key(), std::move(d));
    }
  }

  if (root.contains("tensors")) {
    const json& tensors = r.object(root["tensors"], "/tensors");
    for (auto it = tensors.begin(); it != tensors.end(); ++it) {
      std::string p = key_ptr("/tensors", it.key());
      r.object(it.value(), p);
      r.only_keys(it.value(), {"inputs", "legs", "values"}, p);
      TensorDecl d;
      d.legs = r.strings(r.member(it.value(), "legs", p), p + "/legs");
      d.inputs = r.index(r.member(it.value(), "inputs", p), p + "/inputs");
      if (d.inputs > d.legs.size()) r.fail<ShapeError>(p + "/inputs", "more inputs than legs");
      std::vector<std::size_t> dims;
      for (std::size_t i = 0; i < d.legs.size(); ++i) {
        auto s = file.spaces.find(d.legs[i]);
        if (s == file.spaces.end()) {
          r.fail<UnknownReference>(p + "/legs/" + std::to_string(i), "no space \"" + d.legs[i] + "\"");
        }
        // Dimension of a fused space is resolved later; atoms are known here.
        std::size_t dim = 1;
        std::vector<std::string> stack{d.legs[i]};
        while (!stack.empty()) {
          std::string name = stack.back();
          stack.pop_back();
          auto sp = file.spaces.find(name);
          if (sp == file.spaces.end()) {
            r.fail<UnknownReference>(p + "/legs/" + std::to_string(i), "no space \"" + name + "\"");
          }
          if (!sp->second.fuse.empty()) {
            if (stack.size() > file.spaces.size()) r.fail<ShapeError>(p, "cyclic fused space");
            for (const auto& part : sp->second.fuse) stack.push_back(part);
          } else {
            dim *= sp->second.basis.size();
          }
        }
        dims.push_back(dim);
      }
      read_tensor_values(r, r.member(it.value(), "values", p), dims, 0, file.field, p + "/values", d.values);
      file.tensors.emplace(it.key(), std::move(d));
    }
  }

  if (root.contains("bundles")) {
    const json& bundles = r.object(root["bundles"], "/bundles");
    for (auto it = bundles.begin(); it != bundles.end(); ++it) {
      std::string p = key_ptr("/bundles", it.key());
      r.object(it.value(), p);
      BundleDecl d;
      d.kind = r.string(r.member(it.value(), "kind", p), p + "/kind");
      for (auto f = it.value().begin(); f != it.value().end(); ++f) {
        if (f.key() == "kind") continue;
        if (f.value().is_string()) d.refs.emplace(f.key(), f.value().get<std::string>());
        else d.params.emplace(f.key(), r.integer(f.value(), key_ptr(p, f.key())));
      }
      file.bundles.emplace(it.key(), std::move(d));
    }
  }
  return file;
}

// ---------------------------------------------------------------------------
// Canonical writing

void write_value(std::ostream& os, const json& v, int indent) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  auto scalar_like = [](const json& x) { return !x.is_object() && !x.is_array(); };
  if (v.is_object()) {
    if (v.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    std::size_t i = 0;
    for (auto it = v.begin(); it != v.end(); ++it, ++i) {
      os << inner << json(it.key()).dump(-1, ' ', false) << ": ";
      write_value(os, it.value(), indent + 1);
      os << (i + 1 < v.size() ? ",\n" : "\n");
    }
    os << pad << "}";
  } else if (v.is_array()) {
    if (std::all_of(v.begin(), v.end(), scalar_like)) {
      os << "[";
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].dump(-1, ' ', false);
      os << "]";
      return;
    }
    os << "[\n";
    for (std::size_t i = 0; i < v.size(); ++i) {
      os << inner;
      write_value(os, v[i], indent + 1);
      os << (i + 1 < v.size() ? ",\n" : "\n");
    }
    os << pad << "]";
  } else {
    os << v.dump(-1, ' ', false);
  }
}

json nested_values(const std::vector<Scalar>& flat, const std::vector<std::size_t>& dims, std::size_t depth,
                   std::size_t& pos) {
  if (depth == dims.size()) return flat[pos++].to_string();
  json arr = json::array();
  for (std::size_t i = 0; i < dims[depth]; ++i) arr.push_back(nested_values(flat, dims, depth + 1, pos));
  return arr;
}

// ---------------------------------------------------------------------------
// Resolution helpers

std::string space_ptr(const std::string& name) { return key_ptr("/spaces", name); }

}  // namespace

struct Model::Impl {
  StructureFile owned;
  const StructureFile* file = &owned;
  std::shared_ptr<Locator> locator;
  mutable std::map<std::string, Space> spaces;
  mutable std::map<std::string, LinearMap> maps;
  mutable std::map<std::string, Object> objects;
  mutable std::set<std::string> in_progress;

  template <class E>
  [[noreturn]] void fail(const std::string& pointer, const std::string& what) const {
    Position p = locator ? locator->at(pointer) : Position{};
    throw E(what + (pointer.empty() ? "" : " (at " + pointer + ")"), p.line, p.column);
  }

  Space space(const std::string& name, const std::string& from) const {
    if (auto it = spaces.find(name); it != spaces.end()) return it->second;
    auto d = file->spaces.find(name);
    if (d == file->spaces.end()) fail<UnknownReference>(from, "no space \"" + name + "\"");
    if (!in_progress.insert("space:" + name).second) fail<ShapeError>(space_ptr(name), "cyclic fused space");
    Space s;
    try {
      if (!d->second.fuse.empty()) {
        std::vector<Space> parts;
        for (std::size_t i = 0; i < d->second.fuse.size(); ++i) {
          parts.push_back(space(d->second.fuse[i], space_ptr(name) + "/fuse/" + std::to_string(i)));
        }
        s = Space::fuse(std::move(parts));
      } else {
        s = Space(name, d->second.basis);
      }
    } catch (const LocatedError&) {
      throw;
    } catch (const homhopf::Error& e) {
      fail<ShapeError>(space_ptr(name), e.what());
    }
    in_progress.erase("space:" + name);
    spaces.emplace(name, s);
    return s;
  }

  Space legs(const std::vector<std::string>& names, const std::string& ptr) const {
    std::vector<Space> ls;
    for (std::size_t i = 0; i < names.size(); ++i) ls.push_back(space(names[i], ptr + "/" + std::to_string(i)));
    if (ls.empty()) return Space::ground();
    return Space::tensor(std::move(ls));
  }

  LinearMap map(const std::string& name, const std::string& from) const {
    if (auto it = maps.find(name); it != maps.end()) return it->second;
    if (auto d = file->maps.find(name); d != file->maps.end()) {
      std::string p = key_ptr("/maps", name);
      Space dom = legs(d->second.domain, p + "/domain");
      Space cod = legs(d->second.codomain, p + "/codomain");
      std::vector<Scalar> entries(dom.dim() * cod.dim(), Scalar(0).in(file->field));
      std::set<std::pair<std::size_t, std::size_t>> seen;
      for (std::size_t i = 0; i < d->second.entries.size(); ++i) {
        const MapEntry& e = d->second.entries[i];
        std::string ep = p + "/entries/" + std::to_string(i);
        if (e.row >= cod.dim()) fail<ShapeError>(ep + "/0", "row out of range");
        if (e.col >= dom.dim()) fail<ShapeError>(ep + "/1", "column out of range");
        if (!seen.insert({e.row, e.col}).second) fail<ShapeError>(ep, "repeated entry");
        entries[e.row * dom.dim() + e.col] = e.value;
      }
      LinearMap m(dom, cod, std::move(entries));
      maps.emplace(name, m);
      return m;
    }
    if (auto t = file->tensors.find(name); t != file->tensors.end()) {
      std::string p = key_ptr("/tensors", name);
      std::vector<std::string> in(t->second.legs.begin(), t->second.legs.begin() + t->second.inputs);
      std::vector<std::string> out(t->second.legs.begin() + t->second.inputs, t->second.legs.end());
      Space dom = legs(in, p + "/legs");
      Space cod = legs(out, p + "/legs");
      // values are indexed (inputs, outputs); the matrix is (outputs, inputs).
      std::vector<Scalar> entries(dom.dim() * cod.dim());
      for (std::size_t c = 0; c < dom.dim(); ++c) {
        for (std::size_t r = 0; r < cod.dim(); ++r) entries[r * dom.dim() + c] = t->second.values[c * cod.dim() + r];
      }
      LinearMap m(dom, cod, std::move(entries));
      maps.emplace(name, m);
      return m;
    }
    fail<UnknownReference>(from, "no map or tensor \"" + name + "\"");
  }

  const std::string& ref(const std::string& bundle, const BundleDecl& d, const std::string& key) const {
    auto it = d.refs.find(key);
    if (it == d.refs.end()) fail<ShapeError>(key_ptr("/bundles", bundle), "missing key \"" + key + "\"");
    return it->second;
  }

  long param(const std::string& bundle, const BundleDecl& d, const std::string& key) const {
    auto it = d.params.find(key);
    if (it == d.params.end()) fail<ShapeError>(key_ptr("/bundles", bundle), "missing integer \"" + key + "\"");
    return it->second;
  }

  void allow(const std::string& bundle, const BundleDecl& d, std::initializer_list<const char*> keys) const {
    auto check = [&](const std::string& k) {
      for (const char* a : keys) {
        if (k == a) return;
      }
      fail<ShapeError>(key_ptr(key_ptr("/bundles", bundle), k), "unexpected key \"" + k + "\" for kind " + d.kind);
    };
    for (const auto& [k, v] : d.refs) check(k);
    for (const auto& [k, v] : d.params) check(k);
  }

  LinearMap map_ref(const std::string& bundle, const BundleDecl& d, const std::string& key) const {
    return map(ref(bundle, d, key), key_ptr(key_ptr("/bundles", bundle), key));
  }

  template <class T>
  T get_as(const std::string& bundle, const BundleDecl& d, const std::string& key, const char* expected) const {
    const std::string& name = ref(bundle, d, key);
    const Object& o = object(name, key_ptr(key_ptr("/bundles", bundle), key));
    if (const T* t = std::get_if<T>(&o)) return *t;
    fail<ShapeError>(key_ptr(key_ptr("/bundles", bundle), key),
                     "bundle \"" + name + "\" is a " + kind_name(o) + ", expected " + expected);
  }

  HomBialgebra bialgebra_ref(const std::string& bundle, const BundleDecl& d, const std::string& key) const {
    const std::string& name = ref(bundle, d, key);
    const Object& o = object(name, key_ptr(key_ptr("/bundles", bundle), key));
    if (const auto* b = std::get_if<HomBialgebra>(&o)) return *b;
    if (const auto* h = std::get_if<HomHopf>(&o)) return h->bialgebra();
    fail<ShapeError>(key_ptr(key_ptr("/bundles", bundle), key),
                     "bundle \"" + name + "\" is a " + kind_name(o) + ", expected a bialgebra or hopf");
  }

  Object build(const std::string& name, const BundleDecl& d) const {
    const std::string& k = d.kind;
    if (k == "algebra") {
      allow(name, d, {"space", "mult", "unit", "alpha"});
      return HomAlgebra(space(ref(name, d, "space"), key_ptr(key_ptr("/bundles", name), "space")),
                        map_ref(name, d, "mult"), map_ref(name, d, "unit"), map_ref(name, d, "alpha"));
    }
    if (k == "coalgebra") {
      allow(name, d, {"space", "comult", "counit", "gamma"});
      return HomCoalgebra(space(ref(name, d, "space"), key_ptr(key_ptr("/bundles", name), "space")),
                          map_ref(name, d, "comult"), map_ref(name, d, "counit"), map_ref(name, d, "gamma"));
    }
    if (k == "bialgebra" || k == "hopf") {
      if (k == "hopf") allow(name, d, {"space", "mult", "unit", "comult", "counit", "alpha", "antipode"});
      else allow(name, d, {"space", "mult", "unit", "comult", "counit", "alpha"});
      Space s = space(ref(name, d, "space"), key_ptr(key_ptr("/bundles", name), "space"));
      LinearMap alpha = map_ref(name, d, "alpha");
      HomBialgebra b(HomAlgebra(s, map_ref(name, d, "mult"), map_ref(name, d, "unit"), alpha),
                     HomCoalgebra(s, map_ref(name, d, "comult"), map_ref(name, d, "counit"), alpha));
      if (k == "bialgebra") return b;
      return HomHopf(b, map_ref(name, d, "antipode"));
    }
    if (k == "action") {
      allow(name, d, {"bialgebra", "algebra", "map"});
      return ModuleAction(bialgebra_ref(name, d, "bialgebra"), get_as<HomAlgebra>(name, d, "algebra", "algebra"),
                          map_ref(name, d, "map"));
    }
    if (k == "coaction") {
      allow(name, d, {"bialgebra", "coalgebra", "map"});
      return Coaction(bialgebra_ref(name, d, "bialgebra"), get_as<HomCoalgebra>(name, d, "coalgebra", "coalgebra"),
                      map_ref(name, d, "map"));
    }
    if (k == "cocycle") {
      allow(name, d, {"bialgebra", "algebra", "map", "inverse"});
      std::optional<LinearMap> inv;
      if (d.refs.count("inverse")) inv = map_ref(name, d, "inverse");
      return Cocycle(bialgebra_ref(name, d, "bialgebra"), get_as<HomAlgebra>(name, d, "algebra", "algebra"),
                     map_ref(name, d, "map"), inv);
    }
    if (k == "crossed") {
      allow(name, d, {"action", "cocycle", "m", "k"});
      ModuleAction act = get_as<ModuleAction>(name, d, "action", "action");
      Cocycle sigma = get_as<Cocycle>(name, d, "cocycle", "cocycle");
      CrossedProductSpec spec{act.target(), act.acting(), act, sigma, param(name, d, "m"), param(name, d, "k")};
      spec.validate();
      return spec;
    }
    if (k == "cocycle-example") {
      allow(name, d, {"n", "m", "k", "reading", "orientation"});
      SigmaReading reading = SigmaReading::unit_multiple;
      TableOrientation orientation = TableOrientation::column_first;
      if (auto it = d.refs.find("reading"); it != d.refs.end()) {
        if (it->second == "y") reading = SigmaReading::y_multiple;
        else if (it->second != "unit") fail<ShapeError>(key_ptr(key_ptr("/bundles", name), "reading"), "reading is \"unit\" or \"y\"");
      }
      if (auto it = d.refs.find("orientation"); it != d.refs.end()) {
        if (it->second == "row-first") orientation = TableOrientation::row_first;
        else if (it->second != "column-first") {
          fail<ShapeError>(key_ptr(key_ptr("/bundles", name), "orientation"),
                           "orientation is \"column-first\" or \"row-first\"");
        }
      }
      if (!file->field.is_rational()) fail<ShapeError>("/field", "the cocycle example is defined over Q");
      return h4_cocycle_example(Scalar(param(name, d, "n")), param(name, d, "m"), param(name, d, "k"), reading,
                                orientation);
    }
    if (k == "biproduct") {
      allow(name, d, {"crossed", "coalgebra", "coaction", "antipode_a"});
      const std::string& cname = ref(name, d, "crossed");
      CrossedProductSpec crossed = get_as<CrossedProductSpec>(name, d, "crossed", "crossed");
      BiproductBundle out{BiproductSpec{crossed, get_as<HomCoalgebra>(name, d, "coalgebra", "coalgebra"),
                                        get_as<Coaction>(name, d, "coaction", "coaction")},
                          std::nullopt, std::nullopt};
      out.spec.validate();
      // H's antipode comes from the action's acting bundle when that is a Hom-Hopf algebra.
      const BundleDecl& cd = file->bundles.at(cname);
      if (cd.kind == "crossed") {
        const BundleDecl& ad = file->bundles.at(cd.refs.at("action"));
        const Object& h = object(ad.refs.at("bialgebra"), "");
        if (const auto* hh = std::get_if<HomHopf>(&h)) out.antipode_h = hh->antipode();
      }
      if (d.refs.count("antipode_a")) out.antipode_a = map_ref(name, d, "antipode_a");
      return out;
    }
    fail<ShapeError>(key_ptr(key_ptr("/bundles", name), "kind"), "unknown bundle kind \"" + k + "\"");
  }

  const Object& object(const std::string& name, const std::string& from) const {
    if (auto it = objects.find(name); it != objects.end()) return it->second;
    auto d = file->bundles.find(name);
    if (d == file->bundles.end()) fail<UnknownReference>(from, "no bundle \"" + name + "\"");
    if (!in_progress.insert("bundle:" + name).second) {
      fail<ShapeError>(key_ptr("/bundles", name), "cyclic bundle reference");
    }
    try {
      Object o = build(name, d->second);
      in_progress.erase("bundle:" + name);
      return objects.emplace(name, std::move(o)).first->second;
    } catch (const LocatedError&) {
      throw;
    } catch (const homhopf::Error& e) {
      fail<ShapeError>(key_ptr("/bundles", name), e.what());
    }
  }
};

std::string kind_name(const Object& object) {
  static const char* names[] = {"algebra", "coalgebra", "bialgebra", "hopf",     "action",
                                "coaction", "cocycle",  "crossed",   "biproduct"};
  return names[object.index()];
}

Model::Model(StructureFile file) : impl_(std::make_shared<Impl>()) { impl_->owned = std::move(file); }

const StructureFile& Model::file() const { return impl_->owned; }

const Object& Model::bundle(const std::string& name) const { return impl_->object(name, ""); }

const Object& Model::select(const std::string& name) const {
  if (!name.empty()) return bundle(name);
  if (file().main.empty()) throw UnknownReference("no bundle named and the file has no \"main\"", 0, 0);
  return impl_->object(file().main, "/main");
}

LinearMap Model::map(const std::string& name) const { return impl_->map(name, ""); }
Space Model::space(const std::string& name) const { return impl_->space(name, ""); }

StructureFile parse(std::string_view text) {
  auto locator = std::make_shared<Locator>(text);
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) throw SyntaxError("empty input", 1, 1);
  json root;
  const char* cursor = text.data();
  LocatingSax sax(root, text, &cursor, *locator);
  TrackingIterator first{text.data(), &cursor};
  TrackingIterator last{text.data() + text.size(), nullptr};
  json::sax_parse(first, last, &sax);
  StructureFile file = read_file(root, *locator);

  Model model(file);
  model.impl_->locator = locator;
  if (!file.main.empty() && !file.bundles.count(file.main)) {
    model.impl_->fail<UnknownReference>("/main", "no bundle \"" + file.main + "\"");
  }
  for (const auto& [name, d] : file.maps) model.impl_->map(name, "");
  for (const auto& [name, d] : file.tensors) model.impl_->map(name, "");
  for (const auto& [name, d] : file.bundles) model.impl_->object(name, "");
  return file;
}

std::string serialize(const StructureFile& file) {
  json root = json::object();
  root["format_version"] = file.format_version;
  root["field"] = file.field.to_string();
  if (!file.main.empty()) root["main"] = file.main;

  json spaces = json::object();
  for (const auto& [name, d] : file.spaces) {
    json s = json::object();
    if (!d.fuse.empty()) s["fuse"] = d.fuse;
    else s["basis"] = d.basis;
    spaces[name] = s;
  }
  root["spaces"] = spaces;

  json maps = json::object();
  for (const auto& [name, d] : file.maps) {
    std::vector<MapEntry> entries;
    for (const auto& e : d.entries) {
      if (!e.value.is_zero()) entries.push_back(e);
    }
    std::sort(entries.begin(), entries.end(),
              [](const MapEntry& a, const MapEntry& b) { return std::pair(a.row, a.col) < std::pair(b.row, b.col); });
    json es = json::array();
    for (const auto& e : entries) es.push_back(json::array({e.row, e.col, e.value.to_string()}));
    maps[name] = json{{"domain", d.domain}, {"codomain", d.codomain}, {"entries", es}};
  }
  root["maps"] = maps;

  if (!file.tensors.empty()) {
    json tensors = json::object();
    Model model(file);
    for (const auto& [name, d] : file.tensors) {
      std::vector<std::size_t> dims;
      for (const auto& l : d.legs) dims.push_back(model.space(l).dim());
      std::size_t pos = 0;
      tensors[name] = json{{"legs", d.legs}, {"inputs", d.inputs}, {"values", nested_values(d.values, dims, 0, pos)}};
    }
    root["tensors"] = tensors;
  }

  json bundles = json::object();
  for (const auto& [name, d] : file.bundles) {
    json b = json::object();
    b["kind"] = d.kind;
    for (const auto& [k, v] : d.refs) b[k] = v;
    for (const auto& [k, v] : d.params) b[k] = v;
    bundles[name] = b;
  }
  root["bundles"] = bundles;

  std::ostringstream os;
  write_value(os, root, 0);
  os << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Export

Exporter::Exporter(Field field) { file_.field = field; }

std::string Exporter::add_space(const Space& space) {
  if (space.is_product()) throw Error("cannot export a product space as an object: " + space.name());
  SpaceDecl d;
  if (space.is_atom()) {
    d.basis = space.basis_names();
  } else {
    for (const auto& p : space.parts()) d.fuse.push_back(add_space(p));
  }
  auto [it, inserted] = file_.spaces.emplace(space.name(), d);
  if (!inserted && (it->second.basis != d.basis || it->second.fuse != d.fuse)) {
    throw Error("two different spaces named " + space.name());
  }
  return space.name();
}

std::string Exporter::add_map(const std::string& name, const LinearMap& map) {
  MapDecl d;
  for (const auto& l : map.domain().legs()) d.domain.push_back(add_space(l));
  for (const auto& l : map.codomain().legs()) d.codomain.push_back(add_space(l));
  for (std::size_t r = 0; r < map.rows(); ++r) {
    for (std::size_t c = 0; c < map.cols(); ++c) {
      if (!map.at(r, c).is_zero()) d.entries.push_back(MapEntry{r, c, map.at(r, c).in(file_.field)});
    }
  }
  file_.maps[name] = std::move(d);
  return name;
}

void Exporter::add_bundle(const std::string& name, BundleDecl decl) { file_.bundles[name] = std::move(decl); }

std::string Exporter::add_algebra(const std::string& name, const HomAlgebra& a) {
  add_bundle(name, BundleDecl{"algebra",
                              {{"space", add_space(a.space())},
                               {"mult", add_map(name + ".mult", a.mult())},
                               {"unit", add_map(name + ".unit", a.unit())},
                               {"alpha", add_map(name + ".alpha", a.alpha())}},
                              {}});
  return name;
}

std::string Exporter::add_coalgebra(const std::string& name, const HomCoalgebra& c) {
  add_bundle(name, BundleDecl{"coalgebra",
                              {{"space", add_space(c.space())},
                               {"comult", add_map(name + ".comult", c.comult())},
                               {"counit", add_map(name + ".counit", c.counit())},
                               {"gamma", add_map(name + ".gamma", c.gamma())}},
                              {}});
  return name;
}

std::string Exporter::add_bialgebra(const std::string& name, const HomBialgebra& b) {
  add_bundle(name, BundleDecl{"bialgebra",
                              {{"space", add_space(b.space())},
                               {"mult", add_map(name + ".mult", b.mult())},
                               {"unit", add_map(name + ".unit", b.unit())},
                               {"comult", add_map(name + ".comult", b.comult())},
                               {"counit", add_map(name + ".counit", b.counit())},
                               {"alpha", add_map(name + ".alpha", b.alpha())}},
                              {}});
  return name;
}

std::string Exporter::add_hopf(const std::string& name, const HomHopf& h) {
  add_bialgebra(name, h.bialgebra());
  file_.bundles[name].kind = "hopf";
  file_.bundles[name].refs["antipode"] = add_map(name + ".antipode", h.antipode());
  return name;
}

std::string Exporter::add_action(const std::string& name, const ModuleAction& a, const std::string& acting,
                                  const std::string& target) {
  add_bundle(name, BundleDecl{"action",
                              {{"bialgebra", acting}, {"algebra", target}, {"map", add_map(name + ".map", a.act())}},
                              {}});
  return name;
}

std::string Exporter::add_coaction(const std::string& name, const Coaction& c, const std::string& coacting,
                                   const std::string& target) {
  add_bundle(name, BundleDecl{"coaction",
                              {{"bialgebra", coacting}, {"coalgebra", target}, {"map", add_map(name + ".map", c.coact())}},
                              {}});
  return name;
}

std::string Exporter::add_cocycle(const std::string& name, const Cocycle& s, const std::string& source,
                                  const std::string& target) {
  BundleDecl d{"cocycle", {{"bialgebra", source}, {"algebra", target}, {"map", add_map(name + ".map", s.sigma())}}, {}};
  if (s.inverse()) d.refs["inverse"] = add_map(name + ".inverse", *s.inverse());
  add_bundle(name, std::move(d));
  return name;
}

std::string Exporter::add_crossed(const std::string& name, const CrossedProductSpec& spec,
                                  const std::optional<LinearMap>& antipode_h) {
  std::string h = antipode_h ? add_hopf(name + ".H", HomHopf(spec.H, *antipode_h)) : add_bialgebra(name + ".H", spec.H);
  std::string a = add_algebra(name + ".A", spec.A);
  std::string act = add_action(name + ".action", spec.action, h, a);
  std::string sigma = add_cocycle(name + ".sigma", spec.sigma, h, a);
  add_bundle(name, BundleDecl{"crossed", {{"action", act}, {"cocycle", sigma}}, {{"m", spec.m}, {"k", spec.k}}});
  return name;
}

std::string Exporter::add_biproduct(const std::string& name, const BiproductSpec& spec,
                                    const std::optional<LinearMap>& antipode_h,
                                    const std::optional<LinearMap>& antipode_a) {
  std::string crossed = add_crossed(name + ".crossed", spec.crossed, antipode_h);
  std::string co = add_coalgebra(name + ".crossed.A.co", spec.A_coalgebra);
  std::string rho = add_coaction(name + ".coaction", spec.coaction, name + ".crossed.H", co);
  BundleDecl d{"biproduct", {{"crossed", crossed}, {"coalgebra", co}, {"coaction", rho}}, {}};
  if (antipode_a) d.refs["antipode_a"] = add_map(name + ".antipode_a", *antipode_a);
  add_bundle(name, std::move(d));
  return name;
}

}  // namespace homhopf::cli
