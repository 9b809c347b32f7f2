#include "homhopf/tensor_expr.hpp"

#include <algorithm>
#include <set>

#include "homhopf/errors.hpp"

namespace homhopf {

namespace {

std::vector<Space> atoms_of(const std::vector<Space>& spaces) {
  std::vector<Space> out;
  for (const auto& s : spaces) {
    auto a = s.atoms();
    out.insert(out.end(), a.begin(), a.end());
  }
  return out;
}

std::string describe(const std::vector<Space>& atoms) {
  std::string s;
  for (std::size_t i = 0; i < atoms.size(); ++i) s += (i ? "⊗" : "") + atoms[i].name();
  return atoms.empty() ? "k" : s;
}

}  // namespace

TensorExpr::TensorExpr(Space domain, std::vector<std::string> labels) : domain_(std::move(domain)) {
  std::vector<Space> spaces = domain_.legs();
  if (labels.size() != spaces.size()) spaces = domain_.atoms();
  if (labels.size() != spaces.size()) {
    throw DimensionMismatch("expression over " + domain_.name() + " needs one label per leg or per atom");
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!seen.insert(labels[i]).second) throw Error("duplicate leg label " + labels[i]);
    legs_.push_back({std::move(labels[i]), spaces[i]});
  }
  columns_.resize(domain_.dim());
  for (std::size_t c = 0; c < domain_.dim(); ++c) columns_[c].emplace(c, Scalar(1));
}

std::size_t TensorExpr::position(const std::string& label) const {
  for (std::size_t i = 0; i < legs_.size(); ++i) {
    if (legs_[i].label == label) return i;
  }
  throw Error("no leg labelled " + label);
}

std::vector<std::string> TensorExpr::labels() const {
  std::vector<std::string> out;
  for (const auto& l : legs_) out.push_back(l.label);
  return out;
}

void TensorExpr::reorder(const std::vector<std::size_t>& order) {
  bool identity = true;
  for (std::size_t i = 0; i < order.size(); ++i) identity = identity && order[i] == i;
  if (identity) return;
  const std::size_t n = legs_.size();
  std::vector<std::size_t> dims(n);
  for (std::size_t i = 0; i < n; ++i) dims[i] = legs_[i].space.dim();
  std::vector<std::size_t> digits(n);
  for (auto& col : columns_) {
    Column next;
    for (const auto& [idx, v] : col) {
      std::size_t rest = idx;
      for (std::size_t i = n; i-- > 0;) {
        digits[i] = rest % dims[i];
        rest /= dims[i];
      }
      std::size_t out = 0;
      for (std::size_t i = 0; i < n; ++i) out = out * dims[order[i]] + digits[order[i]];
      next.emplace(out, v);
    }
    col = std::move(next);
  }
  std::vector<Leg> legs;
  legs.reserve(n);
  for (auto i : order) legs.push_back(legs_[i]);
  legs_ = std::move(legs);
}

void TensorExpr::apply_at(const LinearMap& f, std::size_t pos, std::size_t count, std::vector<Leg> out_legs) {
  std::size_t mid = 1;
  std::size_t suf = 1;
  for (std::size_t i = pos; i < pos + count; ++i) mid *= legs_[i].space.dim();
  for (std::size_t i = pos + count; i < legs_.size(); ++i) suf *= legs_[i].space.dim();
  const std::size_t out_mid = f.rows();
  for (auto& col : columns_) {
    Column next;
    for (const auto& [idx, v] : col) {
      const std::size_t s = idx % suf;
      const std::size_t m = (idx / suf) % mid;
      const std::size_t p = idx / (suf * mid);
      for (const auto& [r, fv] : f.sparse_column(m)) {
        Scalar term = fv * v;
        auto [it, inserted] = next.try_emplace((p * out_mid + r) * suf + s, term);
        if (!inserted) {
          it->second += term;
        }
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    col = std::move(next);
  }
  legs_.erase(legs_.begin() + static_cast<std::ptrdiff_t>(pos), legs_.begin() + static_cast<std::ptrdiff_t>(pos + count));
  legs_.insert(legs_.begin() + static_cast<std::ptrdiff_t>(pos), out_legs.begin(), out_legs.end());
}

TensorExpr& TensorExpr::apply(const LinearMap& f, const std::vector<std::string>& in, const std::vector<std::string>& out) {
  // Gather inputs contiguously at the position of the first one (or the end for units).
  std::vector<std::size_t> in_pos;
  for (const auto& l : in) in_pos.push_back(position(l));
  std::set<std::size_t> uniq(in_pos.begin(), in_pos.end());
  if (uniq.size() != in_pos.size()) throw Error("leg used twice as input");
  std::size_t anchor = in_pos.empty() ? legs_.size() : in_pos.front();
  std::vector<std::size_t> order;
  std::size_t insert_at = 0;
  for (std::size_t i = 0; i < legs_.size(); ++i) {
    if (uniq.count(i)) continue;
    if (i < anchor) ++insert_at;
    order.push_back(i);
  }
  order.insert(order.begin() + static_cast<std::ptrdiff_t>(insert_at), in_pos.begin(), in_pos.end());
  reorder(order);

  std::vector<Space> in_spaces;
  for (std::size_t i = insert_at; i < insert_at + in.size(); ++i) in_spaces.push_back(legs_[i].space);
  auto have = atoms_of(in_spaces);
  auto want = f.domain().atoms();
  if (have != want) {
    throw DimensionMismatch("map expects " + describe(want) + " but legs carry " + describe(have));
  }

  std::vector<Space> cod = f.codomain().legs();
  std::vector<Leg> out_legs;
  if (out.size() == cod.size()) {
    for (std::size_t i = 0; i < out.size(); ++i) out_legs.push_back({out[i], cod[i]});
  } else if (out.size() == 1) {
    out_legs.push_back({out[0], f.codomain()});
  } else {
    throw DimensionMismatch("map to " + f.codomain().name() + " needs " + std::to_string(cod.size()) + " output labels");
  }
  for (const auto& l : out_legs) {
    for (std::size_t i = 0; i < legs_.size(); ++i) {
      if ((i < insert_at || i >= insert_at + in.size()) && legs_[i].label == l.label) {
        throw Error("output label " + l.label + " already in use");
      }
    }
  }
  apply_at(f, insert_at, in.size(), std::move(out_legs));
  return *this;
}

TensorExpr& TensorExpr::map(const std::string& leg, const LinearMap& f) { return apply(f, {leg}, {leg}); }

TensorExpr& TensorExpr::split(const std::string& leg, const std::vector<std::string>& out) {
  const std::size_t pos = position(leg);
  const Space s = legs_[pos].space;
  std::vector<Space> parts = s.is_product() ? s.legs() : s.parts();
  if (parts.size() != out.size()) throw DimensionMismatch("split of " + s.name() + " needs " + std::to_string(parts.size()) + " labels");
  legs_.erase(legs_.begin() + static_cast<std::ptrdiff_t>(pos));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    legs_.insert(legs_.begin() + static_cast<std::ptrdiff_t>(pos + i), Leg{out[i], parts[i]});
  }
  return *this;
}

TensorExpr& TensorExpr::scale(const Scalar& s) {
  for (auto& col : columns_) {
    for (auto& [idx, v] : col) v *= s;
    std::erase_if(col, [](const auto& kv) { return kv.second.is_zero(); });
  }
  return *this;
}

LinearMap TensorExpr::collect(const std::vector<std::string>& order, const Space& codomain) const {
  if (order.size() != legs_.size()) throw Error("collect must name every remaining leg");
  TensorExpr copy = *this;
  std::vector<std::size_t> perm;
  for (const auto& l : order) perm.push_back(copy.position(l));
  std::set<std::size_t> uniq(perm.begin(), perm.end());
  if (uniq.size() != perm.size()) throw Error("collect names a leg twice");
  copy.reorder(perm);
  std::vector<Space> spaces;
  for (const auto& l : copy.legs_) spaces.push_back(l.space);
  if (atoms_of(spaces) != codomain.atoms()) {
    throw DimensionMismatch("expression lands in " + describe(atoms_of(spaces)) + ", not " + describe(codomain.atoms()));
  }
  const std::size_t n = domain_.dim();
  std::vector<Scalar> e(codomain.dim() * n);
  for (std::size_t c = 0; c < n; ++c) {
    for (const auto& [r, v] : copy.columns_[c]) e[r * n + c] = v;
  }
  return LinearMap(domain_, codomain, std::move(e));
}

}  // namespace homhopf
