#include "homhopf/space.hpp"

#include <set>
#include <utility>

#include "homhopf/errors.hpp"

namespace homhopf {

struct Space::Node {
  Kind kind = Kind::product;
  std::string name;
  std::vector<std::string> basis;
  std::vector<Space> children;
};

namespace {

std::vector<std::string> product_names(const std::vector<Space>& factors) {
  std::vector<std::string> names{""};
  bool first = true;
  for (const auto& f : factors) {
    std::vector<std::string> next;
    next.reserve(names.size() * f.dim());
    for (const auto& prefix : names) {
      for (const auto& n : f.basis_names()) next.push_back(first ? n : prefix + "⊗" + n);
    }
    names = std::move(next);
    first = false;
  }
  if (factors.empty()) names = {"1k"};
  return names;
}

std::string joined_name(const std::vector<Space>& factors) {
  std::string out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) out += "⊗";
    out += factors[i].name();
  }
  return factors.empty() ? "k" : out;
}

}  // namespace

Space::Space() : Space(std::make_shared<const Node>(Node{Kind::product, "k", {"1k"}, {}})) {}

Space::Space(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Space::Space(std::string name, std::vector<std::string> basis_names) {
  if (basis_names.empty()) throw MalformedStructure("space " + name + " needs dim >= 1");
  std::set<std::string> seen(basis_names.begin(), basis_names.end());
  if (seen.size() != basis_names.size()) {
    throw MalformedStructure("space " + name + " has duplicate basis names");
  }
  node_ = std::make_shared<const Node>(Node{Kind::atom, std::move(name), std::move(basis_names), {}});
}

Space Space::tensor(std::vector<Space> legs) {
  if (legs.size() == 1) return legs.front();
  std::string name = joined_name(legs);
  auto names = product_names(legs);
  return Space(std::make_shared<const Node>(Node{Kind::product, std::move(name), std::move(names), std::move(legs)}));
}

Space Space::fuse(std::vector<Space> parts) {
  if (parts.empty()) return Space{};
  std::string name = joined_name(parts);
  auto names = product_names(parts);
  return Space(std::make_shared<const Node>(Node{Kind::fused, std::move(name), std::move(names), std::move(parts)}));
}

std::size_t Space::dim() const { return node_->basis.size(); }
const std::string& Space::name() const { return node_->name; }

const std::string& Space::basis_name(std::size_t i) const {
  if (i >= node_->basis.size()) throw OutOfRange("basis index out of range in " + name());
  return node_->basis[i];
}

const std::vector<std::string>& Space::basis_names() const { return node_->basis; }

std::size_t Space::index_of(const std::string& basis_name) const {
  for (std::size_t i = 0; i < node_->basis.size(); ++i) {
    if (node_->basis[i] == basis_name) return i;
  }
  throw OutOfRange("no basis vector \"" + basis_name + "\" in " + name());
}

bool Space::is_product() const { return node_->kind == Kind::product; }
bool Space::is_atom() const { return node_->kind == Kind::atom; }

std::vector<Space> Space::legs() const {
  if (is_product()) return node_->children;
  return {*this};
}

const std::vector<Space>& Space::parts() const {
  static const std::vector<Space> none;
  return node_->kind == Kind::fused ? node_->children : none;
}

std::vector<Space> Space::atoms() const {
  if (is_atom()) return {*this};
  std::vector<Space> out;
  for (const auto& c : node_->children) {
    auto sub = c.atoms();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

std::vector<std::string> Space::decompose(std::size_t index) const {
  auto ls = legs();
  std::vector<std::string> out(ls.size());
  for (std::size_t i = ls.size(); i-- > 0;) {
    out[i] = ls[i].basis_name(index % ls[i].dim());
    index /= ls[i].dim();
  }
  return out;
}

bool operator==(const Space& a, const Space& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->kind == b.node_->kind && a.node_->name == b.node_->name && a.node_->basis == b.node_->basis &&
         a.node_->children == b.node_->children;
}

bool same_shape(const Space& a, const Space& b) {
  if (a.dim() != b.dim()) return false;
  return a.atoms() == b.atoms();
}

}  // namespace homhopf
