#include "homhopf/check_report.hpp"

#include <sstream>

namespace homhopf {

CheckReport CheckReport::aggregate(std::string axiom, std::vector<CheckReport> parts) {
  CheckReport r;
  r.axiom = std::move(axiom);
  r.parts = std::move(parts);
  for (const auto& p : r.parts) {
    if (!p.pass) {
      r.pass = false;
      if (!r.witness) r.witness = p.first_failure()->witness;
    }
  }
  return r;
}

const CheckReport* CheckReport::first_failure() const {
  if (pass) return nullptr;
  for (const auto& p : parts) {
    if (const auto* f = p.first_failure()) return f;
  }
  return this;
}

const CheckReport* CheckReport::find(const std::string& id) const {
  if (axiom == id) return this;
  for (const auto& p : parts) {
    if (const auto* f = p.find(id)) return f;
  }
  return nullptr;
}

namespace {

std::string vector_text(const std::vector<Scalar>& v, const std::vector<std::string>& names) {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (any) os << " + ";
    os << "(" << v[i] << ")";
    if (i < names.size()) os << names[i];
    any = true;
  }
  if (!any) os << "0";
  return os.str();
}

void tuple_text(std::ostringstream& os, const std::vector<std::string>& t) {
  os << "(";
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? ", " : "") << t[i];
  os << ")";
}

}  // namespace

std::string render(const CheckReport& report, int indent) {
  std::ostringstream os;
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  os << pad << (report.pass ? "PASS " : "FAIL ") << report.axiom << "\n";
  if (!report.pass && report.parts.empty() && report.witness) {
    const auto& w = *report.witness;
    os << pad << "  at ";
    tuple_text(os, w.basis_tuple);
    os << " coordinate " << w.row_name << "\n";
    os << pad << "  lhs = " << vector_text(w.lhs, w.codomain_basis) << "\n";
    os << pad << "  rhs = " << vector_text(w.rhs, w.codomain_basis) << "\n";
  }
  for (const auto& n : report.notes) os << pad << "  note: " << n << "\n";
  for (const auto& p : report.parts) os << render(p, indent + 1);
  return os.str();
}

}  // namespace homhopf
