#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "wbh/tensor_map.hpp"

namespace wbh {

struct AxiomEntry {
  std::string id;
  bool holds = false;
  std::optional<Witness> witness;  // empty iff holds (or the entry is not an equation)
  std::string detail;              // which sub-equation failed, or a note
  bool asserted = true;            // false for observations that are reported only
};

// Ordered list of named checks. Never throws on a failing check.
class AxiomReport {
 public:
  std::vector<AxiomEntry> entries;

  template <class T>
  struct Equation {
    std::string label;
    BasicTensorMap<T> lhs, rhs;
  };

  template <class T>
  AxiomEntry& check(const std::string& id, const BasicTensorMap<T>& lhs, const BasicTensorMap<T>& rhs,
                    bool asserted = true) {
    return check_all<T>(id, {{"", lhs, rhs}}, asserted);
  }

  // One entry that holds iff every listed equation holds; the first failing
  // equation's label goes into detail.
  template <class T>
  AxiomEntry& check_all(const std::string& id, const std::vector<Equation<T>>& eqs, bool asserted = true) {
    AxiomEntry e{id, true, std::nullopt, "", asserted};
    for (const auto& q : eqs) {
      if (q.lhs.domain() != q.rhs.domain() || q.lhs.codomain() != q.rhs.codomain())
        throw ArityMismatch(id + (q.label.empty() ? "" : " " + q.label) + ": sides have shapes " +
                            to_string(q.lhs.domain()) + "->" + to_string(q.lhs.codomain()) + " and " +
                            to_string(q.rhs.domain()) + "->" + to_string(q.rhs.codomain()));
      if (auto w = first_difference(q.lhs.matrix(), q.rhs.matrix())) {
        e.holds = false;
        e.witness = w;
        e.detail = q.label;
        break;
      }
    }
    entries.push_back(std::move(e));
    return entries.back();
  }

  AxiomEntry& flag(const std::string& id, bool holds, std::string detail = "", bool asserted = true) {
    entries.push_back({id, holds, std::nullopt, std::move(detail), asserted});
    return entries.back();
  }

  void append(const AxiomReport& other) { entries.insert(entries.end(), other.entries.begin(), other.entries.end()); }

  bool all_pass() const {
    for (const auto& e : entries)
      if (e.asserted && !e.holds) return false;
    return true;
  }

  const AxiomEntry* first_failure() const {
    for (const auto& e : entries)
      if (e.asserted && !e.holds) return &e;
    return nullptr;
  }

  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    for (const auto& e : entries)
      if (e.asserted && !e.holds) out.push_back(e.id);
    return out;
  }

  const AxiomEntry* find(const std::string& id) const {
    for (const auto& e : entries)
      if (e.id == id) return &e;
    return nullptr;
  }

  // True iff the entry exists and holds.
  bool holds(const std::string& id) const {
    const auto* e = find(id);
    return e && e->holds;
  }

  void require() const {
    if (const auto* f = first_failure()) throw PrerequisiteAxiomFailed(f->id);
  }
};

}  // namespace wbh
