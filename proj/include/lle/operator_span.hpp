#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lle/diff_operator.hpp"

namespace lle {

// Incrementally echelonized span of operators with coefficient tracking.
// Insertion order fixes the pivot choice, so expansions are deterministic and
// dependent members are expanded over the earliest independent prefix.
// Internally operators are flattened to sorted (slot, coefficient) vectors;
// elimination is a two-way merge, which keeps the exact arithmetic on the
// nonzero coefficients only.
class OperatorSpan {
 public:
  bool insert(const DiffOperator& op);

  // Coefficients over all previously inserted operators (free members get
  // coefficient zero), or nullopt when v is outside the span.
  std::optional<std::vector<Scalar>> reduce(const DiffOperator& v) const;

  bool contains(const DiffOperator& v) const;

  int rank() const { return static_cast<int>(echelon_.size()); }
  int inserted() const { return inserted_; }

  // One kernel vector per dependent insertion, in insertion coordinates,
  // zero-padded to the full insertion count.
  std::vector<std::vector<Scalar>> kernel() const;

 private:
  using SlotVec = std::vector<std::pair<Slot, Scalar>>;
  using SparseVec = std::map<int, Scalar>;  // insertion index -> coefficient

  struct Row {
    SlotVec op;  // nonzero, sorted by slot; front() is the pivot
    Scalar lead_inv;
    SparseVec combo;
  };

  SlotVec eliminate(SlotVec v, SparseVec* used) const;

  std::vector<Row> echelon_;
  std::map<Slot, int> lead_index_;
  std::vector<SparseVec> kernel_;
  int inserted_ = 0;
};

// One-shot span membership with coefficients, the common case.
std::optional<std::vector<Scalar>> operator_in_span(const DiffOperator& v,
                                                    const std::vector<DiffOperator>& basis);

}  // namespace lle
