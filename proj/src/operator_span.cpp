#include "lle/operator_span.hpp"

namespace lle {

namespace {

using SlotVec = std::vector<std::pair<Slot, Scalar>>;

// Internal slot order is descending: pivoting on the highest slot keeps the
// derivative-raised monomials (nearly unique per ansatz column) as pivots,
// which is what keeps elimination fill-in small on the big solver systems.
SlotVec flatten(const DiffOperator& op) {
  SlotVec v;
  const auto& terms = op.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it)
    for (int r = 3; r >= 0; --r)
      for (int c = 3; c >= 0; --c)
        if (!it->second(r, c).is_zero()) v.emplace_back(Slot{it->first, r, c}, it->second(r, c));
  return v;
}

// y := y + c * x, merging two slot vectors sorted descending.
void add_scaled(SlotVec& y, const Scalar& c, const SlotVec& x, SlotVec& scratch) {
  scratch.clear();
  scratch.reserve(y.size() + x.size());
  auto iy = y.begin();
  auto ix = x.begin();
  while (iy != y.end() || ix != x.end()) {
    if (ix == x.end() || (iy != y.end() && ix->first < iy->first)) {
      scratch.push_back(std::move(*iy++));
    } else if (iy == y.end() || iy->first < ix->first) {
      Scalar v = c * ix->second;
      if (!v.is_zero()) scratch.emplace_back(ix->first, std::move(v));
      ++ix;
    } else {
      Scalar v = iy->second + c * ix->second;
      if (!v.is_zero()) scratch.emplace_back(iy->first, std::move(v));
      ++iy;
      ++ix;
    }
  }
  y.swap(scratch);
}

}  // namespace

OperatorSpan::SlotVec OperatorSpan::eliminate(SlotVec v, SparseVec* used) const {
  SlotVec scratch;
  while (!v.empty()) {
    auto it = lead_index_.find(v.front().first);
    if (it == lead_index_.end()) break;
    const Row& row = echelon_[it->second];
    Scalar c = v.front().second * row.lead_inv;
    add_scaled(v, -c, row.op, scratch);
    if (used) {
      auto [uit, fresh] = used->try_emplace(it->second, c);
      if (!fresh) uit->second += c;
    }
  }
  return v;
}

bool OperatorSpan::insert(const DiffOperator& op) {
  const int index = inserted_++;
  SparseVec used;
  SlotVec v = eliminate(flatten(op), &used);
  if (v.empty()) {
    // Dependent member: op = sum used_r * echelon_r; expand over insertions.
    SparseVec k;
    k.emplace(index, Scalar(-1));
    for (const auto& [r, c] : used) {
      if (c.is_zero()) continue;
      for (const auto& [j, cj] : echelon_[r].combo) {
        auto [it, fresh] = k.try_emplace(j, Scalar(0));
        it->second += c * cj;
        if (it->second.is_zero()) k.erase(it);
      }
    }
    kernel_.push_back(std::move(k));
    return false;
  }
  Row row;
  row.lead_inv = v.front().second.inv();
  row.combo.emplace(index, Scalar(1));
  for (const auto& [r, c] : used) {
    if (c.is_zero()) continue;
    for (const auto& [j, cj] : echelon_[r].combo) {
      auto [it, fresh] = row.combo.try_emplace(j, Scalar(0));
      it->second -= c * cj;
      if (it->second.is_zero()) row.combo.erase(it);
    }
  }
  lead_index_.emplace(v.front().first, static_cast<int>(echelon_.size()));
  row.op = std::move(v);
  echelon_.push_back(std::move(row));
  return true;
}

std::optional<std::vector<Scalar>> OperatorSpan::reduce(const DiffOperator& v) const {
  SparseVec used;
  SlotVec r = eliminate(flatten(v), &used);
  if (!r.empty()) return std::nullopt;
  std::vector<Scalar> coeff(inserted_, Scalar(0));
  for (const auto& [row, c] : used) {
    if (c.is_zero()) continue;
    for (const auto& [j, cj] : echelon_[row].combo) coeff[j] += c * cj;
  }
  return coeff;
}

bool OperatorSpan::contains(const DiffOperator& v) const {
  return eliminate(flatten(v), nullptr).empty();
}

std::vector<std::vector<Scalar>> OperatorSpan::kernel() const {
  std::vector<std::vector<Scalar>> out;
  out.reserve(kernel_.size());
  for (const auto& k : kernel_) {
    std::vector<Scalar> dense(inserted_, Scalar(0));
    for (const auto& [j, c] : k) dense[j] = c;
    out.push_back(std::move(dense));
  }
  return out;
}

std::optional<std::vector<Scalar>> operator_in_span(const DiffOperator& v,
                                                    const std::vector<DiffOperator>& basis) {
  OperatorSpan span;
  for (const auto& b : basis) span.insert(b);
  return span.reduce(v);
}

}  // namespace lle
