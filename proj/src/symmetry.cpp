#include "lle/symmetry.hpp"

#include "lle/operator_span.hpp"
#include "lle/plane_wave.hpp"

namespace lle {

namespace {

// Coordinate monomials of total degree <= bound, in lexicographic order.
std::vector<Monomial> coordinate_monomials(int bound) {
  std::vector<Monomial> out;
  for (int et = 0; et <= bound; ++et)
    for (int e1 = 0; et + e1 <= bound; ++e1)
      for (int e2 = 0; et + e1 + e2 <= bound; ++e2)
        for (int e3 = 0; et + e1 + e2 + e3 <= bound; ++e3) {
          Monomial m;
          m.coord = {static_cast<int16_t>(et), static_cast<int16_t>(e1),
                     static_cast<int16_t>(e2), static_cast<int16_t>(e3)};
          out.push_back(m);
        }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SymmetryVerdict check_symmetry(const DiffOperator& omega, const DiffOperator& a, BracketKind kind,
                               int max_multiplier_degree) {
  SymmetryVerdict v;
  v.kind = kind;
  DiffOperator lhs = kind == BracketKind::Commutator ? commutator(omega, a)
                                                     : anticommutator(omega, a);
  if (lhs.is_zero()) {
    v.certified = true;  // multiplier zero
    return v;
  }

  std::vector<Monomial> monos = coordinate_monomials(max_multiplier_degree);
  struct UnknownSlot {
    Monomial mono;
    int row, col;
  };
  std::vector<UnknownSlot> slots;
  OperatorSpan span;
  for (const auto& mono : monos)
    for (int row = 0; row < 4; ++row)
      for (int col = 0; col < 4; ++col) {
        Mat4 unit = mat_zero();
        unit(row, col) = Scalar(1);
        if (!span.insert(DiffOperator::term(mono, unit) * omega)) v.ambiguous = true;
        slots.push_back({mono, row, col});
      }

  auto coeffs = span.reduce(lhs);
  if (!coeffs) return v;  // not certified at this degree bound
  v.certified = true;
  for (std::size_t u = 0; u < slots.size(); ++u) {
    if ((*coeffs)[u].is_zero()) continue;
    Mat4 unit = mat_zero();
    unit(slots[u].row, slots[u].col) = (*coeffs)[u];
    v.multiplier.add_term(slots[u].mono, unit);
  }
  return v;
}

SymmetryVerdict check_symmetry_auto(const DiffOperator& omega, const DiffOperator& a,
                                    int max_multiplier_degree) {
  SymmetryVerdict v = check_symmetry(omega, a, BracketKind::Commutator, max_multiplier_degree);
  if (v.certified) return v;
  return check_symmetry(omega, a, BracketKind::Anticommutator, max_multiplier_degree);
}

bool plane_wave_validate(const DiffOperator& omega, const DiffOperator& a) {
  KernelFamily fam = kernel_family(omega);
  for (const auto& psi : fam.states) {
    PlaneWaveState image = apply(a, psi);
    if (!apply(omega, image).is_zero()) return false;
  }
  return true;
}

std::vector<SecondOrderEntry> check_second_order_set(const GeneratorCatalog& catalog,
                                                     int max_multiplier_degree) {
  std::vector<SecondOrderEntry> out;
  for (const auto& name : catalog.names()) {
    bool second_order = name.starts_with("Pt") || name.starts_with("Gt") ||
                        name.starts_with("W") || name.starts_with("Y") || name.starts_with("Z");
    if (!second_order) continue;
    out.push_back(
        {name, check_symmetry_auto(catalog.omega(), catalog.at(name), max_multiplier_degree)});
  }
  return out;
}

}  // namespace lle
