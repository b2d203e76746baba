#pragma once

// Shared evaluator for the product axioms over a product whose cells may also
// be still-undecided. The final checkers and the algebra search both run
// through scan_product_axioms so there is a single definition of each
// equation and of the partiality policy.

#include "vnalg/algebra.hpp"

namespace vnalg::detail {

/// Cell states returned by the lookup passed to scan_product_axioms.
inline constexpr int kHole = -1;     // undefined product
inline constexpr int kUnknown = -2;  // not decided yet (search only)

enum class Family : std::uint8_t { Classical = 1, Virtual = 2, Both = 3 };

/// Evaluates one instance of the R5/vR5 family for bracket `t`.
/// `first` is (R5.1, R5.2) or (vR5.1, vR5.2); `second` is (R5.3, R5.4) or
/// (vR5.3, vR5.4). Returns false as soon as on_violation asks to stop.
template <class Cell, class OnViolation>
bool scan_r5_family(const TernaryTable& t, const Cell& cell, Partiality mode,
                    std::array<Axiom, 4> labels, OnViolation& on_violation) {
  const int n = t.size();
  auto defined = [](int x) { return x >= 0; };
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = cell(a, b);
      for (int c = 0; c < n; ++c) {
        const int abc = t(a, b, c);
        // a*T(a,b,c) = T(a,b,bc) and T(a,b,c) = T(T(a,b,bc),bc,c)
        {
          const int bc = cell(b, c);
          const int lhs = cell(a, abc);
          if (mode == Partiality::Matched && bc != kUnknown && lhs != kUnknown &&
              defined(bc) != defined(lhs)) {
            if (!on_violation(labels[0])) return false;
          }
          if (defined(bc)) {
            if (defined(lhs) && lhs != t(a, b, bc)) {
              if (!on_violation(labels[0])) return false;
            }
            const bool enforce_second = mode == Partiality::Vacuous || defined(lhs);
            if (enforce_second && abc != t(t(a, b, bc), bc, c)) {
              if (!on_violation(labels[1])) return false;
            }
          }
        }
        // T(a,b,c)*c = T(ab,b,c) and T(a,b,c) = T(a,ab,T(ab,b,c))
        {
          const int rhs = cell(abc, c);
          if (mode == Partiality::Matched && ab != kUnknown && rhs != kUnknown &&
              defined(ab) != defined(rhs)) {
            if (!on_violation(labels[2])) return false;
          }
          if (defined(ab)) {
            if (defined(rhs) && rhs != t(ab, b, c)) {
              if (!on_violation(labels[2])) return false;
            }
            const bool enforce_second = mode == Partiality::Vacuous || defined(rhs);
            if (enforce_second && abc != t(a, ab, t(ab, b, c))) {
              if (!on_violation(labels[3])) return false;
            }
          }
        }
      }
    }
  }
  return true;
}

/// Runs every product axiom instance. `cell(a, b)` returns a symbol,
/// kHole or kUnknown. Instances mentioning a kUnknown cell are skipped.
/// on_violation(Axiom) is called per violated instance and returns whether
/// to continue. Returns true iff the scan finished without being stopped.
template <class Cell, class OnViolation>
bool scan_product_axioms(const TernaryTable& h, const TernaryTable& v, const Cell& cell,
                         Partiality mode, Family family, OnViolation&& on_violation) {
  if (static_cast<int>(family) & static_cast<int>(Family::Classical)) {
    const int n = h.size();
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const int ab = cell(a, b);
        if (ab >= 0 && h(a, ab, b) != ab) {
          if (!on_violation(Axiom::R4)) return false;
        }
      }
    }
    if (!scan_r5_family(h, cell, mode, {Axiom::R5_1, Axiom::R5_2, Axiom::R5_3, Axiom::R5_4},
                        on_violation)) {
      return false;
    }
  }
  if (static_cast<int>(family) & static_cast<int>(Family::Virtual)) {
    if (!scan_r5_family(v, cell, mode,
                        {Axiom::vR5_1, Axiom::vR5_2, Axiom::vR5_3, Axiom::vR5_4},
                        on_violation)) {
      return false;
    }
  }
  return true;
}

}  // namespace vnalg::detail
