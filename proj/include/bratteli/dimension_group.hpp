#pragma once

#include "bratteli/kakutani_rohlin.hpp"

#include <optional>
#include <vector>

namespace bratteli {

/// Inductive system Z^{|V_0|} -> Z^{|V_1|} -> ... along the incidence
/// matrices. `head` holds phi_1..phi_L; when `repeating` is set every later
/// map is that matrix, otherwise the system stops at stage L.
struct GroupPresentation {
  std::vector<Matrix> head;
  std::optional<Matrix> repeating;

  bool stationary() const { return repeating.has_value(); }
  /// Last stage with known maps; unbounded (SIZE_MAX) when stationary.
  std::size_t depth() const;
  std::size_t dimension(std::size_t stage) const;
  /// phi_n, the map from stage n-1 to stage n.
  const Matrix& map(std::size_t n) const;
  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

GroupPresentation k0_of(const BratteliDiagram& d);
GroupPresentation k0_of(const StationaryDiagram& d);
GroupPresentation k0_of(const StationaryOrderedDiagram& sd);
GroupPresentation k0_of(const StationaryTailDiagram& d);

struct GroupElement {
  std::size_t stage = 0;
  Vector vector;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Throws PreconditionFailed on a length mismatch.
void require_element(const GroupPresentation& p, const GroupElement& g);

GroupElement push(const GroupPresentation& p, const GroupElement& g, std::size_t stage);
/// a - b at the later of the two stages.
GroupElement difference(const GroupPresentation& p, const GroupElement& a, const GroupElement& b);
GroupElement sum(const GroupPresentation& p, const GroupElement& a, const GroupElement& b);
GroupElement scaled(const BigInt& s, const GroupElement& g);

enum class Truth { True, False, Undetermined };

/// Stationary: exact, via the eventual kernel of the repeating matrix (the
/// chain ker C ⊆ ker C^2 ⊆ ... is stable after dimension many steps).
/// Explicit: True when the pushes agree within the represented depth,
/// otherwise Undetermined.
Truth equal(const GroupPresentation& p, const GroupElement& a, const GroupElement& b);

enum class Sign { Positive, Negative, Zero, Undetermined };
std::string to_string(Sign s);

/// Sign of the Perron pairing <l, v> for a primitive repeating matrix C.
///
/// The left Perron vector l lies in the cone spanned by the rows of C^m for
/// every m, so C^m v > 0 (resp. < 0) certifies a positive (negative)
/// pairing. C^m is refined by squaring at most `squarings` times. A zero
/// pairing is never certified and yields Undetermined.
Sign perron_pairing_sign(const Matrix& c, const Vector& v, std::size_t squarings);

/// Pushes g forward up to `horizon` stages looking for a nonnegative or
/// nonpositive nonzero vector.
Sign push_sign(const GroupPresentation& p, const GroupElement& g, std::size_t horizon);

/// Zero when g = 0 in the limit; primitive stationary presentations use the
/// certified Perron pairing, everything else the push search.
Sign is_positive(const GroupPresentation& p, const GroupElement& g, std::size_t horizon = 64);

/// Class of 1 at stage 0.
GroupElement unit_of(const GroupPresentation& p);

/// Some c with a_i <= c <= b_j, or nullopt when the search up to `horizon`
/// extra stages finds none (not a disproof). Throws PreconditionFailed when
/// a_i <= b_j cannot be certified.
std::optional<GroupElement> interpolate(const GroupPresentation& p, const GroupElement& a1, const GroupElement& a2,
                                        const GroupElement& b1, const GroupElement& b2, std::size_t horizon = 32);

/// Earliest stage at which g is realized. Stationary presentations compare
/// in the limit; explicit ones need an exact preimage.
GroupElement normal_form(const GroupPresentation& p, const GroupElement& g);

/// A function constant on the floors of the towers of P_n: values[k][j] is
/// its value on floor j of tower k.
struct TowerFunction {
  std::size_t level = 0;
  std::vector<std::vector<BigInt>> values;
  friend bool operator==(const TowerFunction&, const TowerFunction&) = default;
};

/// Throws PreconditionFailed unless f has one value per floor of `towers`.
void require_shape(const KRLevel& towers, const TowerFunction& f);

/// Tower sums.
GroupElement gamma(const KRLevel& towers, const TowerFunction& f);

/// The same function read on the finer partition P_{n+1}.
TowerFunction lift(const NestedKRSequence& seq, const TowerFunction& f);

/// gamma_{n+1}(lift f) = Q_{n+1} gamma_n(f) for every floor indicator f.
bool gamma_intertwine_check(const NestedKRSequence& seq, std::size_t n);

/// g with g(k, 0) = 0 and f(k, j) = g(k, j) - g(k, j+1) below the top floor.
/// Throws PreconditionFailed when some tower sum is nonzero.
TowerFunction coboundary_witness(const KRLevel& towers, const TowerFunction& f);

struct TowerSumReport {
  std::size_t rank = 0;            // rank of gamma_n
  bool onto = false;               // floor-0 indicators hit the standard basis
  bool kernel_spanned = false;     // floor differences are null-sum, independent, and fill the kernel
  explicit operator bool() const { return onto && kernel_spanned; }
};

TowerSumReport tower_sum_report(const NestedKRSequence& seq, std::size_t n);

}  // namespace bratteli
