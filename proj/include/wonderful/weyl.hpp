#pragma once

// Exact root-system arithmetic over the weight lattice.
//
// Weights are integer vectors in the fundamental-weight basis. Roots are
// stored in simple-root coordinates and converted on construction. Nothing
// in here touches floating point: pairings are integers, the invariant form
// is rational, dimensions are arbitrary-precision integers.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wonderful {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVec = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVec>;

class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Integer vector in the fundamental-weight basis of some root system.
class Weight {
public:
  Weight() = default;
  explicit Weight(IntVec coords) : coords_(std::move(coords)) {}
  static Weight zero(std::size_t rank) { return Weight(IntVec(rank, 0)); }

  std::size_t size() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }
  const IntVec& coords() const { return coords_; }

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(std::int64_t k);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(std::int64_t k, Weight a) { return a *= k; }
  friend Weight operator-(Weight a) { return a *= -1; }

  bool is_zero() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

private:
  IntVec coords_;
};

std::string to_string(const Weight& w);

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct DynkinComponent {
  Family family;
  int rank;
  friend bool operator==(const DynkinComponent&, const DynkinComponent&) = default;
};

/// Parses "A2", "B3", "A1xA1", "D4xG2" into components.
std::vector<DynkinComponent> parse_dynkin(const std::string& text);
std::string to_string(std::span<const DynkinComponent> comps);

/// Result of moving a weight into the dominant chamber by the rho-shifted action.
struct ShiftedDominant {
  Weight dominant;            // w * lambda
  int length = 0;             // l(w)
  std::vector<int> word;      // simple reflections applied, first to last
};

class RootSystem {
public:
  /// Cartan data for a product of simple types (block diagonal). Bourbaki
  /// numbering inside each block. Throws InvalidInput on unknown types.
  explicit RootSystem(std::vector<DynkinComponent> components);

  const std::vector<DynkinComponent>& components() const { return components_; }
  std::size_t rank() const { return rank_; }
  /// cartan()[i][j] = <alpha_j, alpha_i^vee>; column j is alpha_j in weight coords.
  const IntMatrix& cartan() const { return cartan_; }
  /// d_i with (alpha_i, alpha_j) = d_i * cartan[i][j]; short roots have d = 1.
  const IntVec& symmetrizer() const { return symmetrizer_; }
  /// Positive roots in simple-root coordinates, graded by height then lexicographic.
  const std::vector<IntVec>& positive_roots() const { return positive_roots_; }
  std::size_t num_positive_roots() const { return positive_roots_.size(); }
  /// Order of the Weyl group.
  const BigInt& weyl_order() const { return weyl_order_; }

  Weight root_as_weight(std::span<const std::int64_t> root) const;
  const Weight& positive_root_weight(std::size_t k) const { return root_weights_[k]; }
  Weight simple_root_weight(std::size_t i) const;
  Weight fundamental_weight(std::size_t i) const;
  Weight rho() const { return Weight(IntVec(rank_, 1)); }

  /// <lambda, alpha^vee> for a root given in simple-root coordinates.
  std::int64_t pair_coroot(const Weight& lambda, std::span<const std::int64_t> root) const;
  std::int64_t pair_coroot(const Weight& lambda, std::size_t positive_root_index) const;

  /// W-invariant form, short roots of squared length 2.
  Rational inner_product(const Weight& a, const Weight& b) const;
  /// inner_product scaled by form_denominator(); exact integer.
  std::int64_t scaled_inner_product(const Weight& a, const Weight& b) const;
  std::int64_t form_denominator() const { return form_denominator_; }
  /// Sign of (lambda, alpha_k) for positive root k; integer, no division.
  std::int64_t root_pairing_numerator(const Weight& lambda, std::size_t k) const;

  bool is_dominant(const Weight& lambda) const;
  bool is_regular_shifted(const Weight& lambda) const;
  /// #{alpha > 0 : (lambda + rho, alpha) < 0}.
  int shifted_inversions(const Weight& lambda) const;

  /// w_lambda * lambda and l(lambda); nullopt when lambda + rho is singular.
  std::optional<ShiftedDominant> make_dominant_shifted(const Weight& lambda) const;

  /// s_i(lambda) and s_i * lambda.
  Weight reflect(const Weight& lambda, std::size_t i) const;
  Weight reflect_shifted(const Weight& lambda, std::size_t i) const;
  /// s_alpha for an arbitrary root in simple-root coordinates.
  Weight reflect_root(const Weight& lambda, std::span<const std::int64_t> root) const;

  /// -w0 mu; rejects non-dominant input.
  Weight dual_weight(const Weight& mu) const;
  BigInt weyl_dimension(const Weight& mu) const;

  void check_weight(const Weight& w) const;

private:
  std::int64_t root_norm2(std::span<const std::int64_t> root) const;

  std::vector<DynkinComponent> components_;
  std::size_t rank_ = 0;
  IntMatrix cartan_;
  IntVec symmetrizer_;
  std::vector<IntVec> positive_roots_;
  std::vector<Weight> root_weights_;
  std::vector<IntVec> root_dual_;      // a_j * d_j per positive root
  IntVec root_norms_;                  // (alpha, alpha)
  IntMatrix scaled_gram_;              // (omega_i, omega_j) * form_denominator_
  std::int64_t form_denominator_ = 1;
  BigInt weyl_order_;
};

}  // namespace wonderful
