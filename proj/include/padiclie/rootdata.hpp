#ifndef PADICLIE_ROOTDATA_HPP
#define PADICLIE_ROOTDATA_HPP

#include <string>
#include <vector>

#include "padiclie/scalar.hpp"

namespace padiclie {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', G = 'G' };

Family family_from_char(char c);

/// Root-system combinatorics for a split semisimple type. Roots live in
/// simple-root integer coordinates; weights in fundamental-weight
/// coordinates; the Cartan matrix C (C_ij = alpha_i(h_j)) converts between
/// them. Positive roots are listed in height-then-index order, which is
/// also the PBW ordering of the negative root vectors downstream.
struct RootDatum {
  Family family;
  int rank = 0;
  std::vector<std::vector<long>> cartan;            // C, rank x rank
  std::vector<std::vector<long>> adjugate;          // C*, CC* = C*C = det*I
  long det = 0;                                     // d = det C
  std::vector<std::vector<long>> positive_roots;    // alpha-coordinates
  int num_positive() const { return static_cast<int>(positive_roots.size()); }

  std::string label() const;

  /// alpha(h_j) for a root given in simple-root coordinates.
  long root_pairing(const std::vector<long>& root_coords, int j) const;
  long root_height(int root_index) const;

  /// Fundamental-weight coordinates of sum_i c_i alpha_i (the map C^T c).
  std::vector<long> root_to_weight_coords(const std::vector<long>& root_coords) const;
  std::vector<Rat> root_to_weight_coords(const std::vector<Rat>& root_coords) const;

  int index_of_root(const std::vector<long>& coords) const;  // -1 when absent
};

/// Supported whitelist: A1..A4, B2, C3, D4, G2. Anything else throws
/// UnsupportedType; structure constants downstream are built per type, so
/// silent extrapolation is worse than an error.
RootDatum build_root_datum(Family family, int rank);
RootDatum build_root_datum(const std::string& label);  // e.g. "A2"

/// Coordinates of sum_i mu_i * d * omega_i in the simple-root basis:
/// component j is sum_i mu_i C*_ij. Entries are non-negative because all
/// adjugate entries are.
std::vector<long> adjugate_weight_combination(const RootDatum& datum,
                                              const std::vector<long>& mu);

struct WeylElement {
  std::vector<int> word;                      // simple reflection indices, 0-based
  std::vector<std::vector<long>> matrix;      // action on simple-root coordinates
};

std::vector<std::vector<long>> simple_reflection_matrix(const RootDatum& datum, int i);
std::vector<long> apply_weyl(const WeylElement& w, const std::vector<long>& root_coords);

/// Longest element by breadth-first enumeration of the Weyl group.
/// Throws SearchBudgetExceeded past max_group_order.
WeylElement longest_element(const RootDatum& datum, std::size_t max_group_order = 100000);

/// Pairing of a weight (fundamental-weight coordinates) against the coroot
/// h_j: just the j-th coordinate, kept as an operation so callers never
/// index into the wrong basis.
Rat weight_pairing(const std::vector<Rat>& weight, int j);

}  // namespace padiclie

#endif
