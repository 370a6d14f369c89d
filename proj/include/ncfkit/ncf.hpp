#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "common.hpp"
#include "truth_table.hpp"

/*! \file ncf.hpp
  \brief Nested canalyzing functions in canonical layered form

  Every NCF on n >= 2 variables has exactly one representation

    f = M_1 (M_2 ( ... (M_{r-1} (M_r + 1) + 1) ... ) + 1) + b

  over GF(2), where M_i is the product of (x_v + a_v) over the variables v of
  layer i. Layers partition the variables, every layer is nonempty and the
  last one has at least two variables. Setting a variable of layer i to its
  canalyzing input a_v forces f to b when i is odd and to b+1 when i is even,
  provided all earlier layers sit at their non-canalyzing inputs.
*/

namespace ncfkit
{

/// One variable of a layer together with its canalyzing input.
struct Literal
{
  VarIndex var;
  bool input;

  auto operator<=>( const Literal& ) const = default;
};

using Layer = std::vector<Literal>;

/*! \brief Canonical layered description of an NCF.

  The constructor validates the layer-size and partition invariants and sorts
  each layer by variable index, so two specs describe the same function iff
  they compare equal.
*/
class NcfLayerSpec
{
public:
  NcfLayerSpec( unsigned n, std::vector<Layer> layers, bool b );

  unsigned num_vars() const noexcept { return n_; }
  const std::vector<Layer>& layers() const noexcept { return layers_; }
  bool output_constant() const noexcept { return b_; }

  bool operator==( const NcfLayerSpec& ) const = default;

private:
  unsigned n_;
  std::vector<Layer> layers_;
  bool b_;
};

/// Layer sizes [k_1, ..., k_r] of an NCF.
struct Profile
{
  std::vector<unsigned> ks;

  unsigned num_vars() const;
  unsigned layer_number() const { return static_cast<unsigned>( ks.size() ); }

  bool operator==( const Profile& ) const = default;
};

/// Throws InvalidArgument unless n >= 2, all k_i >= 1 and k_r >= 2.
void validate_profile( const Profile& p );

enum class NotNcfStage
{
  single_variable,
  constant,
  inessential_variable,
  no_canalyzing_variable,
  inconsistent_canalyzed_values,
  alternation_violated
};

const char* to_string( NotNcfStage stage );

struct NotNcf
{
  NotNcfStage stage;
  /// 1-based layer at which peeling failed; 0 when the failure precedes peeling.
  unsigned layer = 0;
  /// Variables left unpeeled when the failure happened.
  VarMask remaining = 0;

  std::string describe() const;
};

using Recognition = std::variant<NcfLayerSpec, NotNcf>;

TruthTable construct( const NcfLayerSpec& spec );

/*! \brief Recovers the canonical spec of f, or reports why f is not an NCF.

  Peels layers: at each step all (variable, input) pairs that force the
  current subfunction to a constant form the next layer; they must agree on
  the forced value, which must alternate between layers. The layer's variables
  are then fixed to their non-canalyzing inputs and peeling continues on what
  remains. f is accepted once every variable has been peeled.
*/
Recognition recognize( const TruthTable& f );

inline bool is_ncf( const Recognition& r ) { return std::holds_alternative<NcfLayerSpec>( r ); }

Profile profile_of( const NcfLayerSpec& spec );
unsigned layer_number( const NcfLayerSpec& spec );

/// Closed-form sensitivity of any NCF with the given profile.
unsigned sensitivity_formula( const Profile& p );

struct SensitivityBounds
{
  unsigned lower;
  unsigned upper;
};

/*! \brief Profile-independent bounds on the sensitivity for a layer count.

  r = 1 gives exactly n, r = n - 1 gives exactly (n+2)/2 for even n and
  (n+1)/2 for odd n. For 2 <= r <= n-2 the bounds are ceil((n+1)/2) and
  n+1-(r+1)/2 (odd r) or n+1-r/2 (even r).
*/
SensitivityBounds sensitivity_bounds( const Profile& p );

/// An NCF moved to standard position, plus the transforms that undo the move.
struct StandardForm
{
  /// All inputs 0, b = 0, layers occupy consecutive variables 0..n-1.
  NcfLayerSpec standard_spec;
  TruthTable table;
  /// sigma[k] is the original variable placed at standard position k.
  std::vector<VarIndex> sigma;
  InputWord shift;
  bool output_flip;
};

/// original = (output_flip ? complement : id)(xor_shift(permute(table, sigma), shift)).
StandardForm standardize( const NcfLayerSpec& spec );
TruthTable from_standard( const StandardForm& form );

/// Uniformly random composition with k_r >= 2, random variable order, inputs and b.
NcfLayerSpec random_ncf( unsigned n, std::mt19937_64& rng );

/// Sequence of canalyzed values b, b+1, b, ... one per layer.
std::vector<bool> canalyzed_values( const NcfLayerSpec& spec );

} // namespace ncfkit
