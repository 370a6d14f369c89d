#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "common.hpp"
#include "ncf.hpp"
#include "truth_table.hpp"

/*! \file mncf.hpp
  \brief Monotone NCFs, and canonical-order enumeration of NCF populations

  All streams are pull-based: call next() until it returns std::nullopt.
  Emission order is fixed:
  - compositions [k_1..k_r] with k_r >= 2 by layer count r, then
    lexicographically ([4], [1,3], [2,2], [1,1,2] for n = 4);
  - within a composition, ordered set partitions lexicographically, each
    layer picking its variables as the next combination of what is left;
  - then canalyzing inputs ascending, then b ascending.
*/

namespace ncfkit
{

using BigInt = boost::multiprecision::cpp_int;

/// Compositions of n whose last part is at least 2.
class CompositionStream
{
public:
  explicit CompositionStream( unsigned n );

  std::optional<Profile> next();

private:
  unsigned n_;
  std::vector<unsigned> current_;
  bool started_ = false;
  bool done_ = false;
};

/// Ordered partitions of {0..n-1} into consecutive layers of the given sizes.
class OrderedPartitionStream
{
public:
  explicit OrderedPartitionStream( const Profile& profile );

  std::optional<std::vector<std::vector<VarIndex>>> next();

private:
  void reset_from( std::size_t layer );
  std::vector<std::vector<VarIndex>> materialize() const;

  Profile profile_;
  unsigned n_;
  /// positions_[i] indexes a k_i-combination of the pool left after layers < i
  std::vector<std::vector<unsigned>> positions_;
  std::vector<std::vector<VarIndex>> pools_;
  bool started_ = false;
  bool done_ = false;
};

/// MNCF description: layer i (1-based) uses input a when i is odd, a+1 when even.
struct MncfSpec
{
  unsigned n;
  std::vector<std::vector<VarIndex>> layers;
  bool a;
  bool b;

  NcfLayerSpec to_ncf() const;
};

/// True iff each layer's inputs are uniform and consecutive layers alternate.
bool is_mncf( const NcfLayerSpec& spec );

/*! \brief Direction of a monotone NCF.

  Increasing exactly when the first-layer input equals b; returns
  Monotonicity::neither for specs that are not MNCFs.
*/
Monotonicity mncf_direction( const NcfLayerSpec& spec );

class MncfStream
{
public:
  explicit MncfStream( unsigned n, const Limits& limits = {} );
  MncfStream( unsigned n, const Profile& only, const Limits& limits = {} );

  std::optional<MncfSpec> next();

private:
  bool advance_partition();

  unsigned n_;
  std::optional<Profile> only_;
  CompositionStream compositions_;
  std::optional<OrderedPartitionStream> partitions_;
  std::vector<std::vector<VarIndex>> partition_;
  unsigned ab_ = 4;
};

class NcfStream
{
public:
  explicit NcfStream( unsigned n, const Limits& limits = {} );
  NcfStream( unsigned n, const Profile& only, const Limits& limits = {} );

  std::optional<NcfLayerSpec> next();

private:
  bool advance_partition();

  unsigned n_;
  std::optional<Profile> only_;
  CompositionStream compositions_;
  std::optional<OrderedPartitionStream> partitions_;
  std::vector<std::vector<VarIndex>> partition_;
  /// bit v of inputs_ is the canalyzing input of x_{v+1}; low bit of the counter is b
  std::uint64_t counter_ = 0;
  std::uint64_t counter_end_ = 0;
};

struct CountTable
{
  unsigned n;
  BigInt mncf_count;
  /// Composition and its multinomial n!/(k_1!...k_r!), in stream order.
  std::vector<std::pair<Profile, BigInt>> per_profile;
};

BigInt binomial( unsigned n, unsigned k );
BigInt multinomial( const Profile& p );

/// Number of MNCFs on n variables: 4 times the multinomial sum over valid compositions.
CountTable count_mncf( unsigned n, const Limits& limits = {} );

} // namespace ncfkit
