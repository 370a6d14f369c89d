#include "ncfkit/mncf.hpp"

#include <numeric>

namespace ncfkit
{

namespace
{

void check_enum_n( const char* what, unsigned n, unsigned cap )
{
  if ( n < 2 )
  {
    throw InvalidArgument( std::string( what ) + " needs n >= 2" );
  }
  if ( n > cap || n > kHardMaxVars )
  {
    throw CapExceeded( what, n, std::min( cap, kHardMaxVars ) );
  }
}

void check_filter( const Profile& p, unsigned n )
{
  validate_profile( p );
  if ( p.num_vars() != n )
  {
    throw InvalidArgument( "profile sums to " + std::to_string( p.num_vars() ) + ", expected " + std::to_string( n ) );
  }
}

/// Advances pos to the next k-combination of {0..m-1} in lexicographic order.
bool next_combination( std::vector<unsigned>& pos, unsigned m )
{
  const auto k = static_cast<unsigned>( pos.size() );
  for ( unsigned p = k; p-- > 0; )
  {
    if ( pos[p] < m - k + p )
    {
      ++pos[p];
      for ( unsigned q = p + 1; q < k; ++q )
      {
        pos[q] = pos[q - 1] + 1;
      }
      return true;
    }
  }
  return false;
}

} // namespace

CompositionStream::CompositionStream( unsigned n ) : n_( n )
{
  if ( n < 2 )
  {
    throw InvalidArgument( "compositions need n >= 2" );
  }
}

std::optional<Profile> CompositionStream::next()
{
  if ( done_ )
  {
    return std::nullopt;
  }
  if ( !started_ )
  {
    started_ = true;
    current_ = {n_};
    return Profile{current_};
  }

  const auto r = static_cast<unsigned>( current_.size() );
  // next composition with the same number of parts, if any
  for ( unsigned i = r - 1; i-- > 0; )
  {
    const unsigned prefix = std::accumulate( current_.begin(), current_.begin() + i + 1, 0u ) + 1;
    const unsigned middle = r - 2 - i; // parts strictly between i and the last, all set to 1
    if ( prefix + middle + 2 <= n_ )
    {
      ++current_[i];
      for ( unsigned j = i + 1; j + 1 < r; ++j )
      {
        current_[j] = 1;
      }
      current_.back() = n_ - prefix - middle;
      return Profile{current_};
    }
  }
  if ( r + 1 <= n_ - 1 )
  {
    current_.assign( r, 1u );
    current_.push_back( n_ - r );
    return Profile{current_};
  }
  done_ = true;
  return std::nullopt;
}

OrderedPartitionStream::OrderedPartitionStream( const Profile& profile )
    : profile_( profile ), n_( profile.num_vars() ), positions_( profile.ks.size() ), pools_( profile.ks.size() )
{
  validate_profile( profile );
}

void OrderedPartitionStream::reset_from( std::size_t layer )
{
  for ( std::size_t i = layer; i < profile_.ks.size(); ++i )
  {
    if ( i == 0 )
    {
      pools_[0].resize( n_ );
      std::iota( pools_[0].begin(), pools_[0].end(), 0u );
    }
    else
    {
      std::vector<bool> taken( pools_[i - 1].size(), false );
      for ( auto p : positions_[i - 1] )
      {
        taken[p] = true;
      }
      pools_[i].clear();
      for ( std::size_t q = 0; q < pools_[i - 1].size(); ++q )
      {
        if ( !taken[q] )
        {
          pools_[i].push_back( pools_[i - 1][q] );
        }
      }
    }
    positions_[i].resize( profile_.ks[i] );
    std::iota( positions_[i].begin(), positions_[i].end(), 0u );
  }
}

std::vector<std::vector<VarIndex>> OrderedPartitionStream::materialize() const
{
  std::vector<std::vector<VarIndex>> layers;
  for ( std::size_t i = 0; i < positions_.size(); ++i )
  {
    std::vector<VarIndex> layer;
    for ( auto p : positions_[i] )
    {
      layer.push_back( pools_[i][p] );
    }
    layers.push_back( std::move( layer ) );
  }
  return layers;
}

std::optional<std::vector<std::vector<VarIndex>>> OrderedPartitionStream::next()
{
  if ( done_ )
  {
    return std::nullopt;
  }
  if ( !started_ )
  {
    started_ = true;
    reset_from( 0 );
    return materialize();
  }
  // the last layer takes whatever is left, so only layers 0..r-2 vary
  for ( std::size_t i = positions_.size() - 1; i-- > 0; )
  {
    if ( next_combination( positions_[i], static_cast<unsigned>( pools_[i].size() ) ) )
    {
      reset_from( i + 1 );
      return materialize();
    }
  }
  done_ = true;
  return std::nullopt;
}

NcfLayerSpec MncfSpec::to_ncf() const
{
  std::vector<Layer> out;
  for ( std::size_t i = 0; i < layers.size(); ++i )
  {
    const bool input = a != ( i % 2 == 1 );
    Layer layer;
    for ( auto v : layers[i] )
    {
      layer.push_back( {v, input} );
    }
    out.push_back( std::move( layer ) );
  }
  return NcfLayerSpec( n, std::move( out ), b );
}

bool is_mncf( const NcfLayerSpec& spec )
{
  const auto& layers = spec.layers();
  const bool a = layers.front().front().input;
  for ( std::size_t i = 0; i < layers.size(); ++i )
  {
    const bool expected = a != ( i % 2 == 1 );
    for ( const auto& lit : layers[i] )
    {
      if ( lit.input != expected )
      {
        return false;
      }
    }
  }
  return true;
}

Monotonicity mncf_direction( const NcfLayerSpec& spec )
{
  if ( !is_mncf( spec ) )
  {
    return Monotonicity::neither;
  }
  const bool a = spec.layers().front().front().input;
  return a == spec.output_constant() ? Monotonicity::increasing : Monotonicity::decreasing;
}

MncfStream::MncfStream( unsigned n, const Limits& limits ) : n_( n ), compositions_( std::max( n, 2u ) )
{
  check_enum_n( "enumerate_mncf", n, limits.mncf_enum_cap );
}

MncfStream::MncfStream( unsigned n, const Profile& only, const Limits& limits ) : MncfStream( n, limits )
{
  check_filter( only, n );
  only_ = only;
}

bool MncfStream::advance_partition()
{
  while ( true )
  {
    if ( partitions_ )
    {
      if ( auto p = partitions_->next() )
      {
        partition_ = std::move( *p );
        return true;
      }
    }
    auto comp = compositions_.next();
    if ( !comp )
    {
      return false;
    }
    if ( only_ && *comp != *only_ )
    {
      continue;
    }
    partitions_.emplace( *comp );
  }
}

std::optional<MncfSpec> MncfStream::next()
{
  if ( ab_ == 4 )
  {
    if ( !advance_partition() )
    {
      return std::nullopt;
    }
    ab_ = 0;
  }
  MncfSpec spec{n_, partition_, ( ab_ >> 1 ) != 0, ( ab_ & 1u ) != 0};
  ++ab_;
  return spec;
}

NcfStream::NcfStream( unsigned n, const Limits& limits ) : n_( n ), compositions_( std::max( n, 2u ) )
{
  check_enum_n( "enumerate_ncf", n, limits.ncf_enum_cap );
  counter_end_ = std::uint64_t( 1 ) << ( n + 1 );
  counter_ = counter_end_;
}

NcfStream::NcfStream( unsigned n, const Profile& only, const Limits& limits ) : NcfStream( n, limits )
{
  check_filter( only, n );
  only_ = only;
}

bool NcfStream::advance_partition()
{
  while ( true )
  {
    if ( partitions_ )
    {
      if ( auto p = partitions_->next() )
      {
        partition_ = std::move( *p );
        return true;
      }
    }
    auto comp = compositions_.next();
    if ( !comp )
    {
      return false;
    }
    if ( only_ && *comp != *only_ )
    {
      continue;
    }
    partitions_.emplace( *comp );
  }
}

std::optional<NcfLayerSpec> NcfStream::next()
{
  if ( counter_ == counter_end_ )
  {
    if ( !advance_partition() )
    {
      return std::nullopt;
    }
    counter_ = 0;
  }
  const std::uint64_t inputs = counter_ >> 1;
  const bool b = counter_ & 1u;
  ++counter_;

  std::vector<Layer> layers;
  for ( const auto& vars : partition_ )
  {
    Layer layer;
    for ( auto v : vars )
    {
      layer.push_back( {v, ( ( inputs >> v ) & 1u ) != 0} );
    }
    layers.push_back( std::move( layer ) );
  }
  return NcfLayerSpec( n_, std::move( layers ), b );
}

BigInt binomial( unsigned n, unsigned k )
{
  if ( k > n )
  {
    return 0;
  }
  BigInt result = 1;
  for ( unsigned i = 1; i <= k; ++i )
  {
    result = result * ( n - k + i ) / i;
  }
  return result;
}

BigInt multinomial( const Profile& p )
{
  BigInt result = 1;
  unsigned left = p.num_vars();
  for ( auto k : p.ks )
  {
    result *= binomial( left, k );
    left -= k;
  }
  return result;
}

CountTable count_mncf( unsigned n, const Limits& limits )
{
  if ( n < 2 )
  {
    throw InvalidArgument( "count_mncf needs n >= 2" );
  }
  if ( n > limits.max_vars || n > kHardMaxVars )
  {
    throw CapExceeded( "count_mncf", n, std::min( limits.max_vars, kHardMaxVars ) );
  }
  CountTable table{n, 0, {}};
  BigInt sum = 0;
  CompositionStream compositions( n );
  while ( auto p = compositions.next() )
  {
    auto term = multinomial( *p );
    sum += term;
    table.per_profile.emplace_back( std::move( *p ), std::move( term ) );
  }
  table.mncf_count = 4 * sum;
  return table;
}

} // namespace ncfkit
