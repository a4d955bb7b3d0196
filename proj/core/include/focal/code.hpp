#pragma once

#include <cstddef>
#include <vector>

#include "focal/pmf.hpp"

namespace focal {

/// A fixed-length code: a compressor from symbols to messages and one soft
/// reconstruction per message.
class Code {
public:
  Code(std::vector<std::size_t> compressor, std::vector<Pmf> decompressor,
       std::vector<std::size_t> order);

  /// Number of messages in use; never more than the size the code was built for.
  std::size_t message_count() const noexcept { return decompressor_.size(); }
  std::size_t alphabet_size() const noexcept { return compressor_.size(); }

  std::size_t message(std::size_t symbol) const { return compressor_.at(symbol); }
  const Pmf &reconstruction(std::size_t message) const { return decompressor_.at(message); }
  /// g(f(a))(a).
  double reconstruction_prob(std::size_t symbol) const;

  const std::vector<std::size_t> &compressor() const noexcept { return compressor_; }
  const std::vector<Pmf> &decompressor() const noexcept { return decompressor_; }
  /// Symbols in the order the greedy assignment visited them.
  const std::vector<std::size_t> &order() const noexcept { return order_; }

  /// Symbols assigned to `message`, ascending.
  std::vector<std::size_t> cell(std::size_t message) const;

private:
  std::vector<std::size_t> compressor_;
  std::vector<Pmf> decompressor_;
  std::vector<std::size_t> order_;
};

/// Order in which the greedy compressor visits symbols.
enum class VisitOrder {
  descending, ///< largest auxiliary mass first (the construction the bounds are proved for)
  ascending,  ///< smallest first; reproduces some published tables, no bound guarantees
};

/// Identity compressor with point-mass reconstructions.
Code identity_code(std::size_t alphabet_size);

/// Greedy mass-balancing code driven by the auxiliary distribution f.
///
/// Symbols are visited by decreasing f (ties by ascending index). The first
/// m get their own message; each later symbol joins the message with the
/// smallest accumulated f-mass, lowest message id on ties. Each message
/// reconstructs f restricted to its cell, renormalized. A cell whose f-mass
/// is zero reconstructs the uniform distribution over its members. When the
/// alphabet has at most m symbols the identity code is returned.
Code build_code(const Pmf &f, std::size_t m, VisitOrder order = VisitOrder::descending);

/// Average distortion of build_code(f, m) under source r, evaluated from
/// cell masses: sum_a r(a) log2(P(cell)/f(a)) (1 - f(a)/P(cell))^gamma.
double exact_code_distortion(const Pmf &r, const Pmf &f, std::size_t m, double gamma,
                             VisitOrder order = VisitOrder::descending);

} // namespace focal
