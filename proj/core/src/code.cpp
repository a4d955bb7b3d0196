#include "focal/code.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "focal/error.hpp"
#include "focal/measures.hpp"

namespace focal {

Code::Code(std::vector<std::size_t> compressor, std::vector<Pmf> decompressor,
           std::vector<std::size_t> order)
    : compressor_(std::move(compressor)), decompressor_(std::move(decompressor)),
      order_(std::move(order)) {
  if (compressor_.empty()) throw ValidationError("code: empty alphabet");
  for (std::size_t a = 0; a < compressor_.size(); ++a) {
    if (compressor_[a] >= decompressor_.size()) {
      throw ValidationError("code: symbol " + std::to_string(a) + " maps to an unknown message");
    }
  }
  for (const Pmf &g : decompressor_) {
    if (g.size() != compressor_.size()) {
      throw ValidationError("code: reconstruction length differs from the alphabet");
    }
  }
}

double Code::reconstruction_prob(std::size_t symbol) const {
  return decompressor_[message(symbol)][symbol];
}

std::vector<std::size_t> Code::cell(std::size_t m) const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < compressor_.size(); ++a) {
    if (compressor_[a] == m) out.push_back(a);
  }
  return out;
}

Code identity_code(std::size_t alphabet_size) {
  std::vector<std::size_t> compressor(alphabet_size);
  std::iota(compressor.begin(), compressor.end(), 0);
  std::vector<Pmf> decompressor;
  decompressor.reserve(alphabet_size);
  for (std::size_t a = 0; a < alphabet_size; ++a) {
    decompressor.push_back(Pmf::point_mass(alphabet_size, a));
  }
  return Code(compressor, std::move(decompressor), compressor);
}

namespace {

struct Assignment {
  std::vector<std::size_t> order;
  std::vector<std::size_t> message;
  std::vector<double> cell_mass;
  std::vector<std::size_t> cell_size;
};

// Ties keep ascending symbol index in both directions.
std::vector<std::size_t> visit_order(const Pmf &f, VisitOrder direction) {
  std::vector<std::size_t> order(f.size());
  std::iota(order.begin(), order.end(), 0);
  if (direction == VisitOrder::descending) {
    std::stable_sort(order.begin(), order.end(),
                     [&f](std::size_t a, std::size_t b) { return f[a] > f[b]; });
  } else {
    std::stable_sort(order.begin(), order.end(),
                     [&f](std::size_t a, std::size_t b) { return f[a] < f[b]; });
  }
  return order;
}

// Shared by build_code and exact_code_distortion; everything downstream of
// the assignment is computed separately by each.
Assignment greedy_assign(const Pmf &f, std::size_t m, VisitOrder direction) {
  Assignment out;
  out.order = visit_order(f, direction);
  out.message.assign(f.size(), 0);
  out.cell_mass.assign(m, 0.0);
  out.cell_size.assign(m, 0);
  for (std::size_t rank = 0; rank < out.order.size(); ++rank) {
    const std::size_t a = out.order[rank];
    std::size_t target = rank;
    if (rank >= m) {
      target = 0;
      for (std::size_t j = 1; j < m; ++j) {
        if (out.cell_mass[j] < out.cell_mass[target]) target = j;
      }
    }
    out.message[a] = target;
    out.cell_mass[target] += f[a];
    ++out.cell_size[target];
  }
  return out;
}

} // namespace

Code build_code(const Pmf &f, std::size_t m, VisitOrder order) {
  if (m == 0) throw ValidationError("build_code: code size must be positive");
  if (f.size() <= m) return identity_code(f.size());

  Assignment assignment = greedy_assign(f, m, order);
  std::vector<std::vector<double>> recon(m, std::vector<double>(f.size(), 0.0));
  for (std::size_t a = 0; a < f.size(); ++a) {
    const std::size_t msg = assignment.message[a];
    const double mass = assignment.cell_mass[msg];
    recon[msg][a] = mass > 0.0 ? f[a] / mass
                               : 1.0 / static_cast<double>(assignment.cell_size[msg]);
  }
  std::vector<Pmf> decompressor;
  decompressor.reserve(m);
  for (auto &g : recon) decompressor.push_back(Pmf::from_values(g, true));
  return Code(std::move(assignment.message), std::move(decompressor),
              std::move(assignment.order));
}

double exact_code_distortion(const Pmf &r, const Pmf &f, std::size_t m, double gamma,
                             VisitOrder order) {
  if (r.size() != f.size()) {
    throw ValidationError("exact_code_distortion: source and auxiliary lengths differ");
  }
  if (m == 0) throw ValidationError("exact_code_distortion: code size must be positive");
  (void)FocalParams{gamma};
  if (f.size() <= m) return 0.0;

  const Assignment assignment = greedy_assign(f, m, order);
  double total = 0.0;
  for (std::size_t a = 0; a < r.size(); ++a) {
    if (r[a] == 0.0) continue;
    const std::size_t msg = assignment.message[a];
    if (assignment.cell_size[msg] == 1) continue;
    const double cell = assignment.cell_mass[msg];
    if (cell == 0.0) {
      total += r[a] * focal_loss(1.0 / static_cast<double>(assignment.cell_size[msg]), gamma);
      continue;
    }
    if (f[a] == 0.0) return kInfinity;
    const double ratio = f[a] / cell;
    total += r[a] * std::log2(cell / f[a]) * std::pow(1.0 - ratio, gamma);
  }
  return total;
}

} // namespace focal
