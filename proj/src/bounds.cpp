#include "spectre/bounds.hpp"

#include <cmath>
#include <string>

#include "spectre/errors.hpp"

namespace spectre {

namespace {

std::uint64_t checked_add(std::uint64_t x, std::uint64_t y) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(x, y, &out)) throw DomainError("bound arithmetic overflow");
  return out;
}

std::uint64_t checked_mul(std::uint64_t x, std::uint64_t y) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(x, y, &out)) throw DomainError("bound arithmetic overflow");
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

// sum_{i=lo..hi} base^i, empty when hi < lo.
std::uint64_t power_sum(std::uint64_t base, int lo, int hi) {
  std::uint64_t total = 0;
  for (int i = lo; i <= hi; ++i) total = checked_add(total, checked_pow(base, i));
  return total;
}

int half_girth(Girth g) {
  if (!g.finite()) throw NotApplicable("girth is infinite (acyclic graph)");
  if (g.value() < 3) throw DomainError("girth must be at least 3");
  return (g.value() - 1) / 2;
}

void require_degree(std::int64_t d) {
  if (d < 2) throw DomainError("degree must be at least 2, got " + std::to_string(d));
}

void require_shift(double a) {
  if (!(a >= -1.0) || !std::isfinite(a)) throw NotApplicable("requires a >= -1");
}

void require_kappa(std::int64_t delta, std::int64_t k) {
  if (k < 2) throw NotApplicable("requires k >= 2");
  if (delta < k) throw NotApplicable("requires min degree >= k");
}

void require_tau(std::int64_t delta, std::int64_t k) {
  if (k < 2) throw NotApplicable("requires k >= 2");
  if (delta < 2 * k) throw NotApplicable("requires min degree >= 2k");
}

}  // namespace

int BoundParams::t() const { return half_girth(g); }

std::uint64_t n1_star(std::int64_t delta, Girth g) {
  const int t = half_girth(g);
  require_degree(delta);
  const auto d = static_cast<std::uint64_t>(delta);
  if (g.value() == 2 * t + 1) return checked_add(1 + d, power_sum(d - 1, 2, t));
  return checked_add(checked_add(2, checked_mul(2, checked_pow(d - 1, t))), power_sum(d - 1, 1, t - 1));
}

std::uint64_t moore_bound(std::int64_t d, Girth g) {
  const int t = half_girth(g);
  require_degree(d);
  const auto du = static_cast<std::uint64_t>(d);
  if (g.value() == 2 * t + 1) return checked_add(1, checked_mul(du, power_sum(du - 1, 0, t - 1)));
  return checked_mul(2, power_sum(du - 1, 0, t));
}

double tau_penalty(std::int64_t delta, std::int64_t k, Girth g) {
  require_tau(delta, k);
  const std::uint64_t n1 = n1_star(delta, g);
  return static_cast<double>(2 * k - 1) / static_cast<double>(n1);
}

double kappa_weak_penalty(std::int64_t delta, std::int64_t k, Girth g) {
  require_kappa(delta, k);
  const std::uint64_t n1 = n1_star(delta, g);
  return static_cast<double>(2 * (k - 1)) / static_cast<double>(n1);
}

double kappa_strong_penalty(std::int64_t delta, std::int64_t k, Girth g, std::int64_t n) {
  require_kappa(delta, k);
  const std::uint64_t n1 = n1_star(delta, g);
  if (n <= 0 || static_cast<std::uint64_t>(n) <= n1) {
    throw NotApplicable("requires n > n1* = " + std::to_string(n1) + ", got n = " + std::to_string(n));
  }
  const std::uint64_t num = checked_mul(static_cast<std::uint64_t>(k - 1), static_cast<std::uint64_t>(n));
  const std::uint64_t den = checked_mul(n1, static_cast<std::uint64_t>(n) - n1);
  return static_cast<double>(num) / static_cast<double>(den);
}

double tau_threshold(std::int64_t delta, std::int64_t k, Girth g, double a) {
  require_shift(a);
  return (a + 1.0) * static_cast<double>(delta) - tau_penalty(delta, k, g);
}

double kappa_threshold_strong(std::int64_t delta, std::int64_t k, Girth g, double a, std::int64_t n) {
  require_shift(a);
  return (a + 1.0) * static_cast<double>(delta) - kappa_strong_penalty(delta, k, g, n);
}

double kappa_threshold_weak(std::int64_t delta, std::int64_t k, Girth g, double a) {
  require_shift(a);
  return (a + 1.0) * static_cast<double>(delta) - kappa_weak_penalty(delta, k, g);
}

}  // namespace spectre
