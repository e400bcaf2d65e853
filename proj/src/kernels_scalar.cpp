#include "adjideal/errors.hpp"
#include "adjideal/kernels.hpp"

#include <cmath>
#include <cstdlib>

namespace adjideal::kernels {

namespace {

double radial_sum(const double* s, const double* wt, std::size_t n, double w0, int zero_rate, int sigma,
                  double eps) {
  double total = 0;
  const double rate = zero_rate - sigma;
  for (std::size_t j = 0; j < n; ++j) {
    double w = w0 + s[j];
    double e = rate * (w - 1.0) - (1.0 + eps) * std::log(w);
    if (zero_rate > 1) e += (zero_rate - 1) * std::log(1.0 - std::exp(-s[j]));
    total += wt[j] * std::exp(e);
  }
  return total;
}

void probe_row(const double* c, const double* u, std::size_t n, double c0, double a0, double nu, int sigma,
               double eps, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    double lg = std::log(a0 + nu * u[i]);
    out[i] = c0 + c[i] - sigma * lg - (1.0 + eps) * std::log(1.0 + lg);
  }
}

double sum_exp(const double* x, std::size_t n, double shift) {
  double total = 0;
  for (std::size_t i = 0; i < n; ++i) total += std::exp(x[i] - shift);
  return total;
}

void exp_v(const double* x, std::size_t n, double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::exp(x[i]);
}
void log_v(const double* x, std::size_t n, double* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::log(x[i]);
}

const KernelTable kScalar{"scalar", radial_sum, probe_row, sum_exp, exp_v, log_v};

const KernelTable* default_table() {
  const char* env = std::getenv("ADJIDEAL_KERNELS");
  if (env && std::string(env) == "scalar") return &kScalar;
  if (const KernelTable* t = avx2_table()) return t;
  return &kScalar;
}

const KernelTable* g_active = nullptr;

}  // namespace

const KernelTable& scalar_table() { return kScalar; }

const KernelTable& active() {
  if (!g_active) g_active = default_table();
  return *g_active;
}

void select(const std::string& backend) {
  if (backend == "scalar") {
    g_active = &kScalar;
  } else if (backend == "avx2") {
    const KernelTable* t = avx2_table();
    if (!t) throw input_error("backend-unavailable", "avx2 kernels need avx2 and fma");
    g_active = t;
  } else {
    throw input_error("unknown-backend", backend);
  }
}

void reset() { g_active = default_table(); }

}  // namespace adjideal::kernels
