#pragma once

#include <cstddef>
#include <string>

// Integrand kernels for residue_numeric. The scalar table is the reference;
// the AVX2 table is chosen at runtime when the CPU supports avx2 and fma.
namespace adjideal::kernels {

struct KernelTable {
  const char* name;
  // Σ_j wt[j] · exp((k−σ)(w_j − 1) + (k−1)·log(1 − e^{−s_j}) − (1+ε)·log w_j), w_j = w0 + s_j.
  double (*radial_sum)(const double* s, const double* wt, std::size_t n, double w0, int zero_rate, int sigma,
                       double eps);
  // out[i] = c0 + c[i] − σ·log L − (1+ε)·log(1 + log L), L = a0 + nu·u[i].
  void (*probe_row)(const double* c, const double* u, std::size_t n, double c0, double a0, double nu, int sigma,
                    double eps, double* out);
  // Σ_i exp(x[i] − shift)
  double (*sum_exp)(const double* x, std::size_t n, double shift);
  // Elementwise, exposed for equivalence tests.
  void (*exp_v)(const double* x, std::size_t n, double* out);
  void (*log_v)(const double* x, std::size_t n, double* out);
};

const KernelTable& scalar_table();
// nullptr when the CPU lacks avx2/fma.
const KernelTable* avx2_table();

const KernelTable& active();
// "scalar" or "avx2"; throws input_error for an unavailable backend.
void select(const std::string& backend);
// Restores the default choice (avx2 when available, unless ADJIDEAL_KERNELS=scalar).
void reset();

}  // namespace adjideal::kernels
