#pragma once

// Closed-form Bergman, Cauchy-Szego and Poisson kernels. Every kernel is
// defined only up to a constant factor; each formula here uses constant 1.

#include <span>
#include <string_view>

#include "cgeom/domains.hpp"
#include "cgeom/linalg.hpp"

namespace cgeom {

enum class KernelForm {
  bergman_I,
  bergman_V_det,
  bergman_V_closed,
  bergman_V_closed_printed,
  bergman_VI,
  szego_V,
  szego_V_printed,
  poisson_V,
  poisson_V_printed,
  szego_VI,
  poisson_VI,
  poisson_I_pj,
};

std::string_view form_name(KernelForm f);

struct KernelValue {
  Complex value;
  KernelForm form;
};

/// Variants of the Bergman kernel of the 16-dimensional domain.
///   det:            d^60 / det(M)^12, d = Im z8 - u u^*, M = hermitian_form(V, p)
///   closed:         {(Im z1 - t t^*)(Im z8 - u u^*) - sum_j b_j^2}^-12,
///                   b_j = Im z_{j+1} - (u Q_j t^* + t Q_j^* u^*)/2
///   closed_printed: as closed but with the leading product Im z1 * Im z8;
///                   equals the other two forms only when t = u = 0.
enum class BergmanVForm { det, closed, closed_printed };

/// Exponent choice for the Szego/Poisson pair of the 16-dimensional domain:
/// the Szego kernel is d_m^{5s} / det(M_m)^s.
///   harmonic: s = 8, the kernel annihilated by the Laplace-Beltrami operator
///   printed:  s = 6 (d^30 / det^6)
enum class SzegoExponentV { harmonic, printed };

int szego_exponent(SzegoExponentV e);

/// det(I - Z Z^*)^{-(m+n)}.
KernelValue bergman_I(std::size_t m, std::size_t n, const CMatrix& z);

KernelValue bergman_V(std::span<const Complex> p, BergmanVForm form = BergmanVForm::det);

/// q^126 / det((Z - Z^*)/(2i))^18 with q = Im z22 Im z33 - |Im z|^2.
KernelValue bergman_VI(std::span<const Complex> p);

/// Sesqui-holomorphic Szego kernel for two points of the closure (16 flat coordinates each):
/// holomorphic in `p`, antiholomorphic in `q`.
KernelValue szego_V_points(std::span<const Complex> p, std::span<const Complex> q,
                           SzegoExponentV e = SzegoExponentV::harmonic);
KernelValue szego_V(std::span<const Complex> p, const BoundaryPointV& b,
                    SzegoExponentV e = SzegoExponentV::harmonic);
/// |H(p,b)|^2 / H(p,p).
KernelValue poisson_V(std::span<const Complex> p, const BoundaryPointV& b,
                      SzegoExponentV e = SzegoExponentV::harmonic);

/// q_m^63 / det((Z - conj(X))/(2i))^9 for two closure points of the 27-dimensional domain.
KernelValue szego_VI_points(std::span<const Complex> p, std::span<const Complex> q);
KernelValue szego_VI(std::span<const Complex> p, const BoundaryPointVI& b);
KernelValue poisson_VI(std::span<const Complex> p, const BoundaryPointVI& b);

/// det(I - Z Z^*)^{n/j} / |det(I - Z U^*)|^{2n/j}; requires U U^* = I and 1 <= j <= mn.
KernelValue poisson_I_pj(std::size_t m, std::size_t n, std::size_t j, const CMatrix& z, const CMatrix& u);

}  // namespace cgeom
