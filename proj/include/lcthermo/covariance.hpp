#pragma once

namespace lct {

// Single-mode zero-mean Gaussian state, natural units (vacuum = diag(1/2, 1/2)).
struct CovarianceMatrix {
  double xx = 0.5;
  double xp = 0.0;
  double pp = 0.5;

  double det() const { return xx * pp - xp * xp; }
  // Throws ErrorCode::Domain unless xx, pp > 0 and det >= (1 - 1e-9) / 4.
  void require_physical() const;
};

}  // namespace lct
