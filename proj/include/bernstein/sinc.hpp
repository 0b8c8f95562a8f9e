#pragma once

namespace bernstein {

/// sin(pi*t), exact zero at integers.
double sin_pi(double t);
/// cos(pi*t), exact zero at half-integers.
double cos_pi(double t);

/// Normalized sinc: sin(pi t)/(pi t), sinc(0) = 1 and sinc(k) = 0 exactly for
/// nonzero integers k.
double sinc(double t);

/// First and second derivatives of sinc with respect to t.
double sinc_d1(double t);
double sinc_d2(double t);

/// (sum_{|k|>P} sinc(k - delta)^2)^{1/2}, the tail of a shifted sinc train.
double sinc_tail(int padding, double delta);

/// (sum_{|k|>P} 1/k^2)^{1/2}.
double inverse_tail(int padding);

}  // namespace bernstein
