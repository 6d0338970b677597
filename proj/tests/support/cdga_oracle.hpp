#pragma once

#include <vector>

#include "syscat/cdga.hpp"

namespace oracle {

using syscat::cdga::FreeCDGA;
using syscat::cdga::Polynomial;
using syscat::cdga::Scalar;

/// Rank by fraction-free elimination (Q) or word-size arithmetic mod p.
long rank(const syscat::cdga::Field& field, std::vector<std::vector<Scalar>> rows);

/// dim A^n - rank(d_n) - rank(d_{n-1}).
int betti(const FreeCDGA& a, int n);

/// Whether `target` lies in d(A^{n-1}) + span(extra), all of degree n.
bool in_image_plus(const FreeCDGA& a, int n, const Polynomial& target, const std::vector<Polynomial>& extra);

}  // namespace oracle
