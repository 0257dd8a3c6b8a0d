#pragma once

namespace shgrav::detail {

/// Compensated accumulator. Merge order must stay fixed when bit-reproducible
/// results are required.
struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    double y = x - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }

  void merge(const KahanSum& o) {
    add(o.sum);
    add(-o.comp);
  }

  double value() const { return sum; }
};

}  // namespace shgrav::detail
