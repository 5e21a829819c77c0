#pragma once

#include <string>
#include <vector>

#include "pbgbt/gbt.hpp"

namespace pbgbt {

enum class NormSource { ClosedForm, Oracle };

inline std::string to_string(NormSource s) {
  return s == NormSource::ClosedForm ? "closed_form" : "oracle";
}

/// ln ||f_n||^2 for n = 0..values.size()-1.
struct NormSeries {
  GbtParams params;
  std::vector<LogMagnitude> values;
  NormSource source = NormSource::ClosedForm;

  double log_at(int n) const { return values.at(static_cast<std::size_t>(n)).log_abs; }
};

}  // namespace pbgbt
