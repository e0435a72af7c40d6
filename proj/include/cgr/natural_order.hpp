#pragma once

#include <string>
#include <string_view>

namespace cgr {

// Three-way comparison with digit runs compared by numeric value, so
// "cn2" < "cn10". Ties between numerically equal runs ("cn07" vs "cn7")
// fall back to plain byte order, keeping the order total.
int natural_compare(std::string_view a, std::string_view b);

struct NaturalLess {
  bool operator()(std::string_view a, std::string_view b) const {
    return natural_compare(a, b) < 0;
  }
};

}  // namespace cgr
