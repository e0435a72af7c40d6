#include "cgr/natural_order.hpp"

#include <cctype>

namespace cgr {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

int natural_compare(std::string_view a, std::string_view b) {
  size_t i = 0;
  size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      size_t ia = i;
      size_t jb = j;
      while (ia < a.size() && is_digit(a[ia])) ++ia;
      while (jb < b.size() && is_digit(b[jb])) ++jb;
      std::string_view da = a.substr(i, ia - i);
      std::string_view db = b.substr(j, jb - j);
      // Compare by value: strip leading zeros, then by length, then bytes.
      std::string_view va = da.substr(std::min(da.find_first_not_of('0'), da.size() - 1));
      std::string_view vb = db.substr(std::min(db.find_first_not_of('0'), db.size() - 1));
      if (va.size() != vb.size()) return va.size() < vb.size() ? -1 : 1;
      if (int c = va.compare(vb); c != 0) return c < 0 ? -1 : 1;
      i = ia;
      j = jb;
    } else {
      unsigned char ca = static_cast<unsigned char>(a[i]);
      unsigned char cb = static_cast<unsigned char>(b[j]);
      if (ca != cb) return ca < cb ? -1 : 1;
      ++i;
      ++j;
    }
  }
  if (i < a.size()) return 1;
  if (j < b.size()) return -1;
  // Equal chunkwise; distinguish "cn07" from "cn7" by byte order.
  return a.compare(b) < 0 ? -1 : (a == b ? 0 : 1);
}

}  // namespace cgr
