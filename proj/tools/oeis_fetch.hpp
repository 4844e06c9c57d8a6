#pragma once

#include <string>

namespace oeis {

/// Text of the b-file for an A-number such as "A067399". Reads the on-disk
/// cache first; only contacts oeis.org when `online` is set, and caches what
/// it downloads. Throws dismal::Error when the file is unavailable.
std::string load_bfile(const std::string& anumber, bool online);

}  // namespace oeis
