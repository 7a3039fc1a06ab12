#ifndef WPMEC_IO_HPP
#define WPMEC_IO_HPP

#include <string>

namespace wpmec {

// Shortest decimal string that round-trips the exact double value, so
// repeated runs of the same seed produce byte-identical files.
std::string format_double(double value);

}  // namespace wpmec

#endif  // WPMEC_IO_HPP
