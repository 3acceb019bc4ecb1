#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace rcg {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// "3", "-3", "2/5", "-2/5"
Rat rat_parse(std::string_view s);

std::string rat_str(const Rat& r);

// Exact square root when r is the square of a rational, otherwise nullopt.
std::optional<Rat> rat_sqrt(const Rat& r);

}  // namespace rcg
