#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace wmb {

// Exact rational scalar. Every computation in the workbench is over Q with
// zero-tolerance equality; GMP keeps numerators/denominators canonical.
using Rat = boost::multiprecision::mpq_rational;

inline std::string rat_str(const Rat& r) { return r.str(); }

Rat rat_parse(const std::string& s);

}  // namespace wmb
