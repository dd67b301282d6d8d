#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace smc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// counts[k] = number of solutions of cardinality k.  Entries may go negative
// inside inclusion/exclusion branches; callers check at API boundaries.
using CountVector = std::vector<BigInt>;

CountVector cv_add(const CountVector& a, const CountVector& b);
CountVector cv_sub(const CountVector& a, const CountVector& b);
CountVector cv_shift(const CountVector& a, int k);
CountVector cv_convolve(const CountVector& a, const CountVector& b);

// drop trailing zeros (keeps at least one entry)
void cv_trim(CountVector& a);
// pad or truncate to exactly len entries
CountVector cv_resize(CountVector a, std::size_t len);

bool cv_nonnegative(const CountVector& a);
BigInt cv_sum(const CountVector& a);
std::string cv_to_string(const CountVector& a);

}  // namespace smc
