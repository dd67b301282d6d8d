#include "smc/countvec.hpp"

#include <algorithm>
#include <sstream>

namespace smc {

CountVector cv_add(const CountVector& a, const CountVector& b) {
  CountVector out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

CountVector cv_sub(const CountVector& a, const CountVector& b) {
  CountVector out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

CountVector cv_shift(const CountVector& a, int k) {
  CountVector out(a.size() + static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < a.size(); ++i) out[i + k] = a[i];
  return out;
}

CountVector cv_convolve(const CountVector& a, const CountVector& b) {
  if (a.empty() || b.empty()) return {};
  CountVector out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

void cv_trim(CountVector& a) {
  while (a.size() > 1 && a.back() == 0) a.pop_back();
  if (a.empty()) a.push_back(0);
}

CountVector cv_resize(CountVector a, std::size_t len) {
  a.resize(len);
  return a;
}

bool cv_nonnegative(const CountVector& a) {
  return std::all_of(a.begin(), a.end(), [](const BigInt& x) { return x >= 0; });
}

BigInt cv_sum(const CountVector& a) {
  BigInt s = 0;
  for (const auto& x : a) s += x;
  return s;
}

std::string cv_to_string(const CountVector& a) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ',';
    os << a[i];
  }
  os << ']';
  return os.str();
}

}  // namespace smc
