#pragma once

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace minuscule {

/// Raised when an operation's precondition is violated (bad rank, bad node,
/// a box outside a diagram, a cap exceeded, ...).
class Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact scalar used wherever Q-polynomial coefficients enter.
using Rational = boost::rational<std::int64_t>;

/// A finite sequence of Dynkin node labels (1-based). Crystal paths, reduced
/// words and KLR index sequences all share this representation.
using Sequence = std::vector<int>;

/// Integral weight in fundamental-weight coordinates: coords[i-1] = <h_i, weight>.
struct Weight {
  std::vector<int> coords;

  std::size_t rank() const { return coords.size(); }
  int operator[](int node) const { return coords.at(static_cast<std::size_t>(node - 1)); }

  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend bool operator==(const Weight&, const Weight&) = default;

  friend Weight operator+(Weight a, const Weight& b) {
    for (std::size_t k = 0; k < a.coords.size(); ++k) a.coords[k] += b.coords.at(k);
    return a;
  }
  friend Weight operator-(Weight a, const Weight& b) {
    for (std::size_t k = 0; k < a.coords.size(); ++k) a.coords[k] -= b.coords.at(k);
    return a;
  }
  friend Weight operator*(int s, Weight a) {
    for (auto& c : a.coords) c *= s;
    return a;
  }
};

/// Element of the root lattice in simple-root coordinates.
struct RootVector {
  std::vector<int> coeffs;

  int height() const {
    int h = 0;
    for (int c : coeffs) h += c;
    return h;
  }
  friend auto operator<=>(const RootVector&, const RootVector&) = default;
  friend bool operator==(const RootVector&, const RootVector&) = default;
};

enum class Status { pass, fail, skipped };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

/// Outcome of one named check, with a human-readable witness on failure.
struct CheckResult {
  std::string name;
  Status status = Status::pass;
  std::string witness;
  std::uint64_t checked = 0;

  bool passed() const { return status == Status::pass; }
  bool failed() const { return status == Status::fail; }
};

/// Folds `r` into the aggregate `into`: counts add up, the first failure
/// wins, and `into` stays skipped only while everything folded in is.
inline void absorb(CheckResult& into, const CheckResult& r, const std::string& context = {}) {
  into.checked += r.checked;
  if (into.failed()) return;
  if (r.failed()) {
    into.status = Status::fail;
    into.witness = context.empty() ? r.witness : context + ": " + r.witness;
  }
}

/// A named group of checks.
struct CheckReport {
  std::string subject;
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (c.failed()) return false;
    return true;
  }
  const CheckResult& check(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return c;
    throw std::out_of_range("no check named '" + name + "'");
  }
};

template <typename Range>
std::string join(const Range& r, const char* sep = ",") {
  std::ostringstream os;
  bool first = true;
  for (const auto& x : r) {
    if (!first) os << sep;
    os << x;
    first = false;
  }
  return os.str();
}

inline std::string to_string(const Sequence& s) { return "(" + join(s) + ")"; }
inline std::string to_string(const Weight& w) { return "(" + join(w.coords) + ")"; }

}  // namespace minuscule
