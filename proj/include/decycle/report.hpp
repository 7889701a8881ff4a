#pragma once

#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "decycle/bounds.hpp"

namespace decycle {

/// One bound checked on one graph. A missing side is unbounded.
struct TheoremCheck {
  std::string theorem;
  std::optional<Count> lower;
  Count measured = 0;
  std::optional<Count> upper;

  bool holds() const {
    return (!lower || *lower <= measured) && (!upper || measured <= *upper);
  }
  bool saturated_lower() const { return lower && *lower == measured; }
  bool saturated_upper() const { return upper && *upper == measured; }
  bool saturated() const { return saturated_lower() || saturated_upper(); }
};

/// Measured invariants of one graph next to the formula values that apply to it.
struct BoundReport {
  std::string graph; // short description, e.g. "prufer:[0 0]" or "t_star(8,4)"
  Count n = 0;
  Count m = 0;
  std::optional<Count> d, p, k, h;
  std::optional<Count> l, hc, decycling;
  std::vector<TheoremCheck> checks;

  bool ok() const {
    for (const auto &c : checks)
      if (!c.holds())
        return false;
    return true;
  }
};

inline constexpr int kReportSchemaVersion = 1;

namespace detail {

inline std::string opt_str(const std::optional<Count> &v) {
  return v ? std::to_string(*v) : std::string{};
}

} // namespace detail

inline void write_text(std::ostream &os, const BoundReport &r) {
  os << r.graph << " n=" << r.n << " m=" << r.m;
  auto field = [&](const char *name, const std::optional<Count> &v) {
    if (v)
      os << ' ' << name << '=' << *v;
  };
  field("d", r.d);
  field("p", r.p);
  field("k", r.k);
  field("h", r.h);
  field("l", r.l);
  field("hc", r.hc);
  field("decycling", r.decycling);
  os << '\n';
  for (const auto &c : r.checks) {
    os << "  " << c.theorem << ": ";
    if (c.lower)
      os << *c.lower << " <= ";
    os << c.measured;
    if (c.upper)
      os << " <= " << *c.upper;
    os << (c.holds() ? " ok" : " VIOLATED");
    if (c.saturated_lower() || c.saturated_upper()) {
      os << " (tight:";
      if (c.saturated_lower())
        os << " lower";
      if (c.saturated_upper())
        os << " upper";
      os << ')';
    }
    os << '\n';
  }
}

/// Comment line with the schema version, then the column names.
inline void write_csv_header(std::ostream &os) {
  os << "# decycle bound-report schema=" << kReportSchemaVersion << '\n'
     << "graph,n,m,d,p,k,h,l,hc,decycling,theorem,lower,measured,upper,holds,"
        "saturated_lower,saturated_upper\n";
}

/// One row per check; a report without checks still yields one row.
inline void write_csv(std::ostream &os, const BoundReport &r) {
  using detail::opt_str;
  std::ostringstream prefix;
  prefix << r.graph << ',' << r.n << ',' << r.m << ',' << opt_str(r.d) << ',' << opt_str(r.p)
         << ',' << opt_str(r.k) << ',' << opt_str(r.h) << ',' << opt_str(r.l) << ','
         << opt_str(r.hc) << ',' << opt_str(r.decycling) << ',';
  if (r.checks.empty()) {
    os << prefix.str() << ",,,,,,\n";
    return;
  }
  for (const auto &c : r.checks)
    os << prefix.str() << c.theorem << ',' << opt_str(c.lower) << ',' << c.measured << ','
       << opt_str(c.upper) << ',' << int(c.holds()) << ',' << int(c.saturated_lower()) << ','
       << int(c.saturated_upper()) << '\n';
}

} // namespace decycle
