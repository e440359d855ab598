#pragma once

#include <string>
#include <vector>

#include "verlinde/moduli.hpp"

namespace verlinde::cli {

// Shared request fields. Center spec syntax: "trivial", "full", or
// "gen:w<i>[,w<j>...]" naming alcove-vertex generators; "w3" and "3" both
// mean the vertex of the third fundamental coweight.
struct Request {
  std::string type;
  std::string center = "full";
  long long k = 0;
  int genus = 1;
  std::string mu;      // comma-separated Dynkin labels; empty = all weights
  std::string phi;     // semicolon-separated exponent tuples, one per handle
  std::string format = "json";  // json | csv
  bool normalized = false;      // smatrix: positive-vacuum-row debug view
  double tolerance = 1e-6;
};

CenterSubgroup parse_center(const RootDatum& rd, const std::string& spec);

// Each returns the full output document (JSON or CSV) as a string.
std::string cmd_roots(const Request& r);
std::string cmd_levels(const Request& r);
std::string cmd_smatrix(const Request& r);
std::string cmd_delta(const Request& r);
std::string cmd_verlinde(const Request& r);

}  // namespace verlinde::cli
