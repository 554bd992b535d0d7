#pragma once

#include <stdexcept>
#include <string>

namespace kgeo {

// Parameters fail a divisibility or admissibility screen.
class InadmissibleParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation was called outside its domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// No builder, catalog entry or solver run produced the requested design.
class ConstructionUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DisconnectedGraph : public std::runtime_error {
 public:
  DisconnectedGraph(int u, int v)
      : std::runtime_error("graph is disconnected: no path between vertex " +
                           std::to_string(u) + " and vertex " + std::to_string(v)),
        u_(u),
        v_(v) {}

  int u() const noexcept { return u_; }
  int v() const noexcept { return v_; }

 private:
  int u_;
  int v_;
};

// Malformed design, graph or catalog file.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kgeo
